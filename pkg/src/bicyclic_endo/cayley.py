"""Cayley tables over finite windows, with -1 marking products that leave the window."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

OUT = -1


def cayley_table(mul, elements):
    index = {x: n for n, x in enumerate(elements)}
    size = len(elements)
    table = np.full((size, size), OUT, dtype=np.int64)
    for a, x in enumerate(elements):
        row = table[a]
        for b, y in enumerate(elements):
            row[b] = index.get(mul(x, y), OUT)
    return table


class AssocReport(NamedTuple):
    checked: int
    skipped: int
    witness: tuple[int, int, int] | None

    @property
    def ok(self):
        return self.witness is None


def check_associativity(table) -> AssocReport:
    """Compare (xy)z with x(yz) for every triple whose four products stay in the table."""
    size = table.shape[0]
    checked = skipped = 0
    padded = np.vstack([table, np.full((1, size), OUT, dtype=table.dtype)])
    padded = np.hstack([padded, np.full((size + 1, 1), OUT, dtype=table.dtype)])
    # padded[OUT, :] and padded[:, OUT] are OUT, so misses propagate
    for x in range(size):
        xy = table[x]  # indexed by y
        left = padded[xy][:, :size]  # (xy)z, indexed [y, z]
        yz = table  # indexed [y, z]
        right = padded[x][yz]  # x(yz)
        valid = (xy[:, None] != OUT) & (yz != OUT) & (left != OUT) & (right != OUT)
        checked += int(valid.sum())
        skipped += valid.size - int(valid.sum())
        bad = valid & (left != right)
        if bad.any():
            y, z = np.argwhere(bad)[0]
            return AssocReport(checked, skipped, (x, int(y), int(z)))
    return AssocReport(checked, skipped, None)
