"""The bicyclic monoid B_omega and its extension B_omega^F by an omega-closed family.

Nonzero elements of the extension are triples (i, j, F).  When the family
contains the empty set, every triple with empty F-part is identified with
ZERO (the Rees quotient by the ideal of such triples).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import OUT, cayley_table
from .errors import NotAnIdeal, StructuralError
from .omega_family import OmegaFamily, OmegaSet, family_F, shift_intersect
from .zero import ZERO


@dataclass(frozen=True, slots=True)
class BicyclicElt:
    i: int
    j: int

    def __str__(self):
        return f"({self.i},{self.j})"


def bicyclic_mul(x: BicyclicElt, y: BicyclicElt) -> BicyclicElt:
    if x.j <= y.i:
        return BicyclicElt(x.i - x.j + y.i, y.j)
    return BicyclicElt(x.i, x.j - y.i + y.j)


@dataclass(frozen=True, slots=True)
class BExtElt:
    i: int
    j: int
    F: OmegaSet

    def __str__(self):
        return f"({self.i},{self.j},{self.F})"

    def sort_key(self):
        return (1, self.F.sort_key(), self.i, self.j)

    def to_json(self):
        return {"i": self.i, "j": self.j, "F": list(self.F.elements)}


def ext_mul(x, y, family: OmegaFamily | None = None):
    """Product in B_omega^F.  ``family`` is only consulted to validate the result."""
    if x is ZERO or y is ZERO:
        return ZERO
    i1, j1, f1 = x.i, x.j, x.F
    i2, j2, f2 = y.i, y.j, y.F
    if j1 <= i2:
        i, j, f = i1 - j1 + i2, j2, shift_intersect(j1 - i2, f2, f1)
    else:
        i, j, f = i1, j1 - i2 + j2, shift_intersect(i2 - j1, f1, f2)
    if not f:
        if family is not None and not family.contains_empty:
            raise StructuralError(f"{x}*{y} has empty F-part but the family omits the empty set")
        return ZERO
    if family is not None and f not in family.members:
        raise StructuralError(f"{x}*{y} has F-part {f} outside the family")
    return BExtElt(i, j, f)


def ext_inv(x):
    if x is ZERO:
        return ZERO
    return BExtElt(x.j, x.i, x.F)


class BicyclicExtension:
    """B_omega^F for a fixed family; all methods take elements of this semigroup."""

    kind = "bext"

    def __init__(self, family: OmegaFamily):
        self.family = family

    @classmethod
    def F(cls, n: int) -> BicyclicExtension:
        return cls(family_F(n))

    def __repr__(self):
        return f"BicyclicExtension({self.family})"

    def element(self, i, j, F):
        if i < 0 or j < 0:
            raise ValueError("indices must be non-negative")
        if not F:
            if not self.family.contains_empty:
                raise ValueError("the family has no empty set, so there is no zero")
            return ZERO
        if F not in self.family.members:
            raise ValueError(f"{F} is not in the family {self.family}")
        return BExtElt(i, j, F)

    @property
    def zero(self):
        if not self.family.contains_empty:
            raise ValueError("this semigroup has no zero")
        return ZERO

    def contains(self, x) -> bool:
        if x is ZERO:
            return self.family.contains_empty
        return isinstance(x, BExtElt) and x.i >= 0 and x.j >= 0 and x.F in self.family.members

    def mul(self, x, y):
        return ext_mul(x, y, self.family)

    def inv(self, x):
        return ext_inv(x)

    def is_idempotent(self, x) -> bool:
        return x is ZERO or x.i == x.j

    def nat_leq(self, x, y) -> bool:
        return x == self.mul(self.mul(x, ext_inv(x)), y)

    def green(self, x, y) -> frozenset[str]:
        rels = set()
        if self.mul(ext_inv(x), x) == self.mul(ext_inv(y), y):
            rels.add("L")
        if self.mul(x, ext_inv(x)) == self.mul(y, ext_inv(y)):
            rels.add("R")
        if rels == {"L", "R"}:
            rels.add("H")
        if self.d_related(x, y):
            rels.add("D")
        return frozenset(rels)

    @staticmethod
    def d_related(x, y) -> bool:
        if x is ZERO or y is ZERO:
            return x is y
        return x.F == y.F

    def lr_pairs(self, W) -> set:
        """{(z^-1 z, z z^-1)} over the window: x D y iff (x^-1 x, y y^-1) is in it."""
        return {(self.mul(ext_inv(z), z), self.mul(z, ext_inv(z))) for z in self.window(W)}

    def d_related_chase(self, x, y, W, pairs=None) -> bool:
        """x D y decided by searching the window for z with x L z R y."""
        if pairs is None:
            pairs = self.lr_pairs(W)
        return (self.mul(ext_inv(x), x), self.mul(y, ext_inv(y))) in pairs

    def window(self, W: int) -> list:
        """ZERO (if present) and every (i, j, F) with i, j <= W, in canonical order."""
        out = [ZERO] if self.family.contains_empty else []
        for F in self.family.sorted_members():
            out.extend(BExtElt(i, j, F) for i in range(W + 1) for j in range(W + 1))
        return out

    def in_window(self, x, W) -> bool:
        return x is ZERO or (x.i <= W and x.j <= W)

    def idempotents(self, W: int) -> list:
        return [x for x in self.window(W) if self.is_idempotent(x)]

    def cayley(self, W: int):
        elements = self.window(W)
        return elements, cayley_table(self.mul, elements)


def rees_congruence_classes(S, W, ideal):
    """Partition the window into the ideal's block plus singletons.

    ``ideal`` is a predicate; it is checked to be closed under multiplication
    by window elements, and the result is checked to be a congruence on every
    in-window triple.  Raises NotAnIdeal with a witness triple otherwise.
    """
    elements, table = S.cayley(W)
    members = [n for n, x in enumerate(elements) if ideal(x)]
    if not members:
        raise NotAnIdeal("the ideal is empty", None)
    in_ideal = [False] * len(elements)
    for n in members:
        in_ideal[n] = True
    for s in members:
        for a in range(len(elements)):
            for p in (table[a, s], table[s, a]):
                if p != OUT and not in_ideal[p]:
                    raise NotAnIdeal(
                        f"{elements[a]} and {elements[s]} multiply outside the ideal",
                        (elements[a], elements[s], elements[p]),
                    )
    block_of = np.array([0 if in_ideal[n] else n + 1 for n in range(len(elements))] + [OUT])
    # every pair (s, t) from the ideal block, multiplied by the same a on either side,
    # must land in a common block whenever both products are in the window
    for products in (table[:, members], table[members, :].T):
        blocks = block_of[products]
        valid = products != OUT
        hi = np.where(valid, blocks, -1).max(axis=1)
        lo = np.where(valid, blocks, len(elements) + 1).min(axis=1)
        bad = valid.any(axis=1) & (hi != lo)
        if bad.any():
            a = int(np.argmax(bad))
            raise NotAnIdeal("the induced relation is not compatible", (elements[a],))
    ideal_block = [elements[n] for n in members]
    rest = [[x] for n, x in enumerate(elements) if not in_ideal[n]]
    return [ideal_block] + rest
