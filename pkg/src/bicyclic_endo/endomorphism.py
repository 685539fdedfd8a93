"""Endomorphisms of B_omega^{F_n} and I_omega^n(conv): shifts, constants and finite tables.

Endomorphisms act on the right, so ``compose_endos(e1, e2)`` applies e1 first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .bicyclic_ext import BExtElt, BicyclicExtension
from .cayley import OUT
from .conv_iso import ConvIso, ConvSemigroup, iso_J, iso_J_inv
from .errors import AlgebraError, OutOfWindow, Unsupported
from .zero import ZERO


@dataclass(frozen=True)
class Shift:
    p: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("shift must be non-negative")

    def __str__(self):
        return f"Shift({self.p})"


@dataclass(frozen=True)
class Annihilate:
    target: Any

    def __str__(self):
        return f"Annihilate({self.target})"


@dataclass(frozen=True, eq=False)
class Table:
    """A map given by its values on a window.  ``mapping`` must cover the window."""

    window: int
    mapping: dict = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, Table) and self.window == other.window and self.mapping == other.mapping

    def __hash__(self):
        return hash((self.window, frozenset(self.mapping.items())))

    def __str__(self):
        return f"Table(W={self.window}, {len(self.mapping)} entries)"

    def is_constant(self) -> bool:
        return len(set(self.mapping.values())) <= 1


def apply(e, x):
    if isinstance(e, Shift):
        if x is ZERO or e.p == 0:
            return x
        if isinstance(x, BExtElt):
            return BExtElt(x.i + e.p, x.j + e.p, x.F)
        if isinstance(x, ConvIso):
            return ConvIso(x.s + e.p, x.t + e.p, x.k)
        raise TypeError(f"cannot shift {x!r}")
    if isinstance(e, Annihilate):
        return e.target
    if isinstance(e, Table):
        try:
            return e.mapping[x]
        except KeyError:
            raise OutOfWindow(f"{x} is outside the table's window {e.window}") from None
    raise TypeError(f"not an endomorphism representation: {e!r}")


def table_of(e, S, W: int) -> Table:
    return Table(W, {x: apply(e, x) for x in S.window(W)})


_cayley_cache: dict = {}


def window_cayley(S, W):
    """Cached (elements, index, table) of S on window W."""
    key = (repr(S), W)
    if key not in _cayley_cache:
        elements, table = S.cayley(W)
        _cayley_cache[key] = (elements, {x: n for n, x in enumerate(elements)}, table)
    return _cayley_cache[key]


class EndoVerdict(NamedTuple):
    ok: bool
    checked: int
    skipped: int
    witness: tuple | None = None


def verify_endomorphism(e, S, W: int) -> EndoVerdict:
    """Check (x)e (y)e = (xy)e for every pair of window elements.

    Symbolic endomorphisms are applied to out-of-window products directly;
    a Table can only be checked where the product stays in its window, and
    the other pairs are counted as skipped.
    """
    elements, _, table = window_cayley(S, W)
    images = [apply(e, x) for x in elements]
    for x, fx in zip(elements, images):
        if not S.contains(fx):
            return EndoVerdict(False, 0, 0, (x, fx))
    checked = skipped = 0
    for a, x in enumerate(elements):
        fx = images[a]
        row = table[a]
        for b, y in enumerate(elements):
            p = row[b]
            if p != OUT:
                f_xy = images[p]
            elif isinstance(e, Table):
                skipped += 1
                continue
            else:
                f_xy = apply(e, S.mul(x, y))
            checked += 1
            if S.mul(fx, images[b]) != f_xy:
                return EndoVerdict(False, checked, skipped, (x, y))
    return EndoVerdict(True, checked, skipped, None)


def compose_endos(e1, e2):
    """e1 followed by e2."""
    if isinstance(e1, Shift) and isinstance(e2, Shift):
        return Shift(e1.p + e2.p)
    if isinstance(e2, Annihilate):
        return e2
    if isinstance(e1, Annihilate):
        return Annihilate(apply(e2, e1.target))
    if isinstance(e2, Shift) and e2.p == 0:
        return e1
    if isinstance(e1, Shift) and e1.p == 0:
        return e2
    if not isinstance(e1, Table):
        raise AlgebraError("composing a symbolic map with a table needs the first map as a table")
    try:
        return Table(e1.window, {x: apply(e2, y) for x, y in e1.mapping.items()})
    except OutOfWindow as exc:
        raise AlgebraError(f"window mismatch: {exc}") from None


class Violation(NamedTuple):
    kind: str
    element: Any
    detail: str


class Classification(NamedTuple):
    i0: int | None
    violation: Violation | None = None

    @property
    def ok(self):
        return self.violation is None

    def to_json(self):
        if self.ok:
            return {"verdict": "shift", "i0": self.i0}
        v = self.violation
        return {
            "verdict": "violation",
            "violation": {"kind": v.kind, "element": str(v.element), "detail": v.detail},
        }


def _transport_to_conv(table: Table, n: int) -> Table:
    return Table(table.window, {iso_J(x, n): iso_J(y, n) for x, y in table.mapping.items()})


def classify_injective(table: Table, n: int) -> Classification:
    """Decide whether an injective table agrees with a shift Shift(i0) on its window.

    Works on I_omega^n(conv); tables over B_omega^{F_{n-1}} are carried over by J
    and violations are reported back in that semigroup.  Checks run in the
    order: zero fixed, injectivity, chain order, maximal idempotent, pointwise.
    """
    if n < 2:
        raise Unsupported("classification needs n >= 2; for n = 1 use the matrix-units module")
    bext = any(isinstance(x, BExtElt) for x in table.mapping)
    conv_table = _transport_to_conv(table, n) if bext else table

    def back(x):
        return iso_J_inv(x, n) if bext and isinstance(x, ConvIso) else x

    result = _classify_conv(conv_table, n)
    if result.violation is not None and bext:
        v = result.violation
        result = Classification(None, Violation(v.kind, back(v.element), v.detail))
    return result


def _classify_conv(table: Table, n: int) -> Classification:
    S = ConvSemigroup(n)
    W = table.window
    m = table.mapping
    top0, top1 = ConvIso(0, 0, n), ConvIso(1, 1, n)
    if W < n or top0 not in m or top1 not in m or ZERO not in m:
        raise Unsupported(f"window {W} is too small to contain conv(0,0,{n}) and conv(1,1,{n})")
    for x in m:
        if not S.contains(m[x]):
            return Classification(None, Violation("image_outside", x, f"image {m[x]} is not in I^{n}"))

    if m[ZERO] is not ZERO:
        return Classification(None, Violation("zero_not_fixed", ZERO, f"0 maps to {m[ZERO]}"))

    seen = {}
    for x in sorted(m, key=_key):
        y = m[x]
        if y in seen:
            return Classification(
                None, Violation("non_injective", x, f"{x} and {seen[y]} both map to {y}")
            )
        seen[y] = x

    # the chains 0 < conv(p,p,1) < ... < conv(p,p,n) for p = 0, 1 must map to chains
    for p in (0, 1):
        chain = [ZERO] + [ConvIso(p, p, k) for k in range(1, n + 1)]
        for lo, hi in zip(chain, chain[1:]):
            if not S.nat_leq(m[lo], m[hi]):
                return Classification(
                    None,
                    Violation("order_not_preserved", hi, f"{m[lo]} is not below {m[hi]}"),
                )

    top = m[top0]
    if top is ZERO or top.k != n or top.s != top.t:
        return Classification(
            None, Violation("maximal_not_maximal", top0, f"image {top} is not a maximal idempotent")
        )
    i0 = top.s
    shift = Shift(i0)
    for x in sorted(m, key=_key):
        expected = apply(shift, x)
        if m[x] != expected:
            return Classification(
                None,
                Violation("pointwise_mismatch", x, f"expected {expected}, table has {m[x]}"),
            )
    return Classification(i0)


def _key(x):
    return x.sort_key()


def injective_endo_monoid_check(P: int, W: int, n: int) -> dict:
    """Check that p -> Shift(p) is a monoid isomorphism ({0..P}, +) -> shifts, pointwise on
    the window, and that only Shift(0) maps the window onto itself."""
    if n < 2:
        raise Unsupported("needs n >= 2")
    S = ConvSemigroup(n)
    elements = S.window(W)
    tables = {p: tuple(apply(Shift(p), x) for x in elements) for p in range(2 * P + 1)}
    law_failures = []
    for p in range(P + 1):
        for q in range(P + 1):
            pq, qp = compose_endos(Shift(p), Shift(q)), compose_endos(Shift(q), Shift(p))
            for x, want in zip(elements, tables[p + q]):
                # apply the two shifts one after the other, independent of compose_endos
                stepwise = apply(Shift(q), apply(Shift(p), x))
                if not (apply(pq, x) == apply(qp, x) == stepwise == want):
                    law_failures.append((p, q, x))
                    break
    identity_ok = tables[0] == tuple(elements)
    distinct = len({tables[p] for p in range(P + 1)}) == P + 1
    window_set = set(elements)
    surjective = [p for p in range(P + 1) if window_set <= set(tables[p])]
    missing_for_1 = ConvIso(0, 0, 1) not in set(tables[1]) if P >= 1 else None
    ok = not law_failures and identity_ok and distinct and surjective == [0]
    return {
        "ok": ok,
        "law_failures": law_failures,
        "identity": identity_ok,
        "injective": distinct,
        "window_surjective": surjective,
        "shift1_misses_conv001": missing_for_1,
    }


def semigroup_for(kind: str, n: int):
    """B_omega^{F_n} for kind 'bext', I_omega^n(conv) for kind 'conv'."""
    if kind == "bext":
        return BicyclicExtension.F(n)
    if kind == "conv":
        return ConvSemigroup(n)
    raise ValueError(kind)
