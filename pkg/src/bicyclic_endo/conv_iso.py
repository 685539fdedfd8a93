"""Convex order isomorphisms of (omega, <=) of rank at most n.

A nonzero element conv(s, t, k) maps s + r to t + r for 0 <= r < k.  It is
stored as the triple, never as an explicit point map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicyclic_ext import BExtElt
from .cayley import cayley_table
from .errors import AlgebraError, NotIdempotent
from .omega_family import initial_interval
from .zero import ZERO


@dataclass(frozen=True, slots=True)
class ConvIso:
    s: int
    t: int
    k: int

    def __post_init__(self):
        if self.s < 0 or self.t < 0 or self.k < 1:
            raise ValueError(f"invalid convex map conv({self.s},{self.t},{self.k})")

    def __str__(self):
        return f"conv({self.s},{self.t},{self.k})"

    @property
    def dom(self) -> range:
        return range(self.s, self.s + self.k)

    @property
    def ran(self) -> range:
        return range(self.t, self.t + self.k)

    def sort_key(self):
        return (1, self.k, self.s, self.t)

    def to_json(self):
        return {"s": self.s, "t": self.t, "k": self.k}


def compose(a, b):
    """First a, then b."""
    if a is ZERO or b is ZERO:
        return ZERO
    lo = max(a.t, b.s)
    hi = min(a.t + a.k, b.s + b.k)
    if lo >= hi:
        return ZERO
    return ConvIso(a.s + lo - a.t, b.t + lo - b.s, hi - lo)


def inverse(a):
    if a is ZERO:
        return ZERO
    return ConvIso(a.t, a.s, a.k)


def rank(a) -> int:
    return 0 if a is ZERO else a.k


def is_idempotent(a) -> bool:
    return a is ZERO or a.s == a.t


def iso_J(x, n: int):
    """(i, j, [0;k]) -> conv(i, j, k + 1), from B_omega^{F_{n-1}} into rank <= n maps."""
    if x is ZERO:
        return ZERO
    if not x.F.is_initial_interval():
        raise AlgebraError(f"{x.F} is not an initial interval")
    k = x.F.interval_top
    if k + 1 > n:
        raise AlgebraError(f"{x} is not in B_omega^F_{n - 1}")
    return ConvIso(x.i, x.j, k + 1)


def iso_J_inv(a, n: int):
    if a is ZERO:
        return ZERO
    if a.k > n:
        raise AlgebraError(f"{a} has rank above {n}")
    return BExtElt(a.s, a.t, initial_interval(a.k - 1))


class ConvSemigroup:
    """I_omega^n(conv) for a fixed rank bound n."""

    kind = "conv"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank bound must be at least 1")
        self.n = n

    def __repr__(self):
        return f"ConvSemigroup({self.n})"

    zero = ZERO

    def contains(self, a) -> bool:
        return a is ZERO or (isinstance(a, ConvIso) and a.k <= self.n)

    mul = staticmethod(compose)
    inv = staticmethod(inverse)
    is_idempotent = staticmethod(is_idempotent)

    def nat_leq(self, a, b) -> bool:
        return a == compose(compose(a, inverse(a)), b)

    def green(self, a, b) -> frozenset[str]:
        rels = set()
        if compose(inverse(a), a) == compose(inverse(b), b):
            rels.add("L")
        if compose(a, inverse(a)) == compose(b, inverse(b)):
            rels.add("R")
        if rels == {"L", "R"}:
            rels.add("H")
        if rank(a) == rank(b):
            rels.add("D")
        return frozenset(rels)

    def window(self, W: int) -> list:
        """ZERO and every element with dom and ran inside [0, W]."""
        out = [ZERO]
        for k in range(1, self.n + 1):
            out.extend(
                ConvIso(s, t, k) for s in range(W - k + 2) for t in range(W - k + 2)
            )
        return out

    @staticmethod
    def in_window(a, W) -> bool:
        return a is ZERO or (a.s + a.k - 1 <= W and a.t + a.k - 1 <= W)

    def idempotents(self, W: int) -> list:
        return [a for a in self.window(W) if is_idempotent(a)]

    def cayley(self, W: int):
        elements = self.window(W)
        return elements, cayley_table(compose, elements)


def up_set(e, n: int) -> list:
    """All idempotents f with e <= f: convex supersets of dom(e) of size at most n."""
    if not is_idempotent(e):
        raise NotIdempotent(f"{e} is not an idempotent")
    if e is ZERO:
        raise AlgebraError("the up-set of zero is infinite")
    out = []
    for k in range(e.k, n + 1):
        for s in range(max(0, e.s + e.k - k), e.s + 1):
            out.append(ConvIso(s, s, k))
    return out


def covers(e, n: int, W: int | None = None) -> list:
    """Idempotents directly above e, optionally restricted to dom inside [0, W]."""
    if e is ZERO:
        if W is None:
            raise AlgebraError("zero has infinitely many covers; pass a window")
        return [ConvIso(s, s, 1) for s in range(W + 1)]
    if e.k >= n:
        return []
    cands = []
    if e.s >= 1:
        cands.append(ConvIso(e.s - 1, e.s - 1, e.k + 1))
    cands.append(ConvIso(e.s, e.s, e.k + 1))
    if W is not None:
        cands = [c for c in cands if c.s + c.k - 1 <= W]
    return cands


def maximal_idempotents(W: int, n: int) -> list:
    return [ConvIso(i, i, n) for i in range(W + 1)]


def maximal_chains(W: int, n: int) -> list[list]:
    """Maximal chains of idempotents with dom inside [0, W], listed bottom-up from ZERO."""
    chains = []

    def climb(chain):
        ups = covers(chain[-1], n, W)
        if not ups:
            chains.append(list(chain))
            return
        for u in ups:
            chain.append(u)
            climb(chain)
            chain.pop()

    climb([ZERO])
    return chains


def hasse_edges(W: int, n: int) -> list[tuple]:
    """Covering pairs (lower, upper) of the idempotent semilattice inside [0, W]."""
    nodes = ConvSemigroup(n).idempotents(W)
    return [(e, f) for e in nodes for f in covers(e, n, W)]


def hasse_dot(W: int, n: int) -> str:
    """Graphviz source of the idempotent Hasse diagram, one rank per layer."""
    nodes = ConvSemigroup(n).idempotents(W)
    lines = ["digraph idempotents {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for r in range(n + 1):
        layer = [e for e in nodes if rank(e) == r]
        names = " ".join(f'"{e}";' for e in layer)
        lines.append(f"  subgraph rank_{r} {{ rank=same; {names} }}")
    for e, f in hasse_edges(W, n):
        lines.append(f'  "{e}" -> "{f}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
