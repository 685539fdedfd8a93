"""Finite subsets of omega and families of them closed under shifted intersection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


@dataclass(frozen=True, slots=True)
class OmegaSet:
    """A finite subset of the non-negative integers, stored sorted."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        els = self.elements
        if any(not isinstance(a, int) or a < 0 for a in els):
            raise ValueError(f"elements must be non-negative integers: {els!r}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els!r}")

    @classmethod
    def of(cls, items: Iterable[int]) -> OmegaSet:
        return cls(tuple(sorted(set(items))))

    def __bool__(self):
        return bool(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def issubset(self, other: OmegaSet) -> bool:
        return set(self.elements) <= set(other.elements)

    @property
    def max(self) -> int:
        return self.elements[-1]

    def is_initial_interval(self) -> bool:
        return bool(self.elements) and self.elements[-1] == len(self.elements) - 1

    @property
    def interval_top(self) -> int:
        """k for the initial interval [0;k]."""
        if not self.is_initial_interval():
            raise ValueError(f"{self} is not an initial interval")
        return self.elements[-1]

    def __str__(self):
        if self.is_initial_interval():
            return f"[0;{self.elements[-1]}]"
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __repr__(self):
        return f"OmegaSet({self})"

    def sort_key(self):
        return (len(self.elements), self.elements)


EMPTY = OmegaSet()


def initial_interval(k: int) -> OmegaSet:
    """[0;k] = {0, ..., k}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return OmegaSet(tuple(range(k + 1)))


def shift_intersect(d: int, f1: OmegaSet, f2: OmegaSet) -> OmegaSet:
    """Return f1 & (d + f2), computed over the integers and cut back to omega."""
    if not f1 or not f2:
        return EMPTY
    # f1 is inside omega, so negative shifted values never survive the intersection
    return OmegaSet(tuple(a for a in f1.elements if (a - d) in f2.elements))


@dataclass(frozen=True)
class OmegaFamily:
    members: frozenset[OmegaSet]
    contains_empty: bool = False

    def __post_init__(self):
        if any(not m for m in self.members):
            raise ValueError("members must be nonempty; use contains_empty for the empty set")

    @classmethod
    def of(cls, members: Iterable[OmegaSet], contains_empty=False) -> OmegaFamily:
        members = list(members)
        if any(not m for m in members):
            contains_empty = True
        return cls(frozenset(m for m in members if m), contains_empty)

    def __contains__(self, f):
        if not f:
            return self.contains_empty
        return f in self.members

    def sorted_members(self) -> list[OmegaSet]:
        return sorted(self.members, key=OmegaSet.sort_key)

    def __str__(self):
        parts = [str(m) for m in self.sorted_members()]
        if self.contains_empty:
            parts.append("{}")
        return "{" + ",".join(parts) + "}"


def family_F(n: int) -> OmegaFamily:
    """F_n = {[0;0], ..., [0;n]} with the empty set adjoined."""
    return OmegaFamily(frozenset(initial_interval(k) for k in range(n + 1)), contains_empty=True)


class ClosureVerdict(NamedTuple):
    closed: bool
    witness: tuple[int, OmegaSet, OmegaSet] | None = None


def is_omega_closed(fam: OmegaFamily) -> ClosureVerdict:
    """Decide omega-closedness; the witness (n, F1, F2) has the smallest failing shift
    for the first failing ordered pair."""
    if not fam.members and not fam.contains_empty:
        raise ValueError("family must be nonempty")
    members = fam.sorted_members()
    for f1 in members:
        for f2 in members:
            # beyond max(f2) + 1 the shifted set lies below 0 and the intersection is empty
            for n in range(f2.max + 2):
                if shift_intersect(-n, f1, f2) not in fam:
                    return ClosureVerdict(False, (n, f1, f2))
    return ClosureVerdict(True)
