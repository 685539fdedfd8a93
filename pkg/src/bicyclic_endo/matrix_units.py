"""The semigroup B_lambda of lambda x lambda matrix units and its endomorphisms, for finite lambda.

Endomorphisms act on the right: ``e1 @ e2`` applies e1 first, then e2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import AlgebraError, NotIdempotent, Unsupported
from .zero import ZERO

MAX_LAMBDA = 4


@dataclass(frozen=True, slots=True)
class MatUnit:
    a: int
    b: int

    def __str__(self):
        return f"mu({self.a},{self.b})"

    def sort_key(self):
        return (1, self.a, self.b)

    def to_json(self):
        return {"a": self.a, "b": self.b}


def mu_mul(x, y):
    if x is ZERO or y is ZERO or x.b != y.a:
        return ZERO
    return MatUnit(x.a, y.b)


class MatrixUnits:
    kind = "mu"

    def __init__(self, lam: int):
        if lam < 1:
            raise ValueError("lambda must be at least 1")
        self.lam = lam
        self.elements = [ZERO] + [MatUnit(a, b) for a in range(lam) for b in range(lam)]
        self.index = {x: n for n, x in enumerate(self.elements)}
        size = len(self.elements)
        self.table = [[self.index[mu_mul(x, y)] for y in self.elements] for x in self.elements]
        self.size = size

    def __repr__(self):
        return f"MatrixUnits({self.lam})"

    zero = ZERO
    mul = staticmethod(mu_mul)

    def contains(self, x):
        return x is ZERO or (isinstance(x, MatUnit) and 0 <= x.a < self.lam and 0 <= x.b < self.lam)

    @staticmethod
    def inv(x):
        return ZERO if x is ZERO else MatUnit(x.b, x.a)

    @staticmethod
    def is_idempotent(x):
        return x is ZERO or x.a == x.b

    def idempotents(self):
        return [x for x in self.elements if self.is_idempotent(x)]

    def window(self, W=None):
        return list(self.elements)

    def green(self, x, y):
        rels = set()
        if mu_mul(self.inv(x), x) == mu_mul(self.inv(y), y):
            rels.add("L")
        if mu_mul(x, self.inv(x)) == mu_mul(y, self.inv(y)):
            rels.add("R")
        if rels == {"L", "R"}:
            rels.add("H")
        if (x is ZERO) == (y is ZERO):
            rels.add("D")
        return frozenset(rels)


def _is_hom(B: MatrixUnits, images) -> tuple | None:
    """First pair (x, y) breaking the homomorphism law for an index-level image tuple."""
    t = B.table
    for x in range(B.size):
        fx = images[x]
        row, frow = t[x], t[fx]
        for y in range(B.size):
            if frow[images[y]] != images[row[y]]:
                return (B.elements[x], B.elements[y])
    return None


class FiniteEndo:
    """An endomorphism of B_lambda, stored as the tuple of image indices."""

    __slots__ = ("B", "images")

    def __init__(self, B: MatrixUnits, images, check=True):
        self.B = B
        self.images = tuple(images)
        if len(self.images) != B.size:
            raise AlgebraError("an endomorphism table must cover all of B_lambda")
        if check:
            bad = _is_hom(B, self.images)
            if bad is not None:
                raise AlgebraError(f"not a homomorphism: fails at {bad[0]}, {bad[1]}")

    @classmethod
    def from_map(cls, B, mapping, check=True):
        return cls(B, [B.index[mapping[x]] for x in B.elements], check)

    def __call__(self, x):
        return self.B.elements[self.images[self.B.index[x]]]

    def __matmul__(self, other: FiniteEndo) -> FiniteEndo:
        return FiniteEndo(self.B, [other.images[i] for i in self.images], check=False)

    def __eq__(self, other):
        return isinstance(other, FiniteEndo) and self.B.lam == other.B.lam and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "FiniteEndo{" + ", ".join(f"{x}->{self(x)}" for x in self.B.elements) + "}"

    def is_injective(self):
        return len(set(self.images)) == len(self.images)

    def is_constant(self):
        return len(set(self.images)) == 1

    def as_dict(self):
        return {str(x): str(self(x)) for x in self.B.elements}

    def index_map(self):
        """The injection i_e of lambda read off the diagonal idempotents."""
        out = []
        for a in range(self.B.lam):
            y = self(MatUnit(a, a))
            if y is ZERO or y.a != y.b:
                raise AlgebraError("diagonal idempotents are not mapped to diagonal idempotents")
            out.append(y.a)
        return tuple(out)


def endo_from_injection(B: MatrixUnits, i) -> FiniteEndo:
    """(a, b) -> (i(a), i(b)), 0 -> 0."""
    i = tuple(i)
    if len(i) != B.lam or any(not 0 <= v < B.lam for v in i):
        raise AlgebraError("the injection must map lambda into itself")
    if len(set(i)) != len(i):
        raise AlgebraError(f"{i} is not injective")
    mapping = {ZERO: ZERO}
    for a in range(B.lam):
        for b in range(B.lam):
            mapping[MatUnit(a, b)] = MatUnit(i[a], i[b])
    return FiniteEndo.from_map(B, mapping)


def annihilating_endo(B: MatrixUnits, x) -> FiniteEndo:
    if not B.contains(x):
        raise AlgebraError(f"{x} is not in B_{B.lam}")
    if not B.is_idempotent(x):
        raise NotIdempotent(f"the constant map at {x} is not an endomorphism: {x} is not idempotent")
    return FiniteEndo.from_map(B, {y: x for y in B.elements})


def generators(B: MatrixUnits) -> list:
    """ZERO, (0,0) and the staircase (a, a+1), (a+1, a)."""
    gens = [ZERO, MatUnit(0, 0)]
    for a in range(B.lam - 1):
        gens += [MatUnit(a, a + 1), MatUnit(a + 1, a)]
    return gens


def enumerate_endomorphisms(lam: int) -> list[FiniteEndo]:
    """All endomorphisms of B_lambda, by depth-first search over generator images.

    After each generator image is chosen, the partial map is closed under
    products of already-mapped elements; a clash prunes the branch.
    """
    if lam > MAX_LAMBDA:
        raise Unsupported(f"lambda <= {MAX_LAMBDA} only")
    B = MatrixUnits(lam)
    t = B.table
    gens = [B.index[g] for g in generators(B)]
    found = []

    def close(images, assigned):
        """Extend by products; return the new assignment list or None on a clash."""
        images = list(images)
        assigned = list(assigned)
        frontier = list(assigned)
        while frontier:
            new = []
            for x in frontier:
                for y in assigned:
                    for u, v in ((x, y), (y, x)):
                        uv = t[u][v]
                        val = t[images[u]][images[v]]
                        if images[uv] is None:
                            images[uv] = val
                            assigned.append(uv)
                            new.append(uv)
                        elif images[uv] != val:
                            return None, None
            frontier = new
        return images, assigned

    def dfs(depth, images, assigned):
        if depth == len(gens):
            if all(v is not None for v in images):
                found.append(FiniteEndo(B, images))
            return
        g = gens[depth]
        if images[g] is not None:
            dfs(depth + 1, images, assigned)
            return
        for v in range(B.size):
            trial = list(images)
            trial[g] = v
            closed, acc = close(trial, assigned + [g])
            if closed is not None:
                dfs(depth + 1, closed, acc)

    dfs(0, [None] * B.size, [])
    return sorted(found, key=lambda e: e.images)


def naive_endomorphisms(lam: int) -> list[FiniteEndo]:
    """All self-maps of B_lambda filtered by the homomorphism law (brute force)."""
    B = MatrixUnits(lam)
    if B.size ** B.size > 10**7:
        raise Unsupported("naive enumeration is limited to tiny lambda")
    return [
        FiniteEndo(B, images, check=False)
        for images in itertools.product(range(B.size), repeat=B.size)
        if _is_hom(B, images) is None
    ]


def _is_ideal(sub: set, everything: list) -> bool:
    return all(e @ a in sub and a @ e in sub for a in sub for e in everything)


def all_ideals(ends: list) -> list[set]:
    """Every nonempty two-sided ideal, by exhaustive subset search."""
    out = []
    for mask in range(1, 1 << len(ends)):
        sub = {e for n, e in enumerate(ends) if mask >> n & 1}
        if _is_ideal(sub, ends):
            out.append(sub)
    return out


def end_structure_report(lam: int) -> dict:
    """Check the decomposition of End(B_lambda) into injective and annihilating parts."""
    B = MatrixUnits(lam)
    ends = enumerate_endomorphisms(lam)
    inj = [e for e in ends if e.is_injective()]
    ann = [e for e in ends if e.is_constant()]
    ann_expected = {annihilating_endo(B, x) for x in B.idempotents()}
    checks = {}
    checks["union"] = len(inj) + len(ann) == len(ends) and not set(inj) & set(ann)
    checks["annihilating_are_constants_at_idempotents"] = set(ann) == ann_expected
    checks["count"] = len(ends) == math.factorial(lam) + lam + 1
    checks["right_zero"] = all(a1 @ a2 == a2 for a1 in ann for a2 in ann)
    ann_set = set(ann)
    checks["ann_is_ideal"] = _is_ideal(ann_set, ends)
    # minimality: every ideal contains End^ann; an ideal containing x contains End x End
    checks["ann_is_minimal_ideal"] = all(
        ann_set <= {u @ x @ v for u in ends for v in ends} for x in ends
    )
    if len(ends) <= 12:
        ideals = all_ideals(ends)
        checks["every_ideal_contains_ann"] = bool(ideals) and all(ann_set <= i for i in ideals)
    checks["composition_laws"] = all(
        e @ a == a and a @ e == annihilating_endo(B, e(a(ZERO))) for e in inj for a in ann
    )
    checks["inj_left_cancellative"] = all(
        b == c for a in inj for b in inj for c in inj if a @ b == a @ c
    )
    # finite injective maps are bijections, so End^inj is a group and also right cancellative
    checks["inj_right_cancellative_finite"] = all(
        b == c for a in inj for b in inj for c in inj if b @ a == c @ a
    )
    perms = list(itertools.permutations(range(lam)))
    idx = {e: e.index_map() for e in inj}
    checks["inj_to_sym_bijective"] = sorted(idx.values()) == sorted(perms)
    checks["inj_to_sym_homomorphism"] = all(
        idx[e1 @ e2] == tuple(idx[e2][idx[e1][a]] for a in range(lam)) for e1 in inj for e2 in inj
    )
    checks["inj_from_injection_roundtrip"] = all(endo_from_injection(B, p) in idx for p in perms)
    auts = [e for e in ends if e.is_injective() and len(set(e.images)) == B.size]
    return {
        "lambda": lam,
        "endomorphisms": len(ends),
        "injective": len(inj),
        "annihilating": len(ann),
        "automorphisms": len(auts),
        "expected": math.factorial(lam) + lam + 1,
        "checks": checks,
        "ok": all(checks.values()),
        "note": "for finite lambda every injective endomorphism is an automorphism, so "
        "End^inj is a group and cancellative on both sides; the failure of right "
        "cancellation needs infinite lambda (see infinite_cancellation_demo)",
    }


def infinite_cancellation_demo(probe=range(12)) -> dict:
    """Injective self-maps of omega under ordinary composition (f*g)(x) = f(g(x)).

    Left cancellation holds because f is injective; right cancellation fails:
    with a = doubling, b = identity, c = swap(1, 3), b*a == c*a while b != c.
    """

    def a(x):
        return 2 * x

    def b(x):
        return x

    def c(x):
        return {1: 3, 3: 1}.get(x, x)

    ba = [b(a(x)) for x in probe]
    ca = [c(a(x)) for x in probe]
    return {
        "b_after_a_equals_c_after_a": ba == ca,
        "b_equals_c": [b(x) for x in probe] == [c(x) for x in probe],
        "witness": {"a": "x -> 2x", "b": "identity", "c": "swap(1,3)"},
    }


def congruence_closure(B: MatrixUnits, pairs) -> tuple[int, ...]:
    """Smallest congruence containing ``pairs`` (index pairs), as a block label per element."""
    parent = list(range(B.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    todo = list(pairs)
    t = B.table
    while todo:
        x, y = todo.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        # compatibility: only the newly merged pair needs propagation, since
        # previously merged pairs were already propagated
        for z in range(B.size):
            todo.append((t[z][x], t[z][y]))
            todo.append((t[x][z], t[y][z]))
    roots = [find(x) for x in range(B.size)]
    relabel = {}
    return tuple(relabel.setdefault(r, len(relabel)) for r in roots)


def enumerate_congruences(lam: int) -> list[tuple[int, ...]]:
    """All congruences of B_lambda, as joins of principal congruences."""
    if lam > MAX_LAMBDA:
        raise Unsupported(f"lambda <= {MAX_LAMBDA} only")
    B = MatrixUnits(lam)
    principal = [
        congruence_closure(B, [(x, y)]) for x in range(B.size) for y in range(x + 1, B.size)
    ]
    identity = tuple(range(B.size))
    found = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for c in frontier:
            for p in principal:
                pairs = [(x, y) for x in range(B.size) for y in range(B.size) if c[x] == c[y] or p[x] == p[y]]
                j = congruence_closure(B, pairs)
                if j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    return sorted(found)


def congruence_freeness_check(lam: int) -> dict:
    congs = enumerate_congruences(lam)
    B = MatrixUnits(lam)
    identity = tuple(range(B.size))
    universal = tuple([0] * B.size)
    out = {
        "lambda": lam,
        "congruences": len(congs),
        "has_identity": identity in congs,
        "has_universal": universal in congs,
        "congruence_free": len(congs) == 2 and identity in congs and universal in congs,
    }
    if lam < 2:
        out["note"] = "lambda = 1 is below the lambda >= 2 range checked by the suite; B_1 = {0, mu(0,0)} is trivially congruence-free"
    return out
