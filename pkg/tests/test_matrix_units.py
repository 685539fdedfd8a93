import itertools
import math

import pytest

from bicyclic_endo import ZERO
from bicyclic_endo.errors import AlgebraError, NotIdempotent, Unsupported
from bicyclic_endo.matrix_units import (
    FiniteEndo,
    MatrixUnits,
    MatUnit,
    annihilating_endo,
    congruence_closure,
    congruence_freeness_check,
    end_structure_report,
    endo_from_injection,
    enumerate_congruences,
    enumerate_endomorphisms,
    infinite_cancellation_demo,
    mu_mul,
    naive_endomorphisms,
)


def test_mu_mul():
    assert mu_mul(MatUnit(0, 1), MatUnit(1, 2)) == MatUnit(0, 2)
    assert mu_mul(MatUnit(0, 1), MatUnit(0, 1)) is ZERO
    assert mu_mul(ZERO, MatUnit(0, 0)) is ZERO


def test_matrix_product_oracle():
    """Matrix units multiply like 0/1 matrices with a single 1."""
    lam = 3

    def mat(x):
        m = [[0] * lam for _ in range(lam)]
        if x is not ZERO:
            m[x.a][x.b] = 1
        return m

    def matmul(p, q):
        return [[sum(p[r][k] * q[k][c] for k in range(lam)) for c in range(lam)] for r in range(lam)]

    B = MatrixUnits(lam)
    for x in B.elements:
        for y in B.elements:
            assert mat(mu_mul(x, y)) == matmul(mat(x), mat(y))


def test_semigroup_basics():
    B = MatrixUnits(3)
    assert B.size == 10 and B.elements[0] is ZERO
    assert B.idempotents() == [ZERO] + [MatUnit(a, a) for a in range(3)]
    assert B.inv(MatUnit(0, 2)) == MatUnit(2, 0)
    assert B.green(MatUnit(0, 1), MatUnit(2, 1)) >= {"L", "D"}
    assert "D" not in B.green(ZERO, MatUnit(0, 0))


def test_swap_and_cycle():
    B = MatrixUnits(3)
    swap = endo_from_injection(B, (1, 0, 2))
    assert swap(MatUnit(0, 2)) == MatUnit(1, 2)
    assert swap @ swap == endo_from_injection(B, (0, 1, 2))
    cyc = endo_from_injection(B, (1, 2, 0))
    assert (cyc @ cyc @ cyc).images == tuple(range(B.size))
    assert cyc.index_map() == (1, 2, 0)
    # right action: (x)(e1 e2) = ((x)e1)e2
    assert (swap @ cyc)(MatUnit(0, 0)) == cyc(swap(MatUnit(0, 0)))


def test_bad_injection_and_constant():
    B = MatrixUnits(2)
    with pytest.raises(AlgebraError):
        endo_from_injection(B, (0, 0))
    with pytest.raises(NotIdempotent):
        annihilating_endo(B, MatUnit(0, 1))
    with pytest.raises(AlgebraError):
        FiniteEndo.from_map(B, {x: MatUnit(0, 1) for x in B.elements})
    assert annihilating_endo(B, MatUnit(1, 1)).is_constant()


@pytest.mark.parametrize("lam", [1, 2, 3, 4])
def test_endomorphism_count(lam):
    ends = enumerate_endomorphisms(lam)
    assert len(ends) == math.factorial(lam) + lam + 1
    assert len(set(ends)) == len(ends)


@pytest.mark.parametrize("lam", [1, 2])
def test_enumeration_matches_brute_force(lam):
    assert sorted(e.images for e in naive_endomorphisms(lam)) == sorted(
        e.images for e in enumerate_endomorphisms(lam)
    )


def test_enumeration_limit():
    with pytest.raises(Unsupported):
        enumerate_endomorphisms(5)


@pytest.mark.parametrize("lam", [2, 3, 4])
def test_structure_report(lam):
    r = end_structure_report(lam)
    assert r["ok"], r["checks"]
    assert r["injective"] == r["automorphisms"] == math.factorial(lam)
    assert r["annihilating"] == lam + 1


def test_infinite_cancellation_demo():
    d = infinite_cancellation_demo()
    assert d["b_after_a_equals_c_after_a"] and not d["b_equals_c"]


def test_congruence_closure_collapses():
    B = MatrixUnits(2)
    labels = congruence_closure(B, [(B.index[ZERO], B.index[MatUnit(0, 0)])])
    assert len(set(labels)) == 1
    assert congruence_closure(B, []) == tuple(range(B.size))


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_congruence_free(lam):
    r = congruence_freeness_check(lam)
    assert r["congruence_free"] and r["congruences"] == 2
    assert ("note" in r) == (lam < 2)


def test_congruences_by_brute_force_lambda2():
    """Every equivalence on B_2 (5 elements, 52 partitions) tested for compatibility."""
    B = MatrixUnits(2)
    n = B.size

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for p in partitions(rest):
            for k in range(len(p)):
                yield p[:k] + [[first] + p[k]] + p[k + 1:]
            yield [[first]] + p

    found = []
    for p in partitions(list(range(n))):
        lab = [0] * n
        for k, block in enumerate(p):
            for x in block:
                lab[x] = k
        ok = all(
            lab[B.table[z][x]] == lab[B.table[z][y]] and lab[B.table[x][z]] == lab[B.table[y][z]]
            for x, y in itertools.product(range(n), repeat=2)
            if lab[x] == lab[y]
            for z in range(n)
        )
        if ok:
            found.append(p)
    assert len(found) == 2 == len(enumerate_congruences(2))
