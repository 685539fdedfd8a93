import pytest
from hypothesis import given, strategies as st

from bicyclic_endo import ZERO, BicyclicExtension, ConvIso
from bicyclic_endo.conv_iso import (
    ConvSemigroup,
    compose,
    covers,
    hasse_dot,
    hasse_edges,
    inverse,
    iso_J,
    iso_J_inv,
    maximal_chains,
    maximal_idempotents,
    rank,
    up_set,
)
from bicyclic_endo.errors import AlgebraError, NotIdempotent
from bicyclic_endo.omega_family import initial_interval

from oracles import compose_points, from_points, point_map

small = st.integers(0, 8)
convs = st.one_of(st.just(ZERO), st.builds(ConvIso, small, small, st.integers(1, 4)))


@given(convs, convs)
def test_compose_matches_point_maps(a, b):
    assert compose(a, b) == from_points(compose_points(point_map(a), point_map(b)))


@given(convs, convs, convs)
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(convs)
def test_inverse_is_point_inverse(a):
    assert point_map(inverse(a)) == {v: k for k, v in point_map(a).items()}


def test_compose_examples():
    assert compose(ConvIso(0, 2, 3), ConvIso(3, 0, 2)) == ConvIso(1, 0, 2)
    assert compose(ConvIso(0, 2, 1), ConvIso(3, 0, 2)) is ZERO
    assert compose(ConvIso(1, 1, 2), ConvIso(0, 0, 2)) == ConvIso(1, 1, 1)
    assert rank(ZERO) == 0 and rank(ConvIso(4, 1, 3)) == 3


def test_invalid_conv():
    with pytest.raises(ValueError):
        ConvIso(0, 0, 0)
    with pytest.raises(ValueError):
        ConvIso(-1, 0, 1)


def test_iso_J_examples():
    x = BicyclicExtension.F(2).element(3, 1, initial_interval(2))
    assert iso_J(x, 3) == ConvIso(3, 1, 3)
    assert iso_J_inv(ConvIso(3, 1, 3), 3) == x
    assert iso_J(ZERO, 2) is ZERO
    with pytest.raises(AlgebraError):
        iso_J(x, 2)
    with pytest.raises(AlgebraError):
        iso_J_inv(ConvIso(0, 0, 4), 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_iso_J_homomorphism_on_window(n):
    S = BicyclicExtension.F(n - 1)
    window = S.window(5)
    conv_window = ConvSemigroup(n).window(5)
    images = {iso_J(x, n) for x in window}
    assert len(images) == len(window)
    # the conv window bounds dom and ran, the (i,j,F) window only i and j
    assert set(conv_window) <= images
    for x in window:
        for y in window:
            assert iso_J(S.mul(x, y), n) == compose(iso_J(x, n), iso_J(y, n))


def test_green_and_order():
    S = ConvSemigroup(3)
    assert S.green(ConvIso(0, 4, 2), ConvIso(7, 4, 2)) == {"L", "D"}
    assert S.green(ConvIso(0, 4, 2), ConvIso(0, 1, 2)) == {"R", "D"}
    assert S.green(ConvIso(0, 4, 2), ConvIso(0, 4, 3)) == frozenset()
    assert S.nat_leq(ConvIso(1, 3, 1), ConvIso(0, 2, 3))
    assert not S.nat_leq(ConvIso(1, 4, 1), ConvIso(0, 2, 3))
    assert S.nat_leq(ZERO, ConvIso(5, 0, 1))


def test_window_closed_under_products():
    S = ConvSemigroup(2)
    window = S.window(4)
    assert all(S.in_window(compose(a, b), 4) for a in window for b in window)
    assert len(window) == 1 + 25 + 16


def test_up_set():
    assert up_set(ConvIso(0, 0, 1), 3) == [ConvIso(0, 0, k) for k in (1, 2, 3)]
    assert set(up_set(ConvIso(2, 2, 1), 2)) == {ConvIso(2, 2, 1), ConvIso(1, 1, 2), ConvIso(2, 2, 2)}
    with pytest.raises(NotIdempotent):
        up_set(ConvIso(0, 1, 1), 2)
    with pytest.raises(AlgebraError):
        up_set(ZERO, 2)


def test_up_set_against_order():
    S = ConvSemigroup(3)
    idem = [e for e in S.idempotents(8) if e is not ZERO]
    for e in idem:
        if e.s + 3 > 8:
            continue
        assert set(up_set(e, 3)) == {f for f in idem if S.nat_leq(e, f)}


def test_covers():
    assert covers(ConvIso(0, 0, 1), 2) == [ConvIso(0, 0, 2)]
    assert covers(ConvIso(3, 3, 1), 2) == [ConvIso(2, 2, 2), ConvIso(3, 3, 2)]
    assert covers(ConvIso(3, 3, 2), 2) == []
    assert covers(ZERO, 2, W=2) == [ConvIso(s, s, 1) for s in range(3)]
    with pytest.raises(AlgebraError):
        covers(ZERO, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_maximal_chains(n):
    W = 6
    chains = maximal_chains(W, n)
    assert all(len(c) == n + 1 and c[0] is ZERO for c in chains)
    assert [ZERO] + [ConvIso(0, 0, k) for k in range(1, n + 1)] in chains
    tops = {c[-1] for c in chains}
    assert tops == set(maximal_idempotents(W - n + 1, n))
    S = ConvSemigroup(n)
    for c in chains:
        for lo, hi in zip(c, c[1:]):
            assert S.nat_leq(lo, hi) and lo != hi


def test_chain_count_small():
    # n = 2, W = 2: tops [0,1], [1,2]; each has two atoms below, atom 1 shared
    chains = maximal_chains(2, 2)
    assert len(chains) == 4


def test_hasse_output():
    edges = hasse_edges(2, 2)
    assert (ZERO, ConvIso(0, 0, 1)) in edges
    assert (ConvIso(1, 1, 1), ConvIso(0, 0, 2)) in edges
    dot = hasse_dot(2, 2)
    assert dot.startswith("digraph")
    assert "rank_2" in dot and dot.rstrip().endswith("}")
