import pytest

from bicyclic_endo import ZERO, BExtElt, BicyclicExtension, ConvIso
from bicyclic_endo.conv_iso import ConvSemigroup, iso_J
from bicyclic_endo.endomorphism import (
    Annihilate,
    Shift,
    Table,
    apply,
    classify_injective,
    compose_endos,
    injective_endo_monoid_check,
    semigroup_for,
    table_of,
    verify_endomorphism,
)
from bicyclic_endo.errors import AlgebraError, OutOfWindow, Unsupported
from bicyclic_endo.omega_family import initial_interval
from bicyclic_endo.suite import mutate


def test_apply_shift():
    assert apply(Shift(3), BExtElt(1, 2, initial_interval(1))) == BExtElt(4, 5, initial_interval(1))
    assert apply(Shift(2), ConvIso(0, 1, 2)) == ConvIso(2, 3, 2)
    assert apply(Shift(5), ZERO) is ZERO
    with pytest.raises(ValueError):
        Shift(-1)


def test_apply_table_miss():
    t = table_of(Shift(1), ConvSemigroup(2), 3)
    with pytest.raises(OutOfWindow):
        apply(t, ConvIso(9, 9, 1))


@pytest.mark.parametrize("p", [0, 1, 2, 5])
@pytest.mark.parametrize("kind, n", [("conv", 1), ("conv", 3), ("bext", 0), ("bext", 2)])
def test_shifts_verify(kind, n, p):
    S = semigroup_for(kind, n)
    v = verify_endomorphism(Shift(p), S, 6)
    assert v.ok and v.skipped == 0 and v.checked == len(S.window(6)) ** 2


def test_shift_table_skips_out_of_window_products():
    S = BicyclicExtension.F(1)
    v = verify_endomorphism(table_of(Shift(2), S, 4), S, 4)
    assert v.ok and v.skipped > 0


def test_constant_at_idempotent_is_endomorphism():
    S = ConvSemigroup(2)
    assert verify_endomorphism(Annihilate(ConvIso(0, 0, 1)), S, 5).ok
    assert verify_endomorphism(Annihilate(ZERO), S, 5).ok


def test_constant_at_non_idempotent_fails():
    v = verify_endomorphism(Annihilate(ConvIso(0, 1, 1)), ConvSemigroup(2), 5)
    assert not v.ok and v.witness is not None


def test_image_outside_semigroup_fails():
    v = verify_endomorphism(Annihilate(ConvIso(0, 0, 3)), ConvSemigroup(2), 4)
    assert not v.ok


def test_inverse_map_is_not_endomorphism():
    S = ConvSemigroup(2)
    m = {x: S.inv(x) for x in S.window(4)}
    assert not verify_endomorphism(Table(4, m), S, 4).ok


def test_compose_endos():
    assert compose_endos(Shift(2), Shift(3)) == Shift(5)
    a = Annihilate(ConvIso(1, 1, 1))
    assert compose_endos(Shift(2), a) == a
    assert compose_endos(a, Shift(2)) == Annihilate(ConvIso(3, 3, 1))
    assert compose_endos(a, Annihilate(ZERO)) == Annihilate(ZERO)
    S = ConvSemigroup(2)
    t = table_of(Shift(1), S, 3)
    assert compose_endos(t, Shift(2)) == table_of(Shift(3), S, 3)
    assert compose_endos(Shift(0), t) is t
    with pytest.raises(AlgebraError):
        compose_endos(Shift(1), t)
    with pytest.raises(AlgebraError):
        compose_endos(t, t)  # images leave the window


def test_classify_shift_tables():
    S = ConvSemigroup(3)
    for p in (0, 3):
        r = classify_injective(table_of(Shift(p), S, 10), 3)
        assert r.ok and r.i0 == p
        assert r.to_json() == {"verdict": "shift", "i0": p}


def test_classify_bext_table_transported():
    S = BicyclicExtension.F(1)
    r = classify_injective(table_of(Shift(4), S, 6), 2)
    assert r.ok and r.i0 == 4
    m = dict(table_of(Shift(4), S, 6).mapping)
    x = BExtElt(2, 3, initial_interval(0))
    m[x] = BExtElt(0, 8, initial_interval(0))  # outside the image of Shift(4)
    r = classify_injective(Table(6, m), 2)
    assert r.violation.kind == "pointwise_mismatch" and r.violation.element == x


def test_classify_perturbed_non_idempotent():
    S = ConvSemigroup(2)
    m = dict(table_of(Shift(2), S, 6).mapping)
    m[ConvIso(0, 1, 1)] = ConvIso(0, 3, 1)  # outside the image of Shift(2)
    r = classify_injective(Table(6, m), 2)
    assert r.violation.kind == "pointwise_mismatch"
    assert r.violation.element == ConvIso(0, 1, 1)
    assert r.to_json()["verdict"] == "violation"


def test_classify_violation_kinds():
    S = ConvSemigroup(2)
    base = table_of(Shift(1), S, 5).mapping

    def kind(changes):
        return classify_injective(Table(5, {**base, **changes}), 2).violation.kind

    assert kind({ZERO: ConvIso(0, 0, 1)}) == "zero_not_fixed"
    assert kind({ConvIso(0, 0, 1): ConvIso(0, 0, 3)}) == "image_outside"
    assert kind({ConvIso(5, 5, 1): ConvIso(1, 1, 1)}) == "non_injective"
    assert kind({ConvIso(0, 0, 1): ConvIso(0, 0, 1)}) == "order_not_preserved"
    m = {x: x for x in S.window(5)}
    m[ConvIso(0, 0, 2)], m[ConvIso(0, 1, 1)] = ConvIso(0, 1, 1), ConvIso(0, 0, 2)
    assert classify_injective(Table(5, m), 2).violation.kind in {
        "order_not_preserved",
        "maximal_not_maximal",
    }


def test_classify_constant_table_rejected():
    S = ConvSemigroup(2)
    t = table_of(Annihilate(ZERO), S, 4)
    assert classify_injective(t, 2).violation.kind == "non_injective"


def test_classify_unsupported():
    with pytest.raises(Unsupported):
        classify_injective(table_of(Shift(0), ConvSemigroup(1), 4), 1)
    with pytest.raises(Unsupported):
        classify_injective(table_of(Shift(0), ConvSemigroup(3), 2), 3)


def test_mutations_are_caught():
    S = ConvSemigroup(2)
    t = table_of(Shift(2), S, 8)
    for x, y in mutate(t, 30, seed=7):
        assert not classify_injective(Table(8, {**t.mapping, x: y}), 2).ok


def test_monoid_check():
    r = injective_endo_monoid_check(6, 8, 2)
    assert r["ok"] and r["window_surjective"] == [0]
    assert r["shift1_misses_conv001"] is True
    with pytest.raises(Unsupported):
        injective_endo_monoid_check(2, 4, 1)


def test_shift_commutes_with_J():
    x = BExtElt(1, 3, initial_interval(1))
    assert iso_J(apply(Shift(2), x), 2) == apply(Shift(2), iso_J(x, 2))
