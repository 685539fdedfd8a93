import pytest
from hypothesis import given, strategies as st

from bicyclic_endo import ZERO, BExtElt, ConvIso
from bicyclic_endo.grammar import (
    ParseError,
    element_from_json,
    element_kind,
    element_to_json,
    format_table,
    parse_element,
    parse_family,
    parse_set,
    parse_table,
)
from bicyclic_endo.matrix_units import MatUnit
from bicyclic_endo.omega_family import EMPTY, OmegaSet, family_F, initial_interval


def test_parse_sets():
    assert parse_set("[0;3]") == initial_interval(3)
    assert parse_set("{ 2 , 0 }") == OmegaSet.of([0, 2])
    assert parse_set("{}") == EMPTY


def test_parse_families():
    assert parse_family("F2") == parse_family("F_2") == family_F(2)
    assert parse_family("{[0;0],[0;1],{}}") == family_F(1)


def test_parse_elements():
    assert parse_element("(2,1,[0;1])") == BExtElt(2, 1, initial_interval(1))
    assert parse_element("(2,1,{})") is ZERO
    assert parse_element(" 0 ") is ZERO
    assert parse_element("conv(3,0,2)") == ConvIso(3, 0, 2)
    assert parse_element("mu(1,0)") == MatUnit(1, 0)


@pytest.mark.parametrize(
    "text, pos",
    [("(1,2,[1;3])", 6), ("conv(1,2,0)", 9), ("(1,2", 4), ("conv(1,2,3) x", 12), ("{1,1}", 3)],
)
def test_parse_errors_point_at_problem(text, pos):
    parser = parse_set if text.startswith("{") else parse_element
    with pytest.raises(ParseError) as info:
        parser(text)
    assert info.value.pos == pos
    assert "^" in str(info.value)


elements = st.one_of(
    st.just(ZERO),
    st.builds(lambda i, j, k: BExtElt(i, j, initial_interval(k)), st.integers(0, 50), st.integers(0, 50), st.integers(0, 5)),
    st.builds(ConvIso, st.integers(0, 50), st.integers(0, 50), st.integers(1, 5)),
    st.builds(MatUnit, st.integers(0, 5), st.integers(0, 5)),
)


@given(elements)
def test_str_parse_roundtrip(x):
    assert parse_element(str(x)) == x


@given(elements)
def test_json_roundtrip(x):
    kind = element_kind(x) or "conv"
    assert element_from_json(element_to_json(x), kind) == x


def test_general_set_element_roundtrip():
    x = BExtElt(1, 1, OmegaSet.of([0, 2]))
    assert parse_element(str(x)) == x


def test_table_roundtrip_and_errors():
    text = "# shift\nconv(0,0,1) -> conv(1,1,1)\n0 -> 0  # zero\n\n"
    m = parse_table(text)
    assert m == {ConvIso(0, 0, 1): ConvIso(1, 1, 1), ZERO: ZERO}
    assert parse_table(format_table(m)) == m
    with pytest.raises(ParseError, match="line 2"):
        parse_table("0 -> 0\nconv(0,0,1) conv(1,1,1)")
    with pytest.raises(ParseError, match="line 1"):
        parse_table("conv(0,0,1) -> conv(1,1,")
    with pytest.raises(ParseError, match="mapped twice"):
        parse_table("0 -> 0\n0 -> conv(0,0,1)")
