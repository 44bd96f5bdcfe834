import pytest
from hypothesis import given, strategies as st

from lassolink.laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    add,
    conway_to_alexander,
    eq_up_to_units,
    format_poly,
    mul,
    normalize_units,
    parse_poly,
    scale_by_monomial,
)

P = parse_poly


def polys():
    return st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5).map(LaurentPoly)


def test_add_examples():
    assert add(P("1 + z^2"), ZERO) == P("1 + z^2")
    assert add(P("z"), P("-z")) == ZERO
    assert add(P("1 + z^2"), P("z^2")) == P("1 + 2*z^2")


def test_mul_examples():
    z3 = LaurentPoly.monomial(1, 3)
    assert mul(mul(z3, z3), P("1 + z^2")) == P("z^6 + z^8")
    p = P("1 - 3*z + z^-2")
    assert mul(p, ONE) == p
    assert mul(p, ZERO) == ZERO


def test_scale_by_monomial():
    assert scale_by_monomial(P("1 + z^2"), 1, 3) == P("z^3 + z^5")
    assert scale_by_monomial(P("1 + z^2"), -1, 3) == P("-z^3 - z^5")
    assert scale_by_monomial(ZERO, 1, 3) == ZERO
    with pytest.raises(ValueError):
        scale_by_monomial(ONE, 0, 1)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys())
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p, "z"), "z") == p
    assert parse_poly(format_poly(p, "t"), "t") == p


def test_format_order():
    assert format_poly(P("-z^4 + 2*z^2 + 1"), "z") == "1 + 2*z^2 - z^4"
    assert format_poly(ZERO, "z") == "0"


@given(polys(), st.sampled_from([1, -1]), st.integers(-5, 5))
def test_normalize_units(p, sign, shift):
    n = normalize_units(p)
    assert normalize_units(n) == n
    assert normalize_units(scale_by_monomial(p, sign, shift)) == n
    if p:
        assert n.min_exp == 0 and n.coefficient(n.max_exp) > 0


def test_eq_up_to_units():
    t = P("t^2 - t + 1", "t")
    assert eq_up_to_units(t, scale_by_monomial(t, -1, 3))
    assert not eq_up_to_units(t, P("t^2 + t + 1", "t"))
    assert eq_up_to_units(ZERO, ZERO)


def test_conway_to_alexander():
    assert conway_to_alexander(P("1 + z^2")) == P("t^2 - t + 1", "t")
    assert conway_to_alexander(ONE) == ONE
    t_minus_1_cubed = P("t - 1", "t") ** 3
    assert eq_up_to_units(conway_to_alexander(P("z^3 + z^5")), t_minus_1_cubed * P("t^2 - t + 1", "t"))
    # z -> t^(1/2) - t^(-1/2): Hopf gives t - 1 after clearing the half power
    assert conway_to_alexander(P("z")) == P("t - 1", "t")
    assert conway_to_alexander(ZERO) == ZERO


def test_conway_to_alexander_rejects_mixed_parity():
    with pytest.raises(ValueError):
        conway_to_alexander(P("1 + z"))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_conway_to_alexander_multiplicative(cs):
    # even-exponent polynomials form a ring under the substitution
    p = LaurentPoly({2 * k: c for k, c in enumerate(cs)})
    q = P("1 + z^2")
    assert eq_up_to_units(conway_to_alexander(p * q), conway_to_alexander(p) * conway_to_alexander(q))
