from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fglcalc.bernoulli import universal_bernoulli_number
from fglcalc.exact import (
    CPoly,
    CycloElem,
    cyclo_is_integral,
    cyclotomic_polynomial,
    euler_phi,
    format_rational,
    frac_part,
    is_integral,
)

c1, c2, c3, x = CPoly.c(1), CPoly.c(2), CPoly.c(3), CPoly.x()

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
exponents = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.integers(0, 1))


@st.composite
def cpolys(draw, max_terms=4):
    terms = draw(st.dictionaries(exponents, rationals, max_size=max_terms))
    return CPoly(terms)


def classical_assignment(n):
    return {i: (-1) ** i for i in range(1, n + 1)}


# --- canonical form ------------------------------------------------------


def test_zero_coefficients_are_dropped():
    p = c1**2 / 2 + (-(c1**2) / 2)
    assert p.is_zero()
    assert p.terms == {}


def test_monomial_product():
    assert c1 * c1 == c1**2
    assert (c1 * c1).to_text() == "c1^2"


def test_subtraction_leaves_half_c1():
    assert (x + c1 / 2) - x == c1 / 2


def test_trailing_zero_exponents_are_stripped():
    assert CPoly({(0, 1, 0, 0): 1}) == c1
    assert CPoly({(0, 0, 0): 3}) == CPoly.const(3)


def test_text_form_is_graded():
    p = x**2 * c1 * Fraction(3, 2) - c2 + 7
    assert p.to_text() == "3/2*x^2*c1 - c2 + 7"
    assert CPoly.zero().to_text() == "0"


def test_weights_and_isobaric():
    p = x**2 + x * c1 - c1**2 / 2 + c2 * Fraction(2, 3)
    assert p.is_isobaric(2)
    assert not (p + c1).is_isobaric(2)
    assert p.weights() == {2}


def test_format_rational():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"


def test_frac_part_range():
    assert frac_part(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac_part(Fraction(7, 2)) == Fraction(1, 2)


# --- specialize ----------------------------------------------------------


def test_specialize_b4_classical():
    assert universal_bernoulli_number(4).specialize(classical_assignment(4)) == Fraction(-1, 30)


def test_specialize_b5_classical():
    assert universal_bernoulli_number(5).specialize(classical_assignment(5)) == 0


def test_specialize_half_c1():
    assert (c1 / 2).specialize({1: -1}) == Fraction(-1, 2)


def test_specialize_missing_index():
    with pytest.raises(KeyError):
        (c1 + c2).specialize({1: 1})


def test_specialize_with_x_value_gives_scalar():
    v = (x * c1 + c2).specialize({1: 2, 2: 3}, x_value=Fraction(1, 2))
    assert v == 4 and isinstance(v, Fraction)


# --- residues ------------------------------------------------------------


def test_residue_drops_integer_part():
    assert (3 * c2 + c1 / 2).residue_mod_z() == c1 / 2


def test_residue_uses_unit_interval():
    p = -(c1**2) / 2 + c2 * Fraction(2, 3)
    assert p.residue_mod_z() == c1**2 / 2 + c2 * Fraction(2, 3)


def test_residue_of_integral_poly():
    assert c2.residue_mod_z().is_zero()


@pytest.mark.parametrize(
    "poly, prime, expected",
    [
        (c2 * Fraction(3, 5), 3, True),
        (c1 / 3, 3, False),
        (2 * c2, 3, False),
    ],
)
def test_p_integral_and_divisible(poly, prime, expected):
    assert poly.is_p_integral_and_divisible(prime) is expected


# --- properties ----------------------------------------------------------


@given(cpolys(), cpolys(), cpolys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == CPoly.zero()


@given(cpolys())
def test_residue_is_idempotent_representative(p):
    r = p.residue_mod_z()
    assert (p - r).residue_mod_z().is_zero()
    assert all(0 <= q < 1 for q in r.terms.values())


@given(cpolys(), cpolys(), rationals, rationals, rationals, rationals)
def test_specialize_is_a_ring_map(a, b, v1, v2, v3, xv):
    assign = {1: v1, 2: v2, 3: v3}
    lhs = (a * b).specialize(assign, x_value=xv)
    rhs = a.specialize(assign, x_value=xv) * b.specialize(assign, x_value=xv)
    assert lhs == rhs
    assert (a + b).specialize(assign, x_value=xv) == a.specialize(assign, x_value=xv) + b.specialize(assign, x_value=xv)


# --- cyclotomic ----------------------------------------------------------


def test_phi_and_cyclotomic_polynomials():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 12)] == [1, 1, 2, 2, 4]
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_order_one_is_rational():
    assert cyclo_is_integral(CycloElem.scalar(1, 7))
    assert not cyclo_is_integral(CycloElem.scalar(1, Fraction(1, 2)))


def test_i_squared():
    z = CycloElem.zeta_power(4, 1)
    assert z * z == CycloElem.scalar(4, -1)


def test_norm_relation_order_three():
    z = CycloElem.zeta_power(3, 1)
    one = CycloElem.scalar(3, 1)
    assert (one + z) * (one + z * z) == one


def test_order_mismatch():
    with pytest.raises(ValueError):
        CycloElem.zeta_power(3, 1) + CycloElem.zeta_power(4, 1)


def test_is_integral_dispatch():
    assert is_integral(Fraction(4, 2))
    assert not is_integral(c1 / 2)
    assert is_integral(CycloElem(3, [1, -2]))


def _brute_mul(a, b, d):
    prod = [Fraction(0)] * (2 * d)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            prod[i + j] += u * v
    # reduce with x^d = 1, then with 1 + x + ... + x^(d-1) = 0
    folded = [Fraction(0)] * d
    for k, v in enumerate(prod):
        folded[k % d] += v
    top = folded[d - 1]
    return [folded[k] - top for k in range(d - 1)]


@pytest.mark.parametrize("d", [2, 3, 5, 7])
@given(data=st.data())
def test_prime_order_multiplication_matches_brute_force(d, data):
    coords = st.lists(rationals, min_size=d - 1, max_size=d - 1)
    a, b = data.draw(coords), data.draw(coords)
    got = CycloElem(d, a) * CycloElem(d, b)
    assert list(got.coords) == _brute_mul(a, b, d)
