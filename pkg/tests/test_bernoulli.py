from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import classical_bernoulli_numbers, classical_bernoulli_poly, x_poly
from fglcalc.bernoulli import (
    appell_and_binomial_check,
    bernoulli_family,
    bernoulli_numbers_of_group,
    bernoulli_of_group,
    genus_polynomials,
    s_sequence,
    tilde_of_group,
    universal_bernoulli,
    universal_bernoulli_number,
    universal_family,
)
from fglcalc.exact import CPoly
from fglcalc.fgl import catalog, group_from_c
from fglcalc.gfexpr import eval_series
from fglcalc.series import TruncSeries

F = Fraction
x, c1, c2, c3 = CPoly.x(), CPoly.c(1), CPoly.c(2), CPoly.c(3)


def classical(n):
    return {i: (-1) ** i for i in range(1, n + 1)}


def test_universal_b1():
    assert universal_bernoulli(1) == x + c1 / 2


def test_universal_b3():
    want = x**3 + x**2 * c1 * F(3, 2) + x * (2 * c2 - c1**2 * F(3, 2)) + c1**3 * F(3, 2) - 3 * c1 * c2 + c3 * F(3, 2)
    assert universal_bernoulli(3) == want


def test_universal_b2_corrected_form():
    b2 = universal_bernoulli(2)
    assert b2 == x**2 + x * c1 - c1**2 / 2 + c2 * F(2, 3)
    assert b2.specialize(classical(2), x_value=0) == F(1, 6)
    # the misprinted "-c2/2" variant also gives 1/6 here; the L group tells them apart
    printed = x**2 + x * c1 - c2 / 2 + c2 * F(2, 3)
    assert printed.specialize(classical(2), x_value=0) == F(1, 6)
    l_values = {1: 0, 2: 1}
    assert b2.specialize(l_values, x_value=0) == F(2, 3)
    assert printed.specialize(l_values, x_value=0) != F(2, 3)


def test_weight_cap_drops_high_indices():
    assert universal_bernoulli(3, W=2).c_indices() == {1, 2}


def test_universal_numbers_are_constant_terms():
    for n in range(6):
        assert universal_bernoulli_number(n) == universal_bernoulli(n).coeff_x(0)


@pytest.mark.parametrize("n", range(11))
def test_specialization_homomorphism(n):
    spec = universal_bernoulli(n).specialize(classical(n))
    assert spec == bernoulli_of_group(catalog("classical", n + 1), n)
    assert spec == classical_bernoulli_poly(n)


@pytest.mark.parametrize("n", range(9))
def test_isobaric(n):
    assert universal_bernoulli(n).is_isobaric(n)


def test_higher_order_alpha():
    # (t/G)^2 for the classical group: B^(2)_1(x) = x - 1
    g = catalog("classical", 6)
    assert bernoulli_of_group(g, 1, alpha=2) == x - 1
    # sqrt(1 - t/2 + t^2/12) = 1 - t/4 + t^2/96 + ..., so B^(1/2)_2(0) = 2/96
    half = universal_bernoulli(2, alpha=F(1, 2))
    assert half.specialize(classical(2), x_value=0) == F(1, 48)


def test_alpha_half_squares_back():
    q = catalog("todd", 8).characteristic_series
    from fglcalc.series import series_pow

    r = series_pow(q, F(1, 2))
    assert r * r == q


def test_classical_b2():
    assert bernoulli_of_group(catalog("classical", 4), 2) == x_poly(F(1, 6), -1, 1)


def test_todd_b1():
    assert bernoulli_of_group(catalog("todd", 4), 1) == x + F(1, 2)


@pytest.mark.parametrize("name", ["classical", "todd", "L", "A", "BV", "BVII"])
def test_tilde_low_degrees(name):
    g = catalog(name, 6)
    assert tilde_of_group(g, 0).is_zero()
    assert tilde_of_group(g, 1) == x


def test_group_numbers_match_recurrence():
    assert bernoulli_numbers_of_group(catalog("classical", 13), 12) == list(classical_bernoulli_numbers(12))


def test_order_too_small():
    with pytest.raises(ValueError):
        bernoulli_of_group(catalog("classical", 3), 5)


# --- genus polynomials -----------------------------------------------------


def test_alpha_zero():
    assert genus_polynomials("alpha", 0) == CPoly.const(1)
    assert genus_polynomials("alpha_tilde", 0).is_zero()


def test_alpha2_and_lambda2_constants():
    assert genus_polynomials("alpha", 2).coeff_x(0) == CPoly.const(F(-4, 3))
    assert genus_polynomials("lambda", 2).coeff_x(0) == CPoly.const(F(2, 3))


def test_tilde_definition():
    for kind in ("alpha", "lambda"):
        for n in range(8):
            p = genus_polynomials(kind, n)
            assert genus_polynomials(kind + "_tilde", n) == p - p.coeff_x(0)


def test_a_generator_matches_group():
    g = catalog("A", 10)
    for n in range(9):
        assert genus_polynomials("alpha", n) == bernoulli_of_group(g, n)


def test_unknown_kind():
    with pytest.raises(KeyError):
        genus_polynomials("beta", 2)


def test_s_sequence_trivial():
    assert s_sequence(TruncSeries.one(4), 4) == [1, 0, 0, 0, 0]


def test_s_sequence_todd():
    s = s_sequence(eval_series("t/(1-exp(-t))", 4), 4)
    assert s[1] == F(1, 2) and s[2] == F(1, 12)


def test_s_sequence_uses_top_coefficient():
    q = eval_series("t/(1-exp(-t))", 2)
    assert s_sequence(q, 2) == [1, F(1, 2), F(1, 12)]


def test_s_sequence_even_series():
    assert s_sequence(eval_series("t/tanh(t)", 6), 6)[1] == 0


# --- identities -----------------------------------------------------------


def test_universal_family_identities():
    assert appell_and_binomial_check(universal_family(5), samples=[(F(1, 2), 3)]).ok


def test_classical_family_identities():
    fam = bernoulli_family(catalog("classical", 11), 10)
    assert appell_and_binomial_check(fam, samples=[(F(1, 3), F(-2, 5))]).ok


def test_alpha_zero_family_is_monomials():
    fam = universal_family(5, alpha=0)
    assert all(fam[n] == x**n for n in range(6))
    assert appell_and_binomial_check(fam).ok


def test_identity_check_detects_failure():
    fam = bernoulli_family(catalog("classical", 6), 5)
    fam.polys[3] = fam.polys[3] + 1
    report = appell_and_binomial_check(fam)
    assert ("appell", 4) in report.failures


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.fractions(-2, 2, max_denominator=5))
def test_identities_for_random_groups(cs, alpha):
    g = group_from_c(cs, 7)
    fam = bernoulli_family(g, 6, alpha)
    assert appell_and_binomial_check(fam).ok
