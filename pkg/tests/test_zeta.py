from __future__ import annotations

import json
from fractions import Fraction

import pytest

from conftest import classical_bernoulli_poly
from fglcalc.congruence import HYPOTHESES_UNMET, INAPPLICABLE
from fglcalc.exact import CPoly, CycloElem
from fglcalc.fgl import catalog, group_from_c
from fglcalc.gfexpr import eval_series
from fglcalc.zeta import (
    CharacterError,
    DirichletCharacter,
    chi_numbers,
    l_value_neg,
    reflect,
    th3_check,
    th4_check,
    zeta_neg,
)

F = Fraction


@pytest.fixture(scope="module")
def hurwitz():
    return catalog("hurwitz", 14)


def rational(value):
    return CycloElem.scalar(2, value)


# --- characters ------------------------------------------------------------------


def test_character_validation():
    with pytest.raises(CharacterError):
        DirichletCharacter(4, 2, (0, 0, 1, None))  # chi(2) must vanish
    with pytest.raises(CharacterError):
        DirichletCharacter(4, 2, (1, None, 1, None))  # chi(1) != 1
    with pytest.raises(CharacterError):
        DirichletCharacter(5, 4, (0, 1, 1, 2, None))  # not multiplicative


def test_character_values(chi4):
    assert chi4(3) == CycloElem.scalar(2, -1)
    assert chi4(7) == chi4(3)
    assert chi4(2).is_zero()


def test_order_four_character_mod5():
    chi = DirichletCharacter(5, 4, (0, 1, 3, 2, None))
    assert chi(2) * chi(2) == chi(4)
    assert chi(2) ** 4 == CycloElem.scalar(4, 1)


def test_character_file(tmp_path):
    path = tmp_path / "chi4.json"
    path.write_text(json.dumps({"modulus": 4, "order": 2, "values": [0, "0", 1, None]}))
    chi = DirichletCharacter.from_file(path)
    assert chi.to_record() == {"modulus": 4, "order": 2, "values": [0, None, 1, None]}


def test_imprimitive_detection(chi4):
    assert not chi4.looks_imprimitive()
    # the mod-4 character read modulo 8
    chi8 = DirichletCharacter.quadratic(8, [1, 0, -1, 0, 1, 0, -1, 0])
    assert chi8.looks_imprimitive()


# --- reflection ------------------------------------------------------------------


def test_reflect_todd_kernel():
    assert reflect(catalog("todd", 8)).exp == eval_series("exp(t)-1", 8)


def test_reflect_odd_exponential():
    g = catalog("L", 8)
    assert reflect(g).exp == g.exp


def test_reflect_involution():
    g = catalog("classical", 8)
    assert reflect(reflect(g)).exp == g.exp
    assert reflect(reflect(g)).name == "classical"


# --- special values ----------------------------------------------------------------


def test_zeta_at_zero(hurwitz):
    assert zeta_neg(hurwitz, 0, F(1, 3)) == F(1, 6)


def test_zeta_minus_one(hurwitz):
    assert zeta_neg(hurwitz, 1, 1) == F(-1, 12)


def test_zeta_linear_case(hurwitz):
    for a in (F(1, 5), F(2), F(7, 3)):
        assert zeta_neg(hurwitz, 0, a) == F(1, 2) - a


@pytest.mark.parametrize("m", range(11))
def test_hurwitz_identity(hurwitz, m):
    for a in (F(1), F(1, 2), F(1, 3), F(1, 4), F(2, 3)):
        assert zeta_neg(hurwitz, m, a) == -classical_bernoulli_poly(m + 1)(a) / (m + 1)


def test_zeta_domain(hurwitz):
    with pytest.raises(ValueError):
        zeta_neg(hurwitz, -1, 1)
    with pytest.raises(ValueError):
        zeta_neg(hurwitz, 0, 0)


# --- th3 ------------------------------------------------------------------------------


def test_th3_examples(hurwitz):
    assert th3_check(hurwitz, 3, 1, 2).holds
    assert th3_check(hurwitz, 5, 2, 3).holds
    assert th3_check(catalog("L", 10), 3, 1, 2).holds


def test_th3_value_oracle(hurwitz):
    # 3 * 8 * zeta(-2, 1/2) = -8 * B_3(1/2) = 0
    assert 24 * zeta_neg(hurwitz, 2, F(1, 2)) == 0


@pytest.mark.parametrize("name", ["hurwitz", "classical", "L"])
def test_th3_grid(name):
    g = catalog(name, 10)
    assert all(th3_check(g, n, h, k).holds for n in (3, 5, 7) for h in range(1, 7) for k in range(1, 7))


def test_th3_even_variant(hurwitz):
    assert all(th3_check(hurwitz, n, h, k).holds for n in (1, 2, 4, 6) for h in range(1, 5) for k in range(1, 5))


def test_th3_strict_mode():
    # L has c_1 = 0, so only the relaxed hypotheses hold
    g = catalog("L", 10)
    assert th3_check(g, 3, 1, 2, strict=True).status == HYPOTHESES_UNMET
    assert th3_check(catalog("hurwitz", 10), 3, 1, 2, strict=True).holds


def test_th3_hypothesis_failure():
    bad = group_from_c([0, 2, 0, 1, 0, 1], 8)
    assert th3_check(bad, 3, 1, 1).status == HYPOTHESES_UNMET


# --- chi numbers and L-values -----------------------------------------------------------


def test_chi_number_n1(chi4):
    assert chi_numbers(catalog("classical", 6), chi4, 1) == rational(F(-1, 2))


def test_chi_number_n2(chi4):
    b2 = classical_bernoulli_poly(2)
    want = 4 * (b2(F(1, 4)) - b2(F(3, 4)))
    assert chi_numbers(catalog("classical", 6), chi4, 2) == rational(want)


def test_chi_number_trivial_character():
    chi = DirichletCharacter(1, 1, (0,))
    g = catalog("classical", 8)
    for n in range(1, 6):
        assert chi_numbers(g, chi, n) == CycloElem.scalar(1, classical_bernoulli_poly(n)(1))


def test_universal_chi_numbers(chi4):
    u = chi_numbers(None, chi4, 2)
    c = u.coords[0]
    assert isinstance(c, CPoly)
    assert c.specialize({1: -1, 2: 1}) == chi_numbers(catalog("classical", 6), chi4, 2).coords[0]


def test_l_value_n1(hurwitz, chi4):
    assert l_value_neg(hurwitz, chi4, 1) == rational(F(1, 2))


def test_l_value_trivial_character(hurwitz):
    chi = DirichletCharacter(1, 1, (0,))
    for n in range(1, 6):
        assert l_value_neg(hurwitz, chi, n) == CycloElem.scalar(1, zeta_neg(hurwitz, n - 1, 1))


@pytest.mark.parametrize("name", ["hurwitz", "classical", "L", "A", "BV"])
def test_two_routes(name, chi3, chi4):
    g = catalog(name, 12)
    chi5 = DirichletCharacter(5, 4, (0, 1, 3, 2, None))
    for chi in (chi3, chi4, chi5):
        for n in range(1, 7):
            l_value_neg(g, chi, n)  # raises on disagreement


def test_l_value_mod3_n2(hurwitz, chi3):
    # chi3 is odd, so the even-index value vanishes
    assert l_value_neg(hurwitz, chi3, 2) == rational(0)


# --- th4 ------------------------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 5])
def test_th4_quadratic(hurwitz, chi3, chi4, n):
    assert th4_check(hurwitz, chi4, n).holds
    assert th4_check(hurwitz, chi3, n).holds


def test_th4_trivial_reduces_to_th3(hurwitz):
    chi = DirichletCharacter(1, 1, (0,))
    assert th4_check(hurwitz, chi, 3).holds
    assert th3_check(hurwitz, 3, 1, 1).holds


def test_th4_order_four_character(hurwitz):
    chi5 = DirichletCharacter(5, 4, (0, 1, 3, 2, None))
    assert th4_check(hurwitz, chi5, 3).holds


def test_th4_outside_range(hurwitz, chi4):
    assert th4_check(hurwitz, chi4, 2).status == INAPPLICABLE


def test_th4_flags_imprimitive(hurwitz):
    chi8 = DirichletCharacter.quadratic(8, [1, 0, -1, 0, 1, 0, -1, 0])
    v = th4_check(hurwitz, chi8, 3)
    assert v.parameters.get("imprimitive") is True
