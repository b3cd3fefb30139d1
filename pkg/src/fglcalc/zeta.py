"""Generalized Hurwitz zeta values at non-positive integers, Dirichlet
chi-Bernoulli numbers and the associated L-values.

Only the special values are computed:
``zeta^G(-m, a) = -B^{G'}_{m+1}(a) / (m+1)`` with ``G'(t) = -G(-t)``.
The analytic zeta function needs ``t/G(t)`` to decay at infinity; that is
assumed for the catalog groups and is not checked here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from .bernoulli import bernoulli_of_group, universal_bernoulli
from .congruence import HOLDS, HYPOTHESES_UNMET, INAPPLICABLE, CongruenceVerdict, _primes_dividing_shift, _verdict
from .exact import CycloElem, as_rational
from .fgl import FormalGroup, check_hypotheses, group_from_exp
from .series import TruncSeries

__all__ = [
    "CharacterError",
    "DirichletCharacter",
    "reflect",
    "zeta_neg",
    "th3_check",
    "chi_numbers",
    "l_value_neg",
    "th4_check",
]


class CharacterError(ValueError):
    pass


@dataclass(frozen=True)
class DirichletCharacter:
    """Character table mod ``modulus`` with values ``zeta_order^e``.

    ``exponents[a-1]`` is ``e`` for ``chi(a) = zeta^e`` or ``None`` when
    ``chi(a) = 0``.
    """

    modulus: int
    order: int
    exponents: Tuple[Optional[int], ...]

    def __post_init__(self):
        N, d = self.modulus, self.order
        if N < 1 or d < 1:
            raise CharacterError("modulus and order must be positive")
        if len(self.exponents) != N:
            raise CharacterError(f"expected {N} values, got {len(self.exponents)}")
        ex = tuple(None if e is None else e % d for e in self.exponents)
        object.__setattr__(self, "exponents", ex)
        for a in range(1, N + 1):
            if (ex[a - 1] is None) != (gcd(a, N) > 1):
                raise CharacterError(f"chi({a}) must vanish exactly when gcd({a}, {N}) > 1")
        if ex[0] != 0:
            raise CharacterError("chi(1) must be 1")
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                ea, eb, eab = ex[a - 1], ex[b - 1], ex[(a * b - 1) % N]
                if ea is None or eb is None:
                    continue
                if (ea + eb) % d != eab:
                    raise CharacterError(f"chi is not multiplicative at ({a}, {b})")

    @classmethod
    def from_record(cls, rec: dict) -> "DirichletCharacter":
        values = []
        for v in rec["values"]:
            # null or the string "0" mean chi(a) = 0; integers are exponents
            if v is None or (isinstance(v, str) and v.strip() == "0"):
                values.append(None)
            else:
                values.append(int(v))
        return cls(int(rec["modulus"]), int(rec["order"]), tuple(values))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "DirichletCharacter":
        return cls.from_record(json.loads(Path(path).read_text()))

    @classmethod
    def quadratic(cls, modulus: int, signs: Sequence[int]) -> "DirichletCharacter":
        """Order-2 table from values in {-1, 0, 1}."""
        return cls(modulus, 2, tuple(None if s == 0 else (0 if s == 1 else 1) for s in signs))

    def __call__(self, a: int) -> CycloElem:
        e = self.exponents[(a - 1) % self.modulus]
        if e is None:
            return CycloElem.scalar(self.order, 0)
        return CycloElem.zeta_power(self.order, e)

    def is_trivial(self) -> bool:
        return all(e in (None, 0) for e in self.exponents)

    def looks_imprimitive(self) -> bool:
        """True when the values are periodic modulo a proper divisor of N on units."""
        N = self.modulus
        for q in range(1, N):
            if N % q:
                continue
            ok = True
            for a in range(1, N + 1):
                for b in range(a + q, N + 1, q):
                    ea, eb = self.exponents[a - 1], self.exponents[b - 1]
                    if ea is not None and eb is not None and ea != eb:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
        return False

    def to_record(self) -> dict:
        return {"modulus": self.modulus, "order": self.order, "values": list(self.exponents)}


def reflect(g: FormalGroup) -> FormalGroup:
    """The group with exponential ``G'(t) = -G(-t)``."""
    coeffs = [c * (-1) ** (k + 1) for k, c in enumerate(g.exp.coeffs)]
    name = None if g.name is None else (g.name[:-1] if g.name.endswith("'") else g.name + "'")
    return group_from_exp(TruncSeries(coeffs, g.order), g.order, name)


def zeta_neg(g: FormalGroup, m: int, a) -> Fraction:
    """``zeta^G(-m, a) = -B^{G'}_{m+1}(a) / (m+1)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    a = as_rational(a)
    if a <= 0:
        raise ValueError("a must be positive")
    return -bernoulli_of_group(reflect(g), m + 1)(a) / (m + 1)


def th3_check(g: FormalGroup, n: int, h: int, k: int, strict: bool = False) -> CongruenceVerdict:
    """``n k^n zeta^G(1-n, h/k) in Z`` for odd ``n >= 3``.

    For even n or n = 1 the value is corrected by
    ``-sum_{(p-1)|n, p not | k} c'_{p-1}^(n/(p-1))/p`` with ``c'`` the
    logarithm coefficients of ``G'``.
    """
    params = {"group": g.name, "n": n, "h": h, "k": k}
    if n < 1:
        raise ValueError("n must be positive")
    report = check_hypotheses(g, p_max=min(g.order, max(n + 1, 3)))
    if not report.th3_ok(strict):
        return CongruenceVerdict("th3", params, HYPOTHESES_UNMET, None, report)
    value = n * Fraction(k) ** n * zeta_neg(g, n - 1, Fraction(h, k))
    if n % 2 == 0 or n == 1:
        gp = reflect(g)
        for p in _primes_dividing_shift(n):
            if k % p:
                value -= Fraction(gp.c_at(p - 1)) ** (n // (p - 1)) / p
    return _verdict("th3", params, value)


def _bernoulli_at(g: Optional[FormalGroup], n: int):
    if g is None:
        return universal_bernoulli(n)
    return bernoulli_of_group(g, n)


def chi_numbers(g: Optional[FormalGroup], chi: DirichletCharacter, n: int) -> CycloElem:
    """``B_{n,chi}^G = N^(n-1) sum_a chi(a) B_n^G(a/N)``.

    With ``g=None`` the universal polynomials are used and the coordinates
    of the result are polynomials in the c's.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    N = chi.modulus
    poly = _bernoulli_at(g, n)
    total = CycloElem.scalar(chi.order, 0)
    for a in range(1, N + 1):
        if chi.exponents[a - 1] is None:
            continue
        value = poly.evaluate_x(Fraction(a, N))
        value = value.constant_value() if g is not None else value
        total = total + chi(a) * value
    return total * Fraction(N) ** (n - 1) if n >= 1 else total / N


def l_value_neg(g: FormalGroup, chi: DirichletCharacter, n: int) -> CycloElem:
    """``L(G, chi, 1-n) = N^(n-1) sum_j chi(j) zeta^G(1-n, j/N)``.

    Cross-checked against ``-B^{G'}_{n,chi} / n``; a mismatch raises.
    """
    if n < 1:
        raise ValueError("n must be positive")
    N = chi.modulus
    termwise = CycloElem.scalar(chi.order, 0)
    for j in range(1, N + 1):
        if chi.exponents[j - 1] is None:
            continue
        termwise = termwise + chi(j) * zeta_neg(g, n - 1, Fraction(j, N))
    termwise = termwise * Fraction(N) ** (n - 1)
    via_chi = -chi_numbers(reflect(g), chi, n) / n
    if termwise != via_chi:
        raise ArithmeticError("L-value routes disagree")
    return termwise


def th4_check(g: FormalGroup, chi: DirichletCharacter, n: int, strict: bool = False) -> CongruenceVerdict:
    """``n N L(G, chi, 1-n) in Z[chi]`` for odd ``n >= 3``."""
    params = {"group": g.name, "N": chi.modulus, "n": n}
    if n < 3 or n % 2 == 0:
        return CongruenceVerdict("th4", params, INAPPLICABLE)
    if chi.looks_imprimitive():
        params["imprimitive"] = True
    report = check_hypotheses(g, p_max=min(g.order, max(n + 1, 3)))
    if not report.th3_ok(strict):
        return CongruenceVerdict("th4", params, HYPOTHESES_UNMET, None, report)
    value = l_value_neg(g, chi, n) * (n * chi.modulus)
    v = _verdict("th4", params, value)
    if v.status == HOLDS:
        v.witness = CycloElem.scalar(chi.order, 0)
    return v
