"""One-dimensional formal group laws given by a logarithm/exponential pair.

The logarithm is ``F(s) = sum_i c_i s^(i+1)/(i+1)`` and the exponential
``G(t) = sum_i gamma_i t^(i+1)/(i+1)`` is its compositional inverse, with
``c_0 = gamma_0 = 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Union

from .exact import CPoly, format_rational
from .gfexpr import Node, eval_series, parse
from .series import MultiSeries, SeriesError, TruncSeries, bi_substitute, revert, series_div, substitute

__all__ = [
    "FormalGroup",
    "HypothesisReport",
    "PairHypothesisReport",
    "AxiomReport",
    "CATALOG",
    "primes_up_to",
    "group_from_c",
    "group_from_exp",
    "group_from_q",
    "universal_group",
    "catalog",
    "group_law",
    "check_hypotheses",
    "check_pair_hypotheses",
]

# exponentials of the named groups, as generating-function expressions
CATALOG: Dict[str, str] = {
    "classical": "exp(t)-1",
    "todd": "1-exp(-t)",
    "hurwitz": "1-exp(-t)",
    "L": "tanh(t)",
    "A": "sinh(2*t)/2",
    "BV": "exp(3*t)-2*exp(2*t)+2*exp(t)-2*exp(-t)+exp(-2*t)",
    "BVII": "-(exp(4*t)-exp(3*t)+exp(2*t)-2*exp(t)+exp(-t)-exp(-2*t)+exp(-3*t))",
    "additive": "t",
}
_CATALOG_KEYS = {k.lower(): k for k in CATALOG}


def primes_up_to(n: int) -> List[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(n + 1) if sieve[p]]


def _coef_text(c) -> str:
    return c.to_text() if isinstance(c, CPoly) else format_rational(c)


@dataclass(frozen=True, eq=False)
class FormalGroup:
    """A formal group law known through order ``order``.

    ``c[i]`` and ``gamma[i]`` are available for ``0 <= i < order``.
    """

    log: TruncSeries
    exp: TruncSeries
    c: tuple
    gamma: tuple
    order: int
    name: Optional[str] = None

    @cached_property
    def characteristic_series(self) -> TruncSeries:
        """``t / G(t)`` through order ``order - 1``."""
        return series_div(TruncSeries.variable(self.order), self.exp)

    def is_scalar(self) -> bool:
        return not any(isinstance(ci, CPoly) and not ci.is_constant() for ci in self.c)

    def c_at(self, i: int):
        if i >= len(self.c):
            raise IndexError(f"c_{i} needs a group of order > {i}; this one has order {self.order}")
        return self.c[i]

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "c": [_coef_text(ci) for ci in self.c],
            "gamma": [_coef_text(gi) for gi in self.gamma],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    def __repr__(self) -> str:
        return f"FormalGroup(name={self.name!r}, order={self.order})"


def _from_log_exp(F: TruncSeries, G: TruncSeries, order: int, name) -> FormalGroup:
    c = tuple(F[i + 1] * (i + 1) for i in range(order))
    gamma = tuple(G[i + 1] * (i + 1) for i in range(order))
    return FormalGroup(F, G, c, gamma, order, name)


def group_from_c(c: Sequence, order: int, name: Optional[str] = None, include_c0: bool = False) -> FormalGroup:
    """Group with logarithm coefficients ``c_1, c_2, ...``.

    Missing coefficients are zero.  Pass ``include_c0=True`` when the list
    starts with ``c_0`` (which must then equal 1).
    """
    c = list(c)
    if include_c0:
        if not c or c[0] != 1:
            raise ValueError("c_0 must be 1")
        c = c[1:]
    coeffs: List = [Fraction(0), Fraction(1)]
    for i in range(1, order):
        ci = c[i - 1] if i - 1 < len(c) else 0
        if not isinstance(ci, CPoly):
            ci = Fraction(ci)
        coeffs.append(ci / (i + 1))
    F = TruncSeries(coeffs, order)
    return _from_log_exp(F, revert(F), order, name)


def _as_series(G: Union[str, Node, TruncSeries], order: int) -> TruncSeries:
    if isinstance(G, TruncSeries):
        if G.order < order:
            raise ValueError(f"series known only to order {G.order}, need {order}")
        return G.truncate(order)
    return eval_series(parse(G) if isinstance(G, str) else G, order)


def group_from_exp(G, order: int, name: Optional[str] = None) -> FormalGroup:
    """Group from its exponential (series, expression string or AST)."""
    Gs = _as_series(G, order)
    if Gs[0] != 0 or Gs[1] != 1:
        raise SeriesError("a formal group exponential must be t + O(t^2)")
    return _from_log_exp(revert(Gs), Gs, order, name)


def group_from_q(Q, order: int, name: Optional[str] = None) -> FormalGroup:
    """Group from a characteristic series ``Q(t) = t / G(t)``."""
    Qs = _as_series(Q, order)
    if Qs[0] != 1:
        raise SeriesError("a characteristic series must have constant term 1")
    G = series_div(TruncSeries.variable(order), Qs)
    return group_from_exp(G, order, name)


def universal_group(order: int, W: Optional[int] = None) -> FormalGroup:
    """The Lazard group with symbolic ``c_1 .. c_W`` (default ``W = order - 1``)."""
    W = order - 1 if W is None else W
    cs = [CPoly.c(i) if i <= W else 0 for i in range(1, order)]
    return group_from_c(cs, order, name="universal")


def catalog(name: str, order: int) -> FormalGroup:
    key = _CATALOG_KEYS.get(name.lower())
    if key is None:
        raise KeyError(f"unknown catalog group {name!r}; choose from {', '.join(CATALOG)}")
    return group_from_exp(CATALOG[key], order, name=key)


# ---------------------------------------------------------------------
# group law


@dataclass
class AxiomReport:
    order: int
    unit: bool
    commutative: bool
    associative: bool

    @property
    def all_pass(self) -> bool:
        return self.unit and self.commutative and self.associative


def group_law(g: FormalGroup, order: Optional[int] = None):
    """``Phi(s1, s2) = G(F(s1) + F(s2))`` plus an axiom report."""
    order = g.order if order is None else order
    phi = bi_substitute(g.log, g.exp, order)
    s = MultiSeries.from_univariate(TruncSeries.variable(order), 2, 0, order)
    unit = phi.restrict_zero(1) == s and phi.restrict_zero(0) == s.permute([1, 0])
    commutative = phi == phi.permute([1, 0])
    phi3_12 = phi.embed(3, [0, 1])
    phi3_23 = phi.embed(3, [1, 2])
    s1 = MultiSeries.from_univariate(TruncSeries.variable(order), 3, 0, order)
    s3 = MultiSeries.from_univariate(TruncSeries.variable(order), 3, 2, order)
    left = substitute(phi, [phi3_12, s3])
    right = substitute(phi, [s1, phi3_23])
    associative = left == right
    return phi, AxiomReport(order, unit, commutative, associative)


# ---------------------------------------------------------------------
# hypotheses of the congruence theorems


def _int_or_none(v) -> Optional[int]:
    if isinstance(v, CPoly):
        if not v.is_constant():
            return None
        v = v.constant_value()
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else None


@dataclass
class HypothesisReport:
    """Integrality and residue conditions on the logarithm coefficients.

    ``staudt_condition`` maps each odd prime p to ``c_{p-1} mod p`` when that
    residue is 0 or 1 and to ``"fail"`` otherwise.
    """

    c_integral: bool
    staudt_condition: Dict[int, Union[int, str]]
    parity_condition: bool
    max_prime_checked: int
    c1_mod2: Optional[int] = None

    @property
    def th1_ok(self) -> bool:
        return self.c_integral and self.parity_condition and all(v in (0, 1) for v in self.staudt_condition.values())

    def th3_ok(self, strict: bool = False) -> bool:
        """Hypotheses for the zeta congruences.

        ``strict`` demands ``c_{p-1} = 1 mod p`` for every prime including 2;
        otherwise the weaker conditions of the Almkvist-Meurman theorem apply.
        """
        if not strict:
            return self.th1_ok
        return (
            self.c_integral
            and self.parity_condition
            and self.c1_mod2 == 1
            and all(v == 1 for v in self.staudt_condition.values())
        )

    def failures(self) -> List[str]:
        out = []
        if not self.c_integral:
            out.append("c not integral")
        out += [f"c_{p - 1} mod {p} not in {{0,1}}" for p, v in self.staudt_condition.items() if v == "fail"]
        if not self.parity_condition:
            out.append("parity of c_1, c_3")
        return out

    def to_record(self) -> dict:
        return {
            "c_integral": self.c_integral,
            "staudt_condition": {str(p): v for p, v in self.staudt_condition.items()},
            "parity_condition": self.parity_condition,
            "max_prime_checked": self.max_prime_checked,
        }


def check_hypotheses(g: FormalGroup, p_max: Optional[int] = None) -> HypothesisReport:
    """Check ``c_i`` integral, ``c_{p-1} = 0, 1 mod p`` for odd p, and the
    parity clause on ``c_1, c_3``."""
    if not g.is_scalar():
        raise ValueError("hypotheses can only be checked on a concrete group")
    p_max = g.order if p_max is None else p_max
    if p_max > g.order:
        raise ValueError(f"need a group of order >= {p_max} to see c_{p_max - 1}")
    ints = [_int_or_none(ci) for ci in g.c]
    c_integral = all(v is not None for v in ints)
    staudt: Dict[int, Union[int, str]] = {}
    for p in primes_up_to(p_max):
        if p == 2:
            continue
        v = ints[p - 1]
        r = None if v is None else v % p
        staudt[p] = r if r in (0, 1) else "fail"
    c1 = ints[1] if len(ints) > 1 else 0
    c3 = ints[3] if len(ints) > 3 else None
    if len(ints) <= 3:
        raise ValueError("need a group of order >= 4 to see c_3")
    if c1 is None or c3 is None:
        parity = False
    else:
        parity = (c1 - c3) % 2 == 0 or (c1 % 2 == 1 and c3 % 2 == 0)
    return HypothesisReport(c_integral, staudt, parity, p_max, None if c1 is None else c1 % 2)


@dataclass
class PairHypothesisReport:
    c_integral: bool
    agreement: Dict[int, bool] = field(default_factory=dict)
    max_prime_checked: int = 0

    @property
    def ok(self) -> bool:
        return self.c_integral and all(self.agreement.values())

    def to_record(self) -> dict:
        return {
            "c_integral": self.c_integral,
            "agreement": {str(p): v for p, v in self.agreement.items()},
            "max_prime_checked": self.max_prime_checked,
        }


def check_pair_hypotheses(g1: FormalGroup, g2: FormalGroup, p_max: Optional[int] = None) -> PairHypothesisReport:
    """Both groups integral and ``c_{p-1}`` agreeing mod p for all primes p <= p_max."""
    p_max = min(g1.order, g2.order) if p_max is None else p_max
    a = [_int_or_none(ci) for ci in g1.c[:p_max]]
    b = [_int_or_none(ci) for ci in g2.c[:p_max]]
    integral = all(v is not None for v in a + b)
    agreement = {}
    for p in primes_up_to(p_max):
        x, y = a[p - 1], b[p - 1]
        agreement[p] = x is not None and y is not None and (x - y) % p == 0
    return PairHypothesisReport(integral, agreement, p_max)
