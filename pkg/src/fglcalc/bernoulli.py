"""Universal and group-specific Bernoulli polynomials and genus series.

Everything here is an Appell sequence read off a generating function of
the shape ``Q(t) e^(xt)``: the n-th polynomial is
``n! [t^n] Q(t) e^(xt) = sum_k C(n, k) (k! q_k) x^(n-k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import CPoly, as_rational
from .fgl import FormalGroup, universal_group
from .gfexpr import eval_series
from .series import TruncSeries, series_log, series_pow

__all__ = [
    "appell_polynomial",
    "universal_bernoulli",
    "universal_bernoulli_number",
    "bernoulli_of_group",
    "bernoulli_numbers_of_group",
    "tilde_of_group",
    "BernoulliFamily",
    "bernoulli_family",
    "universal_family",
    "GENUS_SERIES",
    "genus_polynomials",
    "s_sequence",
    "AppellReport",
    "appell_and_binomial_check",
]


def appell_polynomial(q: TruncSeries, n: int) -> CPoly:
    """``n! [t^n] q(t) e^(xt)`` as a polynomial in x."""
    if n > q.order:
        raise ValueError(f"series known only to order {q.order}, need {n}")
    x = CPoly.x()
    out = CPoly.zero()
    for k in range(n + 1):
        qk = q[k]
        if qk == 0:
            continue
        coeff = qk * Fraction(factorial(n), factorial(n - k))
        out = out + (coeff * x ** (n - k) if isinstance(coeff, CPoly) else CPoly.monomial(coeff, x=n - k))
    return out


# ---------------------------------------------------------------------
# universal polynomials


@lru_cache(maxsize=None)
def _universal_q(order: int) -> TruncSeries:
    # t / G(t) for the Lazard group with c_1 .. c_order symbolic
    return universal_group(order + 1, W=order).characteristic_series


@lru_cache(maxsize=None)
def _universal_q_power(order: int, alpha: Fraction) -> TruncSeries:
    q = _universal_q(order)
    if alpha == 1:
        return q
    return series_pow(q, alpha)


def _series_for(n: int, alpha: Fraction) -> TruncSeries:
    # share one cached series across small n
    order = max(n, 8)
    return _universal_q_power(order, alpha)


def universal_bernoulli(n: int, alpha=1, W: Optional[int] = None) -> CPoly:
    """Universal higher-order Bernoulli polynomial in x, c_1, c_2, ...

    The weight cap auto-extends to ``n`` (only ``c_1 .. c_n`` can occur).
    With ``W < n`` the indeterminates above ``c_W`` are set to zero.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    alpha = as_rational(alpha)
    poly = appell_polynomial(_series_for(n, alpha), n)
    if W is not None and W < n:
        poly = _drop_above(poly, W)
    return poly


def _drop_above(poly: CPoly, W: int) -> CPoly:
    return CPoly({e: q for e, q in poly.terms.items() if len(e) <= W + 1})


def universal_bernoulli_number(n: int, alpha=1, W: Optional[int] = None) -> CPoly:
    """``B^_n = B^_n(0)``, a polynomial in the c's only."""
    alpha = as_rational(alpha)
    q = _series_for(n, alpha)
    value = q[n] * factorial(n)
    value = value if isinstance(value, CPoly) else CPoly.const(value)
    if W is not None and W < n:
        value = _drop_above(value, W)
    return value


# ---------------------------------------------------------------------
# concrete groups


def _q_of(g: FormalGroup, n: int, alpha=1) -> TruncSeries:
    q = g.characteristic_series
    if q.order < n:
        raise ValueError(f"group known to order {g.order}; degree {n} needs order >= {n + 1}")
    alpha = as_rational(alpha)
    return q if alpha == 1 else series_pow(q, alpha)


def bernoulli_of_group(g: FormalGroup, n: int, alpha=1) -> CPoly:
    """``B_n^G(x) = n! [t^n] (t/G(t))^alpha e^(xt)``."""
    return appell_polynomial(_q_of(g, n, alpha), n)


def bernoulli_numbers_of_group(g: FormalGroup, n_max: int) -> List:
    q = _q_of(g, n_max)
    return [q[k] * factorial(k) for k in range(n_max + 1)]


def tilde_of_group(g: FormalGroup, n: int) -> CPoly:
    """``B_n^G(x) - B_n^G(0)``."""
    p = bernoulli_of_group(g, n)
    return p - p.coeff_x(0)


@dataclass
class BernoulliFamily:
    group: Optional[FormalGroup]
    alpha: Fraction
    polys: List[CPoly]

    def __getitem__(self, n: int) -> CPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


def bernoulli_family(g: FormalGroup, n_max: int, alpha=1) -> BernoulliFamily:
    q = _q_of(g, n_max, alpha)
    return BernoulliFamily(g, as_rational(alpha), [appell_polynomial(q, n) for n in range(n_max + 1)])


def universal_family(n_max: int, alpha=1) -> BernoulliFamily:
    alpha = as_rational(alpha)
    q = _series_for(n_max, alpha)
    return BernoulliFamily(None, alpha, [appell_polynomial(q, n) for n in range(n_max + 1)])


# ---------------------------------------------------------------------
# genus polynomials

GENUS_SERIES: Dict[str, str] = {
    "alpha": "2*t/sinh(2*t)",
    "lambda": "t/tanh(t)",
}


@lru_cache(maxsize=None)
def _genus_series(kind: str, order: int) -> TruncSeries:
    return eval_series(GENUS_SERIES[kind], order)


def genus_polynomials(kind: str, n: int) -> CPoly:
    """The n-th alpha-, lambda-, or tilde polynomial, as a polynomial in one variable.

    ``alpha``/``lambda`` come from ``2t e^(yt)/sinh 2t`` and ``t e^(yt)/tanh t``;
    the ``_tilde`` kinds replace ``e^(yt)`` by ``e^(yt) - 1``.
    """
    base, _, tilde = kind.partition("_")
    if base not in GENUS_SERIES or tilde not in ("", "tilde"):
        raise KeyError(f"unknown genus kind {kind!r}")
    q = _genus_series(base, max(n, 8))
    poly = appell_polynomial(q, n)
    if tilde:
        poly = poly - poly.coeff_x(0)
    return poly


def s_sequence(Q: TruncSeries, n_max: int) -> List[Fraction]:
    """``s_j`` from ``1 - z (log Q)'(z) = sum_j (-1)^j s_j z^j``."""
    if Q.order < n_max:
        raise ValueError(f"series known only to order {Q.order}")
    lq = series_log(Q.truncate(n_max))
    # z * (log Q)' at the full order
    zdl = [Fraction(0)] + list(lq.derivative().coeffs) if n_max else []
    lhs = TruncSeries.one(n_max) - TruncSeries(zdl, n_max)
    return [lhs[j] * (-1) ** j for j in range(n_max + 1)]


# ---------------------------------------------------------------------
# identity checks


@dataclass
class AppellReport:
    n_max: int
    failures: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _shift_expand(poly: CPoly) -> Dict[int, CPoly]:
    """Expand ``poly(x + y)`` and group by powers of y."""
    by_y: Dict[int, Dict] = {}
    for e, q in poly.terms.items():
        ex = e[0] if e else 0
        rest = e[1:]
        for j in range(ex + 1):
            key = (ex - j,) + rest
            bucket = by_y.setdefault(j, {})
            bucket[key] = bucket.get(key, Fraction(0)) + q * comb(ex, j)
    return {j: CPoly(d) for j, d in by_y.items()}


def appell_and_binomial_check(
    family: BernoulliFamily,
    n_max: Optional[int] = None,
    samples: Sequence[Tuple] = (),
) -> AppellReport:
    """Check ``D B_n = n B_(n-1)`` and ``B_n(x+y) = sum_m C(n,m) B_m(x) y^(n-m)``.

    Both are checked as polynomial identities; ``samples`` adds pointwise
    checks at rational ``(x, y)`` pairs.
    """
    polys = family.polys
    n_max = len(polys) - 1 if n_max is None else n_max
    report = AppellReport(n_max)
    for n in range(n_max + 1):
        p = polys[n]
        if n >= 1 and p.derivative_x() != polys[n - 1] * n:
            report.failures.append(("appell", n))
        expanded = _shift_expand(p)
        for m in range(n + 1):
            want = polys[m] * comb(n, m)
            if expanded.get(n - m, CPoly.zero()) != want:
                report.failures.append(("binomial", n))
                break
        for xv, yv in samples:
            xv, yv = as_rational(xv), as_rational(yv)
            lhs = p.evaluate_x(xv + yv)
            rhs = CPoly.zero()
            for m in range(n + 1):
                rhs = rhs + polys[m].evaluate_x(xv) * (comb(n, m) * yv ** (n - m))
            if lhs != rhs:
                report.failures.append(("binomial-sample", n))
    return report

