"""Integer sequences and integer-coefficient Appell polynomials obtained from
differences of characteristic series ``t/G1(t) - t/G2(t)``.

The k-th term is ``N_k = 2 k! [t^k] f(t)`` and the k-th polynomial is
``N_k(x) = 2 k! [t^k] f(t) e^(xt)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Union

from .bernoulli import appell_polynomial
from .exact import CPoly, format_rational
from .fgl import FormalGroup, PairHypothesisReport, check_pair_hypotheses
from .gfexpr import Node, eval_series, parse, to_text
from .series import TruncSeries

__all__ = [
    "NkSequence",
    "nk_from_groups",
    "nk_from_expr",
    "nk_polynomials",
    "nk_polynomials_from_expr",
    "printed_polynomials",
    "GENF1",
    "SEQUENCE_B1",
    "SEQUENCE_B2",
]

SEQUENCE_B1 = "t*(1+exp(t))/(2*(1+exp(t)-exp(2*t)))"
SEQUENCE_B2 = (
    "-2*t*(1+2*cosh(t)+4*cosh(2*t)-6*sinh(t))"
    "/((-6+8*cosh(t))*(2+cosh(t)-cosh(2*t)-sinh(t)+sinh(2*t)+2*sinh(3*t)))"
)
GENF1 = (
    "-(t*exp(-3*t/2)*sech(t/2)*(4+exp(t)*(1+2*exp(t)*(-1+exp(t)))))"
    "/(2*(-3+4*cosh(t))*(1+(-2+4*cosh(t))*sinh(t)))"
)


def _clean(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else q


@dataclass
class NkSequence:
    source: str
    terms: List[Union[int, Fraction]]
    hypothesis: Optional[PairHypothesisReport] = None
    start: int = 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.terms)

    def to_csv(self) -> str:
        return ",".join(format_rational(v) for v in self.terms)

    def to_json(self) -> str:
        return json.dumps([format_rational(v) for v in self.terms])


def _terms(f: TruncSeries, count: int) -> List:
    return [_clean(2 * factorial(k) * f[k]) for k in range(1, count + 1)]


def _difference(g1: FormalGroup, g2: FormalGroup, order: int) -> TruncSeries:
    for g in (g1, g2):
        if g.order < order + 1:
            raise ValueError(f"group {g.name} known to order {g.order}; need {order + 1}")
    return g1.characteristic_series.truncate(order) - g2.characteristic_series.truncate(order)


def nk_from_groups(g1: FormalGroup, g2: FormalGroup, count: int) -> NkSequence:
    """``N_1 .. N_count`` for the pair, with the pairwise hypotheses attached."""
    f = _difference(g1, g2, count)
    report = check_pair_hypotheses(g1, g2, p_max=min(count + 1, g1.order, g2.order))
    return NkSequence(f"{g1.name} - {g2.name}", _terms(f, count), report)


def nk_from_expr(ast: Union[str, Node], count: int) -> NkSequence:
    if isinstance(ast, str):
        ast = parse(ast)
    f = eval_series(ast, count)
    return NkSequence(to_text(ast), _terms(f, count))


def _polys(f: TruncSeries, n_max: int) -> List[CPoly]:
    # appell_polynomial already carries the k! factor
    return [appell_polynomial(f, k) * 2 for k in range(n_max + 1)]


def nk_polynomials(g1: FormalGroup, g2: FormalGroup, n_max: int) -> List[CPoly]:
    """``N_0(x) .. N_{n_max}(x)``."""
    return _polys(_difference(g1, g2, n_max), n_max)


def nk_polynomials_from_expr(ast: Union[str, Node], n_max: int) -> List[CPoly]:
    return _polys(eval_series(ast, n_max), n_max)


def printed_polynomials(ast: Union[str, Node], count: int) -> List[CPoly]:
    """``count`` polynomials starting at the first nonzero index.

    Published lists name the first nonzero polynomial ``p_0``, so
    ``p_j = N_(j+v)`` where ``v`` is the valuation of the series.
    """
    if isinstance(ast, str):
        ast = parse(ast)
    probe = eval_series(ast, 8)
    v = probe.valuation()
    while v > probe.order:
        probe = eval_series(ast, 2 * probe.order)
        v = probe.valuation()
        if probe.order > 256:
            raise ValueError("series vanishes to high order")
    polys = nk_polynomials_from_expr(ast, v + count - 1)
    return polys[v:]
