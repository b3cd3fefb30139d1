"""Exact computations with one-dimensional formal group laws.

Universal Bernoulli polynomials, congruence verifiers, integer sequences
from characteristic series and special values of the associated zeta
functions, all in exact rational arithmetic.
"""

from __future__ import annotations

from .bernoulli import (
    appell_and_binomial_check,
    appell_polynomial,
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
from .congruence import (
    CongruenceVerdict,
    am_check,
    am_scan,
    br_check,
    br_scan,
    fermat_sum_check,
    granville_scan,
    hermite_bachmann,
    kummer_check,
    lemma4_check,
    lemma4_scan,
    von_staudt_check,
)
from .exact import CPoly, CycloElem, ExactRational, cyclo_is_integral, format_rational, is_integral
from .fgl import (
    CATALOG,
    FormalGroup,
    catalog,
    check_hypotheses,
    check_pair_hypotheses,
    group_from_c,
    group_from_exp,
    group_from_q,
    group_law,
    universal_group,
)
from .gfexpr import eval_series, parse, to_text
from .sequences import nk_from_expr, nk_from_groups, nk_polynomials, nk_polynomials_from_expr, printed_polynomials
from .series import MultiSeries, SeriesError, TruncSeries, compose, revert, series_div, series_exp, series_log
from .zeta import DirichletCharacter, chi_numbers, l_value_neg, reflect, th3_check, th4_check, zeta_neg

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CPoly",
    "CongruenceVerdict",
    "CycloElem",
    "DirichletCharacter",
    "ExactRational",
    "FormalGroup",
    "MultiSeries",
    "SeriesError",
    "TruncSeries",
    "__version__",
    "am_check",
    "am_scan",
    "appell_and_binomial_check",
    "appell_polynomial",
    "bernoulli_family",
    "bernoulli_numbers_of_group",
    "bernoulli_of_group",
    "br_check",
    "br_scan",
    "catalog",
    "check_hypotheses",
    "check_pair_hypotheses",
    "chi_numbers",
    "compose",
    "cyclo_is_integral",
    "eval_series",
    "fermat_sum_check",
    "format_rational",
    "genus_polynomials",
    "granville_scan",
    "group_from_c",
    "group_from_exp",
    "group_from_q",
    "group_law",
    "hermite_bachmann",
    "is_integral",
    "kummer_check",
    "l_value_neg",
    "lemma4_check",
    "lemma4_scan",
    "nk_from_expr",
    "nk_from_groups",
    "nk_polynomials",
    "nk_polynomials_from_expr",
    "parse",
    "printed_polynomials",
    "reflect",
    "revert",
    "s_sequence",
    "series_div",
    "series_exp",
    "series_log",
    "th3_check",
    "th4_check",
    "tilde_of_group",
    "to_text",
    "universal_bernoulli",
    "universal_bernoulli_number",
    "universal_family",
    "universal_group",
    "von_staudt_check",
    "zeta_neg",
]
