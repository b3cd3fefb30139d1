"""Congruence verifiers for universal and group-specific Bernoulli numbers.

Every check returns a :class:`CongruenceVerdict` carrying an exact witness:
the residual polynomial or rational that should have been integral.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Optional

from .bernoulli import (
    bernoulli_numbers_of_group,
    bernoulli_of_group,
    tilde_of_group,
    universal_bernoulli_number,
)
from .exact import CPoly, CycloElem, format_rational, is_integral
from .fgl import FormalGroup, HypothesisReport, check_hypotheses, primes_up_to

__all__ = [
    "HOLDS",
    "FAILS",
    "INAPPLICABLE",
    "HYPOTHESES_UNMET",
    "CongruenceVerdict",
    "is_prime",
    "von_staudt_check",
    "kummer_check",
    "am_check",
    "lemma4_check",
    "hermite_bachmann",
    "br_check",
    "fermat_sum_check",
    "granville_scan",
    "am_scan",
    "br_scan",
    "lemma4_scan",
    "verdicts_to_csv",
    "verdicts_to_json",
    "witness_text",
]

HOLDS = "holds"
FAILS = "fails"
INAPPLICABLE = "inapplicable"
HYPOTHESES_UNMET = "hypotheses unmet"


def witness_text(w) -> str:
    if w is None:
        return ""
    if isinstance(w, (CPoly, CycloElem)):
        return w.to_text()
    return format_rational(w)


@dataclass
class CongruenceVerdict:
    name: str
    parameters: Dict[str, object]
    status: str
    witness: object = None
    report: Optional[object] = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def failed(self) -> bool:
        return self.status in (FAILS, HYPOTHESES_UNMET)

    def to_record(self) -> dict:
        rec = {
            "name": self.name,
            "params": {k: v if isinstance(v, (int, str)) or v is None else _param_text(v) for k, v in self.parameters.items()},
            "status": self.status,
            "holds": self.holds,
            "witness": witness_text(self.witness) if not self.holds else "0",
        }
        if self.status == HYPOTHESES_UNMET and hasattr(self.report, "failures"):
            rec["witness"] = "; ".join(self.report.failures())
        if self.report is not None and hasattr(self.report, "to_record"):
            rec["hypotheses"] = self.report.to_record()
        return rec

    def __str__(self) -> str:
        params = ", ".join(f"{k}={_param_text(v)}" for k, v in self.parameters.items())
        text = f"{self.name}({params}): {self.status}"
        if self.failed and self.witness is not None:
            text += f" [witness {witness_text(self.witness)}]"
        elif self.status == HYPOTHESES_UNMET and hasattr(self.report, "failures"):
            text += f" [{'; '.join(self.report.failures())}]"
        return text


def _param_text(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _verdict(name: str, params: dict, residual) -> CongruenceVerdict:
    """Holds iff ``residual`` is integral; the witness is its non-integral part."""
    if is_integral(residual):
        return CongruenceVerdict(name, params, HOLDS, _zero_like(residual))
    return CongruenceVerdict(name, params, FAILS, _fractional(residual))


def _zero_like(v):
    if isinstance(v, CPoly):
        return CPoly.zero()
    if isinstance(v, CycloElem):
        return CycloElem.scalar(v.order, 0)
    return Fraction(0)


def _fractional(v):
    if isinstance(v, CPoly):
        return v.residue_mod_z()
    if isinstance(v, CycloElem):
        return v
    v = Fraction(v)
    return v - (v.numerator // v.denominator)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _primes_dividing_shift(n: int) -> List[int]:
    # primes p with (p - 1) | n
    return [p for p in primes_up_to(n + 1) if n % (p - 1) == 0]


# ---------------------------------------------------------------------
# universal congruences


def von_staudt_check(n: int, W: Optional[int] = None) -> CongruenceVerdict:
    """Clarke's universal von Staudt congruence for ``B^_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    params = {"n": n, "W": W if W is not None else n}
    b = universal_bernoulli_number(n, W=W)
    if n == 0:
        residual = b - 1
        return CongruenceVerdict("staudt", params, HOLDS if residual.is_zero() else FAILS, residual)
    if n == 1:
        residual = b - CPoly.c(1) / 2
        return CongruenceVerdict("staudt", params, HOLDS if residual.is_zero() else FAILS, residual)
    if n % 2 == 0:
        correction = CPoly.zero()
        for p in _primes_dividing_shift(n):
            correction = correction + CPoly.c(p - 1) ** (n // (p - 1)) / p
        residue = (b + correction).residue_mod_z()
    else:
        c1, c3 = CPoly.c(1), CPoly.c(3)
        residue = (b - (c1**n + c1 ** (n - 3) * c3) / 2).residue_mod_z()
    if W is not None:
        residue = CPoly({e: q for e, q in residue.terms.items() if len(e) <= W + 1})
    return CongruenceVerdict("staudt", params, HOLDS if residue.is_zero() else FAILS, residue)


def kummer_check(n: int, p: int, W: Optional[int] = None) -> CongruenceVerdict:
    """Adelberg's universal Kummer congruence, for ``n != 0, 1 mod p-1``."""
    params = {"n": n, "p": p}
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 2 or n % (p - 1) in (0, 1):
        return CongruenceVerdict("kummer", params, INAPPLICABLE)
    m = n + p - 1
    diff = universal_bernoulli_number(m, W=W) / m - CPoly.c(p - 1) * universal_bernoulli_number(n, W=W) / n
    if diff.is_p_integral_and_divisible(p):
        return CongruenceVerdict("kummer", params, HOLDS, CPoly.zero())
    bad = CPoly({e: q for e, q in diff.terms.items() if q.denominator % p == 0 or q.numerator % p != 0})
    return CongruenceVerdict("kummer", params, FAILS, bad)


# ---------------------------------------------------------------------
# Almkvist-Meurman type congruences for a concrete group


def _hyp(g: FormalGroup, n: int, strict: bool = False) -> HypothesisReport:
    # c_{p-1} for p - 1 <= n and c_3 for the parity clause
    need = max(n + 1, 4)
    if g.order < need:
        raise ValueError(f"group of order {g.order} too small; need order >= {need}")
    return check_hypotheses(g, p_max=min(g.order, max(n + 1, 3)))


def am_check(g: FormalGroup, n: int, h: int, k: int,
    report: Optional[HypothesisReport] = None, enforce: bool = True
) -> CongruenceVerdict:
    """``k^n (B_n^G(h/k) - B_n^G) in Z``."""
    params = {"group": g.name, "n": n, "h": h, "k": k}
    report = report or _hyp(g, n)
    if enforce and not report.th1_ok:
        return CongruenceVerdict("am", params, HYPOTHESES_UNMET, None, report)
    value = tilde_of_group(g, n)(Fraction(h, k)) * Fraction(k) ** n
    return _verdict("am", params, value)


def lemma4_check(g: FormalGroup, n: int, k: int,
    report: Optional[HypothesisReport] = None, enforce: bool = True
) -> CongruenceVerdict:
    """``sum_{m<n} C(n,m) k^m B_m^G in Z``."""
    params = {"group": g.name, "n": n, "k": k}
    report = report or _hyp(g, n)
    if enforce and not report.th1_ok:
        return CongruenceVerdict("lemma4", params, HYPOTHESES_UNMET, None, report)
    nums = bernoulli_numbers_of_group(g, max(n - 1, 0))
    total = sum((comb(n, m) * Fraction(k) ** m * nums[m] for m in range(n)), Fraction(0))
    return _verdict("lemma4", params, total)


def hermite_bachmann(n: int, p: int) -> CongruenceVerdict:
    """``sum_{1 <= m < n, (p-1) | m} C(n, m) = 0 mod p``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = sum(comb(n, m) for m in range(1, n) if m % (p - 1) == 0)
    return _verdict("hb", {"n": n, "p": p}, Fraction(total, p))


def _staudt_sum(g: FormalGroup, n: int, exclude_divisors_of: int) -> Fraction:
    total = Fraction(0)
    for p in _primes_dividing_shift(n):
        if exclude_divisors_of % p == 0:
            continue
        total += Fraction(g.c_at(p - 1)) ** (n // (p - 1)) / p
    return total


def br_check(g: FormalGroup, n: int, h: int, k: int,
    report: Optional[HypothesisReport] = None, enforce: bool = True
) -> CongruenceVerdict:
    """Generalized Bartz-Rutkowski congruence.

    For n even or n = 1, ``k^n B_n^G(h/k) + sum_{(p-1)|n, p not | k} c_{p-1}^(n/(p-1))/p``
    is an integer; for odd n >= 3 so is ``k^n B_n^G(h/k)``.
    """
    params = {"group": g.name, "n": n, "h": h, "k": k}
    report = report or _hyp(g, n)
    if enforce and not report.th1_ok:
        return CongruenceVerdict("br", params, HYPOTHESES_UNMET, None, report)
    value = bernoulli_of_group(g, n)(Fraction(h, k)) * Fraction(k) ** n
    if n % 2 == 0 or n == 1:
        value += _staudt_sum(g, n, k)
    return _verdict("br", params, value)


def fermat_sum_check(g: FormalGroup, n: int, s: int,
    report: Optional[HypothesisReport] = None, enforce: bool = True
) -> CongruenceVerdict:
    """``(s^n - 1) sum_{(p-1)|n, p not | s} c_{p-1}^(n/(p-1))/p in Z``."""
    params = {"group": g.name, "n": n, "s": s}
    report = report or _hyp(g, n)
    if enforce and not report.th1_ok:
        return CongruenceVerdict("fermat", params, HYPOTHESES_UNMET, None, report)
    value = (Fraction(s) ** n - 1) * _staudt_sum(g, n, s)
    return _verdict("fermat", params, value)


# ---------------------------------------------------------------------
# scans


def granville_scan(
    sequence: Callable[[int], CPoly],
    n_max: int,
    h_max: int,
    k_max: int,
    name: str = "granville",
    stop_on_first_failure: bool = False,
    n_min: int = 0,
) -> List[CongruenceVerdict]:
    """Check ``k^n P_n(h/k) in Z`` over the grid, in (n, h, k) order."""
    out = []
    for n in range(n_min, n_max + 1):
        poly = sequence(n)
        for h in range(1, h_max + 1):
            for k in range(1, k_max + 1):
                value = poly(Fraction(h, k)) * Fraction(k) ** n
                v = _verdict(name, {"n": n, "h": h, "k": k}, value)
                out.append(v)
                if stop_on_first_failure and v.failed:
                    return out
    return out


def _grid_scan(check, g, n_max, h_max, k_max, stop_on_first_failure, enforce=True):
    out = []
    for n in range(n_max + 1):
        report = _hyp(g, n)
        for h in range(1, h_max + 1):
            for k in range(1, k_max + 1):
                v = check(g, n, h, k, report=report, enforce=enforce)
                out.append(v)
                if stop_on_first_failure and v.failed:
                    return out
    return out


def am_scan(g: FormalGroup, n_max: int, h_max: int, k_max: int, stop_on_first_failure: bool = False, enforce: bool = True):
    return _grid_scan(am_check, g, n_max, h_max, k_max, stop_on_first_failure, enforce)


def br_scan(g: FormalGroup, n_max: int, h_max: int, k_max: int, stop_on_first_failure: bool = False, enforce: bool = True):
    return _grid_scan(br_check, g, n_max, h_max, k_max, stop_on_first_failure, enforce)


def lemma4_scan(g: FormalGroup, n_max: int, k_max: int, stop_on_first_failure: bool = False, enforce: bool = True):
    out = []
    for n in range(1, n_max + 1):
        report = _hyp(g, n)
        for k in range(1, k_max + 1):
            v = lemma4_check(g, n, k, report=report, enforce=enforce)
            out.append(v)
            if stop_on_first_failure and v.failed:
                return out
    return out


# ---------------------------------------------------------------------
# export

CSV_COLUMNS = ("name", "params", "status", "holds", "witness")


def verdicts_to_csv(verdicts: Iterable[CongruenceVerdict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for v in verdicts:
        rec = v.to_record()
        params = ";".join(f"{k}={val}" for k, val in rec["params"].items())
        writer.writerow([rec["name"], params, rec["status"], str(rec["holds"]).lower(), rec["witness"]])
    return buf.getvalue()


def verdicts_to_json(verdicts: Iterable[CongruenceVerdict]) -> str:
    return json.dumps([v.to_record() for v in verdicts], indent=2)
