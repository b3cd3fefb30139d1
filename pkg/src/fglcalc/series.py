"""Truncated power series over a generic exact coefficient ring.

Coefficients are Fractions or :class:`~fglcalc.exact.CPoly` values (or
anything else supporting ``+ - *`` and mixing with Fractions).  Every
series carries an explicit truncation order ``M``: it stores the
coefficients of ``t^0 .. t^M`` and says nothing about higher terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exact import CPoly, format_rational

__all__ = [
    "SeriesError",
    "TruncSeries",
    "MultiSeries",
    "BiTruncSeries",
    "series_div",
    "compose",
    "revert",
    "series_exp",
    "series_log",
    "series_pow",
    "bi_substitute",
    "substitute",
]


class SeriesError(ValueError):
    """A series operation's precondition does not hold."""


def _zero(c) -> bool:
    return c == 0


def _unit_inverse(c):
    """Inverse of a coefficient that must be a nonzero rational constant."""
    if isinstance(c, CPoly):
        c = c.constant_value()
    c = Fraction(c)
    if c == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    return 1 / c


def _fmt(c) -> str:
    if isinstance(c, CPoly):
        return c.to_text() if len(c) <= 1 and not c.to_text().startswith("-") else f"({c.to_text()})"
    if hasattr(c, "to_text"):
        return f"({c.to_text()})"
    return format_rational(c)


class TruncSeries:
    """Power series ``a0 + a1 t + ... + aM t^M`` truncated at order ``M``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [c if not isinstance(c, int) or isinstance(c, bool) else Fraction(c) for c in coeffs[: order + 1]]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.coeffs: Tuple = tuple(cs)
        self.order = order

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        """The series ``t``."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TruncSeries":
        return cls([0] * k + [coeff], order)

    @classmethod
    def exp_linear(cls, a, order: int) -> "TruncSeries":
        """``e^(a t)`` for a rational (or ring element) ``a``."""
        out, term = [], Fraction(1)
        for k in range(order + 1):
            out.append(term)
            term = term * a / (k + 1)
        return cls(out, order)

    # basics -----------------------------------------------------------
    def __getitem__(self, k: int):
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k <= self.order else Fraction(0)

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if not _zero(c):
                return k
        return self.order + 1

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order))

    def extend(self, order: int) -> "TruncSeries":
        """Reinterpret with a larger order, padding with zeros.

        Only meaningful for series known exactly (polynomials).
        """
        return TruncSeries(self.coeffs, order)

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by ``t^k``; the low coefficients must vanish."""
        if any(not _zero(c) for c in self.coeffs[:k]):
            raise SeriesError("cannot divide by t^k: low coefficients are nonzero")
        return TruncSeries(self.coeffs[k:], self.order - k)

    def shift_up(self, k: int) -> "TruncSeries":
        """Multiply by ``t^k``, keeping the order."""
        return TruncSeries([Fraction(0)] * k + list(self.coeffs), self.order)

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries([], 0)
        return TruncSeries([c * k for k, c in enumerate(self.coeffs) if k], self.order - 1)

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term."""
        return TruncSeries([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def map(self, fn) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    # arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other):
        o = self._lift(other)
        m = min(self.order, o.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs[: m + 1], o.coeffs[: m + 1])], m)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        m = min(self.order, other.order)
        return _mul(self.coeffs, other.coeffs, m)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        return TruncSeries([c / other for c in self.coeffs], self.order)

    def __pow__(self, k: int) -> "TruncSeries":
        if not isinstance(k, int):
            raise TypeError("use series_pow for non-integer exponents")
        if k < 0:
            return series_div(TruncSeries.one(self.order), self ** (-k))
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def agrees_with(self, other: "TruncSeries", order: int = None) -> bool:
        """Coefficient-wise equality through ``order`` (default: common order)."""
        m = min(self.order, other.order) if order is None else order
        return all(self[k] == other[k] for k in range(m + 1))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def to_text(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if _zero(c):
                continue
            body = _fmt(c)
            neg = body.startswith("-")
            if neg:
                body = body[1:]
            if k == 0:
                term = body
            else:
                mono = "t" if k == 1 else f"t^{k}"
                term = mono if body == "1" else f"{body}*{mono}"
            parts.append(("-" if neg else "+", term))
        if not parts:
            text = "0"
        else:
            text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, term in parts[1:]:
                text += f" {sign} {term}"
        return f"{text} + O(t^{self.order + 1})"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"TruncSeries({self.to_text()!r})"


def _mul(a: Sequence, b: Sequence, m: int) -> TruncSeries:
    na = [k for k in range(min(len(a), m + 1)) if not _zero(a[k])]
    nb = [k for k in range(min(len(b), m + 1)) if not _zero(b[k])]
    out: List = [Fraction(0)] * (m + 1)
    for i in na:
        ai = a[i]
        for j in nb:
            if i + j > m:
                break
            out[i + j] = out[i + j] + ai * b[j]
    return TruncSeries(out, m)


def series_div(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """Exact quotient ``num / den``.

    A common power of ``t`` is cancelled first, so ``t / G(t)`` with
    ``G = t + ...`` is a unit series.  The result is valid through order
    ``min(num.order, den.order) - valuation(den)``.
    """
    v = den.valuation()
    if v > den.order:
        raise ZeroDivisionError("division by a series that is zero to its order")
    if num.valuation() < v:
        raise SeriesError("not a power series: numerator valuation below denominator valuation")
    m = min(num.order, den.order) - v
    n = num.coeffs[v : v + m + 1]
    d = den.coeffs[v : v + m + 1]
    inv = _unit_inverse(d[0])
    q: List = []
    for k in range(m + 1):
        acc = n[k]
        for j in range(1, k + 1):
            if not _zero(d[j]):
                acc = acc - d[j] * q[k - j]
        q.append(acc * inv)
    return TruncSeries(q, m)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """``outer(inner(t))`` by Horner's rule; ``inner`` must vanish at 0."""
    if not _zero(inner[0]):
        raise SeriesError("inner series has a nonzero constant term")
    m = min(outer.order, inner.order)
    inner = inner.truncate(m)
    result = TruncSeries.constant(outer[m], m)
    for k in range(m - 1, -1, -1):
        result = result * inner + outer[k]
    return result


def _check_unit_shape(f: TruncSeries) -> None:
    if f.order < 1 or not _zero(f[0]) or f[1] != 1:
        raise SeriesError("reversion needs f = t + O(t^2)")


def revert(f: TruncSeries) -> TruncSeries:
    """Compositional inverse of ``f = t + ...`` by Lagrange inversion.

    ``[t^n] g = (1/n) [s^(n-1)] (s / f(s))^n``.
    """
    _check_unit_shape(f)
    m = f.order
    h = series_div(TruncSeries.variable(m), f)  # order m - 1
    g: List = [Fraction(0), Fraction(1)]
    power = h
    for n in range(2, m + 1):
        power = power * h
        g.append(power[n - 1] / n)
    return TruncSeries(g, m)


def series_exp(f: TruncSeries) -> TruncSeries:
    """``exp(f)`` for ``f`` with zero constant term."""
    if not _zero(f[0]):
        raise SeriesError("series_exp needs a zero constant term")
    m = f.order
    df = [k * f[k] for k in range(m + 1)]
    g: List = [Fraction(1)]
    for n in range(1, m + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if not _zero(df[k]):
                acc = acc + df[k] * g[n - k]
        g.append(acc / n)
    return TruncSeries(g, m)


def series_log(f: TruncSeries) -> TruncSeries:
    """``log(f)`` for ``f`` with constant term 1."""
    if f[0] != 1:
        raise SeriesError("series_log needs constant term 1")
    m = f.order
    if m == 0:
        return TruncSeries.zero(0)
    q = series_div(f.derivative(), f.truncate(m - 1))
    return q.integral()


def series_pow(f: TruncSeries, alpha) -> TruncSeries:
    """``f^alpha`` for a unit series (constant term 1) and rational alpha."""
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        return f ** int(alpha)
    if f[0] != 1:
        raise SeriesError("fractional powers need constant term 1")
    return series_exp(series_log(f) * alpha)


# ---------------------------------------------------------------------
# multivariate truncated series


Exp = Tuple[int, ...]


class MultiSeries:
    """Series in ``nvars`` variables truncated at total degree ``order``."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: Dict[Exp, object] = None):
        self.nvars = nvars
        self.order = order
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError("exponent length does not match nvars")
            if sum(e) <= order and not _zero(c):
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, order: int, value) -> "MultiSeries":
        return cls(nvars, order, {(0,) * nvars: value})

    @classmethod
    def from_univariate(cls, s: TruncSeries, nvars: int, var: int, order: int = None) -> "MultiSeries":
        """Embed a series in variable ``var`` of an ``nvars``-variable ring."""
        order = s.order if order is None else order
        terms = {}
        for k in range(min(s.order, order) + 1):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = s[k]
        return cls(nvars, order, terms)

    def __getitem__(self, e) -> object:
        return self.terms.get(tuple(e), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.constant(self.nvars, self.order, other)
        m = min(self.order, other.order)
        out = {e: c for e, c in self.terms.items() if sum(e) <= m}
        for e, c in other.terms.items():
            if sum(e) <= m:
                out[e] = out[e] + c if e in out else c
        return MultiSeries(self.nvars, m, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries(self.nvars, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return MultiSeries(self.nvars, self.order, {e: c * other for e, c in self.terms.items()})
        m = min(self.order, other.order)
        out: Dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > m:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MultiSeries(self.nvars, m, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.order == other.order and self.terms == other.terms

    def permute(self, perm: Sequence[int]) -> "MultiSeries":
        """Rename variable ``i`` to ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return MultiSeries(self.nvars, self.order, out)

    def restrict_zero(self, var: int) -> "MultiSeries":
        """Set variable ``var`` to zero."""
        return MultiSeries(self.nvars, self.order, {e: c for e, c in self.terms.items() if e[var] == 0})

    def embed(self, nvars: int, mapping: Sequence[int]) -> "MultiSeries":
        """View as a series in ``nvars`` variables, old var i -> new var mapping[i]."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, k in enumerate(e):
                new[mapping[i]] += k
            out[tuple(new)] = c
        return MultiSeries(nvars, self.order, out)

    def to_text(self, names: Sequence[str] = None) -> str:
        names = names or [f"s{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            body = _fmt(c)
            if mono:
                body = mono if body == "1" else ("-" + mono if body == "-1" else f"{body}*{mono}")
            parts.append(body)
        text = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return text

    def __repr__(self) -> str:
        return f"MultiSeries({self.to_text()!r}, order={self.order})"


BiTruncSeries = MultiSeries


def _compose_multi(outer: TruncSeries, inner: MultiSeries) -> MultiSeries:
    if not _zero(inner[(0,) * inner.nvars]):
        raise SeriesError("inner series has a nonzero constant term")
    m = min(outer.order, inner.order)
    result = MultiSeries.constant(inner.nvars, m, outer[m])
    for k in range(m - 1, -1, -1):
        result = result * inner + outer[k]
    return result


def bi_substitute(F: TruncSeries, G: TruncSeries, order: int) -> MultiSeries:
    """The group law ``Phi(s1, s2) = G(F(s1) + F(s2))`` to total degree ``order``."""
    if order > min(F.order, G.order):
        raise SeriesError("order exceeds the precision of F or G")
    sum_logs = MultiSeries.from_univariate(F, 2, 0, order) + MultiSeries.from_univariate(F, 2, 1, order)
    return _compose_multi(G.truncate(order), sum_logs)


def substitute(law: MultiSeries, args: Sequence[MultiSeries]) -> MultiSeries:
    """``law(args[0], args[1], ...)``; each argument must vanish at the origin."""
    if len(args) != law.nvars:
        raise ValueError("wrong number of arguments")
    nv = args[0].nvars
    m = min([law.order] + [a.order for a in args])
    powers = []
    for a in args:
        if not _zero(a[(0,) * nv]):
            raise SeriesError("substituted series must vanish at the origin")
        ps = [MultiSeries.constant(nv, m, 1)]
        for _ in range(m):
            ps.append(ps[-1] * a)
        powers.append(ps)
    out = MultiSeries(nv, m)
    for e, c in law.terms.items():
        if sum(e) > m:
            continue
        term = MultiSeries.constant(nv, m, c)
        for i, k in enumerate(e):
            if k:
                term = term * powers[i][k]
        out = out + term
    return out

