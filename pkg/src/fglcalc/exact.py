"""Exact scalar and polynomial arithmetic.

Rationals are :class:`fractions.Fraction`.  :class:`CPoly` is a sparse
polynomial in ``x`` and the graded indeterminates ``c1, c2, ...`` and
:class:`CycloElem` is an element of a cyclotomic ring written in the power
basis ``1, z, ..., z^(phi(d)-1)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

__all__ = [
    "ExactRational",
    "as_rational",
    "format_rational",
    "frac_part",
    "CPoly",
    "cyclotomic_polynomial",
    "euler_phi",
    "CycloElem",
    "is_integral",
    "cyclo_is_integral",
]

ExactRational = Fraction
Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/2"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def frac_part(q: Fraction) -> Fraction:
    """Fractional part in [0, 1)."""
    return q - (q.numerator // q.denominator)


def _strip(e: Iterable[int]) -> Exponent:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    n = len(b)
    return tuple(x + y for x, y in zip(a[:n], b)) + a[n:]


def _weight(e: Exponent) -> int:
    # position 0 is x (weight 1), position i is c_i (weight i)
    if not e:
        return 0
    return e[0] + sum(i * k for i, k in enumerate(e[1:], start=1))


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


class CPoly:
    """Sparse polynomial in ``x, c1, ..., cW`` with rational coefficients.

    Monomials are exponent tuples ``(e_x, e_1, ..., e_W)`` with trailing
    zeros stripped, so polynomials built with different weight caps mix
    freely and the cap auto-extends.  Instances are immutable.
    """

    __slots__ = ("_terms", "_cap")

    def __init__(self, terms: Optional[Mapping[Sequence[int], Scalar]] = None, weight_cap: int = 0):
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, coeff in terms.items():
                coeff = as_rational(coeff)
                if coeff == 0:
                    continue
                if any(k < 0 for k in e):
                    raise ValueError("negative exponent")
                key = _strip(e)
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        cap = max((len(e) - 1 for e in clean), default=0)
        self._cap = max(cap, weight_cap)

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction], cap: int) -> "CPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._cap = max(cap, max((len(e) - 1 for e in terms), default=0))
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, value: Scalar) -> "CPoly":
        return cls({(): value})

    @classmethod
    def zero(cls) -> "CPoly":
        return cls._raw({}, 0)

    @classmethod
    def x(cls) -> "CPoly":
        return cls({(1,): 1})

    @classmethod
    def c(cls, i: int) -> "CPoly":
        """The indeterminate ``c_i`` (``i >= 1``)."""
        if i < 1:
            raise ValueError("c-indices start at 1")
        e = [0] * (i + 1)
        e[i] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, x: int = 0, c: Optional[Mapping[int, int]] = None) -> "CPoly":
        c = dict(c or {})
        width = max(c, default=0) + 1
        e = [0] * width
        e[0] = x
        for i, k in c.items():
            if i < 1:
                raise ValueError("c-indices start at 1")
            e[i] = k
        return cls({tuple(e): coeff})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar]) -> "CPoly":
        """Polynomial in x from ascending coefficients."""
        return cls({(k,): a for k, a in enumerate(coeffs)})

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    @property
    def weight_cap(self) -> int:
        return self._cap

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == () for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def c_indices(self) -> set:
        return {i for e in self._terms for i in range(1, len(e)) if e[i]}

    def degree_x(self) -> int:
        if not self._terms:
            return -1
        return max((e[0] if e else 0) for e in self._terms)

    def weights(self) -> set:
        return {_weight(e) for e in self._terms}

    def is_isobaric(self, n: int) -> bool:
        """Every monomial has weight ``n`` (x counts 1, c_i counts i)."""
        return all(_weight(e) == n for e in self._terms)

    def is_integral(self) -> bool:
        return all(q.denominator == 1 for q in self._terms.values())

    def coeff_x(self, k: int) -> "CPoly":
        """Coefficient of x^k as a polynomial in the c's."""
        out = {}
        for e, q in self._terms.items():
            ex = e[0] if e else 0
            if ex == k:
                out[_strip((0,) + e[1:])] = q
        return CPoly._raw(out, self._cap)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Optional["CPoly"]:
        if isinstance(other, CPoly):
            return other
        if _is_scalar(other):
            return CPoly.const(other) if other != 0 else CPoly.zero()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, q in o._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = q
            else:
                v += q
                if v:
                    out[e] = v
                else:
                    del out[e]
        return CPoly._raw(out, max(self._cap, o._cap))

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly._raw({e: -q for e, q in self._terms.items()}, self._cap)

    def __pos__(self) -> "CPoly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return CPoly._raw({}, self._cap)
            return CPoly._raw({e: q * other for e, q in self._terms.items()}, self._cap)
        if not isinstance(other, CPoly):
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for e1, q1 in self._terms.items():
            for e2, q2 in other._terms.items():
                e = _add_exp(e1, e2)
                v = get(e)
                out[e] = q1 * q2 if v is None else v + q1 * q2
        out = {e: q for e, q in out.items() if q}
        return CPoly._raw(out, max(self._cap, other._cap))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CPoly):
            other = other.constant_value()
        if not _is_scalar(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of CPoly by zero")
        inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, k: int) -> "CPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("CPoly powers must be non-negative integers")
        result = CPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # calculus and substitution ---------------------------------------
    def derivative_x(self) -> "CPoly":
        out = {}
        for e, q in self._terms.items():
            if e and e[0]:
                out[(e[0] - 1,) + e[1:]] = q * e[0]
        return CPoly({k: v for k, v in out.items()}, self._cap)

    def evaluate_x(self, value) -> "CPoly":
        """Substitute a rational for x, keeping the c's symbolic."""
        value = as_rational(value)
        out: Dict[Exponent, Fraction] = {}
        for e, q in self._terms.items():
            ex = e[0] if e else 0
            key = _strip((0,) + e[1:])
            out[key] = out.get(key, Fraction(0)) + q * value ** ex
        return CPoly(out, self._cap)

    def specialize(self, assignment: Mapping[int, Scalar], x_value=None):
        """Substitute rationals for c-indices (and optionally x).

        Every c-index occurring in the polynomial must be assigned.  With
        ``x_value`` given the result is a Fraction, otherwise a CPoly in x.
        """
        missing = sorted(self.c_indices() - set(assignment))
        if missing:
            raise KeyError(f"no value assigned to c{missing[0]}")
        vals = {i: as_rational(v) for i, v in assignment.items()}
        out: Dict[Exponent, Fraction] = {}
        for e, q in self._terms.items():
            coeff = q
            for i in range(1, len(e)):
                if e[i]:
                    coeff *= vals[i] ** e[i]
            ex = e[0] if e else 0
            out[(ex,)] = out.get((ex,), Fraction(0)) + coeff
        poly = CPoly(out)
        if x_value is None:
            return poly
        return poly.evaluate_x(x_value).constant_value()

    def __call__(self, x_value):
        """Evaluate in x; returns a Fraction when no c's remain."""
        p = self.evaluate_x(x_value)
        return p.constant_value() if p.is_constant() else p

    def map_coefficients(self, fn) -> "CPoly":
        return CPoly({e: fn(q) for e, q in self._terms.items()}, self._cap)

    def residue_mod_z(self) -> "CPoly":
        """Replace every coefficient by its fractional part in [0, 1)."""
        return self.map_coefficients(frac_part)

    def is_p_integral_and_divisible(self, prime: int) -> bool:
        """Membership in p Z_(p)[x, c1, ...]."""
        if prime < 2:
            raise ValueError("prime must be >= 2")
        return all(q.denominator % prime != 0 and q.numerator % prime == 0 for q in self._terms.values())

    # printing ---------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded-lex order, highest weight first."""
        return sorted(self._terms.items(), key=lambda kv: (_weight(kv[0]), kv[0]), reverse=True)

    def to_text(self, var: str = "x") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, q in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if not k:
                    continue
                name = var if i == 0 else f"c{i}"
                factors.append(name if k == 1 else f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(q)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            parts.append(("-" if q < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CPoly({self.to_text()!r})"


def is_integral(value) -> bool:
    """True for integers, integral CPolys and integral CycloElems."""
    if isinstance(value, (CPoly, CycloElem)):
        return value.is_integral()
    return Fraction(value).denominator == 1


# ---------------------------------------------------------------------
# cyclotomic rings


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_exact(num: list, den: list) -> list:
    # ascending integer coefficient lists, den monic
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        q = num[k]
        quot[k - dq] = q
        if q:
            for j, d in enumerate(den):
                num[k - dq + j] -= q * d
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> Tuple[int, ...]:
    """Ascending integer coefficients of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_polynomial(e)))
    return tuple(poly)


def _reduce_cyclo(coeffs: list, d: int) -> list:
    phi = cyclotomic_polynomial(d)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        q = coeffs[k]
        if q == 0:
            continue
        coeffs[k] = 0 * q
        for j in range(deg):
            if phi[j]:
                coeffs[k - deg + j] = coeffs[k - deg + j] - q * phi[j]
    coeffs = coeffs[:deg]
    return coeffs + [Fraction(0)] * (deg - len(coeffs))


class CycloElem:
    """Element of Q(zeta_d) (or of R[zeta_d] for a coefficient ring R).

    ``coords`` are the power-basis coordinates modulo the d-th cyclotomic
    polynomial.  Coordinates may be Fractions or CPolys, which lets the
    universal chi-numbers live in the same type.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: Sequence):
        if order < 1:
            raise ValueError("order must be positive")
        deg = euler_phi(order)
        coords = [c if isinstance(c, CPoly) else as_rational(c) for c in coords]
        if len(coords) != deg:
            coords = _reduce_cyclo(coords + [Fraction(0)] * max(0, deg - len(coords)), order)
        self.order = order
        self.coords = tuple(coords)

    @classmethod
    def scalar(cls, order: int, value) -> "CycloElem":
        deg = euler_phi(order)
        return cls(order, [value] + [Fraction(0)] * (deg - 1))

    @classmethod
    def zeta_power(cls, order: int, e: int) -> "CycloElem":
        """The element zeta_d^e."""
        e %= order
        vec = [Fraction(0)] * (e + 1)
        vec[e] = Fraction(1)
        return cls(order, vec)

    def _check(self, other: "CycloElem") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def _lift(self, other):
        if isinstance(other, CycloElem):
            self._check(other)
            return other
        if _is_scalar(other) or isinstance(other, CPoly):
            return CycloElem.scalar(self.order, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.order, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.order, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, CPoly):
            return CycloElem(self.order, [a * other for a in self.coords])
        if not isinstance(other, CycloElem):
            return NotImplemented
        self._check(other)
        n = len(self.coords)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                prod[i + j] = prod[i + j] + a * b
        return CycloElem(self.order, _reduce_cyclo(prod, self.order))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return CycloElem(self.order, [a / Fraction(other) for a in self.coords])

    def __pow__(self, k: int) -> "CycloElem":
        result = CycloElem.scalar(self.order, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._lift(other) if not isinstance(other, CycloElem) else other
        if o is None:
            return NotImplemented
        return self.order == o.order and all(a == b for a, b in zip(self.coords, o.coords))

    def __hash__(self) -> int:
        return hash((self.order, self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(is_integral(a) for a in self.coords)

    def to_text(self) -> str:
        parts = []
        for k, a in enumerate(self.coords):
            if a == 0:
                continue
            body = a.to_text() if isinstance(a, CPoly) else format_rational(a)
            if k == 0:
                parts.append(body if not isinstance(a, CPoly) or len(a) == 1 else f"({body})")
            else:
                z = "z" if k == 1 else f"z^{k}"
                if a == 1:
                    parts.append(z)
                elif a == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"({body})*{z}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CycloElem({self.order}, {self.to_text()!r})"


def cyclo_is_integral(a: CycloElem) -> bool:
    return a.is_integral()

