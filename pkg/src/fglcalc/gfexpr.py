"""Closed-form generating-function expressions in ``t``.

Grammar (``^`` binds tightest, then unary minus, then ``* /``, then
``+ -``; binary operators associate to the left)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' ['-'] INT)*
    primary := INT | 't' | FUNC '(' expr ')' | '(' expr ')'
    FUNC    := exp | sinh | cosh | tanh | sech

Multiplication is always explicit and ``3/2`` is simply ``Div(3, 2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .series import SeriesError, TruncSeries, series_exp

__all__ = [
    "GFExprError",
    "ExprSyntaxError",
    "PoleError",
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Pow",
    "Call",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "FUNCTIONS",
    "parse",
    "to_text",
    "eval_series",
]

FUNCTIONS = ("exp", "sinh", "cosh", "tanh", "sech")
MAX_EXPONENT = 10_000
MAX_GUARD = 256


class GFExprError(ValueError):
    pass


class ExprSyntaxError(GFExprError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PoleError(GFExprError):
    """The expression is not a power series at t = 0."""


class _PrecisionLoss(Exception):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str = "t"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Neg, BinOp, Pow, Call]


def Add(a, b):
    return BinOp("+", a, b)


def Sub(a, b):
    return BinOp("-", a, b)


def Mul(a, b):
    return BinOp("*", a, b)


def Div(a, b):
    return BinOp("/", a, b)


# ---------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
    tokens.append(("end", "", len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            kind, val, pos = self.peek()
            found = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Node:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.unary()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.unary())
            elif self.accept("/"):
                node = BinOp("/", node, self.unary())
            else:
                return node

    def unary(self) -> Node:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.primary()
        while self.accept("^"):
            sign = -1 if self.accept("-") else 1
            kind, val, pos = self.take()
            if kind != "int":
                raise ExprSyntaxError("exponent must be an integer literal", pos)
            n = sign * int(val)
            if abs(n) > MAX_EXPONENT:
                raise GFExprError(f"exponent {n} exceeds the supported range")
            node = Pow(node, n)
        return node

    def primary(self) -> Node:
        kind, val, pos = self.take()
        if kind == "int":
            return Num(int(val))
        if kind == "name":
            if val == "t":
                return Var("t")
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(val, arg)
            if self.peek()[1] == "(":
                raise ExprSyntaxError(f"unknown function {val!r}", pos)
            raise ExprSyntaxError(f"unknown variable {val!r}", pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {found}", pos)


def parse(text: str) -> Node:
    """Parse an expression string into an AST."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------
# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def to_text(node: Node) -> str:
    """Render an AST with the minimum parentheses that parse back to it."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, Neg):
        inner = to_text(node.arg)
        return "-" + (inner if _prec(node.arg) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) < 4:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    p = _PREC[node.op]
    left = to_text(node.left)
    if _prec(node.left) < p:
        left = f"({left})"
    right = to_text(node.right)
    if _prec(node.right) <= p:
        right = f"({right})"
    return f"{left}{node.op}{right}"


# ---------------------------------------------------------------------
# evaluation with precision tracking
#
# Each intermediate series has ``order`` equal to the index through which
# its coefficients are known exactly.


def _tracked_mul(a: TruncSeries, b: TruncSeries, cap: int) -> TruncSeries:
    va, vb = a.valuation(), b.valuation()
    m = min(a.order + vb, b.order + va, cap)
    return a.extend(m) * b.extend(m)


def _tracked_div(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    v = den.valuation()
    if v > den.order:
        raise _PrecisionLoss()
    vn = num.valuation()
    if vn < v:
        if vn <= num.order:
            raise PoleError("pole at t=0: division by a series of higher valuation")
        raise _PrecisionLoss()
    m = min(num.order, den.order) - v
    if m < 0:
        raise _PrecisionLoss()
    return TruncSeries(num.coeffs[v:], m) / TruncSeries(den.coeffs[v:], m)


def _exp(arg: TruncSeries) -> TruncSeries:
    if arg[0] != 0:
        raise GFExprError("exp argument must vanish at t=0 to stay rational")
    return series_exp(arg)


def _eval(node: Node, order: int) -> TruncSeries:
    if isinstance(node, Num):
        return TruncSeries.constant(node.value, order)
    if isinstance(node, Var):
        return TruncSeries.variable(order)
    if isinstance(node, Neg):
        return -_eval(node.arg, order)
    if isinstance(node, BinOp):
        a = _eval(node.left, order)
        b = _eval(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return _tracked_mul(a, b, order)
        return _tracked_div(a, b)
    if isinstance(node, Pow):
        base = _eval(node.base, order)
        result = TruncSeries.one(order)
        for _ in range(abs(node.exponent)):
            result = _tracked_mul(result, base, order)
        if node.exponent < 0:
            result = _tracked_div(TruncSeries.one(order), result)
        return result
    if isinstance(node, Call):
        arg = _eval(node.arg, order)
        if node.func == "exp":
            return _exp(arg)
        ep, em = _exp(arg), _exp(-arg)
        sinh = (ep - em) * Fraction(1, 2)
        cosh = (ep + em) * Fraction(1, 2)
        if node.func == "sinh":
            return sinh
        if node.func == "cosh":
            return cosh
        if node.func == "tanh":
            return _tracked_div(sinh, cosh)
        return _tracked_div(TruncSeries.one(cosh.order), cosh)
    raise TypeError(f"not an expression node: {node!r}")


def eval_series(ast: Union[Node, str], order: int, guard: int = 4) -> TruncSeries:
    """Exact Taylor coefficients of the expression through ``t^order``.

    Subexpressions are evaluated ``guard`` orders deeper; if divisions
    consume more than that, the guard is doubled and evaluation retried.
    """
    if isinstance(ast, str):
        ast = parse(ast)
    if order < 0:
        raise ValueError("order must be non-negative")
    while guard <= MAX_GUARD:
        try:
            result = _eval(ast, order + guard)
        except _PrecisionLoss:
            result = None
        except SeriesError as exc:
            raise PoleError(str(exc)) from exc
        if result is not None and result.order >= order:
            return result.truncate(order)
        guard *= 2
    raise GFExprError("could not reach the requested order; the expression may vanish identically")
