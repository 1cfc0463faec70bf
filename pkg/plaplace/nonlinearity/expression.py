"""
A small expression language for user-defined nonlinearities.

Grammar (standard precedence, ^ right-associative, unary minus binding
looser than ^ but tighter than * and /):

    expr    := expr ('+' | '-') expr | expr ('*' | '/') expr
             | '-' expr | expr '^' expr | '(' expr ')' | atom
    atom    := NUMBER | 'k' | 'x' | 'u' | FUNC '(' expr (',' expr)* ')'
    FUNC    := sin | cos | exp | abs | powq

Parsing is Pratt-style (top-down operator precedence). Evaluation is
vectorized over numpy arrays and never calls user code.
"""
import re
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from plaplace.constants import QUADRATURE_LIMIT, QUADRATURE_TOL
from plaplace.datatypes import (
    ExpressionEvaluationError,
    ExpressionSyntaxError,
    QuadratureAccuracyError,
    UnknownIdentifierError,
)
from plaplace.utils import powq

from .base import Nonlinearity

VARIABLES = ("k", "x", "u")
FUNCTIONS = {"sin": 1, "cos": 1, "exp": 1, "abs": 1, "powq": 2}

_TOKEN_PAT = re.compile(
    r"\s*(?:(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),]))"
)


@dataclass(frozen=True)
class Number:
    value: float

    def __str__(self):
        return repr(float(self.value))


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Negate:
    operand: object

    def __str__(self):
        return f"(-{self.operand})"


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: object
    right: object

    def __str__(self):
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str):
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        match = _TOKEN_PAT.match(text, pos)
        if match is None or match.end() == pos:
            offending = text[pos:].lstrip()
            where = len(text) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"Unexpected character {offending[:1]!r}", where)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# Binding powers
_INFIX = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_PREFIX_MINUS = 25


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, text):
        tok = self.token
        if tok.kind != "op" or tok.text != text:
            found = tok.text or "end of input"
            raise ExpressionSyntaxError(f"Expected {text!r} but found {found!r}", tok.position)
        return self.advance()

    def parse(self):
        if not self.text.strip():
            raise ExpressionSyntaxError("Empty expression", 0)
        tree = self.expression(0)
        if self.token.kind != "end":
            raise ExpressionSyntaxError(f"Unexpected {self.token.text!r}", self.token.position)
        return tree

    def expression(self, rbp):
        left = self.prefix(self.advance())
        while self.token.kind == "op" and rbp < _INFIX.get(self.token.text, 0):
            op = self.advance().text
            # ^ is right-associative
            right = self.expression(_INFIX[op] - 1 if op == "^" else _INFIX[op])
            left = BinaryOp(op, left, right)
        return left

    def prefix(self, tok):
        if tok.kind == "number":
            return Number(float(tok.text))
        if tok.kind == "name":
            return self.name(tok)
        if tok.kind == "op" and tok.text == "-":
            return Negate(self.expression(_PREFIX_MINUS))
        if tok.kind == "op" and tok.text == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        found = tok.text or "end of input"
        raise ExpressionSyntaxError(f"Unexpected {found!r}", tok.position)

    def name(self, tok):
        is_call = self.token.kind == "op" and self.token.text == "("
        if not is_call:
            if tok.text in VARIABLES:
                return Variable(tok.text)
            if tok.text in FUNCTIONS:
                raise ExpressionSyntaxError(f"Function {tok.text!r} needs arguments", tok.position)
            raise UnknownIdentifierError(
                f"Unknown variable {tok.text!r}; expected one of {', '.join(VARIABLES)}", tok.position
            )

        if tok.text not in FUNCTIONS:
            raise UnknownIdentifierError(f"Unknown function {tok.text!r}", tok.position)
        self.expect("(")
        args = [self.expression(0)]
        while self.token.kind == "op" and self.token.text == ",":
            self.advance()
            args.append(self.expression(0))
        self.expect(")")
        if len(args) != FUNCTIONS[tok.text]:
            raise ExpressionSyntaxError(
                f"{tok.text} takes {FUNCTIONS[tok.text]} argument(s) but got {len(args)}", tok.position
            )
        return Call(tok.text, tuple(args))


def parse_expression(text: str):
    """Parse source text into a syntax tree."""
    return _Parser(text).parse()


def to_source(tree):
    """Fully parenthesized source; parse_expression(to_source(t)) == t."""
    return str(tree)


def free_variables(tree):
    if isinstance(tree, Variable):
        return {tree.name}
    if isinstance(tree, Number):
        return set()
    if isinstance(tree, Negate):
        return free_variables(tree.operand)
    if isinstance(tree, BinaryOp):
        return free_variables(tree.left) | free_variables(tree.right)
    return set().union(*(free_variables(a) for a in tree.args))


def _power(base, exponent):
    if np.any((base == 0) & (exponent < 0)):
        raise ExpressionEvaluationError("0 raised to a negative power")
    result = np.power(base, exponent)
    if np.any(np.isnan(result) & ~np.isnan(base) & ~np.isnan(exponent)):
        raise ExpressionEvaluationError("Negative base raised to a non-integer power")
    return result


def _divide(num, den):
    if np.any(den == 0):
        raise ExpressionEvaluationError("Division by zero")
    return num / den


_BINARY = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": _divide,
    "^": _power,
}

_UNARY = {"sin": np.sin, "cos": np.cos, "exp": np.exp, "abs": np.abs}


def evaluate(tree, k, x, u):
    """Evaluate a tree with numpy broadcasting over k, x and u."""
    env = {
        "k": np.asarray(k, dtype=float),
        "x": np.asarray(x, dtype=float),
        "u": np.asarray(u, dtype=float),
    }
    with np.errstate(all="ignore"):
        result = _evaluate(tree, env)
    shape = np.broadcast(env["k"], env["x"], env["u"]).shape
    return np.broadcast_to(np.asarray(result, dtype=float), shape)


def _evaluate(tree, env):
    if isinstance(tree, Number):
        return np.float64(tree.value)
    if isinstance(tree, Variable):
        return env[tree.name]
    if isinstance(tree, Negate):
        return -_evaluate(tree.operand, env)
    if isinstance(tree, BinaryOp):
        return _BINARY[tree.op](_evaluate(tree.left, env), _evaluate(tree.right, env))
    args = [_evaluate(a, env) for a in tree.args]
    if tree.name == "powq":
        base, exponent = np.broadcast_arrays(*args)
        if np.any((base == 0) & (exponent <= 0)):
            raise ExpressionEvaluationError("powq(0, q) is undefined for q <= 0")
        return powq(base, exponent)
    return _UNARY[tree.name](args[0])


class ExpressionNonlinearity(Nonlinearity):
    """
    A nonlinearity written in the expression language. Without a supplied
    primitive, F is obtained by adaptive quadrature of f on [0, x].
    """

    def __init__(self, f: str, F: str = None, growth=None, T: int = None):
        self.f_source = f
        self.F_source = F
        self.f_tree = parse_expression(f)
        self.F_tree = parse_expression(F) if F is not None else None
        self.growth = growth
        self.T = T if T is not None else (growth.T if growth is not None else None)

    @property
    def depends_on_x(self):
        return "x" in free_variables(self.f_tree)

    def values(self, ks, xs, us):
        ks = self._check_nodes(ks)
        return evaluate(self.f_tree, ks, xs, us)

    def primitives(self, ks, xs, us):
        ks = self._check_nodes(ks)
        if self.F_tree is not None:
            # Anchor the supplied primitive so that F(k, 0, u) = 0
            return evaluate(self.F_tree, ks, xs, us) - evaluate(self.F_tree, ks, 0.0, us)

        ks, xs, us = np.broadcast_arrays(np.asarray(ks, dtype=float), np.asarray(xs, dtype=float), np.asarray(us, dtype=float))
        out = np.empty(xs.shape)
        for idx in np.ndindex(xs.shape):
            out[idx] = self._quadrature(ks[idx], xs[idx], us[idx])
        return out

    def _quadrature(self, k, x, u):
        if x == 0:
            return 0.0

        def integrand(t):
            return float(evaluate(self.f_tree, k, t, u))

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            value, abserr = integrate.quad(
                integrand, 0.0, x, epsabs=QUADRATURE_TOL, epsrel=0.0, limit=QUADRATURE_LIMIT
            )
        if not abserr <= QUADRATURE_TOL * max(1.0, abs(value)):
            raise QuadratureAccuracyError(
                f"Quadrature of f on [0, {x}] at k={k}, u={u} reached error {abserr:.3e}"
            )
        return value

    def describe(self):
        data = {"family": "expression", "f": self.f_source}
        if self.F_source is not None:
            data["F"] = self.F_source
        if self.growth is not None:
            data["growth"] = self.growth.to_dict()
        return data

    def __repr__(self):
        return f"ExpressionNonlinearity(f={self.f_source!r}, F={self.F_source!r})"
