"""A small expression language over Gaussian mixtures.

Grammar (whitespace-insensitive)::

    expr  := unary (('+' | '-') unary)*
    unary := '-' unary | atom
    atom  := NUMBER | NAME | NAME '(' args ')' | '[' items ']' | '(' expr ')'
    args  := [arg (',' arg)*]          arg := [NAME '='] expr

Numbers are exact: ``3``, ``3/2``, ``1.25``, ``1/2i`` (meaning ``i/2``) and
the bare name ``i``.  ``+`` and ``-`` fold numbers into complex rationals,
so canonical output such as ``gauss(y=1+1/2i, a=0, b=0, c=1)`` parses
back to the same value.  Applied to signals they add and subtract.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from . import mix as gm
from . import poly as gp
from . import quad as gq
from . import simple as gs
from .errors import DomainError, ParseError
from .mix import GaussMix
from .scalars import Amplitude, ComplexRational, as_complex, as_rational, format_complex

# AST ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Pos:
    line: int
    column: int

    def __str__(self):
        return f"line {self.line}, column {self.column}"


@dataclass(frozen=True)
class Num:
    value: ComplexRational
    pos: Pos


@dataclass(frozen=True)
class Name:
    name: str
    pos: Pos


@dataclass(frozen=True)
class ListExpr:
    items: tuple
    pos: Pos


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: Pos


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: Pos


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    kwargs: tuple  # of (name, expr)
    pos: Pos


# tokenizer ------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+|/\d+)?i?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],=+\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: Pos


def tokenize(text: str) -> list:
    tokens = []
    line, line_start, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        pos = Pos(line, i - line_start + 1)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", pos.line, pos.column)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = i + chunk.rindex("\n") + 1
        else:
            tokens.append(Token(kind, m.group(), pos))
        i = m.end()
    tokens.append(Token("end", "", Pos(line, len(text) - line_start + 1)))
    return tokens


# parser ---------------------------------------------------------------------------

# name -> (min positional, max positional, allowed keywords)
SIGNATURES = {
    "gauss": (0, 4, ("y", "a", "b", "c", "neg")),
    "gausspoly": (0, 5, ("y", "a", "b", "c", "neg", "p")),
    "hermite": (1, 1, ()),
    "translate": (2, 2, ()),
    "shrink": (2, 2, ()),
    "modulate": (2, 2, ()),
    "scale": (2, 2, ()),
    "conj": (1, 1, ()),
    "adjoint": (1, 1, ()),
    "diff": (1, 1, ()),
    "fourierA": (1, 1, ()),
    "fourierS": (1, 1, ()),
    "add": (2, 2, ()),
    "sub": (2, 2, ()),
    "mul": (2, 2, ()),
    "conv": (2, 2, ()),
    "pow": (2, 2, ()),
    "norm": (2, 2, ()),
    "variance": (1, 1, ()),
    "dot": (2, 2, ()),
    "integrate": (1, 1, ()),
    "total": (1, 1, ()),
}
CONSTANTS = ("i", "inf", "true", "false", "zero")


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def error(self, message, tok: Optional[Token] = None):
        tok = tok or self.tok
        return ParseError(message, tok.pos.line, tok.pos.column)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("punct",):
            found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.unary()
        while self.tok.text in ("+", "-") and self.tok.kind == "punct":
            op = self.advance()
            node = BinOp(op.text, node, self.unary(), op.pos)
        return node

    def unary(self):
        if self.tok.kind == "punct" and self.tok.text == "-":
            op = self.advance()
            return Neg(self.unary(), op.pos)
        return self.atom()

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Num(_number(tok.text), tok.pos)
        if tok.kind == "name":
            self.advance()
            if self.tok.text == "(" and self.tok.kind == "punct":
                return self.call(tok)
            if tok.text not in CONSTANTS:
                raise self.error(f"unknown name {tok.text!r}", tok)
            return Name(tok.text, tok.pos)
        if tok.text == "[":
            self.advance()
            items = []
            if self.tok.text != "]":
                items.append(self.expr())
                while self.tok.text == ",":
                    self.advance()
                    items.append(self.expr())
            self.expect("]")
            return ListExpr(tuple(items), tok.pos)
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected an expression, found {found}")

    def call(self, name_tok: Token):
        name = name_tok.text
        if name not in SIGNATURES:
            raise self.error(f"unknown function {name!r}", name_tok)
        self.expect("(")
        args, kwargs = [], []
        if self.tok.text != ")":
            while True:
                nxt = self.tokens[self.k + 1]
                if self.tok.kind == "name" and nxt.text == "=":
                    key = self.advance()
                    self.advance()
                    if any(k == key.text for k, _ in kwargs):
                        raise self.error(f"duplicate argument {key.text!r}", key)
                    kwargs.append((key.text, self.expr()))
                else:
                    if kwargs:
                        raise self.error("positional argument after keyword argument")
                    args.append(self.expr())
                if self.tok.text != ",":
                    break
                self.advance()
        self.expect(")")
        lo, hi, keywords = SIGNATURES[name]
        for key, _ in kwargs:
            if key not in keywords:
                raise self.error(f"{name}() got an unexpected keyword {key!r}", name_tok)
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            raise self.error(f"{name}() takes {want} arguments, got {len(args)}", name_tok)
        return Call(name, tuple(args), tuple(kwargs), name_tok.pos)


def _number(text: str) -> ComplexRational:
    imag = text.endswith("i")
    value = Fraction(text[:-1] if imag else text)
    return ComplexRational(0, value) if imag else ComplexRational(value)


def parse(text: str):
    """Parse ``text`` into an AST; raises :class:`ParseError` with a 1-based position."""
    return _Parser(text).parse()


# evaluation -------------------------------------------------------------------------


@dataclass(frozen=True)
class Integrals:
    """Per-term results of ``integrate``."""

    results: tuple

    def __str__(self):
        return "\n".join(str(r) for r in self.results) if self.results else "integral(s=0, q=[])"


def _annotate(exc: DomainError, node) -> DomainError:
    if getattr(exc, "located", False):
        return exc
    what = node.name if isinstance(node, Call) else "expression"
    new = type(exc)(f"{exc} (in {what} at {node.pos})")
    new.located = True
    return new


class Evaluator:
    def __init__(self, precision_bits: int = 128):
        self.precision_bits = precision_bits

    def eval(self, node):
        try:
            return self._eval(node)
        except DomainError as exc:
            raise _annotate(exc, node) from exc

    def _eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Name):
            return {
                "i": ComplexRational(0, 1),
                "inf": gs.INF,
                "true": True,
                "false": False,
                "zero": gm.ZERO,
            }[node.name]
        if isinstance(node, ListExpr):
            return [self.eval(v) for v in node.items]
        if isinstance(node, Neg):
            v = self.eval(node.arg)
            if isinstance(v, ComplexRational):
                return -v
            return gm.neg(self.signal(v, node))
        if isinstance(node, BinOp):
            return self._binop(node)
        return getattr(self, "f_" + node.name)(node)

    def _binop(self, node: BinOp):
        left, right = self.eval(node.left), self.eval(node.right)
        if isinstance(left, ComplexRational) and isinstance(right, ComplexRational):
            return left + right if node.op == "+" else left - right
        x, y = self.signal(left, node.left), self.signal(right, node.right)
        return gm.add(x, y) if node.op == "+" else gm.sub(x, y)

    # coercions
    def signal(self, v, node) -> GaussMix:
        if isinstance(v, GaussMix):
            return v
        raise DomainError(f"expected a signal at {node.pos}")

    def number(self, v, node) -> ComplexRational:
        if isinstance(v, ComplexRational):
            return v
        raise DomainError(f"expected a number at {node.pos}")

    def rational(self, v, node) -> Fraction:
        return as_rational(self.number(v, node))

    def integer(self, v, node) -> int:
        q = self.rational(v, node)
        if q.denominator != 1:
            raise DomainError(f"expected an integer at {node.pos}, got {q}")
        return int(q)

    def arg(self, node: Call, j: int, kind: str):
        sub = node.args[j]
        return getattr(self, kind)(self.eval(sub), sub)

    # constructors
    def _core_params(self, node: Call, names):
        params = dict(zip(names, node.args))
        params.update(node.kwargs)
        values = {k: self.eval(v) for k, v in params.items()}
        return params, values

    def f_gauss(self, node: Call):
        if len(node.args) not in (0, 2, 4):
            raise DomainError(f"gauss() takes 2 or 4 positional arguments at {node.pos}")
        names = ("y", "c") if len(node.args) == 2 else ("y", "a", "b", "c")
        return GaussMix.of(self._core(node, names))

    def _core(self, node: Call, names) -> gq.GaussQuad:
        params, values = self._core_params(node, names)
        get = lambda k, default: (  # noqa: E731
            self.number(values[k], params[k]) if k in values else as_complex(default)
        )
        neg = values.get("neg", False)
        if not isinstance(neg, bool):
            raise DomainError(f"neg must be true or false at {params['neg'].pos}")
        return gq.GaussQuad(Amplitude(get("y", 1), neg), get("a", 0), get("b", 0), get("c", 0))

    def f_gausspoly(self, node: Call):
        names = ("y", "a", "b", "c", "p")
        core = self._core(node, names[: min(len(node.args), 4)])
        params, values = self._core_params(node, names)
        coeffs = values.get("p", [1])
        if not isinstance(coeffs, list):
            raise DomainError(f"p must be a list of numbers at {params['p'].pos}")
        coeffs = [self.number(c, params["p"]) for c in coeffs]
        return GaussMix.of(gp.phi(core, coeffs))

    def f_hermite(self, node):
        n = self.arg(node, 0, "integer")
        if n < 0:
            raise DomainError(f"hermite index must be non-negative, got {n}")
        return GaussMix.of(gp.hermite_eigenfunction(n))

    # unary operations
    def _unary(self, node, op):
        return op(self.arg(node, 0, "signal"))

    def f_conj(self, node):
        return self._unary(node, gm.conjugate)

    def f_adjoint(self, node):
        return self._unary(node, gm.adjoint)

    def f_diff(self, node):
        return self._unary(node, gm.differentiate)

    def f_fourierA(self, node):
        return self._unary(node, gm.fourier_analysis)

    def f_fourierS(self, node):
        return self._unary(node, gm.fourier_synthesis)

    def f_translate(self, node):
        return gm.translate(self.arg(node, 0, "rational"), self.arg(node, 1, "signal"))

    def f_modulate(self, node):
        return gm.modulate(self.arg(node, 0, "rational"), self.arg(node, 1, "signal"))

    def f_shrink(self, node):
        return gm.shrink(self.arg(node, 0, "rational"), self.arg(node, 1, "signal"))

    def f_scale(self, node):
        return gm.scale(self.arg(node, 0, "number"), self.arg(node, 1, "signal"))

    def f_pow(self, node):
        n = self.arg(node, 1, "integer")
        if n < 0:
            raise DomainError(f"pow needs a non-negative exponent, got {n}")
        return gm.pow(self.arg(node, 0, "signal"), n)

    # binary operations
    def _binary(self, node, op):
        return op(self.arg(node, 0, "signal"), self.arg(node, 1, "signal"))

    def f_add(self, node):
        return self._binary(node, gm.add)

    def f_sub(self, node):
        return self._binary(node, gm.sub)

    def f_mul(self, node):
        return self._binary(node, gm.mul)

    def f_conv(self, node):
        return self._binary(node, gm.convolve)

    # functionals
    def f_norm(self, node):
        p_node = node.args[0]
        p = self.eval(p_node)
        if p != gs.INF:
            p = self.integer(p, p_node)
            if p < 1:
                raise DomainError(f"norm order must be a positive integer or inf, got {p}")
        return gs.norm(p, as_simple(self.arg(node, 1, "signal")))

    def f_variance(self, node):
        return gs.variance(as_simple(self.arg(node, 0, "signal")))

    def f_dot(self, node):
        return gm.scalar_product(
            self.arg(node, 0, "signal"), self.arg(node, 1, "signal"), self.precision_bits
        )

    def f_total(self, node):
        with mpmath.workprec(self.precision_bits):
            return +gm.integral(self.arg(node, 0, "signal"))

    def f_integrate(self, node):
        x = self.arg(node, 0, "signal")
        return Integrals(tuple(gp.integrate(t) for t in x.terms))


def as_simple(x: GaussMix) -> gs.SimpleGauss:
    """View a mixture as ``sqrt(y)*exp(-c*u**2)`` with rational ``y >= 0`` and ``c``."""
    if x.is_zero():
        return gs.SimpleGauss(0, 0)
    if len(x.terms) == 1:
        t = x.terms[0]
        g = t.g
        if (
            t.p.degree == 0
            and t.p[0] == 1
            and not g.a
            and not g.b
            and g.c.is_real()
            and g.amp.square.is_real()
            and g.amp.square.re > 0
            and not g.amp.negate
        ):
            return gs.SimpleGauss(g.amp.square.re, g.c.re)
    raise DomainError("not a simple Gaussian sqrt(y)*exp(-pi*c*t**2) with rational y > 0, c")


def evaluate(node, precision_bits: int = 128):
    return Evaluator(precision_bits).eval(node)


def evaluate_text(text: str, precision_bits: int = 128):
    return evaluate(parse(text), precision_bits)


def render_value(v) -> str:
    if isinstance(v, GaussMix):
        return gm.render(v)
    if isinstance(v, ComplexRational):
        return format_complex(v)
    if isinstance(v, (mpmath.mpc, mpmath.mpf)):
        return _render_mp(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(render_value(x) for x in v) + "]"
    return str(v)


def _render_mp(v, digits: int = 30) -> str:
    v = mpmath.mpc(v)
    if not v.imag:
        return mpmath.nstr(v.real, digits)
    sign = "+" if v.imag >= 0 else "-"
    return f"{mpmath.nstr(v.real, digits)}{sign}{mpmath.nstr(abs(v.imag), digits)}i"
