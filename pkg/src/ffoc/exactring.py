"""Exact coefficient arithmetic.

``ParamPoly`` is an element of Q[a] (one formal parameter ``a``) and
``XPoly`` a dense polynomial in ``x`` with ``ParamPoly`` coefficients.
Rationals are :class:`fractions.Fraction`.

The canonical text form lists terms by descending power of x, then
descending power of a::

    >>> str(XPoly.parse("x^3 - 4*a*x^2 + 2*a^2*x"))
    'x^3 - 4*a*x^2 + 2*a^2*x'
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

__all__ = [
    "ParamPoly",
    "XPoly",
    "render_rational",
    "parse_rational",
    "xpoly_arith",
    "xpoly_eval",
]

Scalar = Union[int, Fraction]


def render_rational(r: Scalar) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class ParamPoly:
    """Polynomial in the parameter ``a`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        self.coeffs: tuple[Fraction, ...] = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def const(cls, c: Scalar) -> "ParamPoly":
        return cls((c,))

    @classmethod
    def gen(cls) -> "ParamPoly":
        """The parameter ``a`` itself."""
        return cls((0, 1))

    @classmethod
    def coerce(cls, v: "ParamPoly | Scalar") -> "ParamPoly":
        if isinstance(v, ParamPoly):
            return v
        if isinstance(v, (int, _RationalABC)):
            return cls.const(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to ParamPoly")

    @classmethod
    def parse(cls, text: str) -> "ParamPoly":
        p = XPoly.parse(text)
        if p.degree > 0:
            raise ValueError(f"expected an expression in a only: {text!r}")
        return p.coeff(0)

    # -- queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, a0: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a0 + c
        return acc

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, XPoly):
            return NotImplemented
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ParamPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ParamPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a nonzero rational constant stays inside Q[a]
        if isinstance(other, ParamPoly):
            if not other.is_constant():
                raise ArithmeticError("division by a non-constant element of Q[a]")
            other = other.constant()
        if not other:
            raise ZeroDivisionError("ParamPoly division by zero")
        inv = 1 / Fraction(other)
        return ParamPoly(c * inv for c in self.coeffs)

    def __pow__(self, k: int) -> "ParamPoly":
        if k < 0:
            raise ValueError("negative power")
        out, base = ParamPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.coeffs == ParamPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero ``(power, coefficient)`` pairs, highest power first."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self) -> str:
        return str(XPoly((self,)))

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


def _pp(v) -> ParamPoly:
    return ParamPoly.coerce(v)


class XPoly:
    """Dense polynomial in ``x`` over Q[a]; ``coeffs[j]`` multiplies x^j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable["ParamPoly | Scalar"] = ()) -> None:
        self.coeffs: tuple[ParamPoly, ...] = _strip([_pp(c) for c in coeffs])

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: "ParamPoly | Scalar" = 1) -> "XPoly":
        return cls([0] * n + [c])

    @classmethod
    def const(cls, c: "ParamPoly | Scalar") -> "XPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> ParamPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ParamPoly()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x0: Scalar, a0: Scalar = 0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c(a0)
        return acc

    def at_x(self, x0: Scalar) -> ParamPoly:
        """Evaluate in x only, leaving a symbolic."""
        acc = ParamPoly()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def subs_a(self, a0: Scalar) -> "XPoly":
        return XPoly(c(a0) for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, XPoly):
            try:
                other = XPoly.const(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            try:
                other = XPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly()
        out = [ParamPoly()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return XPoly(out)

    __rmul__ = __mul__

    def scale(self, s: "ParamPoly | Scalar") -> "XPoly":
        s = _pp(s)
        return XPoly(c * s for c in self.coeffs)

    def __truediv__(self, other) -> "XPoly":
        return XPoly(c / other for c in self.coeffs)

    def __pow__(self, k: int) -> "XPoly":
        if k < 0:
            raise ValueError("negative power")
        out = XPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (ParamPoly, int, _RationalABC)):
            return self.coeffs == XPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        pieces: list[str] = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            for i, c in self.coeffs[j].terms():
                mag = abs(c)
                factors = []
                if i:
                    factors.append("a" if i == 1 else f"a^{i}")
                if j:
                    factors.append("x" if j == 1 else f"x^{j}")
                if mag != 1 or not factors:
                    factors.insert(0, render_rational(mag))
                body = "*".join(factors)
                if not pieces:
                    pieces.append("-" + body if c < 0 else body)
                else:
                    pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "XPoly":
        return _Parser(text).parse()


_TOKEN = re.compile(r"\s*(?:(\d+)|([ax])|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent reader for the canonical form (and a bit more)."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.toks: list[tuple[str, str]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                raise ValueError(f"bad polynomial text at {pos}: {text!r}")
            num, sym, op = m.groups()
            if num is not None:
                self.toks.append(("num", num))
            elif sym is not None:
                self.toks.append(("sym", sym))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def _next(self):
        tok = self._peek()
        if tok[0] is None:
            raise ValueError(f"unexpected end of polynomial text: {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> XPoly:
        if not self.toks:
            raise ValueError("empty polynomial text")
        out = self._expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in polynomial text: {self.text!r}")
        return out

    def _expr(self) -> XPoly:
        sign = 1
        kind, val = self._peek()
        if kind == "op" and val in "+-":
            self._next()
            sign = -1 if val == "-" else 1
        acc = self._term().scale(sign)
        while True:
            kind, val = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                t = self._term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def _term(self) -> XPoly:
        acc = self._power()
        while True:
            kind, val = self._peek()
            if kind == "op" and val == "*":
                self._next()
                acc = acc * self._power()
            elif kind == "op" and val == "/":
                self._next()
                d = self._power()
                if d.degree > 0 or not d.coeff(0).is_constant() or not d:
                    raise ValueError(f"can only divide by a nonzero rational: {self.text!r}")
                acc = acc / d.coeff(0).constant()
            else:
                return acc

    def _power(self) -> XPoly:
        base = self._atom()
        kind, val = self._peek()
        if kind == "op" and val == "^":
            self._next()
            kind, num = self._next()
            if kind != "num":
                raise ValueError(f"exponent must be a natural number: {self.text!r}")
            base = base ** int(num)
        return base

    def _atom(self) -> XPoly:
        kind, val = self._next()
        if kind == "num":
            return XPoly.const(int(val))
        if kind == "sym":
            return XPoly.x() if val == "x" else XPoly.const(ParamPoly.gen())
        if val == "(":
            inner = self._expr()
            if self._next() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses: {self.text!r}")
            return inner
        if val == "-":
            return -self._power()
        raise ValueError(f"unexpected {val!r} in polynomial text: {self.text!r}")


def xpoly_arith(p: XPoly, q: "XPoly | ParamPoly | Scalar", op: str) -> XPoly:
    """Dispatch ``add``/``sub``/``mul``/``scale`` by name."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        if isinstance(q, XPoly):
            if q.degree > 0:
                raise ValueError("scale needs a constant polynomial")
            q = q.coeff(0)
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def xpoly_eval(p: XPoly, x0: Scalar, a0: Scalar = 0) -> Fraction:
    return p(x0, a0)
