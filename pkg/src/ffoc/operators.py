"""Shift-invariant operators as truncated power series in the F-derivative.

An :class:`OpSeries` stores plain coefficients ``c_k`` of
``T = sum_k c_k dF^k``. The F-normalized coefficients ``a_k = c_k * F_k!``
belong to :class:`PhiSeries` only; conversion goes through
:func:`phi_to_op` / :func:`expand_in_delta`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactring import ParamPoly, XPoly, parse_rational
from .fibnum import f_factorial, f_falling, fib, fibonomial

DEFAULT_TRUNC = 16

__all__ = [
    "DEFAULT_TRUNC",
    "OpSeries",
    "PhiSeries",
    "f_derivative",
    "apply_op",
    "translate",
    "op_compose",
    "op_invert",
    "is_delta_op",
    "phi_mul",
    "phi_to_op",
    "expand_in_delta",
    "identity",
    "d_f",
    "shift",
    "delta_f",
    "nabla_f",
    "abel",
    "laguerre",
    "parse_operator",
]


def _coeff_tuple(coeffs, trunc: int) -> tuple[ParamPoly, ...]:
    out = [ParamPoly.coerce(c) for c in list(coeffs)[: trunc + 1]]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class OpSeries:
    """``sum_k coeffs[k] * dF^k``, known exactly up to ``dF^trunc``."""

    coeffs: tuple[ParamPoly, ...]
    trunc: int = DEFAULT_TRUNC

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be >= 0")
        object.__setattr__(self, "coeffs", _coeff_tuple(self.coeffs, self.trunc))

    def coeff(self, k: int) -> ParamPoly:
        return self.coeffs[k] if k < len(self.coeffs) else ParamPoly()

    def with_trunc(self, trunc: int) -> "OpSeries":
        # raising trunc would claim knowledge we do not have
        if trunc > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} -> {trunc}")
        return OpSeries(self.coeffs, trunc)

    def __add__(self, other: "OpSeries") -> "OpSeries":
        n = min(self.trunc, other.trunc)
        return OpSeries([self.coeff(k) + other.coeff(k) for k in range(n + 1)], n)

    def __sub__(self, other: "OpSeries") -> "OpSeries":
        n = min(self.trunc, other.trunc)
        return OpSeries([self.coeff(k) - other.coeff(k) for k in range(n + 1)], n)

    def __neg__(self) -> "OpSeries":
        return OpSeries([-c for c in self.coeffs], self.trunc)

    def scale(self, s) -> "OpSeries":
        return OpSeries([c * s for c in self.coeffs], self.trunc)

    def __matmul__(self, other: "OpSeries") -> "OpSeries":
        return op_compose(self, other)

    def __pow__(self, k: int) -> "OpSeries":
        out = identity(self.trunc)
        for _ in range(k):
            out = op_compose(out, self)
        return out

    def __call__(self, p: XPoly) -> XPoly:
        return apply_op(self, p)

    def agrees_with(self, other: "OpSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality through ``dF^upto`` (default: common trunc)."""
        n = min(self.trunc, other.trunc) if upto is None else upto
        return all(self.coeff(k) == other.coeff(k) for k in range(n + 1))

    def __str__(self) -> str:
        return "series:[" + ",".join(str(self.coeff(k)) for k in range(len(self.coeffs))) + "]"


@dataclass(frozen=True)
class PhiSeries:
    """``f_F(t) = sum_k a_coeffs[k] t^k / F_k!`` up to ``t^trunc``."""

    a_coeffs: tuple[ParamPoly, ...]
    trunc: int = DEFAULT_TRUNC

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_coeffs", _coeff_tuple(self.a_coeffs, self.trunc))

    def coeff(self, k: int) -> ParamPoly:
        return self.a_coeffs[k] if k < len(self.a_coeffs) else ParamPoly()

    def __mul__(self, other: "PhiSeries") -> "PhiSeries":
        return phi_mul(self, other)

    def agrees_with(self, other: "PhiSeries") -> bool:
        n = min(self.trunc, other.trunc)
        return all(self.coeff(k) == other.coeff(k) for k in range(n + 1))


# -- constructors -----------------------------------------------------------


def identity(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    return OpSeries((1,), trunc)


def d_f(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    return OpSeries((0, 1), trunc)


def shift(y, trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """E^y = exp_F{y dF}, i.e. c_k = y^k / F_k!."""
    y = ParamPoly.coerce(y)
    return OpSeries([y**k / f_factorial(k) for k in range(trunc + 1)], trunc)


def delta_f(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    return shift(1, trunc) - identity(trunc)


def nabla_f(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    return identity(trunc) - shift(-1, trunc)


def abel(a=None, trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """dF E^a(dF); ``a`` defaults to the symbolic parameter."""
    a = ParamPoly.gen() if a is None else ParamPoly.coerce(a)
    return op_compose(d_f(trunc), shift(a, trunc))


def laguerre(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """dF / (dF - I) = -(dF + dF^2 + ...)."""
    return OpSeries([0] + [-1] * trunc, trunc)


# -- operations -------------------------------------------------------------


def f_derivative(p: XPoly) -> XPoly:
    return XPoly(c * fib(j) for j, c in enumerate(p.coeffs) if j >= 1)


def apply_op(T: OpSeries, p: XPoly) -> XPoly:
    d = p.degree
    if d > T.trunc:
        raise ValueError(f"degree {d} exceeds operator truncation {T.trunc}")
    out = [ParamPoly()] * max(d + 1, 0)
    for k, c in enumerate(T.coeffs):
        if not c:
            continue
        for j in range(k, d + 1):
            pj = p.coeffs[j]
            if pj:
                out[j - k] = out[j - k] + c * pj * f_falling(j, k)
    return XPoly(out)


def translate(p: XPoly, y) -> XPoly:
    """p(x +_F y) = sum_k y^k / F_k! * dF^k p."""
    return apply_op(shift(y, max(p.degree, 0)), p)


def op_compose(T: OpSeries, U: OpSeries) -> OpSeries:
    n = min(T.trunc, U.trunc)
    out = [ParamPoly()] * (n + 1)
    for i, c in enumerate(T.coeffs[: n + 1]):
        if not c:
            continue
        for j, d in enumerate(U.coeffs[: n + 1 - i]):
            if d:
                out[i + j] = out[i + j] + c * d
    return OpSeries(out, n)


def op_invert(T: OpSeries) -> OpSeries:
    c0 = T.coeff(0)
    if not c0:
        raise ValueError("operator with zero constant term is not invertible")
    if not c0.is_constant():
        raise ValueError("constant term must be a rational constant to invert")
    inv0 = 1 / c0.constant()
    out = [ParamPoly.const(inv0)]
    for k in range(1, T.trunc + 1):
        acc = ParamPoly()
        for j in range(1, k + 1):
            acc = acc + T.coeff(j) * out[k - j]
        out.append(acc * (-inv0))
    return OpSeries(out, T.trunc)


def is_delta_op(T: OpSeries) -> bool:
    return not T.coeff(0) and bool(T.coeff(1))


def phi_mul(f: PhiSeries, g: PhiSeries) -> PhiSeries:
    """Fibonomial convolution c_k = sum_l binom_F(k, l) a_l b_{k-l}."""
    n = min(f.trunc, g.trunc)
    out = []
    for k in range(n + 1):
        acc = ParamPoly()
        for l in range(k + 1):
            al, bm = f.coeff(l), g.coeff(k - l)
            if al and bm:
                acc = acc + al * bm * fibonomial(k, l)
        out.append(acc)
    return PhiSeries(out, n)


def phi_to_op(f: PhiSeries, Q: OpSeries) -> OpSeries:
    if not is_delta_op(Q):
        raise ValueError("phi_to_op needs a delta operator")
    n = min(f.trunc, Q.trunc)
    Q = Q.with_trunc(n)
    acc = OpSeries((), n)
    power = identity(n)
    for k in range(n + 1):
        ak = f.coeff(k)
        if ak:
            acc = acc + power.scale(ak / f_factorial(k))
        power = op_compose(power, Q)
    return acc


def expand_in_delta(T: OpSeries, Q: OpSeries, q_basis: Sequence[XPoly]) -> PhiSeries:
    """First-expansion coefficients a_n = [T q_n](0) for n <= T.trunc."""
    if not is_delta_op(Q):
        raise ValueError("expand_in_delta needs a delta operator")
    if len(q_basis) < T.trunc + 1:
        raise ValueError(
            f"basis has {len(q_basis)} terms, need {T.trunc + 1} for trunc {T.trunc}"
        )
    return PhiSeries(
        [apply_op(T, q_basis[n]).at_x(0) for n in range(T.trunc + 1)], T.trunc
    )


# -- literal syntax ---------------------------------------------------------


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_operator(text: str, trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """Read ``dF``, ``deltaF``, ``nablaF``, ``abel[:a[=r]]``, ``laguerre``
    or ``series:[c0,c1,...]`` (entries are expressions in ``a``)."""
    s = text.strip()
    if s == "dF":
        return d_f(trunc)
    if s == "deltaF":
        return delta_f(trunc)
    if s == "nablaF":
        return nabla_f(trunc)
    if s == "laguerre":
        return laguerre(trunc)
    if s in ("abel", "abel:a"):
        return abel(None, trunc)
    if s.startswith("abel:a="):
        return abel(parse_rational(s[len("abel:a="):]), trunc)
    if s.startswith("series:"):
        body = s[len("series:"):].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"series literal needs [..]: {text!r}")
        inner = body[1:-1].strip()
        entries = [ParamPoly.parse(e) for e in _split_top(inner)] if inner else []
        return OpSeries(entries, trunc)
    raise ValueError(f"unknown operator literal {text!r}")
