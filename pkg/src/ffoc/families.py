"""Basic and Sheffer F-polynomial sequences, closed-form families, and an
audit of the printed tables against the defining recurrences.

Authority runs one way: the basic conditions ``q_0 = 1``, ``q_n(0) = 0``,
``Q q_n = F_n q_{n-1}`` (and the Sheffer analogue) define the sequences.
Closed forms and printed tables are evaluated as written and compared;
nothing here corrects them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exactring import ParamPoly, XPoly
from .fibnum import f_factorial, f_falling, fib, fibonomial
from .listings import listing
from .operators import (
    DEFAULT_TRUNC,
    OpSeries,
    abel,
    apply_op,
    d_f,
    identity,
    is_delta_op,
    laguerre,
    op_compose,
    op_invert,
)

FAMILIES = ("abel", "laguerre", "laguerre-alpha", "hermite", "bernoulli")
SOURCES = ("paper-listing", "closed-form", "solver")


@dataclass(frozen=True)
class PolySequence:
    terms: tuple[XPoly, ...]
    kind: str  # basic | sheffer | closed-form
    operator_tag: str = ""

    def __post_init__(self) -> None:
        for n, p in enumerate(self.terms):
            if p.degree != n:
                raise ValueError(f"term {n} has degree {p.degree}")
        if self.kind == "basic" and self.terms:
            if self.terms[0] != 1:
                raise ValueError("basic sequence must start with 1")
            if any(p.at_x(0) for p in self.terms[1:]):
                raise ValueError("basic sequence terms must vanish at 0")

    def __getitem__(self, n: int) -> XPoly:
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


# -- generic constructions --------------------------------------------------


def _check_delta(Q: OpSeries) -> None:
    if not is_delta_op(Q):
        raise ValueError("not a delta operator (need c_0 = 0, c_1 != 0)")
    if not Q.coeff(1).is_constant():
        raise ValueError("the dF coefficient of Q must be a rational constant")


def basic_sequence(Q: OpSeries, n_max: int, tag: str = "") -> PolySequence:
    """Solve Q q_n = F_n q_{n-1}, q_n(0) = 0 by back-substitution.

    Writing q_n = sum_j b_j x^j, the x^i coefficient of Q q_n is
    sum_{j > i} b_j c_{j-i} F_j^{(j-i)}; the system is upper triangular
    with diagonal c_1 F_{i+1}.
    """
    _check_delta(Q)
    if Q.trunc < n_max:
        raise ValueError(f"operator truncated at {Q.trunc} < n_max={n_max}")
    c1 = Q.coeff(1).constant()
    terms = [XPoly.const(1)]
    for n in range(1, n_max + 1):
        rhs = terms[-1].scale(fib(n))
        b = [ParamPoly()] * (n + 1)
        for i in range(n - 1, -1, -1):
            acc = rhs.coeff(i)
            for j in range(i + 2, n + 1):
                if b[j]:
                    acc = acc - b[j] * Q.coeff(j - i) * f_falling(j, j - i)
            b[i + 1] = acc / (c1 * fib(i + 1))
        terms.append(XPoly(b))
    return PolySequence(tuple(terms), "basic", tag)


def sheffer_sequence(Q: OpSeries, S: OpSeries, n_max: int, tag: str = "") -> PolySequence:
    """s_n = S^{-1} q_n with q the basic sequence of Q."""
    if S.trunc < n_max:
        raise ValueError(f"S truncated at {S.trunc} < n_max={n_max}")
    S_inv = op_invert(S)
    q = basic_sequence(Q, n_max)
    return PolySequence(tuple(apply_op(S_inv, p) for p in q), "sheffer", tag)


# -- the standard operators S ----------------------------------------------


def hermite_s(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """exp_F{a dF^2 / 2}."""
    a = ParamPoly.gen()
    coeffs = [ParamPoly()] * (trunc + 1)
    for k in range(trunc // 2 + 1):
        coeffs[2 * k] = (a / 2) ** k / f_factorial(k)
    return OpSeries(coeffs, trunc)


def bernoulli_s(trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """((exp_F{dF} - I) / dF)^{-1}."""
    quotient = OpSeries([ParamPoly.const(1) / f_factorial(j + 1) for j in range(trunc + 1)], trunc)
    return op_invert(quotient)


def laguerre_alpha_s(alpha: int, trunc: int = DEFAULT_TRUNC) -> OpSeries:
    """(I - dF)^{-alpha-1}."""
    base = identity(trunc) - d_f(trunc)
    power = identity(trunc)
    for _ in range(alpha + 1):
        power = op_compose(power, base)
    return op_invert(power)


# -- closed forms, evaluated exactly as printed ----------------------------


def abel_closed(n: int) -> XPoly:
    if n == 0:
        return XPoly.const(1)
    a = ParamPoly.gen()
    out = XPoly()
    for k in range(n):
        c = (-a * n) ** k * fibonomial(n - 1, k) * (n - k) / fib(n - k)
        out = out + XPoly.monomial(n - k, c)
    return out.scale(ParamPoly.const(fib(n)) / n)


def laguerre_basic_closed(n: int) -> XPoly:
    if n == 0:
        return XPoly.const(1)
    out = XPoly()
    for k in range(1, n + 1):
        c = ParamPoly.const((-1) ** k * (f_factorial(n) // f_factorial(k)) * fibonomial(n - 1, k - 1) * k)
        out = out + XPoly.monomial(k, c / fib(k))
    return out.scale(ParamPoly.const(fib(n)) / n)


def hermite_closed(n: int) -> XPoly:
    a = ParamPoly.gen()
    out = XPoly()
    for k in range(n // 2 + 1):
        c = (-a) ** k / (2**k * f_factorial(k)) * f_falling(n, 2 * k)
        out = out + XPoly.monomial(n - 2 * k, c)
    return out


def laguerre_alpha_closed(n: int, alpha: int) -> XPoly:
    if alpha < 0:
        raise ValueError(f"alpha must be a nonnegative integer, got {alpha}")
    out = XPoly()
    for k in range(n + 1):
        c = (f_factorial(n) // f_factorial(k)) * fibonomial(alpha + n, n - k) * (-1) ** k
        out = out + XPoly.monomial(k, c)
    return out


def bernoulli_closed(n: int) -> XPoly:
    out = XPoly()
    for k in range(n + 1):
        out = out + XPoly.monomial(n - k, ParamPoly.const(fibonomial(n, k)) / fib(k + 1))
    return out


def closed_form(family: str, n: int, alpha: int = 1) -> XPoly:
    if family == "abel":
        return abel_closed(n)
    if family == "laguerre":
        return laguerre_basic_closed(n)
    if family == "hermite":
        return hermite_closed(n)
    if family == "laguerre-alpha":
        return laguerre_alpha_closed(n, alpha)
    if family == "bernoulli":
        return bernoulli_closed(n)
    raise ValueError(f"unknown family {family!r}")


def closed_sequence(family: str, n_max: int, alpha: int = 1) -> PolySequence:
    return PolySequence(
        tuple(closed_form(family, n, alpha) for n in range(n_max + 1)), "closed-form", family
    )


def solver_sequence(family: str, n_max: int, trunc: int | None = None, alpha: int = 1) -> PolySequence:
    """The family built from its defining operators (Q, and S when Sheffer)."""
    t = max(n_max, DEFAULT_TRUNC) if trunc is None else trunc
    if family == "abel":
        return basic_sequence(abel(None, t), n_max, "abel:a")
    if family == "laguerre":
        return basic_sequence(laguerre(t), n_max, "laguerre")
    if family == "hermite":
        return sheffer_sequence(d_f(t), hermite_s(t), n_max, "dF / exp_F{a*dF^2/2}")
    if family == "laguerre-alpha":
        return sheffer_sequence(laguerre(t), laguerre_alpha_s(alpha, t), n_max,
                                f"laguerre / (I-dF)^-{alpha + 1}")
    if family == "bernoulli":
        return sheffer_sequence(d_f(t), bernoulli_s(t), n_max, "dF / bernoulli")
    raise ValueError(f"unknown family {family!r}")


# -- discrepancy audit ------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    family: str
    n: int
    source_pair: tuple[str, str]
    lhs: XPoly
    rhs: XPoly

    @property
    def diff(self) -> XPoly:
        return self.lhs - self.rhs

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "source_pair": list(self.source_pair),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "diff": str(self.diff),
        }


@dataclass
class DiscrepancyReport:
    entries: list[Discrepancy] = field(default_factory=list)

    def add(self, family: str, n: int, pair: tuple[str, str], lhs: XPoly, rhs: XPoly) -> None:
        if lhs != rhs:
            self.entries.append(Discrepancy(family, n, pair, lhs, rhs))

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def for_family(self, family: str) -> list[Discrepancy]:
        return [e for e in self.entries if e.family == family]

    def find(self, family: str, n: int, pair: tuple[str, str]) -> Discrepancy | None:
        for e in self.entries:
            if (e.family, e.n, e.source_pair) == (family, n, pair):
                return e
        return None

    def to_json(self) -> str:
        return json.dumps([e.as_dict() for e in self.entries], indent=2)


def verify_families(n_max: int, families: Iterable[str] = FAMILIES,
                    trunc: int | None = None) -> DiscrepancyReport:
    """Compare table, closed form and operator construction pairwise.

    Table comparisons stop at the printed depth of each table; the other
    two sources run through ``n_max``.
    """
    report = DiscrepancyReport()
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        table: Sequence[XPoly] = listing(family)
        closed = closed_sequence(family, n_max)
        solved = solver_sequence(family, n_max, trunc)
        for n in range(n_max + 1):
            if n < len(table):
                report.add(family, n, ("paper-listing", "closed-form"), table[n], closed[n])
                report.add(family, n, ("paper-listing", "solver"), table[n], solved[n])
            report.add(family, n, ("closed-form", "solver"), closed[n], solved[n])
    return report
