from fractions import Fraction

import pytest
import sympy

from ffoc.exactring import ParamPoly, XPoly
from ffoc.families import (
    PolySequence,
    abel_closed,
    basic_sequence,
    bernoulli_closed,
    bernoulli_s,
    hermite_closed,
    hermite_s,
    laguerre_alpha_closed,
    laguerre_basic_closed,
    sheffer_sequence,
    verify_families,
)
from ffoc.fibnum import f_factorial, fib
from ffoc.operators import OpSeries, abel, apply_op, d_f, delta_f, identity, laguerre, nabla_f, op_invert

x = XPoly.x()
a = ParamPoly.gen()
P = XPoly.parse
N = 12

OPERATORS = {
    "dF": d_f(N),
    "deltaF": delta_f(N),
    "nablaF": nabla_f(N),
    "abel": abel(None, N),
    "laguerre": laguerre(N),
}


def sympy_basic(Q: OpSeries, n_max: int):
    """Solve the basic conditions with sympy's generic linear solver."""
    X, A = sympy.symbols("x a")

    def dF(expr):
        poly = sympy.Poly(sympy.expand(expr), X)
        return sum(c * sympy.fibonacci(j) * X ** (j - 1)
                   for (j,), c in poly.terms() if j > 0)

    def apply(expr):
        out, d = 0, expr
        for k in range(n_max + 1):
            c = Q.coeff(k)
            out += sum(sympy.Rational(v.numerator, v.denominator) * A**i for i, v in enumerate(c.coeffs)) * d
            d = dF(d) if d != 0 else 0
        return sympy.expand(out)

    seq = [sympy.Integer(1)]
    for n in range(1, n_max + 1):
        bs = sympy.symbols(f"b1:{n + 1}")
        q = sum(b * X ** (j + 1) for j, b in enumerate(bs))
        eqs = sympy.Poly(apply(q) - sympy.fibonacci(n) * seq[-1], X).all_coeffs()
        sol = sympy.solve(eqs, bs, dict=True)[0]
        seq.append(sympy.expand(q.subs(sol)))
    return seq


def to_sympy(p: XPoly):
    X, A = sympy.symbols("x a")
    return sum(sympy.Rational(c.numerator, c.denominator) * A**i * X**j
               for j, pp in enumerate(p.coeffs) for i, c in enumerate(pp.coeffs))


@pytest.mark.parametrize("name", ["dF", "deltaF", "abel", "laguerre"])
def test_solver_matches_sympy(name):
    Q = OPERATORS[name]
    expected = sympy_basic(Q, 6)
    got = basic_sequence(Q, 6)
    for p, e in zip(got, expected):
        assert sympy.expand(to_sympy(p) - e) == 0


def test_basic_examples():
    assert list(basic_sequence(d_f(8), 8)) == [x**n for n in range(9)]
    q = basic_sequence(abel(None, 6), 3)
    assert q[2] == P("x^2 - a*x")
    assert q[3] == P("x^3 - 4*a*x^2 + 2*a^2*x")


@pytest.mark.parametrize("name", sorted(OPERATORS))
def test_basic_conditions(name):
    Q = OPERATORS[name]
    q = basic_sequence(Q, N)
    assert q[0] == 1
    for n in range(1, N + 1):
        assert q[n].at_x(0).is_zero()
        assert q[n].degree == n
        assert apply_op(Q, q[n]) == q[n - 1].scale(fib(n))


def test_basic_sequence_is_unique():
    q1 = basic_sequence(abel(None, 10), 10)
    q2 = basic_sequence(abel(None, 20), 10)
    assert q1.terms == q2.terms == basic_sequence(abel(None, 10), 10).terms


def test_basic_sequence_rejects():
    with pytest.raises(ValueError):
        basic_sequence(identity(), 4)
    with pytest.raises(ValueError):
        basic_sequence(d_f(3), 5)
    with pytest.raises(ValueError):
        basic_sequence(OpSeries((0, a)), 3)


def test_polysequence_invariants():
    with pytest.raises(ValueError):
        PolySequence((XPoly.const(1), x**2), "closed-form")
    with pytest.raises(ValueError):
        PolySequence((XPoly.const(1), x + 1), "basic")


def test_sheffer_identity_gives_basic():
    assert sheffer_sequence(abel(None, 8), identity(8), 8).terms == basic_sequence(abel(None, 8), 8).terms


@pytest.mark.parametrize("S", [hermite_s(N), bernoulli_s(N)], ids=["hermite", "bernoulli"])
def test_sheffer_condition(S):
    s = sheffer_sequence(d_f(N), S, N)
    assert s[0].degree == 0 and s[0]
    for n in range(1, N + 1):
        assert apply_op(d_f(N), s[n]) == s[n - 1].scale(fib(n))


def test_bernoulli_sheffer_value():
    assert sheffer_sequence(d_f(8), bernoulli_s(8), 8)[2] == P("x^2 + x + 1/2")


def test_bernoulli_closed_is_quotient_operator():
    quotient = OpSeries([Fraction(1, f_factorial(j + 1)) for j in range(N + 1)], N)
    for n in range(N + 1):
        assert bernoulli_closed(n) == apply_op(quotient, x**n)


def test_hermite_closed_agrees_with_exact_inverse_only_to_degree_3():
    s = sheffer_sequence(d_f(N), hermite_s(N), N)
    for n in range(4):
        assert hermite_closed(n) == s[n]
    # the printed closed form expands exp_F{-a dF^2/2}, which is not the
    # inverse of exp_F{a dF^2/2} once dF^4 terms enter
    assert hermite_closed(4) == P("x^4 - 3*a*x^2 + 3/2*a^2")
    assert s[4] == P("x^4 - 3*a*x^2")


def test_hermite_closed_is_exp_of_negative_parameter():
    coeffs = [ParamPoly()] * (N + 1)
    for k in range(N // 2 + 1):
        coeffs[2 * k] = (-a / 2) ** k / f_factorial(k)
    neg = OpSeries(coeffs, N)
    for n in range(N + 1):
        h = hermite_closed(n)
        assert h == apply_op(neg, x**n)
        if n:
            assert apply_op(d_f(N), h) == hermite_closed(n - 1).scale(fib(n))


def test_hermite_s_inverse_vanishes_at_dF4():
    inv = op_invert(hermite_s(8))
    assert inv.coeff(2) == -a / 2
    assert inv.coeff(4).is_zero()


@pytest.mark.parametrize("n, text", [(0, "1"), (2, "x^2 - a*x"), (3, "x^3 - 4*a*x^2 + 6*a^2*x")])
def test_abel_closed(n, text):
    assert abel_closed(n) == P(text)


@pytest.mark.parametrize("n, text", [(1, "-x"), (2, "x^2 - 1/2*x"), (3, "-x^3 + 8/3*x^2 - 4/3*x")])
def test_laguerre_basic_closed(n, text):
    assert laguerre_basic_closed(n) == P(text)


@pytest.mark.parametrize("n, text", [(0, "1"), (1, "x"), (2, "x^2 - 1/2*a")])
def test_hermite_closed(n, text):
    assert hermite_closed(n) == P(text)


@pytest.mark.parametrize("n, text", [(0, "1"), (1, "-x + 1"), (2, "x^2 - 2*x + 2")])
def test_laguerre_alpha_closed(n, text):
    assert laguerre_alpha_closed(n, 1) == P(text)


def test_laguerre_alpha_rejects_negative():
    with pytest.raises(ValueError):
        laguerre_alpha_closed(2, -1)


@pytest.mark.parametrize("n, text", [(0, "1"), (2, "x^2 + x + 1/2"), (3, "x^3 + 2*x^2 + x + 1/3")])
def test_bernoulli_closed(n, text):
    assert bernoulli_closed(n) == P(text)


def test_verify_finds_abel_entries():
    r = verify_families(8, ["abel"])
    e = r.find("abel", 2, ("paper-listing", "closed-form"))
    assert (str(e.lhs), str(e.rhs), str(e.diff)) == ("x^2 + a*x", "x^2 - a*x", "2*a*x")
    e3 = r.find("abel", 3, ("closed-form", "solver"))
    assert e3.diff == P("4*a^2*x")
    assert all(e.diff for e in r.entries)


def test_verify_bernoulli_construction_agrees():
    r = verify_families(12, ["bernoulli"])
    assert not [e for e in r.entries if e.source_pair == ("closed-form", "solver")]


def test_verify_rejects_unknown_family():
    with pytest.raises(ValueError):
        verify_families(4, ["chebyshev"])


def test_report_is_deterministic():
    assert verify_families(9).to_json() == verify_families(9).to_json()
