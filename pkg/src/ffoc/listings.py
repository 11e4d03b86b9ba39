"""Printed tables of the Abel, Laguerre, Laguerre (order 1) and Bernoulli
F-polynomials, transcribed verbatim (errors included).

These are data to be audited, not trusted values.
"""

from __future__ import annotations

from functools import lru_cache

from .exactring import XPoly

ABEL = (
    "1",
    "x",
    "x^2 + a*x",
    "x^3 - 4*a*x^2 + 6*a^2*x",
    "x^4 - 9*a*x^3 + 48*a^2*x^2 + 48*a^3*x",
    "x^5 - 20*a*x^4 + 225*a^2*x^3 - 750*a^3*x^2 + 625*a^4*x",
    "x^6 - 40*a*x^5 + 960*a^2*x^4 - 6480*a^3*x^3 + 17280*a^4*x^2 - 10368*a^5*x",
    "x^7 - 78*a*x^6 + 3640*a^2*x^5 - 50960*a^3*x^4 + 267540*a^4*x^3"
    " - 499408*a^5*x^2 + 218491*a^6*x",
    "x^8 - 147*a*x^7 + 131004*a^2*x^6 - 349440*a^3*x^5 + 3727360*a^4*x^4"
    " - 13418496*a^5*x^3 + 17891328*a^6*x^2 - 5505024*a^7*x",
)

LAGUERRE = (
    "1",
    "-x",
    "x^2 - 1/2*x",
    "-x^3 + 8/3*x^2 - 4/3*x",
    "x^4 - 27/4*x^3 + 18*x^2 - 9/2*x",
    "-x^5 + 20*x^4 - 135*x^3 + 180*x^2 - 30*x",
    "x^6 - 160/3*x^5 + 3200/3*x^4 - 3600*x^3 + 3200*x^2 - 320*x",
    "-x^7 + 13182/7*x^6 - 54080/7*x^5 + 540800/7*x^4 - 1216800/7*x^3"
    " + 648960/7*x^2 - 40560/7*x",
    "x^8 - 3087/8*x^7 + 223587/4*x^6 - 1498580*x^5 + 9937200*x^4"
    " - 13415220*x^3 + 4471740*x^2 - 171990*x",
)

LAGUERRE_ALPHA1 = (
    "1",
    "-x + 1",
    "x^2 - 2*x + 2",
    "-2*x^3 + 6*x^2 - 12*x + 6",
    "6*x^4 - 30*x^3 + 90*x^2 - 90*x + 30",
    "-30*x^5 + 240*x^4 - 1200*x^3 + 1800*x^2 - 1200*x + 240",
    "240*x^6 - 3120*x^5 + 24960*x^4 - 62400*x^3 + 62400*x^2 - 24960*x + 3120",
)

BERNOULLI = (
    "1",
    "x + 1",
    "x^2 + x + 1/2",
    "x^3 + 2*x^2 + x + 1/3",
    "x^4 + 3*x^3 + 3*x^2 + x + 1/5",
    "x^5 + 5*x^4 + 15/2*x^3 + 5*x^2 + x + 1/8",
    "x^6 + 8*x^5 + 20*x^4 + 20*x^3 + 8*x^2 + x + 1/13",
    "x^7 + 13*x^6 + 52*x^5 + 260/3*x^4 + 52*x^3 + 13*x^2 + x + 1/21",
    "x^8 + 21*x^7 + 273/2*x^6 + 364*x^5 + 364*x^4 + 273/2*x^3 + 21*x^2 + x + 1/36",
    "x^9 + 34*x^8 + 357*x^7 + 1547*x^6 + 12376/5*x^5 + 1547*x^4 + 357*x^3"
    " + 34*x^2 + x + 1/55",
)

RAW = {
    "abel": ABEL,
    "laguerre": LAGUERRE,
    "laguerre-alpha": LAGUERRE_ALPHA1,
    "bernoulli": BERNOULLI,
}


@lru_cache(maxsize=None)
def listing(family: str) -> tuple[XPoly, ...]:
    """Parsed table for ``family``; empty when nothing was printed."""
    return tuple(XPoly.parse(s) for s in RAW.get(family, ()))
