"""Exact finite fibonomial operator calculus.

Submodules: ``fibnum`` (Fibonacci arithmetic), ``exactring`` (Q[a] and
polynomials over it), ``operators`` (series in the F-derivative),
``families`` (basic/Sheffer sequences and the table audit), ``cobweb``
(the cobweb poset and its incidence algebra), ``cli``.
"""

from .exactring import ParamPoly, XPoly
from .fibnum import f_factorial, f_falling, fib, fibonomial

__version__ = "0.1.0"

__all__ = ["ParamPoly", "XPoly", "fib", "f_factorial", "f_falling", "fibonomial"]
