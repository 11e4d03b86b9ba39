"""Fibonacci numbers, F-factorials and fibonomial coefficients.

All quantities are exact Python integers. A single module-level
:class:`FibTable` backs the free functions; build a private table if you
want isolation between threads.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "FibTable",
    "fib",
    "f_factorial",
    "f_falling",
    "fibonomial",
    "binet_nearest",
]


class FibTable:
    """Append-only memo of F_n and F_n!.

    Readers never see a partially written entry: the lists only grow, and
    growth happens under a lock.
    """

    def __init__(self) -> None:
        self.cache: list[int] = [0, 1, 1]
        self._fact: list[int] = [1, 1, 1]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            cache, fact = self.cache, self._fact
            while len(cache) <= n:
                cache.append(cache[-1] + cache[-2])
                fact.append(fact[-1] * cache[-1])

    def fib(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"negative index {n}")
        if n >= len(self.cache):
            self._extend(n)
        return self.cache[n]

    def f_factorial(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"negative index {n}")
        if n >= len(self._fact):
            self._extend(n)
        return self._fact[n]

    def f_falling(self, n: int, k: int) -> int:
        """F_n * F_{n-1} * ... * F_{n-k+1}."""
        if k < 0 or n < 0:
            raise ValueError(f"negative argument ({n}, {k})")
        if k > n:
            raise ValueError(f"falling F-factorial needs k <= n, got ({n}, {k})")
        if n >= len(self.cache):
            self._extend(n)
        out = 1
        for i in range(n - k + 1, n + 1):
            out *= self.cache[i]
        return out

    def fibonomial(self, n: int, k: int) -> int:
        if k < 0 or n < 0:
            raise ValueError(f"negative argument ({n}, {k})")
        if k > n:
            raise ValueError(f"fibonomial needs k <= n, got ({n}, {k})")
        num = self.f_factorial(n)
        den = self.f_factorial(k) * self.f_factorial(n - k)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"inexact fibonomial division at ({n}, {k})")
        return q


_TABLE = FibTable()


def fib(n: int) -> int:
    return _TABLE.fib(n)


def f_factorial(n: int) -> int:
    return _TABLE.f_factorial(n)


def f_falling(n: int, k: int) -> int:
    return _TABLE.f_falling(n, k)


def fibonomial(n: int, k: int) -> int:
    return _TABLE.fibonomial(n, k)


def binet_nearest(n: int) -> int:
    """Closest integer to phi**n / sqrt(5) in double precision.

    Only trustworthy up to n ~ 70; used as an independent cross-check of
    the recurrence, never as a source of values.
    """
    sqrt5 = math.sqrt(5.0)
    phi = (1.0 + sqrt5) / 2.0
    return round(phi**n / sqrt5)
