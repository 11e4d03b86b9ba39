"""The Fibonacci cobweb poset on a finite prefix ``{1..N}``.

Level ``k`` occupies ``F_{k+1} .. F_{k+2}-1`` (``F_k`` elements). Every
element of level ``k`` lies below every element of any higher level;
distinct elements of one level are incomparable.

Incidence functions are dense 1-based matrices of exact numbers (Python
``int`` or ``Fraction``). Three routes to the Mobius function are kept
deliberately separate so they can check each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Sequence

from .fibnum import f_factorial, f_falling, fib, fibonomial

DEFAULT_CHAIN_CAP = 8


class ObservationError(ArithmeticError):
    """A brute-force count disagreed with its closed-form prediction."""


def level_of(x: int) -> int:
    if x < 1:
        raise ValueError(f"cobweb elements are numbered from 1, got {x}")
    k = 1
    while fib(k + 2) - 1 < x:
        k += 1
    return k


def level_range(k: int) -> range:
    return range(fib(k + 1), fib(k + 2))


class CobwebPrefix:
    """The elements ``1..n_elements`` with their level structure."""

    def __init__(self, n_elements: int) -> None:
        if n_elements < 1:
            raise ValueError("prefix needs at least one element")
        self.n_elements = n_elements
        self.max_level = level_of(n_elements)

    @classmethod
    def through_level(cls, m: int) -> "CobwebPrefix":
        return cls(fib(m + 2) - 1)

    @property
    def complete(self) -> bool:
        return self.n_elements == fib(self.max_level + 2) - 1

    def level(self, k: int) -> range:
        r = level_range(k)
        return range(r.start, min(r.stop, self.n_elements + 1))

    def levels(self) -> list[range]:
        return [self.level(k) for k in range(1, self.max_level + 1)]

    def leq(self, x: int, y: int) -> bool:
        return zeta(x, y) == 1


# -- zeta ------------------------------------------------------------------


def zeta(x: int, y: int) -> int:
    if x > y:
        return 0
    if x == y:
        return 1
    return 0 if level_of(x) == level_of(y) else 1


def zeta_split(x: int, y: int) -> tuple[int, int]:
    """``(zeta1, zeta0)`` with ``zeta = zeta1 - zeta0``.

    zeta1 sums delta(x+k, y) over k >= 0; zeta0 picks pairs
    ``x = F_{s+1} + k``, ``y = x + r`` with ``1 <= r <= F_s - k - 1``.
    """
    z1 = 1 if y >= x else 0
    z0 = 0
    s = 1
    while fib(s + 1) <= x:
        k = x - fib(s + 1)
        r = y - x
        if 0 <= k and 1 <= r <= fib(s) - k - 1:
            z0 = 1
            break
        s += 1
    return z1, z0


class IncidenceFn:
    """``f(x, y)`` on ``{1..n}^2``, zero off the order relation."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[Rational]], check: bool = True) -> None:
        n = len(entries)
        rows = tuple(tuple(r) for r in entries)
        if any(len(r) != n for r in rows):
            raise ValueError("incidence matrix must be square")
        self.n = n
        self.entries = rows
        if check:
            for x in range(1, n + 1):
                for y in range(1, n + 1):
                    if rows[x - 1][y - 1] and not zeta(x, y):
                        raise ValueError(f"f({x},{y}) != 0 but {x} is not below {y}")

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], Rational]) -> "IncidenceFn":
        return cls([[f(x, y) for y in range(1, n + 1)] for x in range(1, n + 1)])

    @classmethod
    def delta(cls, n: int) -> "IncidenceFn":
        return cls.from_function(n, lambda x, y: int(x == y))

    def __getitem__(self, xy: tuple[int, int]) -> Rational:
        x, y = xy
        return self.entries[x - 1][y - 1]

    def row(self, x: int) -> tuple:
        return self.entries[x - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceFn):
            return NotImplemented
        return self.entries == other.entries

    def _zip(self, other: "IncidenceFn", op) -> "IncidenceFn":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch {self.n} != {other.n}")
        return IncidenceFn(
            [[op(a, b) for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            check=False,
        )

    def __add__(self, other: "IncidenceFn") -> "IncidenceFn":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "IncidenceFn") -> "IncidenceFn":
        return self._zip(other, lambda a, b: a - b)

    def __matmul__(self, other: "IncidenceFn") -> "IncidenceFn":
        return incidence_convolve(self, other)

    def __repr__(self) -> str:
        return f"IncidenceFn(n={self.n})"


def zeta_matrix(N: int) -> IncidenceFn:
    return IncidenceFn.from_function(N, zeta)


def incidence_convolve(f: IncidenceFn, g: IncidenceFn) -> IncidenceFn:
    """(f*g)(x,y) = sum over x <= z <= y; supports make it a triangular product."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch {f.n} != {g.n}")
    n = f.n
    F, G = f.entries, g.entries
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        Fx = F[x]
        for y in range(x, n):
            acc = 0
            for z in range(x, y + 1):
                a = Fx[z]
                if a:
                    b = G[z][y]
                    if b:
                        acc += a * b
            out[x][y] = acc
    return IncidenceFn(out, check=False)


# -- Mobius, three ways ------------------------------------------------------


def mobius_recurrence(N: int) -> IncidenceFn:
    """mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z)."""
    out = [[0] * N for _ in range(N)]
    for x in range(1, N + 1):
        row = out[x - 1]
        row[x - 1] = 1
        for y in range(x + 1, N + 1):
            if not zeta(x, y):
                continue
            acc = 0
            for z in range(x, y):
                if zeta(x, z) and zeta(z, y):
                    acc += row[z - 1]
            row[y - 1] = -acc
    return IncidenceFn(out, check=False)


def mobius_closed(x: int, y: int) -> int:
    if x > y:
        return 0
    if x == y:
        return 1
    k, n = level_of(x), level_of(y)
    if k == n:
        return 0
    if n == k + 1:
        return -1
    prod = 1
    for l in range(k + 1, n):
        prod *= 1 - fib(l)
    return -prod


def mobius_closed_matrix(N: int) -> IncidenceFn:
    return IncidenceFn.from_function(N, mobius_closed)


def mobius_invert(N: int) -> IncidenceFn:
    """Solve zeta * mu = delta column by column (unit upper triangular)."""
    Z = [[zeta(x, y) for y in range(1, N + 1)] for x in range(1, N + 1)]
    out = [[0] * N for _ in range(N)]
    for y in range(N):
        out[y][y] = 1
        for x in range(y - 1, -1, -1):
            acc = 0
            Zx = Z[x]
            for z in range(x + 1, y + 1):
                if Zx[z]:
                    acc += out[z][y]
            out[x][y] = -acc
    return IncidenceFn(out, check=False)


MOBIUS_METHODS = {
    "recurrence": mobius_recurrence,
    "closed": mobius_closed_matrix,
    "invert": mobius_invert,
}


def mobius(N: int, method: str = "recurrence") -> IncidenceFn:
    try:
        return MOBIUS_METHODS[method](N)
    except KeyError:
        raise ValueError(f"unknown Mobius method {method!r}") from None


# -- chain enumeration -------------------------------------------------------


@lru_cache(maxsize=16)
def _covers(N: int) -> tuple[tuple[int, ...], ...]:
    """Upper covers of each element, read off the zeta matrix alone."""
    Z = [[zeta(x, y) for y in range(1, N + 1)] for x in range(1, N + 1)]
    up: list[tuple[int, ...]] = [()]
    for x in range(N):
        above = [y for y in range(x + 1, N) if Z[x][y]]
        covers = [
            y for y in above
            if not any(Z[x][z] and Z[z][y] for z in range(x + 1, y))
        ]
        up.append(tuple(c + 1 for c in covers))
    return tuple(up)


def _count_dfs(start: int, top_level: int, cap: int) -> int:
    """Count saturated chains from ``start`` up to any element of ``top_level``."""
    if top_level > cap:
        raise ValueError(f"level {top_level} exceeds brute-force cap {cap}")
    N = fib(top_level + 2) - 1
    up = _covers(N)
    top = level_range(top_level)
    count = 0
    stack = [start]
    while stack:
        x = stack.pop()
        if x in top:
            count += 1
            continue
        stack.extend(up[x])
    return count


def count_max_chains_root(n_level: int, cap: int = DEFAULT_CHAIN_CAP) -> int:
    if n_level < 1:
        raise ValueError("levels are numbered from 1")
    count = _count_dfs(1, n_level, cap)
    if count != f_factorial(n_level):
        raise ObservationError(f"root chains to level {n_level}: {count} != {f_factorial(n_level)}")
    return count


def count_chains_between(k: int, n: int, cap: int = DEFAULT_CHAIN_CAP) -> int:
    """Chains from a level-``k`` element to level ``n``; checks every start."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({k}, {n})")
    expected = f_falling(n, n - k)
    counts = {_count_dfs(x, n, cap) for x in level_range(k)}
    if counts != {expected}:
        raise ObservationError(f"chains level {k} -> {n}: {sorted(counts)} != {expected}")
    return expected


def count_subposets(k: int, m: int, cap: int = DEFAULT_CHAIN_CAP) -> int:
    """Chain count from level k to k+m divided by m_F!."""
    if k < 1 or m < 1:
        raise ValueError(f"need k, m >= 1, got ({k}, {m})")
    n = k + m
    chains = count_chains_between(k, n, cap)
    q, r = divmod(chains, f_factorial(m))
    if r:
        raise ObservationError(f"{chains} chains not divisible by {m}_F! = {f_factorial(m)}")
    if q != fibonomial(n, m):
        raise ObservationError(f"subposet count {q} != fibonomial({n},{m})")
    return q


# -- rendering -------------------------------------------------------------


def _cell(v: Rational) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_matrix(m: IncidenceFn, style: str = "full", fmt: str = "text") -> str:
    """``full`` prints every entry; ``paper`` blanks the strict lower triangle."""
    if style not in ("full", "paper"):
        raise ValueError(f"unknown style {style!r}")
    sep = {"text": " ", "csv": ","}.get(fmt)
    if sep is None:
        raise ValueError(f"unknown matrix format {fmt!r}")
    lines = []
    for x, row in enumerate(m.entries):
        cells = [
            "" if style == "paper" and y < x else _cell(v) for y, v in enumerate(row)
        ]
        lines.append(sep.join(cells))
    return "\n".join(lines)


def parse_matrix_csv(text: str) -> IncidenceFn:
    rows = []
    for line in text.strip().splitlines():
        rows.append([Fraction(c) if c.strip() else 0 for c in line.split(",")])
    rows = [[int(v) if Fraction(v).denominator == 1 else v for v in r] for r in rows]
    return IncidenceFn(rows)
