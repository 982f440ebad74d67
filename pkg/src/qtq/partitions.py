"""Young diagrams, arm/leg statistics, enumeration and Gaussian binomials.

Box convention: a box is ``(i, j)`` where ``j`` indexes the row and ``i`` is
the position inside row ``j``. ``rows[j]`` is the length of row ``j``, and
the column height ``c_i`` is the number of rows longer than ``i``. With this,

    leg(Y, (i, j)) = rows[j] - i - 1        (boxes to the right in the row)
    arm(Y, (i, j)) = cols[i] - j - 1        (boxes above in the column)

and both are negative for boxes far enough outside ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from .qt_algebra import ONE, ZERO, QPoly, TSeries

Box = tuple[int, int]


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, *rows: int) -> "YoungDiagram":
        return cls(tuple(rows))

    @cached_property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def cols(self) -> tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > i) for i in range(self.rows[0]))

    def row(self, j: int) -> int:
        return self.rows[j] if 0 <= j < len(self.rows) else 0

    def col(self, i: int) -> int:
        c = self.cols
        return c[i] if 0 <= i < len(c) else 0

    def boxes(self) -> Iterator[Box]:
        for j, r in enumerate(self.rows):
            for i in range(r):
                yield (i, j)

    def __contains__(self, s: Box) -> bool:
        i, j = s
        return i >= 0 and j >= 0 and i < self.row(j)

    def transpose(self) -> "YoungDiagram":
        return YoungDiagram(self.cols)

    def to_json(self) -> list[int]:
        return list(self.rows)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "YoungDiagram":
        return cls(tuple(data))

    def __repr__(self) -> str:
        return f"YoungDiagram({list(self.rows)})"


# A partition is the same object read as lambda_1 >= lambda_2 >= ...
Partition = YoungDiagram
EMPTY = YoungDiagram()


def leg(Y: YoungDiagram, s: Box) -> int:
    i, j = s
    return Y.row(j) - i - 1


def arm(Y: YoungDiagram, s: Box) -> int:
    i, j = s
    return Y.col(i) - j - 1


def hook_length(Y: YoungDiagram, s: Box) -> int:
    return leg(Y, s) + arm(Y, s) + 1


def _check_coprime(alpha: int, beta: int) -> None:
    if alpha < 1 or beta < 1:
        raise ValueError(f"alpha and beta must be positive, got {alpha}, {beta}")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha={alpha} and beta={beta} are not coprime")


def theorem2_statistic(Y: YoungDiagram, alpha: int, beta: int) -> int:
    """Number of boxes with ``alpha * leg == beta * (arm + 1)``."""
    _check_coprime(alpha, beta)
    return sum(1 for s in Y.boxes() if alpha * leg(Y, s) == beta * (arm(Y, s) + 1))


def hook_residue_count(Y: YoungDiagram, m: int) -> int:
    """Number of boxes whose hook length is divisible by ``m``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return sum(1 for s in Y.boxes() if hook_length(Y, s) % m == 0)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@lru_cache(maxsize=64)
def _diagrams(n: int) -> tuple[YoungDiagram, ...]:
    return tuple(YoungDiagram(p) for p in _partitions(n, n))


def enumerate_diagrams(n: int) -> Iterator[YoungDiagram]:
    """All diagrams of size ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        return iter(())
    return iter(_diagrams(n))


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in _compositions(n - k, r - 1):
            yield (k,) + rest


def enumerate_tuples(r: int, n: int) -> Iterator[tuple[YoungDiagram, ...]]:
    """All ``r``-tuples of diagrams with total size ``n``.

    Compositions of ``n`` are visited in lexicographic order and within each
    composition tuples come in product order of :func:`enumerate_diagrams`.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    for sizes in _compositions(n, r):
        yield from product(*(_diagrams(k) for k in sizes))


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total, g = 0, 1
        while g * (3 * g - 1) // 2 <= k:
            sign = 1 if g % 2 else -1
            total += sign * p[k - g * (3 * g - 1) // 2]
            if g * (3 * g + 1) // 2 <= k:
                total += sign * p[k - g * (3 * g + 1) // 2]
            g += 1
        p[k] = total
    return p[n]


@lru_cache(maxsize=None)
def q_binomial(M: int, N: int) -> QPoly:
    """Gaussian binomial ``[M choose N]_q`` via the q-Pascal rule; zero out of range."""
    if N < 0 or M < 0 or N > M:
        return ZERO
    if N == 0 or N == M:
        return ONE
    return q_binomial(M - 1, N - 1) + q_binomial(M - 1, N).shift(N)


def theorem3_term(lam: Partition) -> tuple[QPoly, int]:
    """Product of Gaussian binomials attached to ``lam`` and its t-exponent.

    The product over ``i >= 1`` of ``[lam_i - lam_{i+2} + 1, lam_{i+1} - lam_{i+2}]_q``
    stops once ``lam_i`` is zero, after which every factor is ``[1, 0] = 1``.
    """
    parts = lam.rows

    def part(i: int) -> int:  # 1-based, zero past the end
        return parts[i - 1] if i <= len(parts) else 0

    poly = ONE
    i = 1
    while part(i) > 0:
        top = part(i) - part(i + 2) + 1
        bottom = part(i + 1) - part(i + 2)
        poly = poly * q_binomial(top, bottom)
        i += 1
    first = part(1)
    return poly, first * (first - 1) // 2 + lam.size


def iarrobino_series(order: int) -> TSeries:
    """Sum of ``x**(lam_1 (lam_1 - 1)/2 + |lam|)`` over partitions, truncated.

    The series variable is stored in the ``t`` slot of a :class:`TSeries`
    with constant coefficients.
    """
    counts = [0] * (order + 1)
    for n in range(order + 1):
        for lam in _diagrams(n):
            first = lam.rows[0] if lam.rows else 0
            e = first * (first - 1) // 2 + n
            if e <= order:
                counts[e] += 1
    return TSeries.from_list(counts, order)
