"""Exact arithmetic foundation: rationals, Bernoulli numbers, divisor
power sums, binomial coefficients, and dense linear solving over Q.

Everything in this module is pure and exact; floats are rejected on
input and never produced.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

__all__ = [
    "Rational",
    "as_rational",
    "rational_str",
    "parse_rational",
    "bernoulli",
    "sigma",
    "binomial",
    "divisors",
    "solve_linear",
]

# Exact signed rational in lowest terms with positive denominator; the
# stdlib Fraction already guarantees both invariants.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; refuse floats outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(
            f"exact rational expected (int or Fraction), got {type(value).__name__}"
        )
    return Fraction(value)


def rational_str(value: Fraction) -> str:
    """Canonical "num/den" string used in all JSON output."""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of rational_str; also accepts a bare integer string."""
    return Fraction(text)


@lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    # B_0..B_n from the recurrence sum_{j<=m} C(m+1, j) B_j = 0 (m >= 1),
    # which fixes B_1 = -1/2 and hence B_2 = 1/6, B_4 = -1/30.
    values = [_ONE]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, j) * values[j] for j in range(m))
        values.append(Fraction(-acc, m + 1))
    return tuple(values)


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k for even k >= 2.

    The sign convention is the one under which -2k/B_k gives the familiar
    Eisenstein coefficients, e.g. -8/B_4 = 240.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError(f"bernoulli is defined here for even k >= 2, got {k}")
    return _bernoulli_upto(k)[k]


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma(j: int, n: int) -> int:
    """Sum of the j-th powers of the positive divisors of n."""
    if n < 1:
        raise ValueError(f"sigma requires n >= 1, got {n}")
    return sum(d**j for d in divisors(n))


def binomial(n: int, r: int) -> int:
    """Binomial coefficient with the out-of-range-zero convention."""
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def solve_linear(
    matrix: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
) -> Optional[list[Fraction]]:
    """Solve A x = b exactly over the rationals.

    Returns one exact solution with every free variable set to zero, or
    None when the system is inconsistent. Pivots are the first nonzero
    entry in each column: exact arithmetic needs no size heuristics and
    this keeps the output deterministic.
    """
    n_rows = len(matrix)
    if n_rows < 1:
        raise ValueError("matrix must have at least one row")
    n_cols = len(matrix[0])
    rows = []
    for row in matrix:
        if len(row) != n_cols:
            raise ValueError("matrix rows have inconsistent lengths")
        rows.append([as_rational(x) for x in row])
    if len(rhs) != n_rows:
        raise ValueError(
            f"rhs has length {len(rhs)}, expected {n_rows} (one per matrix row)"
        )
    b = [as_rational(x) for x in rhs]

    pivot_cols: list[int] = []
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        b[rank], b[pivot] = b[pivot], b[rank]
        inv = _ONE / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        b[rank] *= inv
        for r in range(n_rows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
                b[r] -= factor * b[rank]
        pivot_cols.append(col)
        rank += 1
        if rank == n_rows:
            break

    if any(b[r] != 0 for r in range(rank, n_rows)):
        return None
    solution = [_ZERO] * n_cols
    for i, col in enumerate(pivot_cols):
        solution[col] = b[i]
    return solution
