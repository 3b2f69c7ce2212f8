"""Tests for the exact arithmetic layer."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from modforms.exactmath import (
    bernoulli,
    binomial,
    divisors,
    parse_rational,
    rational_str,
    sigma,
    solve_linear,
)

# Independent table of Bernoulli numbers (even index), frozen from the
# classical values; the implementation must reproduce them exactly.
BERNOULLI_TABLE = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}


class TestBernoulli:
    @pytest.mark.parametrize("k,expected", sorted(BERNOULLI_TABLE.items()))
    def test_table(self, k, expected):
        assert bernoulli(k) == expected

    def test_sign_convention_matches_eisenstein_normalization(self):
        # -2k/B_k at k = 4 must be the familiar 240.
        assert -Fraction(8) / bernoulli(4) == 240

    @pytest.mark.parametrize("k", [0, -2, 3, 7, 1])
    def test_domain_errors(self, k):
        with pytest.raises(ValueError):
            bernoulli(k)

    def test_von_staudt_clausen_denominators(self):
        # denominator of B_k is the product of primes p with (p-1) | k
        def primes_upto(n):
            out = []
            for p in range(2, n + 1):
                if all(p % q for q in out):
                    out.append(p)
            return out

        for k in range(2, 31, 2):
            expected = 1
            for p in primes_upto(k + 1):
                if k % (p - 1) == 0:
                    expected *= p
            assert bernoulli(k).denominator == expected, k


class TestSigma:
    def test_known_values(self):
        assert sigma(1, 6) == 12
        assert sigma(3, 2) == 9
        assert sigma(7, 2) == 129
        assert sigma(0, 12) == 6
        assert sigma(5, 1) == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            sigma(1, 0)
        with pytest.raises(ValueError):
            sigma(2, -3)

    def test_multiplicative_on_coprime_arguments(self):
        from math import gcd

        for j in (1, 3):
            for m in range(1, 51):
                for n in range(1, 51):
                    if gcd(m, n) == 1:
                        assert sigma(j, m * n) == sigma(j, m) * sigma(j, n)

    def test_divisors_ordering(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]
        with pytest.raises(ValueError):
            divisors(0)


class TestBinomial:
    def test_known_values(self):
        assert binomial(5, 2) == 10
        assert binomial(4, 0) == 1
        assert binomial(10, 10) == 1

    def test_out_of_range_is_zero(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0
        assert binomial(0, 1) == 0


class TestSolveLinear:
    def test_identity_system(self):
        assert solve_linear([[1, 0], [0, 1]], [3, 4]) == [3, 4]

    def test_free_variable_zeroed(self):
        assert solve_linear([[1, 1]], [2]) == [2, 0]

    def test_inconsistent(self):
        assert solve_linear([[1], [1]], [1, 2]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_linear([[1, 2]], [1, 2])
        with pytest.raises(ValueError):
            solve_linear([[1, 2], [1]], [1, 2])
        with pytest.raises(ValueError):
            solve_linear([], [])

    def test_rectangular_overdetermined(self):
        # consistent overdetermined system
        matrix = [[1, 1], [1, -1], [2, 0]]
        assert solve_linear(matrix, [3, 1, 4]) == [2, 1]

    def test_rational_entries(self):
        sol = solve_linear([[Fraction(1, 2), 0], [0, 3]], [1, Fraction(1, 3)])
        assert sol == [2, Fraction(1, 9)]

    def test_random_roundtrip(self):
        rng = random.Random(20240811)
        for _ in range(25):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            matrix = [
                [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(cols)]
                for _ in range(rows)
            ]
            x = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(cols)]
            rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
            solved = solve_linear(matrix, rhs)
            assert solved is not None
            for row, target in zip(matrix, rhs):
                assert sum(a * b for a, b in zip(row, solved)) == target

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            solve_linear([[0.5]], [1])


def test_rational_string_roundtrip():
    assert rational_str(Fraction(-24)) == "-24/1"
    assert parse_rational("-24/1") == -24
    assert parse_rational("5") == 5
    assert parse_rational(rational_str(Fraction(22, 7))) == Fraction(22, 7)
