"""Truncated q-expansions with exact rational coefficients.

A series carries an explicit precision: coefficients are certified for
exponents 0..prec and nothing beyond. All arithmetic returns the
tightest provable precision (the min of the inputs), so a wrong tail
coefficient can never be claimed silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

from .exactmath import as_rational, rational_str

__all__ = [
    "PrecisionError",
    "QSeries",
    "GradedSeries",
    "mul_reference",
    "first_difference",
]

_ZERO = Fraction(0)


class PrecisionError(ValueError):
    """An operation was asked to certify more coefficients than it can."""


def _rescaled_ints(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    # Clear denominators once so the convolution runs on plain ints.
    den = lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class QSeries:
    """The truncated expansion sum_{m<=prec} a_m q^m over exact rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, prec: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if prec is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit prec")
            prec = len(cs) - 1
        if prec < 0:
            raise ValueError("prec must be >= 0")
        if len(cs) < prec + 1:
            cs.extend([_ZERO] * (prec + 1 - len(cs)))
        self._coeffs = tuple(cs[: prec + 1])

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls([0], prec=prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls([1], prec=prec)

    @classmethod
    def constant(cls, value, prec: int) -> "QSeries":
        return cls([value], prec=prec)

    @property
    def prec(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, m: int) -> Fraction:
        if not 0 <= m <= self.prec:
            raise IndexError(
                f"coefficient of q^{m} is outside the certified precision {self.prec}"
            )
        return self._coeffs[m]

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for m, c in enumerate(self._coeffs):
            if c != 0:
                return m
        return None

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise PrecisionError(
                f"cannot extend precision {self.prec} to {prec} without new data"
            )
        return QSeries(self._coeffs[: prec + 1])

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return QSeries(
            [a + b for a, b in zip(self._coeffs, other._coeffs)], prec=prec
        )

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return QSeries(
            [a - b for a, b in zip(self._coeffs, other._coeffs)], prec=prec
        )

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            prec = min(self.prec, other.prec)
            a, da = _rescaled_ints(self._coeffs[: prec + 1])
            b, db = _rescaled_ints(other._coeffs[: prec + 1])
            den = da * db
            out = [
                Fraction(sum(a[i] * b[m - i] for i in range(m + 1)), den)
                for m in range(prec + 1)
            ]
            return QSeries(out)
        scalar = as_rational(other)
        return QSeries([c * scalar for c in self._coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "QSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers require a nonnegative integer exponent")
        result = QSeries.one(self.prec)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    # -- calculus and normalization ---------------------------------------

    def derivative(self) -> "QSeries":
        """Apply q d/dq: the coefficient of q^m becomes m*a_m."""
        return QSeries([m * c for m, c in enumerate(self._coeffs)])

    def normalize(self) -> tuple["QSeries", Fraction]:
        """Divide by the first nonzero coefficient c; returns (f/c, c)."""
        v = self.valuation()
        if v is None:
            raise ValueError("cannot normalize the zero series")
        c = self._coeffs[v]
        return self * (Fraction(1) / c), c

    # -- serialization and display ---------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "prec": self.prec,
            "coeffs": [rational_str(c) for c in self._coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        return cls([Fraction(s) for s in data["coeffs"]], prec=data["prec"])

    def __str__(self) -> str:
        return f"{_format_terms(self._coeffs)} + O(q^{self.prec + 1})"

    def __repr__(self) -> str:
        return f"QSeries(prec={self.prec}, {_format_terms(self._coeffs, max_terms=6)})"


def mul_reference(f: QSeries, g: QSeries) -> QSeries:
    """Schoolbook Cauchy product over Fractions.

    Oracle for the integer-rescaled product in QSeries.__mul__; the two
    must agree bit for bit.
    """
    prec = min(f.prec, g.prec)
    out = []
    for m in range(prec + 1):
        out.append(sum((f[i] * g[m - i] for i in range(m + 1)), _ZERO))
    return QSeries(out, prec=prec)


def first_difference(f: QSeries, g: QSeries) -> Optional[int]:
    """Smallest exponent where f and g disagree on their common precision."""
    prec = min(f.prec, g.prec)
    for m in range(prec + 1):
        if f[m] != g[m]:
            return m
    return None


def _format_terms(coeffs, max_terms: int | None = None) -> str:
    parts: list[str] = []
    shown = 0
    for m, c in enumerate(coeffs):
        if c == 0:
            continue
        if max_terms is not None and shown == max_terms:
            parts.append("+ ...")
            break
        shown += 1
        mag = abs(c)
        coeff_txt = (
            str(mag.numerator) if mag.denominator == 1 else f"({mag.numerator}/{mag.denominator})"
        )
        if m == 0:
            body = coeff_txt
        else:
            power = "q" if m == 1 else f"q^{m}"
            body = power if mag == 1 else f"{coeff_txt}*{power}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


class GradedSeries:
    """A q-expansion tagged with its weight.

    Catalog forms carry even weights; intermediate products may carry any
    nonnegative weight (the sum of their factors' weights). Addition
    requires equal weights, multiplication adds them, and the derivative
    raises the weight by 2.
    """

    __slots__ = ("_series", "_weight")

    def __init__(self, series: QSeries, weight: int):
        if not isinstance(series, QSeries):
            raise TypeError("GradedSeries wraps a QSeries")
        if not isinstance(weight, int) or weight < 0:
            raise ValueError(f"weight must be a nonnegative integer, got {weight}")
        self._series = series
        self._weight = weight

    @property
    def series(self) -> QSeries:
        return self._series

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def prec(self) -> int:
        return self._series.prec

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._series.coeffs

    def __getitem__(self, m: int) -> Fraction:
        return self._series[m]

    def is_zero(self) -> bool:
        return self._series.is_zero()

    def valuation(self) -> Optional[int]:
        return self._series.valuation()

    def truncate(self, prec: int) -> "GradedSeries":
        return GradedSeries(self._series.truncate(prec), self._weight)

    def __add__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if self._weight != other._weight:
            raise ValueError(
                f"cannot add forms of weights {self._weight} and {other._weight}"
            )
        return GradedSeries(self._series + other._series, self._weight)

    def __sub__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if self._weight != other._weight:
            raise ValueError(
                f"cannot subtract forms of weights {self._weight} and {other._weight}"
            )
        return GradedSeries(self._series - other._series, self._weight)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(-self._series, self._weight)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return GradedSeries(
                self._series * other._series, self._weight + other._weight
            )
        scalar = as_rational(other)
        return GradedSeries(self._series * scalar, self._weight)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "GradedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("form powers require a nonnegative integer exponent")
        return GradedSeries(self._series**exponent, self._weight * exponent)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self._weight == other._weight and self._series == other._series

    __hash__ = None

    def derivative(self) -> "GradedSeries":
        """q d/dq, which sends weight k to weight k+2."""
        return GradedSeries(self._series.derivative(), self._weight + 2)

    def normalize(self) -> tuple["GradedSeries", Fraction]:
        series, c = self._series.normalize()
        return GradedSeries(series, self._weight), c

    def to_json_dict(self) -> dict:
        return {"weight": self._weight, "series": self._series.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GradedSeries":
        return cls(QSeries.from_json_dict(data["series"]), data["weight"])

    def __str__(self) -> str:
        return f"[weight {self._weight}] {self._series}"

    def __repr__(self) -> str:
        return (
            f"GradedSeries(weight={self._weight}, prec={self.prec}, "
            f"{_format_terms(self.coeffs, max_terms=6)})"
        )
