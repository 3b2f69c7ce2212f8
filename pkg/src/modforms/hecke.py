"""Hecke operators on weight-tagged q-expansions and Y-polynomial forms,
and the finite eigenform test.

The coefficient action used throughout is

    b_m = sum_{d | gcd(m, n)} d^(k-1) a_{m n / d^2},

the q-expansion form of the weight-k averaging operator. Its independent
correctness oracles are multiplicativity T_m T_n = T_{mn} for coprime
m, n and the prime-power recursion T_p T_{p^r} = T_{p^{r+1}} +
p^(k-1) T_{p^(r-1)}, both exercised by the test suite.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactmath import divisors, rational_str
from .nearly import YPolyForm
from .qseries import GradedSeries, PrecisionError, QSeries

__all__ = [
    "hecke",
    "hecke_nearly",
    "Violation",
    "EigenReport",
    "eigenform_test",
]


def _power(d: int, e: int) -> Union[int, Fraction]:
    # d^e for integer e of either sign; negative exponents arise on the
    # Y^r components once 2r + 1 exceeds the weight.
    if e >= 0:
        return d**e
    return Fraction(1, d**-e)


def _warn_if_shallow(prec: int, n: int) -> None:
    if prec < n:
        warnings.warn(
            f"T_{n} on a series of precision {prec} certifies only the constant term",
            stacklevel=3,
        )


def hecke(f: GradedSeries, n: int) -> GradedSeries:
    """Apply the n-th Hecke operator to a weight-tagged series.

    The result certifies floor(prec/n) coefficients and keeps the weight.
    """
    if n < 1:
        raise ValueError(f"Hecke operators are indexed by n >= 1, got {n}")
    _warn_if_shallow(f.prec, n)
    k = f.weight
    new_prec = f.prec // n
    out = []
    for m in range(new_prec + 1):
        g = math.gcd(m, n)  # m = 0 gives g = n
        total = Fraction(0)
        for d in divisors(g):
            total += _power(d, k - 1) * f[m * n // (d * d)]
        out.append(total)
    return GradedSeries(QSeries(out, prec=new_prec), k)


def hecke_nearly(form: YPolyForm, n: int) -> YPolyForm:
    """Apply T_n to a Y-polynomial form of weight k.

    On the Y^r component the action is

        b_m = n^r sum_{d | gcd(m, n)} d^(k-2r-1) a_{m n / d^2},

    which comes from Im((nz + bd)/d^2) = n Im(z) / d^2: averaging a
    Y^r term rescales it by (d^2/n)^r, shifting the effective weight of
    that component to k - 2r and contributing the n^r prefactor.
    """
    if n < 1:
        raise ValueError(f"Hecke operators are indexed by n >= 1, got {n}")
    _warn_if_shallow(form.prec, n)
    k = form.weight
    new_prec = form.prec // n
    comps = []
    for r in range(form.depth + 1):
        series = form.component(r)
        scale = n**r
        out = []
        for m in range(new_prec + 1):
            g = math.gcd(m, n)  # m = 0 gives g = n
            total = Fraction(0)
            for d in divisors(g):
                total += _power(d, k - 2 * r - 1) * series[m * n // (d * d)]
            out.append(scale * total)
        comps.append(QSeries(out, prec=new_prec))
    return YPolyForm(comps, k)


@dataclass(frozen=True)
class Violation:
    """First coefficient at which T_n f fails to be lambda_n * f."""

    n: int
    exponent: int
    expected: Fraction
    actual: Fraction
    y_power: Optional[int] = None

    def to_json_dict(self) -> dict:
        data = {
            "n": self.n,
            "exponent": self.exponent,
            "expected": rational_str(self.expected),
            "actual": rational_str(self.actual),
        }
        if self.y_power is not None:
            data["y_power"] = self.y_power
        return data


@dataclass(frozen=True)
class EigenReport:
    """Outcome of the finite eigenform test.

    A passing verdict certifies T_n f = lambda_n f on every comparable
    coefficient for all n up to the bound; it is a necessary condition,
    never a proof for all n.
    """

    is_eigen_up_to_bound: bool
    tested_bound: int
    eigenvalues: tuple[tuple[int, Fraction], ...]
    first_violation: Optional[Violation]
    precision_used: int
    min_comparison_prec: int

    def eigenvalue(self, n: int) -> Fraction:
        for m, lam in self.eigenvalues:
            if m == n:
                return lam
        raise KeyError(f"no eigenvalue recorded for n = {n}")

    def to_json_dict(self) -> dict:
        return {
            "is_eigen_up_to_bound": self.is_eigen_up_to_bound,
            "tested_bound": self.tested_bound,
            "eigenvalues": [[n, rational_str(lam)] for n, lam in self.eigenvalues],
            "first_violation": (
                self.first_violation.to_json_dict() if self.first_violation else None
            ),
            "precision_used": self.precision_used,
            "min_comparison_prec": self.min_comparison_prec,
        }


def eigenform_test(
    f: Union[GradedSeries, YPolyForm], bound: int = 10, window: int = 12
) -> EigenReport:
    """Check whether f is a simultaneous T_n eigenvector for n <= bound.

    lambda_n is read off at the first nonzero coefficient of f, then
    T_n f = lambda_n f is compared on every coefficient the shrunk
    precision floor(prec/n) certifies (all Y-components for Y-polynomial
    inputs, so a form with both a_0 and a_1 nonzero has the consistency
    of the two candidate ratios checked automatically). The input must
    carry at least bound*window coefficients so that even T_bound leaves
    a window of length >= window.
    """
    if bound < 1:
        raise ValueError("the test needs a bound >= 1")
    is_ypoly = isinstance(f, YPolyForm)
    comps = f.components if is_ypoly else (f.series,)
    prec = comps[0].prec
    if prec < bound * window:
        raise PrecisionError(
            f"eigenform test with bound {bound} and window {window} needs "
            f"precision >= {bound * window}, have {prec}"
        )

    first = None
    for m in range(prec + 1):
        for r, comp in enumerate(comps):
            if comp[m] != 0:
                first = (m, r)
                break
        if first:
            break
    if first is None:
        raise ValueError("the zero form is not an eigenform candidate")
    m0, r0 = first
    leading = comps[r0][m0]

    depth = len(comps) - 1
    eigenvalues: list[tuple[int, Fraction]] = []
    for n in range(1, bound + 1):
        transformed = hecke_nearly(f, n) if is_ypoly else hecke(f, n)
        tcomps = transformed.components if is_ypoly else (transformed.series,)
        cprec = tcomps[0].prec

        def tcoeff(r: int, m: int) -> Fraction:
            return tcomps[r][m] if r < len(tcomps) else Fraction(0)

        if m0 > cprec:
            continue
        lam = tcoeff(r0, m0) / leading
        violation = None
        for m in range(cprec + 1):
            for r in range(depth + 1):
                expected = lam * comps[r][m]
                actual = tcoeff(r, m)
                if expected != actual:
                    violation = Violation(
                        n=n,
                        exponent=m,
                        expected=expected,
                        actual=actual,
                        y_power=r if is_ypoly else None,
                    )
                    break
            if violation:
                break
        if violation:
            return EigenReport(
                False,
                bound,
                tuple(eigenvalues),
                violation,
                prec,
                prec // bound,
            )
        eigenvalues.append((n, lam))
    return EigenReport(True, bound, tuple(eigenvalues), None, prec, prec // bound)
