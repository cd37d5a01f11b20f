"""Exact power-series expansion of the rational generating functions.

Covers the univariate series for the 1s popularity and the total bit
count, and the bivariate series counting words by length and number of
1s, including the fixed-point check of its defining equation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import _check_k, max_ones
from .poly import IntPoly

DEFAULT_SERIES_LENGTH = 200


@dataclass(frozen=True)
class SeriesExpansion:
    numerator: IntPoly
    denominator: IntPoly
    coeffs: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


@dataclass(frozen=True)
class BivariateTruncation:
    """Table c[n][m] of avoider counts by length n and ones count m."""

    k: int
    max_n: int
    table: tuple[tuple[int, ...], ...]

    def __getitem__(self, nm: tuple[int, int]) -> int:
        n, m = nm
        row = self.table[n]
        return row[m] if 0 <= m < len(row) else 0


def expand(numerator: IntPoly, denominator: IntPoly, n_terms: int = DEFAULT_SERIES_LENGTH) -> SeriesExpansion:
    """First coefficients of numerator/denominator as a power series.

    Standard linear recurrence: with d0 = denominator constant term,
    d0 * c_n = numer_n - sum_{j>=1} denom_j * c_{n-j}.  Requires d0 in
    {1, -1} so every coefficient is an exact integer.
    """
    d0 = denominator[0]
    if d0 not in (1, -1):
        raise ValueError(
            f"denominator constant term must be +1 or -1, got {d0}"
        )
    coeffs: list[int] = []
    for n in range(n_terms + 1):
        acc = numerator[n]
        for j in range(1, min(n, denominator.degree) + 1):
            acc -= denominator[j] * coeffs[n - j]
        coeffs.append(acc * d0)
    return SeriesExpansion(numerator, denominator, tuple(coeffs))


def _trim(row: list[int]) -> list[int]:
    while row and row[-1] == 0:
        row.pop()
    return row


def expand_bivariate(k: int, max_n: int) -> BivariateTruncation:
    """Coefficients c[n][m] from the recursive word decomposition.

    Every avoider is either a run of fewer than k 1s, or such a run, a
    0, and a shorter avoider.  In series form F = A + B*F with
    A = sum_{i<k} x^i y^i and B = sum_{i<k} x^(i+1) y^i; since B has no
    constant term the fixed point determines each x-degree from the
    lower ones: c_n(y) = A_n(y) + sum_{i<k, i+1<=n} y^i * c_{n-i-1}(y).
    """
    _check_k(k)
    table: list[list[int]] = []
    for n in range(max_n + 1):
        row = [0] * (max_ones(n, k) + 1)
        if n < k:
            row[n] += 1  # the word 1^n
        for i in range(min(k, n)):
            prev = table[n - i - 1]
            for m, c in enumerate(prev):
                row[m + i] += c
        table.append(row)
    return BivariateTruncation(
        k=k, max_n=max_n, table=tuple(tuple(_trim(list(r))) for r in table)
    )


def expand_bivariate_closed_form(k: int, max_n: int) -> BivariateTruncation:
    """Same table from the closed-form rational expression.

    The closed form is y*(1 - (xy)^k) over y - x*y^2 - x*y + (xy)^(k+1);
    cancelling the common factor y gives numerator 1 - x^k y^k and
    denominator 1 - x - x*y + x^(k+1) y^k, whose constant term is 1, so
    the standard recurrence applies with coefficients that are integer
    polynomials in y:
        c_n = numer_n + (1 + y) c_{n-1} - y^k c_{n-k-1}.
    """
    _check_k(k)
    table: list[list[int]] = []
    for n in range(max_n + 1):
        row = [0] * (n + k + 1)
        if n == 0:
            row[0] += 1
        if n == k:
            row[k] -= 1
        if n >= 1:
            for m, c in enumerate(table[n - 1]):
                row[m] += c
                row[m + 1] += c
        if n >= k + 1:
            for m, c in enumerate(table[n - k - 1]):
                row[m + k] -= c
        table.append(_trim(row))
    return BivariateTruncation(
        k=k, max_n=max_n, table=tuple(tuple(r) for r in table)
    )


def check_functional_equation(k: int, max_n: int) -> bool:
    """True iff the closed form and the fixed-point expansion agree."""
    return (
        expand_bivariate(k, max_n).table
        == expand_bivariate_closed_form(k, max_n).table
    )
