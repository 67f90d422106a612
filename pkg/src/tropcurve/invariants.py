"""Curve counts by recursion, invariant tables, and bound checks.

The count of rational degree-d plane curves through 3d - 1 generic points
satisfies, for d >= 2,

    N_d = sum over a + b = d (a, b >= 1) of
          N_a * N_b * (a^2 b^2 C(3d-4, 3a-2) - a^3 b C(3d-4, 3a-1)),

with N_1 = 1.  The sum runs over ordered pairs; the two orders of a split
contribute differently.  This recursion is the independent cross-check for
the lattice-path totals, and everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadDegreeError, CrossCheckMismatchError, EmptyTableError, NegativeNError
from .paths import ORDER_XEY, count_both


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k outside 0..n; n must be nonnegative."""
    if n < 0:
        raise NegativeNError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise BadDegreeError(f"degree must be a positive integer, got {d!r}")


@lru_cache(maxsize=None)
def km_count(d: int) -> int:
    """Rational plane curve count N_d by the Kontsevich-Manin recursion."""
    _check_degree(d)
    if d == 1:
        return 1
    total = 0
    for a in range(1, d):
        b = d - a
        term = a * a * b * b * binomial(3 * d - 4, 3 * a - 2)
        term -= a * a * a * b * binomial(3 * d - 4, 3 * a - 1)
        total += km_count(a) * km_count(b) * term
    return total


def factorial_bound_check(d: int, w: int) -> bool:
    """True iff 3*w >= d! (the real-count lower bound), exactly."""
    _check_degree(d)
    return 3 * w >= math.factorial(d)


@dataclass(frozen=True)
class TableRow:
    d: int
    n_paths: int
    n_recursion: int
    w: int
    bound_ok: bool
    dominance_ok: bool
    parity_ok: bool


@dataclass(frozen=True)
class InvariantTable:
    rows: tuple[TableRow, ...]


def build_table(dmax: int, order: str = ORDER_XEY) -> InvariantTable:
    """Per-degree counts from both methods with consistency flags.

    Fails fast with CrossCheckMismatchError when the path total and the
    recursion disagree; that is an internal error, never a data condition.
    """
    _check_degree(dmax)
    rows = []
    for d in range(1, dmax + 1):
        n_paths, w = count_both(d, order)
        n_rec = km_count(d)
        if n_paths != n_rec:
            raise CrossCheckMismatchError(
                f"d={d}: paths give {n_paths}, recursion gives {n_rec}"
            )
        rows.append(
            TableRow(
                d=d,
                n_paths=n_paths,
                n_recursion=n_rec,
                w=w,
                bound_ok=factorial_bound_check(d, w),
                dominance_ok=w <= n_paths,
                parity_ok=(w - n_paths) % 2 == 0,
            )
        )
    return InvariantTable(rows=tuple(rows))


@dataclass(frozen=True)
class AsymptoticRow:
    d: int
    log_n: float
    three_d_log_d: float
    gap_per_d: float
    real_gap_per_d: float | None


def asymptotic_report(table: InvariantTable) -> list[AsymptoticRow]:
    """log N_d against 3d log d, and (log N_d - log W_d)/d where W_d > 0.

    Display-only floats; the core values stay exact in the table.
    """
    if not table.rows:
        raise EmptyTableError("asymptotic report needs at least one row")
    report = []
    for row in table.rows:
        log_n = math.log(row.n_paths)
        reference = 3 * row.d * math.log(row.d) if row.d > 1 else 0.0
        real_gap = None
        if row.w > 0:
            real_gap = (log_n - math.log(row.w)) / row.d
        report.append(
            AsymptoticRow(
                d=row.d,
                log_n=log_n,
                three_d_log_d=reference,
                gap_per_d=(log_n - reference) / row.d,
                real_gap_per_d=real_gap,
            )
        )
    return report
