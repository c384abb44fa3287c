"""Enumeration of ideals by norm, with prime-factor counts attached.

Every non-zero ideal of norm <= N is reached exactly once by a
depth-first walk over the prime-ideal classes sorted by norm: at each
class we pick local exponents, multiply the norm, and add to the
factor counts (big_omega counts prime-ideal factors with multiplicity,
small_omega without).

For a split class the two conjugate prime ideals with total exponent t
produce identical (norm, counts) contributions in bulk: two ideals with
one distinct factor (exponent pattern t+0 / 0+t) and t-1 ideals with
two (a+b = t, a,b >= 1).  The walk visits each such pattern once and
carries the multiplicity, which keeps the node count well below the
ideal count without ever double-producing an ideal.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import IO, Iterator, NamedTuple

from .errors import ValidationError
from .fields import FieldSpec, _check_bound, class_arrays

CSV_RECORD_HEADER = ["norm", "big_omega", "small_omega"]


@dataclass(frozen=True)
class IdealRecord:
    """One ideal, reduced to the three numbers every statistic here uses."""

    norm: int
    big_omega: int
    small_omega: int


@dataclass
class WeightHistogram:
    """Level-set counts at one norm bound: counts_omega[k] ideals have
    big_omega = k, counts_little_omega[k] have small_omega = k."""

    bound: int
    counts_omega: dict[int, int]
    counts_little_omega: dict[int, int]
    total: int


class RhoEstimate(NamedTuple):
    ratio: Fraction
    value: float


def _iter_patterns(
    norms: list[int], splits: list[bool], bound: int
) -> Iterator[tuple[int, int, int, int]]:
    """Yield (norm, big_omega, small_omega, multiplicity) pattern nodes."""
    ncl = len(norms)
    stack = [(0, 1, 0, 0, 1)]
    push = stack.append
    while stack:
        i0, norm, big, small, mult = stack.pop()
        yield norm, big, small, mult
        for i in range(i0, ncl):
            cn = norms[i]
            nxt = norm * cn
            if nxt > bound:
                break
            if splits[i]:
                push((i + 1, nxt, big + 1, small + 1, mult * 2))
                t, pw = 2, nxt * cn
                while pw <= bound:
                    push((i + 1, pw, big + t, small + 1, mult * 2))
                    push((i + 1, pw, big + t, small + 2, mult * (t - 1)))
                    t, pw = t + 1, pw * cn
            else:
                push((i + 1, nxt, big + 1, small + 1, mult))
                a, pw = 2, nxt * cn
                while pw <= bound:
                    push((i + 1, pw, big + a, small + 1, mult))
                    a, pw = a + 1, pw * cn


def enumerate_ideals(field: FieldSpec, bound: int) -> Iterator[IdealRecord]:
    """Stream one IdealRecord per ideal of norm <= bound.

    Streaming: nothing proportional to the ideal count is buffered; the
    pending-branch stack is O(number of prime classes).
    """
    _check_bound(bound)
    norms, splits = class_arrays(field, bound)
    for norm, big, small, mult in _iter_patterns(norms, splits, bound):
        rec = IdealRecord(norm=norm, big_omega=big, small_omega=small)
        for _ in range(mult):
            yield rec


def _fold_level_counts(
    norms: list[int], splits: list[bool], bound: int
) -> tuple[list[int], list[int], int]:
    """One DFS pass folding the level-set counts; the package hot path."""
    kmax = bound.bit_length() + 2
    big_counts = [0] * kmax
    small_counts = [0] * kmax
    ncl = len(norms)

    def rec(i0: int, norm: int, big: int, small: int, mult: int) -> None:
        big_counts[big] += mult
        small_counts[small] += mult
        for i in range(i0, ncl):
            cn = norms[i]
            nxt = norm * cn
            if nxt > bound:
                break
            if splits[i]:
                rec(i + 1, nxt, big + 1, small + 1, mult * 2)
                t, pw = 2, nxt * cn
                while pw <= bound:
                    rec(i + 1, pw, big + t, small + 1, mult * 2)
                    rec(i + 1, pw, big + t, small + 2, mult * (t - 1))
                    t, pw = t + 1, pw * cn
            else:
                rec(i + 1, nxt, big + 1, small + 1, mult)
                a, pw = 2, nxt * cn
                while pw <= bound:
                    rec(i + 1, pw, big + a, small + 1, mult)
                    a, pw = a + 1, pw * cn

    rec(0, 1, 0, 0, 1)
    total = sum(big_counts)
    return big_counts, small_counts, total


@lru_cache(maxsize=32)
def build_histogram(field: FieldSpec, bound: int) -> WeightHistogram:
    """Level-set counts N_k and pi_k for all ideals of norm <= bound.

    Cached: every downstream statistic at a given (field, bound) reuses
    this one enumeration pass.  Treat the result as immutable.
    """
    _check_bound(bound)
    norms, splits = class_arrays(field, bound)
    big_counts, small_counts, total = _fold_level_counts(norms, splits, bound)
    return WeightHistogram(
        bound=bound,
        counts_omega={k: c for k, c in enumerate(big_counts) if c},
        counts_little_omega={k: c for k, c in enumerate(small_counts) if c},
        total=total,
    )


def count_ideals(field: FieldSpec, bound: int) -> int:
    """Number of ideals with norm <= bound."""
    return build_histogram(field, bound).total


def estimate_rho(field: FieldSpec, bound: int) -> RhoEstimate:
    """Empirical ideal density T_N / N, exact ratio plus float rendering."""
    total = count_ideals(field, bound)
    ratio = Fraction(total, bound)
    return RhoEstimate(ratio=ratio, value=float(ratio))


def norm_counts(field: FieldSpec, bound: int) -> list[int]:
    """counts[n] = number of ideals of norm exactly n, for 0 <= n <= bound."""
    _check_bound(bound)
    norms, splits = class_arrays(field, bound)
    counts = [0] * (bound + 1)
    for norm, _big, _small, mult in _iter_patterns(norms, splits, bound):
        counts[norm] += mult
    return counts


def write_records_csv(field: FieldSpec, bound: int, out: IO[str]) -> int:
    """Dump the enumeration stream as CSV; returns the record count."""
    writer = csv.writer(out)
    writer.writerow(CSV_RECORD_HEADER)
    n = 0
    for rec in enumerate_ideals(field, bound):
        writer.writerow([rec.norm, rec.big_omega, rec.small_omega])
        n += 1
    return n
