"""Prime generation and the Kronecker symbol.

Primes come from a deterministic segmented sieve of Eratosthenes; no
probabilistic tests anywhere.  The Kronecker symbol (a|n) is computed by
the standard reciprocity recursion on integers, so splitting decisions
stay exact.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from .errors import ValidationError

_SEGMENT = 1 << 18


def _small_sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def iter_primes(limit: int) -> Iterator[int]:
    """Yield every prime <= limit, ascending, via a segmented sieve."""
    if limit < 2:
        return
    root = math.isqrt(limit)
    base = _small_sieve(root)
    yield from base
    lo = root + 1
    while lo <= limit:
        hi = min(lo + _SEGMENT - 1, limit)
        flags = bytearray([1]) * (hi - lo + 1)
        for p in base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start > hi:
                continue
            flags[start - lo :: p] = bytes((hi - start) // p + 1)
        for i, f in enumerate(flags):
            if f:
                yield lo + i
        lo = hi + 1


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """Materialized prime list; cached, so treat the result as read-only."""
    return tuple(iter_primes(limit))


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the argument ranges we accept."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for i in range(3, math.isqrt(n) + 1, 2):
        if n % i == 0:
            return False
    return True


def is_squarefree(n: int) -> bool:
    """True when no prime square divides |n|."""
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for arbitrary integers.

    Extends the Jacobi symbol by (a|2) = 0, 1, -1 for a even, a = +-1 mod 8,
    a = +-3 mod 8, and (a|-1) = sign(a).  Integer arithmetic only.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos % 2 == 1 and a % 8 in (3, 5):
        result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
