"""Base-field descriptors and rational-prime splitting.

Covers the rationals and quadratic fields Q(sqrt(d)) for squarefree d.
A rational prime p decomposes in the quadratic field according to the
Kronecker symbol of the discriminant:

    p | Delta          -> ramified, one prime ideal of norm p
    (Delta|p) = +1     -> split, two prime ideals of norm p
    (Delta|p) = -1     -> inert, one prime ideal of norm p^2

Over Q every prime is a single ideal of norm p; splitting_type reports
the degenerate "split with g = 1" marker for that case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import OverflowGuardError, ValidationError
from .primes import is_prime, is_squarefree, iter_primes, kronecker

NORM_BOUND_CAP = 2_000_000_000


class SplittingType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class FieldSpec:
    """The rationals, or a quadratic field identified by squarefree d."""

    kind: str
    d: int | None = None
    discriminant: int | None = None

    @property
    def is_rational(self) -> bool:
        return self.kind == "rationals"

    def label(self) -> str:
        """Short token for filenames and report metadata."""
        if self.is_rational:
            return "q"
        if self.d == -1:
            return "q-i"
        return f"q-sqrt{self.d}"


@dataclass(frozen=True)
class PrimeIdealClass:
    """All prime ideals above one rational prime: residue degree f, count g."""

    p: int
    f: int
    g: int
    ramified: bool
    norm: int


def make_field(kind: str, d: int | None = None) -> FieldSpec:
    """Validated field constructor; computes the discriminant for quadratics."""
    if kind == "rationals":
        return FieldSpec(kind="rationals")
    if kind != "quadratic":
        raise ValidationError(f"unknown field kind {kind!r}")
    if d is None or d in (0, 1):
        raise ValidationError("quadratic field needs a squarefree d outside {0, 1}")
    if not is_squarefree(d):
        raise ValidationError(f"d = {d} is not squarefree")
    disc = d if d % 4 == 1 else 4 * d
    return FieldSpec(kind="quadratic", d=d, discriminant=disc)


def rational_field() -> FieldSpec:
    return make_field("rationals")


def quadratic_field(d: int) -> FieldSpec:
    return make_field("quadratic", d)


def gaussian_field() -> FieldSpec:
    return make_field("quadratic", -1)


def splitting_type(field: FieldSpec, p: int) -> SplittingType:
    """Decomposition type of the rational prime p in the field."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if field.is_rational:
        return SplittingType.SPLIT
    return _splitting_unchecked(field.discriminant, p)


def _splitting_unchecked(disc: int, p: int) -> SplittingType:
    if disc % p == 0:
        return SplittingType.RAMIFIED
    return SplittingType.SPLIT if kronecker(disc, p) == 1 else SplittingType.INERT


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise ValidationError("norm bound must be >= 1")
    if bound > NORM_BOUND_CAP:
        raise OverflowGuardError(f"norm bound {bound} exceeds cap {NORM_BOUND_CAP}")


def prime_ideal_classes_up_to(field: FieldSpec, bound: int) -> list[PrimeIdealClass]:
    """All prime-ideal classes of norm <= bound, sorted by norm ascending.

    Inert primes enter only once their norm p^2 fits under the bound, so
    the result for a smaller bound is always a prefix of a larger one.
    """
    _check_bound(bound)
    classes: list[PrimeIdealClass] = []
    for p in iter_primes(bound):
        if field.is_rational:
            classes.append(PrimeIdealClass(p=p, f=1, g=1, ramified=False, norm=p))
            continue
        kind = _splitting_unchecked(field.discriminant, p)
        if kind is SplittingType.RAMIFIED:
            classes.append(PrimeIdealClass(p=p, f=1, g=1, ramified=True, norm=p))
        elif kind is SplittingType.SPLIT:
            classes.append(PrimeIdealClass(p=p, f=1, g=2, ramified=False, norm=p))
        elif p * p <= bound:
            classes.append(PrimeIdealClass(p=p, f=2, g=1, ramified=False, norm=p * p))
    classes.sort(key=lambda c: c.norm)
    return classes


@lru_cache(maxsize=16)
def class_arrays(field: FieldSpec, bound: int) -> tuple[list[int], list[bool]]:
    """Compact (norms, is_split) arrays for the enumeration hot path.

    Same content and order as prime_ideal_classes_up_to, minus the object
    per class; cached because the Gaussian-field list at large bounds is
    the single most reused input in the package.
    """
    _check_bound(bound)
    entries: list[tuple[int, bool]] = []
    if field.is_rational:
        entries = [(p, False) for p in iter_primes(bound)]
    else:
        disc = field.discriminant
        for p in iter_primes(bound):
            kind = _splitting_unchecked(disc, p)
            if kind is SplittingType.SPLIT:
                entries.append((p, True))
            elif kind is SplittingType.RAMIFIED:
                entries.append((p, False))
            elif p * p <= bound:
                entries.append((p * p, False))
        entries.sort()
    return [e[0] for e in entries], [e[1] for e in entries]
