"""Ideal enumeration in quadratic fields, additive prime-factor statistics,
Gaussian-integer lattice sieves, and ergodic averaging checks."""

from .errors import OverflowGuardError, ValidationError
from .fields import (
    FieldSpec,
    PrimeIdealClass,
    SplittingType,
    gaussian_field,
    make_field,
    prime_ideal_classes_up_to,
    quadratic_field,
    rational_field,
    splitting_type,
)
from .ideals import (
    IdealRecord,
    RhoEstimate,
    WeightHistogram,
    build_histogram,
    count_ideals,
    enumerate_ideals,
    estimate_rho,
    norm_counts,
    write_records_csv,
)

__all__ = [
    "FieldSpec",
    "IdealRecord",
    "OverflowGuardError",
    "PrimeIdealClass",
    "RhoEstimate",
    "SplittingType",
    "ValidationError",
    "WeightHistogram",
    "build_histogram",
    "count_ideals",
    "enumerate_ideals",
    "estimate_rho",
    "gaussian_field",
    "make_field",
    "norm_counts",
    "prime_ideal_classes_up_to",
    "quadratic_field",
    "rational_field",
    "splitting_type",
    "write_records_csv",
]
