"""Hurwitz numbers through the character formula, for any base Euler characteristic.

The basic sum is over partitions lam of the degree d (optionally cut off at
length N): (dim lam / d!)^E * prod_i |C_i| chi_lam(Delta_i) / dim lam.
For N >= d this counts degree-d branched covers, not necessarily connected,
each weighted by 1/|Aut|.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ._errors import GuardError, ValidationError
from .characters import (
    character_class_sum,
    colength_sum,
    irrep_dimension,
    normalized_character,
    weighted_colength_sum,
)
from .partitions import (
    Partition,
    as_partition,
    cycle_class_size,
    euler_char_cover,
    partitions_of,
)


@dataclass(frozen=True)
class HurwitzQuery:
    euler: int
    degree: int
    profiles: tuple[Partition, ...]
    cutoff: int | None = None  # None means no length cutoff

    def __post_init__(self):
        if self.degree < 1:
            raise ValidationError("degree must be >= 1")
        if self.cutoff is not None and self.cutoff < 1:
            raise ValidationError("cutoff must be >= 1 or None")
        profs = tuple(as_partition(p) for p in self.profiles)
        object.__setattr__(self, "profiles", profs)
        for p in profs:
            if p.weight() != self.degree:
                raise ValidationError(
                    f"profile {p.parts} has weight {p.weight()}, expected {self.degree}"
                )


@dataclass(frozen=True)
class HurwitzResult:
    value: Fraction
    query: HurwitzQuery
    is_true_hurwitz: bool
    euler_cover: int


def _lam_range(d: int, cutoff: int | None):
    for lam in partitions_of(d):
        if cutoff is None or lam.length() <= cutoff:
            yield lam


def hurwitz_number(euler: int, degree: int, profiles=(), cutoff: int | None = None) -> HurwitzResult:
    """Character-formula count of degree-d branched covers with the given profiles."""
    query = HurwitzQuery(euler, degree, tuple(as_partition(p) for p in profiles), cutoff)
    d = query.degree
    fact = factorial(d)
    total = Fraction(0)
    for lam in _lam_range(d, query.cutoff):
        term = Fraction(irrep_dimension(lam), fact) ** query.euler
        for prof in query.profiles:
            term *= normalized_character(lam, prof)
            if not term:
                break
        total += term
    return HurwitzResult(
        value=total,
        query=query,
        is_true_hurwitz=(query.cutoff is None or query.cutoff >= d),
        euler_cover=euler_char_cover(euler, query.profiles, degree=d),
    )


def hurwitz_value(euler: int, degree: int, profiles=(), cutoff: int | None = None) -> Fraction:
    return hurwitz_number(euler, degree, profiles, cutoff).value


def hurwitz_colength_sum(euler: int, degree: int, profiles, colengths, cutoff: int | None = None) -> Fraction:
    """Sum of Hurwitz numbers over extra branch points with fixed colengths:
    each colength l adds a factor colength_sum(lam, l) under the character sum."""
    profs = tuple(as_partition(p) for p in profiles)
    for p in profs:
        if p.weight() != degree:
            raise ValidationError("profile weight mismatch")
    for l in colengths:
        if not 0 <= l <= degree - 1:
            raise ValidationError(f"colength {l} out of range 0..{degree - 1}")
    fact = factorial(degree)
    total = Fraction(0)
    for lam in _lam_range(degree, cutoff):
        term = Fraction(irrep_dimension(lam), fact) ** euler
        for prof in profs:
            term *= normalized_character(lam, prof)
        for l in colengths:
            term *= colength_sum(lam, l)
        total += term
    return total


def hurwitz_weighted_sum(euler: int, degree: int, profiles, weight_pairs, cutoff: int | None = None):
    """Weighted Hurwitz sum: each pair (k, c) adds a factor
    weighted_colength_sum(lam, k, c).  At all c = 1 this reduces to
    hurwitz_colength_sum with the same k's."""
    profs = tuple(as_partition(p) for p in profiles)
    for p in profs:
        if p.weight() != degree:
            raise ValidationError("profile weight mismatch")
    for k, _ in weight_pairs:
        if k < 1:
            raise ValidationError("weight order k must be >= 1")
    fact = factorial(degree)
    total: object = Fraction(0)
    for lam in _lam_range(degree, cutoff):
        term = Fraction(irrep_dimension(lam), fact) ** euler
        for prof in profs:
            term = term * normalized_character(lam, prof)
        for k, c in weight_pairs:
            term = term * weighted_colength_sum(lam, k, c)
        total = total + term
    return total


def gluing_identity_holds(euler_a: int, euler_b: int, degree: int, profiles_a=(), profiles_b=()) -> bool:
    """Check the surface-gluing identity: the cover count for the connected sum
    equals the class-summed product of the two pieces, each opened by one
    extra branch point."""
    if degree > 7:
        raise GuardError("gluing check guard: degree <= 7")
    profs_a = tuple(as_partition(p) for p in profiles_a)
    profs_b = tuple(as_partition(p) for p in profiles_b)
    left = hurwitz_value(euler_a + euler_b, degree, profs_a + profs_b)
    fact = factorial(degree)
    right = Fraction(0)
    for delta in partitions_of(degree):
        right += (
            Fraction(fact) / cycle_class_size(delta)
            * hurwitz_value(euler_a + 1, degree, profs_a + (delta,))
            * hurwitz_value(euler_b + 1, degree, (delta,) + profs_b)
        )
    return left == right


def hurwitz_down_identity_holds(euler: int, degree: int, profiles=()) -> bool:
    """Check that dropping the base Euler characteristic by one equals summing an
    extra branch point against the square-root weights character_class_sum."""
    if degree > 7:
        raise GuardError("hurwitz_down check guard: degree <= 7")
    profs = tuple(as_partition(p) for p in profiles)
    left = hurwitz_value(euler - 1, degree, profs)
    right = Fraction(0)
    for delta in partitions_of(degree):
        right += hurwitz_value(euler, degree, profs + (delta,)) * character_class_sum(delta)
    return left == right


def full_cycle_identity_holds(euler: int, degree: int, profiles=(), handles: int = 1) -> bool:
    """In the presence of a maximally ramified branch point, trading 2g of base
    Euler characteristic for 2g extra full-cycle branch points costs d^{2g}."""
    if degree > 7:
        raise GuardError("full-cycle check guard: degree <= 7")
    if handles < 1:
        raise ValidationError("handles must be >= 1")
    profs = tuple(as_partition(p) for p in profiles)
    full = Partition([degree])
    left = hurwitz_value(euler - 2 * handles, degree, profs + (full,))
    right = degree ** (2 * handles) * hurwitz_value(
        euler, degree, profs + (full,) * (2 * handles + 1)
    )
    return left == right
