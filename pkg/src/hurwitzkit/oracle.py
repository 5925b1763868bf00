"""Brute-force ground truth: count solutions of the surface-group relation in S_d.

A degree-d cover of a surface with g handles (or q crosscaps) and F branch
points corresponds to a tuple (A_1, B_1, ..., A_g, B_g | R_1, ..., R_q,
X_1, ..., X_F) with prod [A_i, B_i] * prod R_j^2 * prod X_i = identity and
X_i of the prescribed cycle types; the count divided by d! is the cover count.

The tuple count is organized as a convolution of per-factor count vectors
over the group (same enumeration, associativity-regrouped), which keeps the
full acceptance sweep inside the runtime budget.  No character theory is used
anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from ._errors import GuardError, ValidationError
from .partitions import as_partition

Perm = tuple[int, ...]


@dataclass(frozen=True)
class SurfacePresentation:
    """Closed surface as either g handles (orientable) or q crosscaps."""

    kind: str  # "orientable" | "nonorientable"
    handles: int = 0
    crosscaps: int = 0

    def __post_init__(self):
        if self.kind == "orientable":
            if self.handles < 0 or self.crosscaps:
                raise ValidationError("orientable surface: handles >= 0, no crosscaps")
        elif self.kind == "nonorientable":
            if self.crosscaps < 1 or self.handles:
                raise ValidationError("nonorientable surface: crosscaps >= 1, no handles")
        else:
            raise ValidationError(f"unknown surface kind {self.kind!r}")

    @property
    def euler(self) -> int:
        if self.kind == "orientable":
            return 2 - 2 * self.handles
        return 2 - self.crosscaps

    @classmethod
    def sphere(cls) -> "SurfacePresentation":
        return cls("orientable", handles=0)

    @classmethod
    def torus(cls) -> "SurfacePresentation":
        return cls("orientable", handles=1)

    @classmethod
    def orientable(cls, handles: int) -> "SurfacePresentation":
        return cls("orientable", handles=handles)

    @classmethod
    def rp2(cls) -> "SurfacePresentation":
        return cls("nonorientable", crosscaps=1)

    @classmethod
    def klein_bottle(cls) -> "SurfacePresentation":
        return cls("nonorientable", crosscaps=2)

    @classmethod
    def nonorientable(cls, crosscaps: int) -> "SurfacePresentation":
        return cls("nonorientable", crosscaps=crosscaps)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        size = 0
        node = start
        while not seen[node]:
            seen[node] = True
            node = p[node]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _group(d: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(d)))


@lru_cache(maxsize=None)
def _types(d: int) -> dict[Perm, tuple[int, ...]]:
    return {p: cycle_type(p) for p in _group(d)}


@lru_cache(maxsize=None)
def class_elements(d: int, delta: tuple[int, ...]) -> tuple[Perm, ...]:
    return tuple(p for p, t in _types(d).items() if t == delta)


@lru_cache(maxsize=None)
def _square_counts(d: int) -> dict[Perm, int]:
    """counts[h] = number of R in S_d with R^2 = h."""
    counts: dict[Perm, int] = {}
    for r in _group(d):
        h = compose(r, r)
        counts[h] = counts.get(h, 0) + 1
    return counts


@lru_cache(maxsize=None)
def _commutator_counts(d: int) -> dict[Perm, int]:
    """counts[h] = number of pairs (A, B) with A B A^-1 B^-1 = h."""
    counts: dict[Perm, int] = {}
    for a in _group(d):
        a_inv = inverse(a)
        for b in _group(d):
            h = compose(compose(a, b), compose(a_inv, inverse(b)))
            counts[h] = counts.get(h, 0) + 1
    return counts


def _convolve(f: dict[Perm, int], g: dict[Perm, int]) -> dict[Perm, int]:
    """(f * g)[h] = sum_x f[x] g[x^-1 h]: counts of products drawn from f then g."""
    out: dict[Perm, int] = {}
    for x, fx in f.items():
        for y, gy in g.items():
            h = compose(x, y)
            out[h] = out.get(h, 0) + fx * gy
    return out


def _check_guards(pres: SurfacePresentation, degree: int, n_profiles: int) -> None:
    if degree > 6:
        raise GuardError(f"oracle guard: degree {degree} > 6")
    complexity = pres.crosscaps + 2 * pres.handles + n_profiles
    if complexity > 4:
        raise GuardError(
            f"oracle guard: crosscaps + 2*handles + branch points = {complexity} > 4"
        )


def oracle_count(pres: SurfacePresentation, degree: int, profiles=()) -> int:
    """Number of surface-relation solutions with X_i in the prescribed classes."""
    profs = [as_partition(p) for p in profiles]
    for p in profs:
        if p.weight() != degree:
            raise ValidationError("profile weight mismatch")
    _check_guards(pres, degree, len(profs))
    identity = tuple(range(degree))
    dist: dict[Perm, int] = {identity: 1}
    for _ in range(pres.handles):
        dist = _convolve(dist, _commutator_counts(degree))
    for _ in range(pres.crosscaps):
        dist = _convolve(dist, _square_counts(degree))
    for prof in profs:
        indicator = {p: 1 for p in class_elements(degree, prof.parts)}
        dist = _convolve(dist, indicator)
    return dist.get(identity, 0)


def oracle_hurwitz(pres: SurfacePresentation, degree: int, profiles=()) -> Fraction:
    """Solution count divided by d!."""
    return Fraction(oracle_count(pres, degree, profiles), factorial(degree))


def oracle_count_naive(pres: SurfacePresentation, degree: int, profiles=()) -> int:
    """Literal nested-tuple enumeration (last class factor solved for and
    membership-tested).  Exponentially slower than oracle_count; kept as an
    independent cross-check for tiny inputs."""
    profs = [as_partition(p) for p in profiles]
    for p in profs:
        if p.weight() != degree:
            raise ValidationError("profile weight mismatch")
    work = factorial(degree) ** (2 * pres.handles + pres.crosscaps)
    for p in profs[:-1]:
        work *= len(class_elements(degree, p.parts))
    if work > 2_000_000:
        raise GuardError("naive oracle guard exceeded")
    group = _group(degree)
    types = _types(degree)
    identity = tuple(range(degree))
    free_slots = 2 * pres.handles + pres.crosscaps
    class_lists = [class_elements(degree, p.parts) for p in profs]
    total = 0
    for frees in product(group, repeat=free_slots):
        prefix = identity
        if pres.kind == "orientable":
            for i in range(pres.handles):
                a, b = frees[2 * i], frees[2 * i + 1]
                prefix = compose(prefix, compose(compose(a, b), compose(inverse(a), inverse(b))))
        else:
            for r in frees:
                prefix = compose(prefix, compose(r, r))
        if not class_lists:
            total += prefix == identity
            continue
        for xs in product(*class_lists[:-1]):
            prod_all = prefix
            for x in xs:
                prod_all = compose(prod_all, x)
            # last X is forced: prod_all * X_F = identity
            needed = inverse(prod_all)
            total += types[needed] == tuple(profs[-1].parts)
    return total


def presentation_independence_check(euler: int, degree: int, profiles=()) -> bool:
    """For even euler <= 0 both presentations (handles vs crosscaps) exist and
    must give identical counts."""
    if euler > 0 or euler % 2:
        raise ValidationError("independence check needs even euler <= 0")
    orient = SurfacePresentation.orientable((2 - euler) // 2)
    nonori = SurfacePresentation.nonorientable(2 - euler)
    return oracle_count(orient, degree, profiles) == oracle_count(nonori, degree, profiles)
