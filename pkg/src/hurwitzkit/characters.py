"""Irreducible characters of S_d, their normalizations, and aggregate class sums.

Characters are evaluated by the recursive border-strip rule, implemented on
beta-sets: removing a border strip of size t from the diagram is replacing a
first-column hook length b by b - t, with sign (-1)^{#entries jumped over}.
"""
from __future__ import annotations

import io
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ._errors import GuardError, ValidationError
from .partitions import (
    Partition,
    as_partition,
    aut_order,
    cycle_class_size,
    frobenius,
    partitions_of,
    z_order,
)


@lru_cache(maxsize=None)
def _beta_char(beta: tuple[int, ...], delta: tuple[int, ...]) -> int:
    """Character value for the partition encoded by the (strictly decreasing)
    beta-set, on the cycle type delta (parts in any fixed order)."""
    if not delta:
        return 1
    t, rest = delta[0], delta[1:]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - t
        if target < 0 or target in members:
            continue
        crossings = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted(members - {b} | {target}, reverse=True))
        term = _beta_char(new_beta, rest)
        total += -term if crossings % 2 else term
    return total


def character(lam, delta) -> int:
    """Integer character value chi_lam(delta); weights must agree."""
    lam = as_partition(lam)
    delta = as_partition(delta)
    if lam.weight() != delta.weight():
        raise ValidationError(
            f"weight mismatch: |lam|={lam.weight()} vs |delta|={delta.weight()}"
        )
    n = lam.length()
    beta = tuple(lam.parts[i] + (n - 1 - i) for i in range(n))
    return _beta_char(beta, delta.parts)


@lru_cache(maxsize=None)
def irrep_dimension(lam) -> int:
    """dim lam = character at the identity class."""
    lam = as_partition(lam)
    d = lam.weight()
    return character(lam, Partition([1] * d)) if d else 1


def hook_length_dimension(lam) -> int:
    """dim lam by the hook-length product; independent oracle for irrep_dimension."""
    lam = as_partition(lam)
    d = lam.weight()
    if d == 0:
        return 1
    conj = [sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)]
    hooks = 1
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            hooks *= row - j + conj[j - 1] - i + 1
    dim, rem = divmod(factorial(d), hooks)
    if rem:
        raise ValidationError("hook product does not divide d!")
    return dim


def normalized_character(lam, delta) -> Fraction:
    """|C_delta| * chi_lam(delta) / dim lam."""
    lam = as_partition(lam)
    return cycle_class_size(delta) * character(lam, delta) / irrep_dimension(lam)


@lru_cache(maxsize=None)
def colength_sum(lam, k: int) -> Fraction:
    """Sum of normalized characters over all classes of colength k.

    Zero when no class of that colength exists (k >= |lam|, except the empty
    diagram at k = 0); this extension keeps the weighted sums below total.
    """
    lam = as_partition(lam)
    d = lam.weight()
    if k < 0:
        raise ValidationError("colength must be >= 0")
    if d == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    if k >= d:
        return Fraction(0)
    total = Fraction(0)
    for delta in partitions_of(d):
        if delta.colength() == k:
            total += normalized_character(lam, delta)
    return total


def _falling(c, l: int):
    out = 1
    for i in range(l):
        out = out * (c - i)
    return out


def weighted_colength_sum(lam, k: int, c):
    """Coefficient of x^k in (1 + sum_{j>0} colength_sum(lam, j) x^j)^c.

    Computed by the finite expansion over partitions mu of k: sum over mu of
    c(c-1)...(c-l+1) * prod_i colength_sum(lam, mu_i) / |Aut mu|, l = len(mu).
    At c = 1 this reduces to colength_sum(lam, k).
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValidationError("k must be >= 1")
    total = 0
    for mu in partitions_of(k):
        prod = Fraction(1)
        for part in mu.parts:
            prod *= colength_sum(lam, part)
            if not prod:
                break
        if not prod:
            continue
        total = total + _falling(c, mu.length()) * prod / aut_order(mu)
    return total


def character_class_sum(delta) -> int:
    """Sum of chi_lam(delta) over all lam of the same weight.

    Counts square roots in S_d of any permutation with cycle type delta.
    """
    delta = as_partition(delta)
    return sum(character(lam, delta) for lam in partitions_of(delta.weight()))


def full_cycle_normalized_character(lam) -> Fraction:
    """Closed form for the normalized character on the single full cycle:
    vanishes off one-hook diagrams, else (-1)^{len+1} (d!/dim) / d."""
    lam = as_partition(lam)
    d = lam.weight()
    if d == 0:
        raise ValidationError("full cycle needs weight >= 1")
    if frobenius(lam).diagonal != 1:
        return Fraction(0)
    sign = -1 if lam.length() % 2 == 0 else 1
    return Fraction(sign * factorial(d), irrep_dimension(lam) * d)


def hook_character_poly_check(delta) -> bool:
    """Check that prod_i (1 - q^{d_i}) / (1 - q) has coefficient of (-q)^r equal
    to the character of the hook (d-r, 1^r) on delta, for 0 <= r <= d-1."""
    delta = as_partition(delta)
    d = delta.weight()
    if d > 9:
        raise GuardError("hook_character_poly_check guard: |delta| <= 9")
    if d == 0:
        return True
    # numerator poly coefficients of prod (1 - q^{d_i})
    poly = [0] * (d + 1)
    poly[0] = 1
    for part in delta.parts:
        new = [0] * (d + 1)
        for i, coeff in enumerate(poly):
            if not coeff:
                continue
            new[i] += coeff
            if i + part <= d:
                new[i + part] -= coeff
        poly = new
    # divide by (1 - q): running prefix sums
    quot = []
    acc = 0
    for i in range(d):
        acc += poly[i]
        quot.append(acc)
    for r in range(d):
        hook = Partition([d - r] + [1] * r)
        expected = character(hook, delta)
        got = quot[r] if r % 2 == 0 else -quot[r]
        if got != expected:
            return False
    return True


class CharacterTable:
    """Full integer character table of S_d, built once and cached."""

    def __init__(self, d: int):
        if d < 0:
            raise ValidationError("d must be >= 0")
        self.d = d
        self.row_labels = partitions_of(d)
        self.column_labels = partitions_of(d)
        self.entries: dict[tuple[Partition, Partition], int] = {}
        for lam in self.row_labels:
            for delta in self.column_labels:
                self.entries[(lam, delta)] = character(lam, delta)

    def chi(self, lam, delta) -> int:
        return self.entries[(as_partition(lam), as_partition(delta))]

    def dim(self, lam) -> int:
        return irrep_dimension(as_partition(lam))

    def check_row_orthogonality(self) -> bool:
        fact = factorial(self.d)
        for lam in self.row_labels:
            for mu in self.row_labels:
                total = sum(
                    cycle_class_size(delta) * self.chi(lam, delta) * self.chi(mu, delta)
                    for delta in self.column_labels
                )
                if total != (fact if lam == mu else 0):
                    return False
        return True

    def check_column_orthogonality(self) -> bool:
        for da in self.column_labels:
            for db in self.column_labels:
                total = sum(self.chi(lam, da) * self.chi(lam, db) for lam in self.row_labels)
                expected = z_order(da) if da == db else 0
                if total != expected:
                    return False
        return True

    def to_csv(self) -> str:
        import csv

        out = io.StringIO()
        writer = csv.writer(out)
        label = lambda part: ",".join(str(p) for p in part.parts) or "-"
        writer.writerow(["lam\\delta"] + [label(delta) for delta in self.column_labels])
        for lam in self.row_labels:
            writer.writerow(
                [label(lam)] + [self.chi(lam, delta) for delta in self.column_labels]
            )
        return out.getvalue()


@lru_cache(maxsize=None)
def character_table(d: int) -> CharacterTable:
    return CharacterTable(d)
