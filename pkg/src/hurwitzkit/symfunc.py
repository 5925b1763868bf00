"""Schur functions as exact polynomials in power sums, plus their specializations.

Everything here is quasi-homogeneous in the variables p_1, p_2, ... with
deg p_m = m.  The exact (Fraction) path is authoritative; complex floats are
supported for matrix-trace alphabets used by the Monte Carlo harness.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping

from ._errors import ValidationError
from .partitions import Partition, as_partition, conjugate, partitions_of

Monomial = tuple[int, ...]  # a partition written as a weakly decreasing tuple


def _merge(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b, reverse=True))


class PowerSumPoly:
    """Sparse polynomial in p_1, p_2, ... with exact rational coefficients.

    Keys are power-sum monomials p_D recorded as the partition D; zero
    coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Monomial, Fraction] | None = None):
        self.coeffs: dict[Monomial, Fraction] = {}
        if coeffs:
            for key, val in coeffs.items():
                if val:
                    self.coeffs[tuple(key)] = Fraction(val)

    @classmethod
    def zero(cls) -> "PowerSumPoly":
        return cls()

    @classmethod
    def one(cls) -> "PowerSumPoly":
        return cls({(): Fraction(1)})

    @classmethod
    def variable(cls, m: int, coeff=1) -> "PowerSumPoly":
        if m < 1:
            raise ValidationError("power-sum index must be >= 1")
        return cls({(m,): Fraction(coeff)})

    def coefficient(self, delta) -> Fraction:
        key = tuple(as_partition(delta).parts)
        return self.coeffs.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_weight(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)

    def __add__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            new = out.get(key, 0) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        res = PowerSumPoly()
        res.coeffs = out
        return res

    def __neg__(self) -> "PowerSumPoly":
        res = PowerSumPoly()
        res.coeffs = {k: -v for k, v in self.coeffs.items()}
        return res

    def __sub__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        return self + (-other)

    def scale(self, factor) -> "PowerSumPoly":
        factor = Fraction(factor)
        res = PowerSumPoly()
        if factor:
            res.coeffs = {k: v * factor for k, v in self.coeffs.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, PowerSumPoly):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                key = _merge(ka, kb)
                new = out.get(key, 0) + va * vb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        res = PowerSumPoly()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def truncate(self, max_weight: int) -> "PowerSumPoly":
        res = PowerSumPoly()
        res.coeffs = {k: v for k, v in self.coeffs.items() if sum(k) <= max_weight}
        return res

    def derivative(self, m: int) -> "PowerSumPoly":
        """Partial derivative with respect to p_m."""
        out: dict[Monomial, Fraction] = {}
        for key, val in self.coeffs.items():
            mult = key.count(m)
            if not mult:
                continue
            reduced = list(key)
            reduced.remove(m)
            rkey = tuple(reduced)
            new = out.get(rkey, 0) + val * mult
            if new:
                out[rkey] = new
            else:
                out.pop(rkey, None)
        res = PowerSumPoly()
        res.coeffs = out
        return res

    def substitute_negated(self) -> "PowerSumPoly":
        """Replace every p_m by -p_m."""
        res = PowerSumPoly()
        res.coeffs = {k: (v if len(k) % 2 == 0 else -v) for k, v in self.coeffs.items()}
        return res

    def evaluate(self, values: Mapping[int, object]):
        """Evaluate at concrete p_m values (exact rationals or complex floats)."""
        exact = all(isinstance(v, (int, Fraction)) for v in values.values())
        total = Fraction(0) if exact else 0j
        for key, coeff in self.coeffs.items():
            term = coeff if exact else complex(coeff)
            for m in key:
                if m not in values:
                    raise ValidationError(f"alphabet does not define p_{m}")
                term = term * values[m]
            total = total + term
        return total

    def to_json(self) -> dict[str, str]:
        out = {}
        for key in sorted(self.coeffs, key=lambda k: (sum(k), k)):
            val = self.coeffs[key]
            out[",".join(str(p) for p in key)] = f"{val.numerator}/{val.denominator}"
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PowerSumPoly(0)"
        bits = []
        for key in sorted(self.coeffs, key=lambda k: (sum(k), k)):
            mono = "*".join(f"p{m}" for m in key) or "1"
            bits.append(f"{self.coeffs[key]}*{mono}")
        return "PowerSumPoly(" + " + ".join(bits) + ")"


def exp_truncated(arg: PowerSumPoly, max_weight: int) -> PowerSumPoly:
    """exp of a polynomial with no constant term, truncated by total weight."""
    if arg.coefficient(()):
        raise ValidationError("exp argument must have zero constant term")
    arg = arg.truncate(max_weight)
    total = PowerSumPoly.one()
    power = PowerSumPoly.one()
    k = 1
    while True:
        power = (power * arg).truncate(max_weight)
        if power.is_zero():
            break
        total = total + power.scale(Fraction(1, factorial(k)))
        k += 1
    return total


@lru_cache(maxsize=None)
def complete_homogeneous(k: int) -> PowerSumPoly:
    """Coefficient of z^k in exp(sum_m p_m z^m / m); zero for k < 0."""
    if k < 0:
        return PowerSumPoly.zero()
    if k == 0:
        return PowerSumPoly.one()
    total = PowerSumPoly.zero()
    for m in range(1, k + 1):
        total = total + PowerSumPoly.variable(m) * complete_homogeneous(k - m)
    return total.scale(Fraction(1, k))


@lru_cache(maxsize=None)
def _jacobi_trudi(entries: tuple[tuple[int, ...], ...]) -> PowerSumPoly:
    """Determinant of [h_{entries[i][j]}] by minor expansion along the first row."""
    size = len(entries)
    if size == 0:
        return PowerSumPoly.one()
    if size == 1:
        return complete_homogeneous(entries[0][0])

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> PowerSumPoly:
        if row == size:
            return PowerSumPoly.one()
        total = PowerSumPoly.zero()
        for pos, col in enumerate(cols):
            entry = complete_homogeneous(entries[row][col])
            if entry.is_zero():
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * rest
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return minor(0, tuple(range(size)))


@lru_cache(maxsize=None)
def schur_poly(lam: Partition) -> PowerSumPoly:
    """Schur function s_lam as a polynomial in power sums, via Jacobi-Trudi."""
    lam = as_partition(lam)
    ell = lam.length()
    entries = tuple(
        tuple(lam.parts[i] - (i + 1) + (j + 1) for j in range(ell)) for i in range(ell)
    )
    return _jacobi_trudi(entries)


class PowerAlphabet:
    """Finite assignment of values to p_1 ... p_m_max, with a kind tag.

    Kinds: explicit, p_infinity, p_of_a, p_of_qt, matrix_traces.  Operations
    must reject alphabets truncated below the weight they are evaluated at.
    """

    __slots__ = ("kind", "values", "m_max", "matrix_size", "params")

    def __init__(self, kind: str, values: Mapping[int, object], m_max: int,
                 matrix_size: int | None = None, params: tuple = ()):
        self.kind = kind
        self.values = dict(values)
        self.m_max = m_max
        self.matrix_size = matrix_size
        self.params = params
        for m in range(1, m_max + 1):
            if m not in self.values:
                raise ValidationError(f"alphabet missing p_{m}")

    @classmethod
    def explicit(cls, values: Mapping[int, object]) -> "PowerAlphabet":
        m_max = max(values, default=0)
        filled = {m: values.get(m, 0) for m in range(1, m_max + 1)}
        return cls("explicit", filled, m_max)

    @classmethod
    def p_infinity(cls, m_max: int) -> "PowerAlphabet":
        vals = {m: Fraction(1) if m == 1 else Fraction(0) for m in range(1, m_max + 1)}
        return cls("p_infinity", vals, m_max)

    @classmethod
    def constant(cls, a, m_max: int) -> "PowerAlphabet":
        """The specialization with p_m = a for every m."""
        return cls("p_of_a", {m: a for m in range(1, m_max + 1)}, m_max, params=(a,))

    @classmethod
    def qt(cls, q, t, m_max: int) -> "PowerAlphabet":
        """The specialization p_m = (1 - q^m) / (1 - t^m)."""
        if isinstance(q, int):
            q = Fraction(q)
        if isinstance(t, int):
            t = Fraction(t)
        vals = {}
        for m in range(1, m_max + 1):
            denom = 1 - t**m
            if denom == 0:
                raise ValidationError(f"p_{m} undefined: 1 - t^{m} vanishes")
            vals[m] = (1 - q**m) / denom
        return cls("p_of_qt", vals, m_max, params=(q, t))

    @classmethod
    def from_matrix(cls, matrix, m_max: int) -> "PowerAlphabet":
        """Traces of matrix powers; rows of a square matrix as sequences."""
        rows = [list(row) for row in matrix]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValidationError("matrix must be square")
        vals: dict[int, object] = {}
        power = rows
        for m in range(1, m_max + 1):
            vals[m] = sum(power[i][i] for i in range(size))
            if m < m_max:
                power = [
                    [sum(power[i][k] * rows[k][j] for k in range(size)) for j in range(size)]
                    for i in range(size)
                ]
        return cls("matrix_traces", vals, m_max, matrix_size=size)

    def negated(self) -> "PowerAlphabet":
        return PowerAlphabet("explicit", {m: -v for m, v in self.values.items()}, self.m_max)

    def __repr__(self) -> str:
        return f"PowerAlphabet({self.kind}, m_max={self.m_max})"


def eval_schur(lam, alphabet: PowerAlphabet):
    """s_lam evaluated on an alphabet; exactly 0 for matrix alphabets with
    more rows than the matrix size."""
    lam = as_partition(lam)
    if alphabet.kind == "matrix_traces" and lam.length() > (alphabet.matrix_size or 0):
        return 0 if all(isinstance(v, (int, Fraction)) for v in alphabet.values.values()) else 0j
    if lam.weight() > alphabet.m_max:
        raise ValidationError(
            f"alphabet truncated at m_max={alphabet.m_max} cannot evaluate weight {lam.weight()}"
        )
    return schur_poly(lam).evaluate(alphabet.values)


def pochhammer_lambda(a, lam):
    """Product of (a + j - i) over diagram cells."""
    lam = as_partition(lam)
    out = Fraction(1) if isinstance(a, (int, Fraction)) else 1
    for c in lam.contents():
        out = out * (a + c)
    return out


def qt_pochhammer_lambda(q, t, lam):
    """Product of (1 - q * t^{j-i}) over diagram cells."""
    lam = as_partition(lam)
    if isinstance(q, int):
        q = Fraction(q)
    if isinstance(t, int):
        t = Fraction(t)
    out = Fraction(1) if isinstance(q, Fraction) and isinstance(t, Fraction) else 1
    for c in lam.contents():
        if t == 0 and c < 0:
            raise ValidationError("t^{j-i} undefined at t = 0 below the diagonal")
        out = out * (1 - q * t**c)
    return out


def content_product(r: Callable, n, lam):
    """Product of r(n + j - i) over diagram cells."""
    lam = as_partition(lam)
    out = 1
    for c in lam.contents():
        out = out * r(n + c)
    return out


def conjugation_identity_check(lam, alphabet: PowerAlphabet) -> bool:
    """s_lam(p) == (-1)^{|lam|} s_{lam'}(-p) on the given alphabet."""
    lam = as_partition(lam)
    sign = -1 if lam.weight() % 2 else 1
    left = eval_schur(lam, alphabet)
    right = eval_schur(conjugate(lam), alphabet.negated())
    return left == sign * right


def _pair_key(left: Monomial, right: Monomial) -> tuple[Monomial, Monomial]:
    return (left, right)


def cauchy_littlewood_check(d_max: int) -> bool:
    """Degree-by-degree comparison of exp(sum p*_m p_m / m) with sum_lam s_lam(p*) s_lam(p).

    Both sides are expanded in the ring spanned by monomial pairs
    (p*_A, p_B); equality is exact.
    """
    if d_max > 8:
        raise ValidationError("cauchy_littlewood_check guard: d_max <= 8")
    # Left side: exp of the diagonal quadratic, graded by the shared degree.
    # (p*_m p_m / m) has bidegree (m, m), so grade by the p-degree alone.
    left: dict[tuple[Monomial, Monomial], Fraction] = {((), ()): Fraction(1)}
    arg = {((m,), (m,)): Fraction(1, m) for m in range(1, d_max + 1)}
    power: dict[tuple[Monomial, Monomial], Fraction] = {((), ()): Fraction(1)}
    k = 1
    while True:
        new: dict[tuple[Monomial, Monomial], Fraction] = {}
        for (la, lb), va in power.items():
            for (ra, rb), vb in arg.items():
                if sum(lb) + sum(rb) > d_max:
                    continue
                key = (_merge(la, ra), _merge(lb, rb))
                new[key] = new.get(key, Fraction(0)) + va * vb
        power = {k2: v for k2, v in new.items() if v}
        if not power:
            break
        for key, val in power.items():
            left[key] = left.get(key, Fraction(0)) + val * Fraction(1, factorial(k))
        k += 1
    left = {k2: v for k2, v in left.items() if v}

    right: dict[tuple[Monomial, Monomial], Fraction] = {((), ()): Fraction(1)}
    for d in range(1, d_max + 1):
        for lam in partitions_of(d):
            poly = schur_poly(lam)
            for ka, va in poly.coeffs.items():
                for kb, vb in poly.coeffs.items():
                    key = (ka, kb)
                    new = right.get(key, Fraction(0)) + va * vb
                    if new:
                        right[key] = new
                    else:
                        right.pop(key, None)
    return left == right
