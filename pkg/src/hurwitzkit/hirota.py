"""Elementary bilinear (Hirota-type) checks for content-product Schur sums.

tau(N, n, p) = g(n) * sum over partitions of length <= N of the content
product of r at offset n times the Schur polynomial.  The normalization g is
built multiplicatively from r with the convention U_0 = 0, i.e.
e^{-U_i} = r(1)...r(i) for i >= 1 and inverted products below zero; any other
choice rescales tau by an n-only factor that the bilinear equations do not
tolerate term by term.

The two elementary equations are checked identically in p up to a total
degree.  Their coefficients were pinned by solving for the rational nullspace
of the candidate bilinear terms over random tabulated content data: with this
term support the identities below are unique up to scale, and they hold for
arbitrary content functions.  Written in the times t_m = p_m / m both carry
the symmetric 1/2 normalization; here they appear in the p variables, so the
t_2 derivative shows up as 2 d/dp_2.
"""
from __future__ import annotations

from fractions import Fraction

from ._errors import GuardError, ValidationError
from .genfun import ContentFunction
from .partitions import partitions_of
from .symfunc import PowerSumPoly, schur_poly


def g_normalization(r: ContentFunction, n: int) -> Fraction:
    """Product of e^{-U_i} factors between 0 and n, with U_0 = 0."""
    if n == 0:
        return Fraction(1)
    out = Fraction(1)
    if n > 0:
        for i in range(1, n):
            for j in range(1, i + 1):
                out *= _nonzero(r, j)
        return out
    for m in range(1, -n + 1):
        for j in range(0, m):
            out *= _nonzero(r, -j)
    return out


def _nonzero(r: ContentFunction, x: int):
    val = r(x)
    if not val:
        raise ValidationError(f"content function vanishes at {x}, normalization undefined")
    return val


def bkp_tau_poly(r: ContentFunction, n: int, cutoff: int | None, d_max: int) -> PowerSumPoly:
    """g(n) * sum_{len(lam)<=cutoff} r_lam(n) s_lam(p), truncated by weight."""
    g = g_normalization(r, n)
    total = PowerSumPoly.one().scale(g)
    for d in range(1, d_max + 1):
        for lam in partitions_of(d):
            if cutoff is not None and lam.length() > cutoff:
                continue
            weight = r.content_product(n, lam)
            if weight:
                total = total + schur_poly(lam).scale(g * weight)
    return total


def hirota_bilinear_check(r: ContentFunction, cutoff: int, d_max: int,
                          n_values=(0, 1)) -> bool:
    """Both elementary bilinear equations hold identically in p to total degree d_max."""
    if d_max > 6:
        raise GuardError("hirota check guard: d_max <= 6")
    if cutoff < 1:
        raise ValidationError("cutoff must be >= 1 (the shifted sums need N-1 >= 0)")
    work = d_max + 2  # second derivatives drop the weight by two
    for n in n_values:
        taus: dict[tuple[int, int], PowerSumPoly] = {}

        def tau(dN: int, dn: int) -> PowerSumPoly:
            key = (dN, dn)
            if key not in taus:
                taus[key] = bkp_tau_poly(r, n + dn, cutoff + dN, work)
            return taus[key]

        def d1(p):
            return p.derivative(1)

        def d2(p):
            return p.derivative(2)

        def d11(p):
            return p.derivative(1).derivative(1)

        a, b = tau(0, 0), tau(1, 1)
        eq1 = (
            d2(a) * b - a * d2(b)
            + (d11(a) * b + a * d11(b)).scale(Fraction(1, 2))
            - d1(a) * d1(b)
            - tau(2, 2) * tau(-1, -1)
        ).truncate(d_max)
        if not eq1.is_zero():
            return False

        a, b = tau(0, 1), tau(1, 1)
        eq2 = (
            (d11(a) * b - a * d11(b)).scale(Fraction(1, 2))
            + d2(a) * b - a * d2(b)
            - d1(tau(2, 2)) * tau(-1, 0)
            + d1(tau(1, 2)) * tau(0, 0)
        ).truncate(d_max)
        if not eq2.is_zero():
            return False
    return True
