"""Arithmetic criteria on a single polynomial.

Everything here is coordinate bookkeeping on P itself: the centered normal
form, the support gcds that control scaling symmetries, the critical-point
structure with its separation polynomial, and the affine symmetries of the
root set. The classifier combines these; this module never decides a verdict
on its own.

Conventions. For P of degree n, the centered form is
P0(X) = P(X + s) / lc(P) with s = -a_{n-1} / (n lc(P)), which kills the
X^{n-1} term. With I = supp(P0) and w = min I:

* gcd(I) is the order of the group of scalings fixing P0, since
  P0(zX) = P0(X) holds exactly when z^i = 1 for every i in I.
* gcd(I - w) is the order of the group of scalings fixing P0 up to a
  constant: P0(zX) = c P0(X) forces c = z^w and z^(i-w) = 1 for i in I.

A scaling of P0 is a rotation of P about the center s, so these orders
transfer verbatim to the input polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polynomials import Poly, lagrange_interpolate, poly_gcd, radical, resultant, squarefree_parts

Q = Fraction


# centered normal form

@dataclass(frozen=True)
class NormalForm:
    original: Poly
    centered: Poly  # monic, no X^{n-1} term
    shift: Fraction  # centered(X) = original(X + shift) / scale
    scale: Fraction
    condition_a: bool  # X^{n-2} coefficient vanishes after centering
    condition_b: bool  # X^{n-2} and X^{n-3} coefficients both vanish


def normalize(p: Poly) -> NormalForm:
    n = p.degree
    if n < 1:
        raise ValueError("normalization needs degree at least 1")
    scale = p.lc
    shift = -p.coeff(n - 1) / (n * scale)
    centered = p.taylor_shift(shift) * (1 / scale)
    cond_a = n >= 2 and centered.coeff(n - 2) == 0
    cond_b = cond_a and n >= 3 and centered.coeff(n - 3) == 0
    return NormalForm(p, centered, shift, scale, cond_a, cond_b)


# extended gcd over a set of integers, witnessing gcd as a Z-combination

def ext_gcd_combo(values: Sequence[int]) -> tuple[int, dict[int, int]]:
    """gcd of the values plus coefficients u with sum(u[v] * v) = gcd."""
    g = 0
    combo: dict[int, int] = {}
    for v in values:
        if v in combo:
            continue
        g, a, b = _ext_gcd(g, v)
        combo = {k: c * a for k, c in combo.items()}
        combo[v] = b
    combo = {k: c for k, c in combo.items() if c != 0}
    return g, combo


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


# support indices of the centered form

@dataclass(frozen=True)
class IndexData:
    n: int
    center: Fraction
    support: tuple[int, ...]  # exponents of nonzero centered coefficients, ascending
    low_exp: int
    tail_gap: Optional[int]  # n minus the next-highest support exponent
    symmetry_order: int  # order of {z : P0(zX) = P0(X)}
    projective_symmetry_order: int  # order of {z : P0(zX) = c P0(X) for some c}, 0 = infinite
    bezout_support: Optional[dict[int, int]]  # sum(u*i) = 1 over support, when coprime
    bezout_shifted: Optional[dict[int, int]]  # same for support - low_exp


def index_data(p: Poly) -> IndexData:
    nf = normalize(p)
    supp = nf.centered.support()
    n = nf.centered.degree
    low = supp[0]
    below = [i for i in supp if i < n]
    tail_gap = (n - max(below)) if below else None
    g_full, combo_full = ext_gcd_combo(supp)
    shifted = [i - low for i in supp]
    g_shift, combo_shift = ext_gcd_combo(shifted)
    return IndexData(
        n=n,
        center=nf.shift,
        support=supp,
        low_exp=low,
        tail_gap=tail_gap,
        symmetry_order=g_full,
        projective_symmetry_order=g_shift,
        bezout_support=combo_full if g_full == 1 else None,
        bezout_shifted=combo_shift if g_shift == 1 else None,
    )


# critical structure and value separation

@dataclass(frozen=True)
class CriticalStructure:
    derivative: Poly
    radical: Poly  # monic product of distinct critical-point factors
    count: int  # number of distinct critical points (degree of radical)
    profile: tuple[int, ...]  # critical-point multiplicities in P', descending
    separation_poly: Poly  # monic, roots are exactly the critical values
    is_separated: bool  # all critical values distinct
    has_zero_value: bool  # some critical value equals 0


def critical_structure(p: Poly) -> CriticalStructure:
    if p.degree < 2:
        raise ValueError("critical structure needs degree at least 2")
    dp = p.derivative()
    rad = radical(dp)
    l = rad.degree
    profile: list[int] = []
    for factor, mult in squarefree_parts(dp):
        profile.extend([mult] * factor.degree)
    profile.sort(reverse=True)
    # separation polynomial by evaluation and interpolation: since rad is
    # monic, Res_X(rad, t - P) = prod_i (t - P(alpha_i)) for each value t
    pts = []
    for t in range(l + 1):
        val = resultant(rad, Poly.of(Q(t)) - p)
        pts.append((Q(t), val))
    sep = lagrange_interpolate(pts)
    assert sep.degree == l and sep.lc == 1, "separation polynomial must be monic"
    separated = poly_gcd(sep, sep.derivative()).degree == 0
    return CriticalStructure(
        derivative=dp,
        radical=rad,
        count=l,
        profile=tuple(profile),
        separation_poly=sep,
        is_separated=separated,
        has_zero_value=sep.coeff(0) == 0,
    )


# affine symmetries of the root set

@dataclass(frozen=True)
class AffineSymmetry:
    center: Fraction
    order: int  # 0 means every rotation about the center (single distinct root)


def affine_symmetry(p: Poly) -> Optional[AffineSymmetry]:
    """Largest group of affine maps permuting the distinct roots of p.

    Any finite affine symmetry of a set with at least two points is a
    root-of-unity rotation about the set's centroid, so the group is cyclic
    and determined by its order. Returns None when only the identity works.
    """
    if p.degree < 1:
        raise ValueError("affine symmetry needs degree at least 1")
    rad = radical(p)
    k = rad.degree
    if k == 1:
        return AffineSymmetry(center=-rad.coeff(0), order=0)
    mu = -rad.coeff(k - 1) / k
    shifted = rad.taylor_shift(mu)
    g = 0
    for i in shifted.support():
        g = math.gcd(g, k - i)
    if g <= 1:
        return None
    return AffineSymmetry(center=mu, order=g)


# linear factors of the value-sharing curves

@dataclass(frozen=True)
class LinearFactor:
    order: int  # the slope b is a primitive order-th root of unity
    c_exponent: int  # the multiplier is b**c_exponent; 0 for the shared curve
    c_rational: Optional[Fraction]  # the multiplier as a rational, when it is one


@dataclass(frozen=True)
class LinearFactorScan:
    applicable: bool  # high-gap shape present, so the family below is complete
    gap: Optional[int]  # support gap below the top exponent, None for pure powers
    mode: str
    factors: tuple[LinearFactor, ...]


def linear_factor_scan(p: Poly, mode: str = "F") -> LinearFactorScan:
    """Lines X = bY inside a value-sharing curve.

    Against the centered form, such a line inside the shared curve means
    P0(bY) = P0(Y), which holds for b a primitive r-th root of unity
    exactly when r divides every support exponent. Inside a scaled curve
    the line forces P0(bY) = c P0(Y) with c = b^low, possible exactly
    when r divides every support gap but not the low exponent itself.
    The factors reported are always genuine. They are the complete list
    of linear factors only when the support gap below the top exponent
    is at least 3, which rules out every line that is not through the
    center; ``applicable`` records that, and when it is False the caller
    must fall back to the separation route.
    """
    if mode not in ("F", "F_c"):
        raise ValueError("mode must be 'F' or 'F_c'")
    idx = index_data(p)
    applicable = idx.tail_gap is not None and idx.tail_gap >= 3
    factors: list[LinearFactor] = []
    if mode == "F":
        r = idx.symmetry_order
        if r > 1:
            factors.append(LinearFactor(r, 0, Q(1)))
    else:
        r = idx.projective_symmetry_order
        if r > 1 and idx.low_exp % r != 0:
            c_rat = Q(-1) if r == 2 else None
            factors.append(LinearFactor(r, idx.low_exp, c_rat))
    return LinearFactorScan(applicable, idx.tail_gap, mode, tuple(factors))


# configurations with known genus-0/1 exceptions

@dataclass(frozen=True)
class ExceptionalFlags:
    quartic_w_case: bool  # degree 4, simple critical points, w-orbit values
    quintic_case: bool  # degree 5, profile (2, 2)
    quartic_structural: bool  # degree 4, profile (1, 1, 1)


def exceptional_flags(cs: CriticalStructure) -> ExceptionalFlags:
    """Flag the critical structures carrying the exceptional verdicts.

    The w-orbit condition on the three critical values of a quartic (the
    cyclic ratios all equal to a primitive cube root of unity) says
    exactly that the values are the roots of T^3 - d with d != 0: both
    elementary symmetric functions e1 and e2 vanish while e3 does not.
    That is read off the value polynomial without leaving the rationals.
    """
    n = cs.derivative.degree + 1
    sep = cs.separation_poly
    structural = n == 4 and cs.profile == (1, 1, 1)
    w = (
        structural
        and sep.coeff(2) == 0
        and sep.coeff(1) == 0
        and sep.coeff(0) != 0
    )
    return ExceptionalFlags(
        quartic_w_case=w,
        quintic_case=n == 5 and cs.profile == (2, 2),
        quartic_structural=structural,
    )
