"""Projective geometry of the value-sharing curves.

For P of degree n, two plane curves carry the whole classification problem:

* the shared-value curve, the degree n-1 homogenization of
  (P(x) - P(y)) / (x - y), whose points are the nondiagonal solutions of
  P(x) = P(y);
* the scaled-value curve, the degree n homogenization of P(x) - c P(y)
  for a multiplier c not in {0, 1}.

Both are built coefficient by coefficient (the quotient via geometric sums),
never by polynomial division, and every identity about their partials is
checked exactly.

The singular points of either curve sit at pairs of critical points whose
values match under the multiplier. Under value separation (all critical
values distinct) the census of singular points is forced by the multiplicity
profile and the value pairing alone, which is what the abstract census
computes; genus and irreducibility bounds then follow by counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polynomials import Poly
from .trivariate import TriPoly, homogenize_x, homogenize_y, tri

Q = Fraction


# constructors

def shared_value_curve(p: Poly) -> TriPoly:
    """Homogenization of (P(x) - P(y)) / (x - y), degree n - 1.

    Uses x^k - y^k = (x - y) * sum_{j<k} x^(k-1-j) y^j termwise, so no
    division happens and the constant term of P drops out by itself.
    """
    n = p.degree
    if n < 2:
        raise ValueError("need degree at least 2")
    terms: dict[tuple[int, int, int], Fraction] = {}
    for k in p.support():
        if k == 0:
            continue
        a = p.coeff(k)
        for j in range(k):
            e = (k - 1 - j, j, n - k)
            terms[e] = terms.get(e, Q(0)) + a
    return TriPoly(terms)


def scaled_value_curve(p: Poly, c: Fraction | int) -> TriPoly:
    """Homogenization of P(x) - c P(y), degree n."""
    c = Q(c)
    if c == 0 or c == 1:
        raise ValueError("multiplier must avoid 0 and 1")
    n = p.degree
    terms: dict[tuple[int, int, int], Fraction] = {}
    for k in p.support():
        a = p.coeff(k)
        terms[(k, 0, n - k)] = terms.get((k, 0, n - k), Q(0)) + a
        terms[(0, k, n - k)] = terms.get((0, k, n - k), Q(0)) - c * a
    return TriPoly(terms)


def restrict_diagonal(t: TriPoly) -> Poly:
    """t(x, x, 1) as a univariate polynomial."""
    acc: dict[int, Fraction] = {}
    for (i, j, _k), c in t.terms.items():
        acc[i + j] = acc.get(i + j, Q(0)) + c
    return Poly.from_support(acc)


# exact identity battery

def verify_curve_identities(p: Poly, c: Fraction | int) -> dict[str, bool]:
    """Check every structural identity both curves must satisfy.

    Returns a name -> bool map; all True for every valid input. Kept as a
    map rather than a bare bool so failures say which identity broke.
    """
    c = Q(c)
    n = p.degree
    F = shared_value_curve(p)
    G = scaled_value_curve(p, c)
    x, y, z = tri({(1, 0, 0): 1}), tri({(0, 1, 0): 1}), tri({(0, 0, 1): 1})
    dp = p.derivative()
    ph_x, ph_y = homogenize_x(p, n), homogenize_y(p, n)
    dph_x, dph_y = homogenize_x(dp, n - 1), homogenize_y(dp, n - 1)

    checks = {
        "shared_defining": (x - y) * F == ph_x - ph_y,
        "shared_dx": (x - y) * F.partial("x") == dph_x - F,
        "shared_dy": (x - y) * F.partial("y") == F - dph_y,
        "shared_euler": x * F.partial("x") + y * F.partial("y") + z * F.partial("z")
        == (n - 1) * F,
        "shared_diagonal": restrict_diagonal(F) == dp,
        "scaled_dx": G.partial("x") == dph_x,
        "scaled_dy": G.partial("y") == (-c) * dph_y,
        "scaled_euler": x * G.partial("x") + y * G.partial("y") + z * G.partial("z")
        == n * G,
        "scaled_diagonal": restrict_diagonal(G) == (1 - c) * p,
    }

    # z-partial vanishes to exact order n - m0 - 1, where m0 is the top
    # support exponent below n (for the shared curve the constant term
    # never enters)
    fz = F.partial("z")
    below = [k for k in p.support() if 0 < k < n]
    if below:
        m0 = max(below)
        expected = TriPoly(
            {(m0 - 1 - j, j, 0): (n - m0) * p.coeff(m0) for j in range(m0)}
        )
        ok = fz.z_multiplicity() == n - m0 - 1
        quot = fz.divide_z(n - m0 - 1) if ok else None
        mod_z = TriPoly({e: cc for e, cc in quot.terms.items() if e[2] == 0}) if ok else None
        checks["shared_dz_order"] = ok and mod_z == expected
    else:
        checks["shared_dz_order"] = fz.is_zero

    gz = G.partial("z")
    below_c = [k for k in p.support() if k < n]
    if below_c:
        m0 = max(below_c)
        a = p.coeff(m0)
        eterms: dict[tuple[int, int, int], Fraction] = {(m0, 0, 0): (n - m0) * a}
        key = (0, m0, 0)
        eterms[key] = eterms.get(key, Q(0)) - (n - m0) * a * c
        expected = TriPoly(eterms)
        ok = gz.z_multiplicity() == n - m0 - 1
        quot = gz.divide_z(n - m0 - 1) if ok else None
        mod_z = TriPoly({e: cc for e, cc in quot.terms.items() if e[2] == 0}) if ok else None
        checks["scaled_dz_order"] = ok and mod_z == expected
    else:
        checks["scaled_dz_order"] = gz.is_zero

    return checks


# abstract configurations and their singular census

@dataclass(frozen=True)
class Configuration:
    """Combinatorial shape of a value-sharing curve.

    ``mults`` lists the critical-point multiplicities (orders of vanishing
    of P'). ``pairing`` holds pairs (i, j) meaning value_i = c * value_j;
    it must be a partial injection without fixed points. The shared kind
    (multiplier 1 with the diagonal removed) admits no pairing here, since
    a pair would mean two equal critical values and the census is only
    complete under value separation.
    """

    kind: str  # "shared" or "scaled"
    mults: tuple[int, ...]
    pairing: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in ("shared", "scaled"):
            raise ValueError("kind must be 'shared' or 'scaled'")
        if not self.mults or any(m < 1 for m in self.mults):
            raise ValueError("multiplicities must be positive")
        l = len(self.mults)
        srcs = [i for i, _ in self.pairing]
        dsts = [j for _, j in self.pairing]
        if any(not (0 <= i < l and 0 <= j < l) for i, j in self.pairing):
            raise ValueError("pairing index out of range")
        if any(i == j for i, j in self.pairing):
            raise ValueError("a critical value cannot pair with itself")
        if len(set(srcs)) != len(srcs) or len(set(dsts)) != len(dsts):
            raise ValueError("pairing must be a partial injection")
        if self.kind == "shared" and self.pairing:
            raise ValueError("shared kind assumes separated values, no pairing")

    @property
    def n(self) -> int:
        return 1 + sum(self.mults)

    @property
    def degree(self) -> int:
        return self.n - 1 if self.kind == "shared" else self.n


@dataclass(frozen=True)
class CensusPoint:
    label: str
    multiplicity: int
    ordinary: bool


def singular_census(config: Configuration) -> tuple[CensusPoint, ...]:
    """Every singular point of the configured curve, assuming separated
    values and no critical value equal to zero for the scaled kind.

    Shared kind: the diagonal point over critical point i is singular of
    multiplicity m_i exactly when m_i >= 2, with distinct tangents. Scaled
    kind: each pair (i, j) contributes the point (alpha_i, alpha_j) with
    multiplicity min(m_i, m_j) + 1, ordinary exactly for m_i = m_j. There
    are no other singular points.
    """
    out: list[CensusPoint] = []
    if config.kind == "shared":
        for i, m in enumerate(config.mults):
            if m >= 2:
                out.append(CensusPoint(f"diag:{i}", m, True))
    else:
        for i, j in config.pairing:
            mi, mj = config.mults[i], config.mults[j]
            out.append(CensusPoint(f"pair:{i}->{j}", min(mi, mj) + 1, mi == mj))
    return tuple(out)


def genus_ordinary(
    degree: int, census: Sequence[CensusPoint], irreducible: bool = True
) -> int:
    """Genus of an irreducible plane curve with only ordinary singularities."""
    if not irreducible:
        raise ValueError("genus count needs an irreducible curve")
    if any(not pt.ordinary for pt in census):
        raise ValueError("genus count needs ordinary singular points")
    g = (degree - 1) * (degree - 2) // 2
    for pt in census:
        g -= pt.multiplicity * (pt.multiplicity - 1) // 2
    if g < 0:
        raise ValueError("census is inconsistent with an irreducible curve")
    return g


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    reason: str


def bezout_irreducibility(
    degree: int, census: Sequence[CensusPoint], no_linear_factors: bool
) -> IrreducibilityResult:
    """Exclude every factorization using the singular census.

    A split C = H * G with deg H = d1, deg G = d2 forces H and G to meet in
    exactly d1*d2 points counted with intersection multiplicity, all of them
    singular on C and hence in the census. At an ordinary census point the
    intersection number is exactly the product of the component
    multiplicities; elsewhere it is at least that. Linear components are
    invisible to this counting and must be excluded by the linear-factor
    scan, hence the flag.
    """
    for d1 in range(1, degree // 2 + 1):
        d2 = degree - d1
        if d1 == 1:
            if no_linear_factors:
                continue
            return IrreducibilityResult(
                False, "a linear component is not excluded by the census"
            )
        if _split_possible(d1, d2, census):
            return IrreducibilityResult(
                False, f"split {d1}+{d2} is consistent with the census"
            )
    return IrreducibilityResult(
        True, "every split contradicts the intersection count at the census"
    )


def _split_possible(d1: int, d2: int, census: Sequence[CensusPoint]) -> bool:
    # distribute each census multiplicity between the two components;
    # no component of degree d may carry a point of multiplicity d or more,
    # that would make it a union of lines
    target = d1 * d2
    ranges = []
    for pt in census:
        lo = max(0, pt.multiplicity - (d2 - 1))
        hi = min(pt.multiplicity, d1 - 1)
        if lo > hi:
            return False
        ranges.append((pt, lo, hi))

    # depth-first over assignments; track achieved product sums
    def walk(idx: int, acc: int, slack_seen: bool) -> bool:
        if acc > target:
            return False
        if idx == len(ranges):
            return acc == target or (acc < target and slack_seen)
        pt, lo, hi = ranges[idx]
        for u in range(lo, hi + 1):
            v = pt.multiplicity - u
            inter = u * v
            # a non-ordinary point shared by both components can absorb
            # extra intersection beyond the product bound
            slack = slack_seen or (not pt.ordinary and u >= 1 and v >= 1)
            if walk(idx + 1, acc + inter, slack):
                return True
        return False

    return walk(0, 0, False)


# concrete local probes at rational points

def _local_expansion(curve: TriPoly, x0, y0) -> dict[tuple[int, int], Fraction]:
    """Coefficients of u^a v^b in curve(x0 + u, y0 + v, 1)."""
    x0, y0 = Q(x0), Q(y0)
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j, _k), c in curve.terms.items():
        for a in range(i + 1):
            xa = math.comb(i, a) * x0 ** (i - a)
            if xa == 0:
                continue
            for b in range(j + 1):
                w = c * xa * math.comb(j, b) * y0 ** (j - b)
                if w == 0:
                    continue
                out[(a, b)] = out.get((a, b), Q(0)) + w
    return {e: c for e, c in out.items() if c != 0}


def local_multiplicity(curve: TriPoly, x0, y0) -> int:
    """Multiplicity of the affine point (x0, y0); 0 means off the curve."""
    exp = _local_expansion(curve, x0, y0)
    if not exp:
        raise ValueError("curve vanishes identically")
    return min(a + b for a, b in exp)


def tangent_cone_is_squarefree(curve: TriPoly, x0, y0) -> bool:
    """Whether the point is ordinary: initial form with distinct lines."""
    exp = _local_expansion(curve, x0, y0)
    mu = min(a + b for a, b in exp)
    if mu == 0:
        raise ValueError("point is not on the curve")
    coeffs = [exp.get((a, mu - a), Q(0)) for a in range(mu + 1)]
    return _binary_form_squarefree(coeffs)


def _binary_form_squarefree(coeffs: list[Fraction]) -> bool:
    # B(u, v) = sum coeffs[a] u^a v^(mu-a); squarefree as a form means the
    # dehomogenization in u is squarefree and v divides at most once
    from .polynomials import Poly as _P
    from .polynomials import poly_gcd as _gcd

    mu = len(coeffs) - 1
    f = _P.of(*coeffs)
    if f.is_zero:
        return False
    v_mult = mu - f.degree
    if v_mult > 1:
        return False
    if f.degree == 0:
        return True
    return _gcd(f, f.derivative()).degree == 0


# Wronskian-quotient forms on a concrete curve

WRONSKIAN_PAIRS = ("YZ", "XZ", "XY")

# On the curve the three Wronskians differ by partial-derivative factors:
# W(Y,Z)/F_x = -W(X,Z)/F_y = W(X,Y)/F_z. These cofactors turn equality of
# two presentations into a polynomial congruence.
_PAIR_VARIABLE = {"YZ": "x", "XZ": "y", "XY": "z"}
_PAIR_SIGN = {"YZ": 1, "XZ": -1, "XY": 1}


def _homogeneous_degree(t: TriPoly) -> int:
    degs = {i + j + k for (i, j, k) in t.terms}
    if not degs:
        raise ValueError("the zero polynomial has no degree")
    if len(degs) != 1:
        raise ValueError("not homogeneous")
    return degs.pop()


def _boundary_restriction(t: TriPoly, axis: str) -> Poly:
    """t with z = 0 and the off-axis variable set to 1, univariately."""
    acc: dict[int, Fraction] = {}
    for (i, j, k), c in t.terms.items():
        if k:
            continue
        e = i if axis == "x" else j
        acc[e] = acc.get(e, Q(0)) + c
    return Poly.from_support(acc)


@dataclass(frozen=True)
class WronskianForm:
    """A 1-form numerator * W(pair) / denominator on a plane curve.

    Scaling the homogeneous coordinates by t multiplies a Wronskian by
    t^2, so the quotient is scale-invariant exactly when the denominator
    degree exceeds the numerator degree by two; the constructor enforces
    that. ``pole_free_at_infinity`` records whether the denominator
    misses every point of the curve on z = 0, a sufficient (not
    necessary) condition for regularity there.
    """

    numerator: TriPoly
    denominator: TriPoly
    pair: str
    pole_free_at_infinity: bool

    def describe(self) -> str:
        a, b = self.pair
        return f"({self.numerator!r}) * W({a},{b}) / ({self.denominator!r})"


def make_wronskian_form(
    numerator: TriPoly, denominator: TriPoly, pair: str, curve: TriPoly
) -> WronskianForm:
    from .polynomials import poly_gcd

    if pair not in WRONSKIAN_PAIRS:
        raise ValueError(f"pair must be one of {WRONSKIAN_PAIRS}")
    if numerator.is_zero or denominator.is_zero:
        raise ValueError("numerator and denominator must be nonzero")
    deg_n = _homogeneous_degree(numerator)
    deg_d = _homogeneous_degree(denominator)
    if deg_d != deg_n + 2:
        raise ValueError(
            f"weight bookkeeping off: denominator degree {deg_d} "
            f"must be numerator degree {deg_n} plus 2"
        )

    def clear(axis: str) -> bool:
        dr = _boundary_restriction(denominator, axis)
        cr = _boundary_restriction(curve, axis)
        if dr.is_zero or cr.is_zero:
            return False
        return poly_gcd(dr, cr).degree == 0

    return WronskianForm(numerator, denominator, pair,
                         clear("x") and clear("y"))


def same_form_on_curve(a: WronskianForm, b: WronskianForm, curve: TriPoly) -> bool:
    """Whether two presentations define the same form on the curve.

    Clearing denominators through the Wronskian cofactors reduces the
    question to N_a * S_a * D_b - N_b * S_b * D_a being a multiple of
    the curve, decided by exact reduction.
    """
    sa = curve.partial(_PAIR_VARIABLE[a.pair])
    if _PAIR_SIGN[a.pair] < 0:
        sa = -sa
    sb = curve.partial(_PAIR_VARIABLE[b.pair])
    if _PAIR_SIGN[b.pair] < 0:
        sb = -sb
    diff = a.numerator * sa * b.denominator - b.numerator * sb * a.denominator
    return diff.reduce_x_mod(curve).is_zero


# a family of witness curves with many independent regular forms

@dataclass(frozen=True)
class Example1Certificate:
    m: int
    n: int
    curve: TriPoly
    forms: tuple[WronskianForm, ...]
    genus_lower_bound: int
    slice_orders: dict
    assumptions: tuple[str, ...]


def example1_family(m: int, n: int) -> Example1Certificate:
    """Regular forms on the curve x^n + y^m z^(n-m) + z^n = 0.

    Every monomial q of degree m - 2 yields a regular form
    q * W(X,Z) / (y^(m-1) z). The denominator vanishes on the curve only
    at the n smooth points with y = 0 (where the Wronskian order m - 1
    cancels the denominator exactly) and at the corner [0:1:0] (where,
    with k = n - m and e = gcd(n, k), the branch orders give the form
    order q + k/e - 1 >= 0). Distinct monomials stay independent on the
    curve provided no component has degree m - 2 or lower; that is
    recorded as an assumption, not proved.
    """
    if not (n > m >= 2 and n - m >= 2):
        raise ValueError("family needs n > m >= 2 with n - m >= 2")
    curve = tri({(n, 0, 0): 1, (0, m, n - m): 1, (0, 0, n): 1})
    den = tri({(0, m - 1, 1): 1})
    forms = []
    for a in range(m - 1):
        for b in range(m - 1 - a):
            q = tri({(a, b, m - 2 - a - b): 1})
            forms.append(make_wronskian_form(q, den, "XZ", curve))
    k = n - m
    e = math.gcd(n, k)
    slice_orders = {
        "unit-slice": {
            "points": n, "ord_y": 1, "ord_branch": m,
            "ord_wronskian": m - 1, "min_form_order": 0,
        },
        "corner-slice": {
            "branches": e, "ord_z": n // e, "ord_x": k // e,
            "ord_wronskian": (n + k) // e - 1,
            "min_form_order": k // e - 1,
        },
    }
    if n % 2:
        # cheap concrete probe: for odd n the unit slice has the
        # rational point [-1:0:1], which must be smooth
        assert local_multiplicity(curve, -1, 0) == 1
    return Example1Certificate(
        m, n, curve, tuple(forms), m * (m - 1) // 2, slice_orders,
        ("components-exceed-basis-degree",),
    )
