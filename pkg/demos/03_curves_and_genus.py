"""Value-sharing curves: identities, singular points, genus.

For P of degree n the pairs (f, g) with P(f) = P(g) live on the curve
F(X, Y) = (P(X) - P(Y)) / (X - Y), and the pairs with P(f) = c P(g)
live on F_c(X, Y) = P(X) - c P(Y). Uniqueness questions reduce to
whether these curves have components of genus 0 or 1. This script
builds both curves, checks the algebraic identities they satisfy,
counts their singular points from the critical data alone, and reads
off the genus.

Run:  python3 demos/03_curves_and_genus.py
"""

from fractions import Fraction as Q

from uniqpoly import (
    Configuration,
    critical_structure,
    genus_ordinary,
    parse_poly,
    scaled_value_curve,
    shared_value_curve,
    singular_census,
    verify_curve_identities,
)


def main() -> None:
    p = parse_poly("X^4 + X + 1")
    print(f"P = {p}")
    F = shared_value_curve(p)
    print(f"shared curve F: {F}")
    checks = verify_curve_identities(p, Q(2))
    print("identities:", ", ".join(f"{k}={v}" for k, v in checks.items()))
    assert all(checks.values())

    # the smooth-quartic exception: three simple critical points with
    # distinct values leave the degree-3 curve without singular points
    cs = critical_structure(p)
    cfg = Configuration("shared", cs.profile)
    census = singular_census(cfg)
    print(f"\ncritical profile {cs.profile}, separated={cs.is_separated}")
    print(f"singular census: {census}")
    print(f"genus of F: {genus_ordinary(cfg.degree, census)}")
    print("genus 1 admits nonconstant meromorphic parametrizations, so")
    print("meromorphic uniqueness fails even though rational holds.\n")

    # two critical points, one of them deep: the curve drops to genus 0
    q = parse_poly("X^3 - 3X")
    cq = critical_structure(q)
    cfg = Configuration("shared", cq.profile)
    print(f"P = {q}: profile {cq.profile} gives genus",
          genus_ordinary(cfg.degree, singular_census(cfg)))

    # the orbit quartic: critical values form a 3-cycle under scaling
    # by a primitive cube root of unity, pairing all three points on
    # the scaled curve and forcing genus 0 there
    w = parse_poly("2X^4 + 6X^2 + 2X + 3")
    cw = critical_structure(w)
    print(f"\nP = {w}")
    print(f"value polynomial: {cw.separation_poly}")
    orbit = Configuration("scaled", (1, 1, 1), ((0, 1), (1, 2), (2, 0)))
    census = singular_census(orbit)
    print(f"scaled-curve census: {len(census)} ordinary double points")
    print(f"genus of F_c: {genus_ordinary(orbit.degree, census)}")

    # a scaled curve for explicit rational c, with its own identities
    Fc = scaled_value_curve(q, Q(2))
    print(f"\nscaled curve of {q} at c = 2: {Fc}")


if __name__ == "__main__":
    main()
