"""Cyclotomic polynomials and the quotient-ring arithmetic used by witnesses."""

from __future__ import annotations

from fractions import Fraction as Q

from uniqpoly.cyclotomic import CycloNum, cyclotomic, euler_phi, eval_at_cyclo, zeta
from uniqpoly.polynomials import Poly, X


def test_cyclotomic_pins():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(2) == X + 1
    assert cyclotomic(3) == X**2 + X + 1
    assert cyclotomic(4) == X**2 + 1
    assert cyclotomic(6) == X**2 - X + 1
    assert cyclotomic(12) == X**4 - X**2 + 1


def test_cyclotomic_product_identity():
    for n in (1, 2, 6, 8, 12, 15):
        prod = Poly.of(1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Poly.from_support({n: 1, 0: -1})


def test_phi_degrees():
    for n in range(1, 30):
        assert cyclotomic(n).degree == euler_phi(n)


def test_zeta_relations():
    z3 = zeta(3)
    assert z3**3 == 1
    assert z3**2 + z3 + 1 == 0
    assert (z3**2).as_rational() is None
    z4 = zeta(4)
    assert z4 * z4 == -1
    assert (z4**4).as_rational() == 1
    # power wraps modulo r
    assert zeta(5, 7) == zeta(5) ** 2


def test_ring_ops_and_rationals():
    z = zeta(6)
    a = z + 2
    b = a * a - 4 * z - 4  # z^2
    assert b == z * z
    assert CycloNum.of(6, Q(3, 2)).as_rational() == Q(3, 2)
    assert (z - z).as_rational() == 0


def test_eval_at_cyclo():
    z3 = zeta(3)
    assert eval_at_cyclo(X**2 + X + 1, z3).is_zero
    assert eval_at_cyclo(X**3 - 1, z3).is_zero
    assert eval_at_cyclo(X**3 + 1, z3).as_rational() == 2
    p = 2 * X**2 - X + 5
    z4 = zeta(4)
    # p(i) = -2 - i + 5 = 3 - i
    assert eval_at_cyclo(p, z4) == CycloNum.of(4, 3 - X)
