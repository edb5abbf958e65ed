"""Cyclotomic polynomials and exact arithmetic in Q[X] / Phi_r.

Scaling witnesses have root-of-unity multipliers; verifying them honestly
means expanding the claimed identity with coefficients in Q(zeta_r) and
reducing modulo the r-th cyclotomic polynomial, which is what CycloNum does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomials import Poly, X

Q = Fraction


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    out = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic(r: int) -> Poly:
    """Phi_r, by dividing X^r - 1 by the lower cyclotomics."""
    if r < 1:
        raise ValueError("index must be positive")
    if r == 1:
        return X - 1
    q = Poly.from_support({r: 1, 0: -1})
    for d in range(1, r):
        if r % d == 0:
            q = q.exact_div(cyclotomic(d))
    return q


@dataclass(frozen=True)
class CycloNum:
    """Element of Q[X] / Phi_r, coefficients reduced below deg Phi_r."""

    r: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(r: int, p: Poly | Fraction | int) -> "CycloNum":
        if not isinstance(p, Poly):
            p = Poly.of(Q(p))
        return CycloNum(r, (p % cyclotomic(r)).coeffs)

    def _lift(self) -> Poly:
        return Poly(self.coeffs)

    def _join(self, other) -> tuple["CycloNum", "CycloNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.of(self.r, other)
        if not isinstance(other, CycloNum):
            raise TypeError(f"cannot mix CycloNum with {type(other).__name__}")
        if other.r != self.r:
            raise ValueError("mixed cyclotomic orders")
        return self, other

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other) -> "CycloNum":
        a, b = self._join(other)
        return CycloNum.of(self.r, a._lift() + b._lift())

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.r, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "CycloNum":
        a, b = self._join(other)
        return CycloNum.of(self.r, a._lift() - b._lift())

    def __rsub__(self, other) -> "CycloNum":
        a, b = self._join(other)
        return CycloNum.of(self.r, b._lift() - a._lift())

    def __mul__(self, other) -> "CycloNum":
        a, b = self._join(other)
        return CycloNum.of(self.r, a._lift() * b._lift())

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            raise ValueError("negative power")
        out = CycloNum.of(self.r, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.of(self.r, other)
        return (
            isinstance(other, CycloNum)
            and other.r == self.r
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction when it lies in Q, else None."""
        if not self.coeffs:
            return Q(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def __repr__(self) -> str:
        return f"CycloNum(r={self.r}, {self._lift()!r})"


def zeta(r: int, power: int = 1) -> CycloNum:
    """zeta_r^power as an element of Q[X]/Phi_r."""
    return CycloNum.of(r, Poly.from_support({power % r: 1}))


def eval_at_cyclo(p: Poly, x: CycloNum) -> CycloNum:
    """p(x) in Q[X]/Phi_r, by Horner."""
    acc = CycloNum.of(x.r, 0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
