"""Exact arithmetic in Q viewed as a discretely valued field.

The valuation ring is Z localized at a prime p, with uniformizer p and
residue field F_p.  Scalars are plain :class:`fractions.Fraction` values;
residues are ints in ``range(p)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Fraction
ResidueScalar = int
Valuation = Union[int, float]

INFINITY = math.inf

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def parse_scalar(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` with signed decimal integers."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"bad scalar: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_scalar(x: Fraction) -> str:
    return str(Fraction(x))


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class DVRContext:
    """The prime p fixing O = Z_(p), the uniformizer and k = F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"not prime: {self.p}")

    @property
    def q(self) -> int:
        return self.p

    def valuation(self, x) -> Valuation:
        x = Fraction(x)
        if x == 0:
            return INFINITY
        return (_int_valuation(x.numerator, self.p)
                - _int_valuation(x.denominator, self.p))

    def power(self, n: int) -> Fraction:
        return Fraction(self.p) ** n

    def is_integral(self, x) -> bool:
        return Fraction(x).denominator % self.p != 0

    def unit_part(self, x) -> Fraction:
        """x / p^v(x) for nonzero x."""
        return Fraction(x) / self.power(self.valuation(x))

    def residue(self, x) -> ResidueScalar:
        x = Fraction(x)
        if not self.is_integral(x):
            raise ValueError(f"not integral: {x}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def lift(self, r: ResidueScalar) -> Fraction:
        return Fraction(r % self.p)

    def inv(self, r: ResidueScalar) -> ResidueScalar:
        return pow(r, -1, self.p)

    def reduce_mod_power(self, x, a: int) -> Fraction:
        """Canonical representative of x modulo p^a O.

        With t = min(v(x), a) the representative is p^t * r, where r is
        the integer in [0, p^(a-t)) congruent to x / p^t.  For a >= 0 and
        integral x this is the usual integer in [0, p^a).
        """
        x = Fraction(x)
        if x == 0:
            return Fraction(0)
        t = min(self.valuation(x), a)
        y = x / self.power(t)
        mod = self.p ** (a - t)
        r = y.numerator * pow(y.denominator, -1, mod) % mod if mod > 1 else 0
        return self.power(t) * r
