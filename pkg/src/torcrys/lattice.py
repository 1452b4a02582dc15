"""Affine weight lattice of type A_n^(1) (n odd): Cartan matrix, simple
roots and coroots, fundamental and level-zero fundamental weights,
simple reflections.

Weights are stored in (values on h_0..h_n, coefficient of delta)
coordinates, i.e. lambda = sum_i lambda(h_i) Lambda_i + delta_coeff * delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class EvenRankError(ValueError):
    """The monomial-crystal constructions require n odd."""


@dataclass(frozen=True)
class Weight:
    h: tuple
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        object.__setattr__(self, "delta", Fraction(self.delta))

    def pair(self, i: int) -> int:
        """Value lambda(h_i)."""
        return self.h[i]

    def level(self) -> int:
        """Pairing with the canonical central element c = h_0 + ... + h_n."""
        return sum(self.h)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.h, other.h)),
                      self.delta + other.delta)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.h, other.h)),
                      self.delta - other.delta)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.h), -self.delta)

    def scaled(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.h), c * self.delta)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.h) and self.delta == 0

    def __str__(self):
        return f"({','.join(map(str, self.h))};{self.delta}d)"


class RootSystem:
    """Type A_n^(1) data for odd n >= 3, with a parity function s on the
    nodes satisfying s_i + s_j = 1 on every edge of the cyclic diagram.

    Both alternating parity functions occur in practice (the anchor
    monomial of each crystal decides which), so the choice is a
    constructor argument: s_i = (i + parity) mod 2.
    """

    def __init__(self, n: int, parity: int = 0):
        if n % 2 == 0:
            raise EvenRankError(f"n = {n} is even; these crystals need n odd")
        if n < 3:
            raise ValueError("n must be at least 3")
        self.n = n
        self.r = (n - 1) // 2
        self.parity = parity % 2
        self.nodes = tuple(range(n + 1))

    @classmethod
    def for_fundamental(cls, n: int, ell: int) -> "RootSystem":
        """Root system whose parity class contains e^{varpi_ell} Y_{ell,0} Y_{0,d_ell}^-1."""
        if not 1 <= ell <= n:
            raise ValueError(f"ell = {ell} out of range 1..{n}")
        return cls(n, parity=ell % 2)

    # -- index helpers -------------------------------------------------------

    def mod(self, i: int) -> int:
        return i % (self.n + 1)

    def s(self, i: int) -> int:
        return (i + self.parity) % 2

    def cartan(self, i: int, j: int) -> int:
        i, j = self.mod(i), self.mod(j)
        if i == j:
            return 2
        if self.mod(i - j) == 1 or self.mod(j - i) == 1:
            return -1
        return 0

    def adjacent(self, i: int, j: int) -> bool:
        return self.cartan(i, j) == -1

    def d(self, ell: int) -> int:
        """Distance between nodes 0 and ell on the cycle."""
        if not 1 <= ell <= self.n:
            raise ValueError(f"ell = {ell} out of range")
        return min(ell, self.n + 1 - ell)

    # -- distinguished weights -------------------------------------------------

    def zero_weight(self) -> Weight:
        return Weight((0,) * (self.n + 1), Fraction(0))

    def alpha(self, i: int) -> Weight:
        """Simple root alpha_i: alpha_i(h_j) = C_{j,i}, alpha_i(d) = delta_{0,i}."""
        i = self.mod(i)
        return Weight(tuple(self.cartan(j, i) for j in self.nodes),
                      Fraction(1 if i == 0 else 0))

    def delta_weight(self) -> Weight:
        return Weight((0,) * (self.n + 1), Fraction(1))

    def fundamental(self, i: int) -> Weight:
        i = self.mod(i)
        return Weight(tuple(1 if j == i else 0 for j in self.nodes), Fraction(0))

    def varpi(self, ell: int) -> Weight:
        """Level-zero fundamental weight Lambda_ell - Lambda_0."""
        if not 1 <= ell <= self.n:
            raise ValueError(f"ell = {ell} out of range 1..{self.n}")
        return self.fundamental(ell) - self.fundamental(0)

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i(w) = w - w(h_i) alpha_i."""
        c = w.pair(self.mod(i))
        return w - self.alpha(i).scaled(c) if c else w
