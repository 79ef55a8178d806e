# rootcount/poly_zpk.py
from dataclasses import dataclass

from .arith import CappedValuation, PrimePowerRing, mod_reduce, ord_p_capped, pow_p
from .exceptions import LiftError
from .poly_fp import PolyFp


@dataclass(frozen=True)
class PolyMod:
    """
    A polynomial over Z/(p^k), little-endian, coefficients in [0, p^k).

    The formal degree (len(coeffs) - 1) is kept through every reduction even
    when leading coefficients vanish; only mod_p_reduction strips it.
    """

    ring: PrimePowerRing
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        m = self.ring.modulus
        if any(not 0 <= c < m for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {m})")

    @classmethod
    def from_integer_coeffs(cls, raw, ring):
        raw = list(raw)
        if not raw:
            raise ValueError("a polynomial needs at least one coefficient")
        return cls(ring, tuple(mod_reduce(int(c), ring) for c in raw))

    @property
    def p(self):
        return self.ring.p

    @property
    def k(self):
        return self.ring.k

    @property
    def formal_degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def eval(self, x):
        m = self.ring.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def content_valuation(self):
        best = CappedValuation.at_least_cap(self.k)
        for c in self.coeffs:
            v = ord_p_capped(c, self.ring)
            if not v.is_capped and (best.is_capped or v.value < best.value):
                best = v
                if v.value == 0:
                    break
        return best

    def exact_divide_by_p_power(self, v):
        """Coefficient-wise c_i / p^v, landing in Z/(p^(k-v))."""
        if not 1 <= v <= self.k - 1:
            raise LiftError(f"cannot divide by p^{v} over {self.ring}")
        if self.content_valuation().bound() < v:
            raise LiftError(f"p^{v} does not divide every coefficient")
        target = self.ring.lower(v)
        q = pow_p(self.ring, v)
        return PolyMod(target, tuple((c // q) % target.modulus for c in self.coeffs))

    def taylor_shift(self, zeta0):
        """
        Coefficients of f(zeta0 + x) mod p^k, by repeated synthetic division.
        """
        m = self.ring.modulus
        c = list(self.coeffs)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] = (c[j] + zeta0 * c[j + 1]) % m
        return PolyMod(self.ring, tuple(c))

    def mod_p_reduction(self):
        return PolyFp.from_coeffs(self.coeffs, self.p)

    def __str__(self):
        terms = [
            (f"{c}" if i == 0 else f"{c}*x^{i}")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return (" + ".join(reversed(terms)) or "0") + f" (mod {self.p}^{self.k})"
