# rootcount/arith.py
"""
Integer primitives shared by every other module: the ring Z/(p^k),
p-adic valuations capped at the working precision, and powers of p.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import isprime, multiplicity

from .constants import MAX_PRIME_BITS
from .exceptions import InvalidRingError


@dataclass(frozen=True)
class PrimePowerRing:
    p: int
    k: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.k, int):
            raise InvalidRingError("p and k must be integers")
        if self.k < 1:
            raise InvalidRingError(f"k must be at least 1, got {self.k}")
        if self.p < 2 or self.p.bit_length() > MAX_PRIME_BITS:
            raise InvalidRingError(
                f"p must be a prime below 2^{MAX_PRIME_BITS}, got {self.p}"
            )
        if not isprime(self.p):
            raise InvalidRingError(f"p = {self.p} is not prime")
        object.__setattr__(self, "modulus", _pow(self.p, self.k))

    def lower(self, v):
        """The ring Z/(p^(k-v)) reached after dividing out p^v."""
        return PrimePowerRing(self.p, self.k - v)

    def __str__(self):
        return f"Z/({self.p}^{self.k})"


@dataclass(frozen=True)
class CappedValuation:
    """ord_p of a residue mod p^cap. `value` is None when the residue is 0."""

    value: int | None
    cap: int

    @classmethod
    def at_least_cap(cls, cap):
        return cls(None, cap)

    @property
    def is_capped(self):
        return self.value is None

    def bound(self):
        """The value, with AT_LEAST_CAP read as the cap itself."""
        return self.cap if self.value is None else self.value

    def __add__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if self.value is None or self.value + e >= self.cap:
            return CappedValuation.at_least_cap(self.cap)
        return CappedValuation(self.value + e, self.cap)

    __radd__ = __add__

    def __str__(self):
        return f">={self.cap}" if self.value is None else str(self.value)


@lru_cache(maxsize=4096)
def _pow(p, e):
    # int.__pow__ is binary exponentiation
    return p**e


def pow_p(ring, e):
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return _pow(ring.p, e)


def mod_reduce(n, ring):
    # Python's % already lands in [0, modulus) for negative n
    return n % ring.modulus


def ord_p_capped(n, ring):
    r = n % ring.modulus
    if r == 0:
        return CappedValuation.at_least_cap(ring.k)
    return CappedValuation(multiplicity(ring.p, r), ring.k)
