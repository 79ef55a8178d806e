# rootcount/lifting.py
"""
How the roots of f mod p^k cluster above a root zeta0 of f mod p.

s(f, zeta0) is the smallest i + ord_p(c_i) over the Taylor coefficients c_i
of f(zeta0 + x). Every lift zeta0 + p*sigma then satisfies
f(zeta0 + p*sigma) = p^s * child(sigma) mod p^k, where child lives over
Z/(p^(k-s)).
"""
import logging
from dataclasses import dataclass

from .arith import ord_p_capped, pow_p
from .exceptions import LiftError, ZeroPolynomialError
from .poly_zpk import PolyMod

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SInvariant:
    value: int | None  # None: every term reaches k
    source_root: int

    @property
    def at_least_k(self):
        return self.value is None


def _s_from_shift(shifted, k):
    best = k
    for i in range(min(shifted.formal_degree, k - 1) + 1):
        if i >= best:
            break
        term = i + ord_p_capped(shifted.coeffs[i], shifted.ring).bound()
        best = min(best, term)
    return None if best >= k else best


def s_invariant(f, zeta0):
    if f.is_zero:
        raise ZeroPolynomialError(f"s is undefined for the zero polynomial over {f.ring}")
    s = _s_from_shift(f.taylor_shift(zeta0), f.k)
    logger.debug("s(f, %d) = %s over %s", zeta0, "AT_LEAST_K" if s is None else s, f.ring)
    return SInvariant(s, zeta0)


def child_poly(f, zeta0, s):
    """[p^-s * f(zeta0 + p*x)] mod p^(k-s), formal degree preserved."""
    k = f.k
    if not 2 <= s <= k - 1:
        raise LiftError(f"s = {s} is outside 2..{k - 1}")
    shifted = f.taylor_shift(zeta0)
    target = f.ring.lower(s)
    m = target.modulus
    out = []
    for i, c in enumerate(shifted.coeffs):
        if i >= s:
            if i >= k:
                out.append(0)
            else:
                out.append(c * pow_p(f.ring, i - s) % m)
            continue
        q = pow_p(f.ring, s - i)
        if c % q:
            raise LiftError(
                f"coefficient {i} of the shift by {zeta0} is not divisible by p^{s - i}"
            )
        out.append(c // q % m)
    return PolyMod(target, tuple(out))
