# rootcount/poly_fp.py
"""
Polynomials over Z/(p): distinct-root counting and Las Vegas root isolation.

Arithmetic is delegated to sympy's dense galois-field toolkit, which works on
big-endian coefficient lists. PolyFp keeps the little-endian order used by
PolyMod and converts at the boundary.
"""
import logging
from dataclasses import dataclass

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (gf_diff, gf_eval, gf_gcd, gf_monic,
                                     gf_pow_mod, gf_quo, gf_sub,
                                     gf_sub_ground)

from .constants import SMALL_P_THRESHOLD
from .exceptions import ZeroPolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyFp:
    p: int
    coeffs: tuple  # little-endian, no trailing zeros; () is the zero polynomial

    @classmethod
    def from_coeffs(cls, coeffs, p):
        trimmed = [int(c) % p for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(p, tuple(trimmed))

    @classmethod
    def _from_dense(cls, dense, p):
        return cls.from_coeffs(reversed(dense), p)

    def _dense(self):
        return [int(c) for c in reversed(self.coeffs)]

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        # -1 for the zero polynomial, as usual
        return len(self.coeffs) - 1

    def eval(self, x):
        return int(gf_eval(self._dense(), x % self.p, self.p, ZZ))

    def derivative(self):
        return PolyFp._from_dense(gf_diff(self._dense(), self.p, ZZ), self.p)

    def monic(self):
        if self.is_zero:
            return self
        _, g = gf_monic(self._dense(), self.p, ZZ)
        return PolyFp._from_dense(g, self.p)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) + f" (mod {self.p})"


@dataclass(frozen=True)
class RootSet:
    roots: tuple  # strictly increasing
    complete: bool
    expected: int = 0  # degree of the split polynomial, i.e. how many roots exist
    draws: int = 0

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def gcd_fp(a, b):
    if a.p != b.p:
        raise ValueError("polynomials over different fields")
    if a.is_zero and b.is_zero:
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    return PolyFp._from_dense(gf_gcd(a._dense(), b._dense(), a.p, ZZ), a.p)


def frobenius_power_mod(h):
    """x^p mod h, by square-and-multiply modulo h."""
    if h.degree < 1:
        raise ZeroPolynomialError("x^p mod h needs deg h >= 1")
    return PolyFp._from_dense(gf_pow_mod([1, 0], h.p, h._dense(), h.p, ZZ), h.p)


def _field_root_part(h):
    """gcd(h, x^p - x) without ever building x^p."""
    if h.degree < 1:
        return PolyFp(h.p, (1,))
    frob = frobenius_power_mod(h)
    return gcd_fp(h, PolyFp._from_dense(gf_sub(frob._dense(), [1, 0], h.p, ZZ), h.p))


def distinct_root_count(h):
    if h.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    return _field_root_part(h).degree


def split_linear(h, rng, budget, small_p_threshold=SMALL_P_THRESHOLD):
    """
    Roots of a monic squarefree h that splits into distinct linear factors.

    Small fields are enumerated. Larger ones are split Cantor-Zassenhaus style
    with gcd(g, (x+a)^((p-1)/2) - 1) for random a; a factor that resists
    `budget` attempts is abandoned and the result is marked incomplete.
    """
    p = h.p
    expected = max(h.degree, 0)
    if expected == 0:
        return RootSet((), True, 0, 0)

    if p == 2 or p <= small_p_threshold:
        roots = tuple(a for a in range(p) if h.eval(a) == 0)
        return RootSet(roots, True, expected, 0)

    half = (p - 1) // 2
    pending = [h.monic()._dense()]
    roots = []
    draws = 0
    complete = True
    while pending:
        g = pending.pop()
        if len(g) == 2:
            roots.append(int(-g[1]) % p)
            continue
        for attempt in range(1, budget + 1):
            a = rng.randrange(p)
            draws += 1
            w = gf_pow_mod([1, a], half, g, p, ZZ)
            d = gf_gcd(g, gf_sub_ground(w, 1, p, ZZ), p, ZZ)
            if 1 < len(d) < len(g):
                logger.debug(
                    "split degree %d as %d + %d on attempt %d",
                    len(g) - 1, len(d) - 1, len(g) - len(d), attempt,
                )
                pending.append(d)
                pending.append(gf_quo(g, d, p, ZZ))
                break
        else:
            logger.debug("split of degree %d gave up after %d draws", len(g) - 1, budget)
            complete = False

    return RootSet(tuple(sorted(roots)), complete, expected, draws)


def degenerate_locus(ft):
    """
    The monic polynomial whose roots are exactly the degenerate roots of ft.
    When ft' vanishes identically, gcd(ft, 0) = ft and every root counts.
    """
    if ft.is_zero:
        raise ZeroPolynomialError("degenerate roots of the zero polynomial")
    deriv = ft.derivative()
    h = ft.monic() if deriv.is_zero else gcd_fp(ft, deriv)
    return _field_root_part(h)


def degenerate_roots(ft, rng, budget, small_p_threshold=SMALL_P_THRESHOLD):
    return split_linear(degenerate_locus(ft), rng, budget, small_p_threshold)
