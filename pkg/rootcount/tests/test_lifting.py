import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootcount.arith import PrimePowerRing
from rootcount.exceptions import LiftError, ZeroPolynomialError
from rootcount.lifting import child_poly, s_invariant
from rootcount.poly_zpk import PolyMod

F_COEFFS = [738, -10] + [0] * 8 + [1]
G_COEFFS = [-8, 28, -38, 25, -8, 1]


def poly(coeffs, p, k):
    return PolyMod.from_integer_coeffs(coeffs, PrimePowerRing(p, k))


def test_s_invariant_examples():
    f = poly(F_COEFFS, 3, 7)
    assert s_invariant(f, 1).value == 4
    assert s_invariant(poly([-1, 1], 3, 4), 1).value == 1

    g = poly(G_COEFFS, 17, 100)
    assert s_invariant(g, 1).value == 2
    assert s_invariant(g, 2).value == 3


def test_s_invariant_at_least_k():
    # x^4 at 0 over Z/(3^3): every term reaches 3
    s = s_invariant(poly([0, 0, 0, 0, 1], 3, 3), 0)
    assert s.at_least_k
    assert s.source_root == 0

    # a simple root at k = 1 already meets the precision
    assert s_invariant(poly([-1, 1], 3, 1), 1).at_least_k


def test_s_invariant_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        s_invariant(poly([0, 9], 3, 2), 0)


def test_child_poly_examples():
    child = child_poly(poly(F_COEFFS, 3, 7), 1, 4)
    assert child.ring == PrimePowerRing(3, 3)
    # 21x^4 + 13x^3 + 5x^2 + 9, formal degree 10 kept
    assert child.coeffs[:5] == (9, 0, 5, 13, 21)
    assert set(child.coeffs[5:]) == {0}
    assert child.formal_degree == 10


def test_child_poly_cubic_factor():
    g = poly(G_COEFFS, 17, 100)
    child = child_poly(g, 1, 2)
    assert child.k == 98
    m = child.ring.modulus
    # x^2 (4913x^3 - 867x^2 + 51x - 1)
    assert child.coeffs == (0, 0, -1 % m, 51, -867 % m, 4913)


def test_child_poly_rejects_bad_exponent():
    f = poly(F_COEFFS, 3, 7)
    with pytest.raises(LiftError):
        child_poly(f, 1, 1)
    with pytest.raises(LiftError):
        child_poly(f, 1, 7)
    # s = 5 exceeds s(f, 1) = 4, so a division is not exact
    with pytest.raises(LiftError):
        child_poly(f, 1, 5)


def _lift_case(seed):
    """A random (f, zeta0) with f = (x - zeta0)^m * u + p^j * w, p^k <= 10^5."""
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5, 7])
    k_max = 1
    while p ** (k_max + 1) <= 100_000:
        k_max += 1
    k = rng.randint(3, max(3, k_max))
    zeta0 = rng.randrange(p)
    m = rng.randint(2, 4)

    coeffs = [1]
    for _ in range(m):
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= zeta0 * coeffs[i + 1]
    u = [rng.randrange(p**k) for _ in range(rng.randint(1, 4))]
    product = [0] * (len(coeffs) + len(u) - 1)
    for i, a in enumerate(coeffs):
        for j, b in enumerate(u):
            product[i + j] += a * b
    j = rng.randint(2, k)
    product = [c + p**j * rng.randrange(p**k) for c in product]
    return poly(product, p, k), zeta0


@pytest.mark.parametrize("seed", range(200))
def test_child_poly_scaling_identity(seed):
    f, zeta0 = _lift_case(seed)
    p, k = f.p, f.k
    s = s_invariant(f, zeta0)
    top = k - 1 if s.at_least_k else min(s.value, k - 1)
    if top < 2:
        pytest.skip("no admissible s for this draw")

    for exponent in sorted({2, (2 + top) // 2, top}):
        child = child_poly(f, zeta0, exponent)
        assert child.mod_p_reduction().degree <= exponent
        m = f.ring.modulus
        for sigma in range(p ** (k - exponent)):
            lhs = f.eval((zeta0 + p * sigma) % m)
            rhs = p**exponent * child.eval(sigma % child.ring.modulus) % m
            assert lhs == rhs


def _multiplicity(ft, root):
    """Times (x - root) divides ft, by repeated synthetic division over Z/(p)."""
    p = ft.p
    coeffs = list(ft.coeffs)
    j = 0
    while coeffs and sum(c * root**i for i, c in enumerate(coeffs)) % p == 0:
        quotient = [0] * (len(coeffs) - 1)
        carry = 0
        for i in range(len(coeffs) - 1, 0, -1):
            carry = (coeffs[i] + carry * root) % p
            quotient[i - 1] = carry
        coeffs = quotient
        j += 1
    return j


@settings(max_examples=150, deadline=None)
@given(
    p=st.sampled_from([2, 3, 5, 7]),
    k=st.integers(min_value=2, max_value=5),
    roots=st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=6),
    noise=st.lists(st.integers(min_value=0, max_value=10**4), min_size=1, max_size=7),
)
def test_s_of_lifting_degenerate_root_is_bounded_by_multiplicity(p, k, roots, noise):
    coeffs = [1]
    for r in roots:
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    coeffs = [c + p * n for c, n in zip(coeffs, noise + [0] * len(coeffs))]
    f = poly(coeffs, p, k)
    ft = f.mod_p_reduction()
    m = f.ring.modulus

    for zeta0 in sorted({r % p for r in roots}):
        j = _multiplicity(ft, zeta0)
        if j < 2:
            continue
        lifts = any(f.eval((zeta0 + p * sigma) % m) % p**2 == 0 for sigma in range(p))
        if not lifts:
            continue
        s = s_invariant(f, zeta0)
        if s.at_least_k:
            assert k <= j
        else:
            assert 2 <= s.value <= j
