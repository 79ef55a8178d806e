import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootcount.exceptions import ZeroPolynomialError
from rootcount.poly_fp import (PolyFp, degenerate_locus, degenerate_roots,
                               distinct_root_count, frobenius_power_mod,
                               gcd_fp, split_linear)

BIG_P = 123456791


def fp(coeffs, p):
    return PolyFp.from_coeffs(coeffs, p)


def from_roots(roots, p):
    """Little-endian coefficients of prod (x - r)."""
    coeffs = [1]
    for r in roots:
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return fp(coeffs, p)


def test_from_coeffs_strips():
    h = fp([3, 0, 7, 0], 7)
    assert h.coeffs == (3,)
    assert h.degree == 0
    assert fp([0, 0], 5).is_zero
    assert fp([0], 5).degree == -1


def test_derivative_and_monic():
    h = fp([1, 2, 3], 5)  # 3x^2 + 2x + 1
    assert h.derivative().coeffs == (2, 1)
    assert h.monic().coeffs == (2, 4, 1)
    assert fp([1, 0, 0, 1], 3).derivative().is_zero


def test_gcd():
    a = from_roots([1, 2, 2], 7)
    b = from_roots([2, 3], 7)
    assert gcd_fp(a, b) == from_roots([2], 7)
    assert gcd_fp(a, fp([0], 7)) == a.monic()
    with pytest.raises(ZeroPolynomialError):
        gcd_fp(fp([0], 7), fp([], 7))
    with pytest.raises(ValueError):
        gcd_fp(fp([1, 1], 7), fp([1, 1], 5))


def test_frobenius_power_mod():
    h = fp([1, 0, 1], 3)  # x^2 + 1 is irreducible mod 3
    # x^3 = -x mod x^2 + 1
    assert frobenius_power_mod(h).coeffs == (0, 2)
    with pytest.raises(ZeroPolynomialError):
        frobenius_power_mod(fp([4], 7))


@pytest.mark.parametrize(
    "coeffs, p, expected",
    [
        ([0, 2] + [0] * 8 + [1], 3, 2),  # x(x^9 - 1): roots 0 and 1
        ([1, 0, 1], 3, 0),
        ([-1, 1], 2, 1),
        ([5], 7, 0),
    ],
)
def test_distinct_root_count(coeffs, p, expected):
    assert distinct_root_count(fp(coeffs, p)) == expected


def test_distinct_root_count_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        distinct_root_count(fp([0], 3))


def test_distinct_root_count_large_prime():
    h = from_roots([1234, 1234, 1234, 7193, 2030], BIG_P)
    assert distinct_root_count(h) == 3


@settings(max_examples=80, deadline=None)
@given(
    p=st.sampled_from([2, 3, 5, 7, 11, 13, 31, 101]),
    coeffs=st.lists(st.integers(min_value=0, max_value=10**6), min_size=1, max_size=9),
)
def test_distinct_root_count_matches_evaluation(p, coeffs):
    h = fp(coeffs, p)
    if h.is_zero:
        return
    assert distinct_root_count(h) == sum(1 for a in range(p) if h.eval(a) == 0)


def test_split_linear_enumerates_small_fields():
    h = from_roots([1, 4, 5], 7)
    roots = split_linear(h, random.Random(0), budget=0)
    assert roots.roots == (1, 4, 5)
    assert roots.complete
    assert roots.draws == 0


def test_split_linear_randomized():
    h = from_roots([1234, 7193, 2030, 99], BIG_P)
    roots = split_linear(h, random.Random(7), budget=64)
    assert roots.complete
    assert roots.roots == (99, 1234, 2030, 7193)
    assert roots.expected == 4
    assert roots.draws >= 1


def test_split_linear_gives_up_without_budget():
    h = from_roots([3, 5], 11)
    roots = split_linear(h, random.Random(0), budget=0, small_p_threshold=2)
    assert not roots.complete
    assert len(roots) < roots.expected


def test_split_linear_constant():
    roots = split_linear(fp([1], BIG_P), random.Random(0), budget=0)
    assert roots.complete
    assert roots.roots == ()


def test_degenerate_locus():
    # x(x^9 - 1) = x(x - 1)^9 mod 3: only 1 is a repeated root
    ft = fp([0, 2] + [0] * 8 + [1], 3)
    assert degenerate_locus(ft) == from_roots([1], 3)

    # (x-1)^2 (x-2)^3 mod 17
    g = from_roots([1, 1, 2, 2, 2], 17)
    assert degenerate_locus(g) == from_roots([1, 2], 17)

    # x^3 mod 3 has a vanishing derivative
    assert degenerate_locus(fp([0, 0, 0, 1], 3)) == from_roots([0], 3)

    # repeated irreducible factors do not contribute
    irreducible_sq = fp([1, 0, 2, 0, 1], 3)  # (x^2 + 1)^2
    assert degenerate_locus(irreducible_sq).degree == 0


def test_degenerate_roots_large_prime():
    ft = from_roots([1234] * 3 + [7193] * 4 + [2030] * 12, BIG_P)
    roots = degenerate_roots(ft, random.Random(0), budget=64)
    assert roots.complete
    assert roots.roots == (1234, 2030, 7193)


def test_gcd_examples():
    assert gcd_fp(fp([-1, 0, 1], 7), fp([-1, 1], 7)).coeffs == (6, 1)
    ft = fp([0, -1] + [0] * 8 + [1], 3)  # x(x^9 - 1)
    assert gcd_fp(ft, fp([0, -1, 0, 1], 3)) == from_roots([0, 1], 3)


@pytest.mark.parametrize("a", [0, 3, 12])
def test_frobenius_of_linear_is_constant(a):
    assert frobenius_power_mod(from_roots([a], 13)).coeffs == ((a,) if a else ())


def test_frobenius_of_field_polynomial():
    assert frobenius_power_mod(fp([0, -1, 0, 0, 0, 1], 5)).coeffs == (0, 1)
    assert distinct_root_count(fp([0, -1, 0, 0, 0, 1], 5)) == 5


def test_split_linear_examples():
    assert split_linear(fp([-1, 0, 1], 7), random.Random(0), 8).roots == (1, 6)
    assert split_linear(fp([0, 1], BIG_P), random.Random(0), 8).roots == (0,)
    assert split_linear(fp([0, -1, 1], 3), random.Random(0), 8).roots == (0, 1)


@pytest.mark.parametrize(
    "ft, expected",
    [
        (fp([0, 2] + [0] * 8 + [1], 3), (1,)),
        (fp([4, -6, 2], 3), ()),  # 2(x-1)(x-2)
        (fp([0, 0, 1], 5), (0,)),
    ],
)
def test_degenerate_roots_examples(ft, expected):
    roots = degenerate_roots(ft, random.Random(0), budget=8)
    assert roots.complete
    assert roots.roots == expected


@settings(max_examples=60, deadline=None)
@given(
    p=st.sampled_from([3, 5, 7, 11]),
    roots=st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=8),
)
def test_degenerate_roots_are_double_roots(p, roots):
    ft = from_roots(roots, p)
    found = degenerate_roots(ft, random.Random(1), budget=32)
    assert found.complete
    deriv = ft.derivative()
    for r in found:
        assert ft.eval(r) == 0
        assert deriv.is_zero or deriv.eval(r) == 0
    residues = [r % p for r in roots]
    assert set(found) == {r for r in set(residues) if residues.count(r) > 1}
