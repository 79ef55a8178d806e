import pytest

from rootcount.arith import PrimePowerRing
from rootcount.exceptions import OracleGuardError
from rootcount.oracle import brute_force_count
from rootcount.poly_zpk import PolyMod


def poly(coeffs, p, k):
    return PolyMod.from_integer_coeffs(coeffs, PrimePowerRing(p, k))


@pytest.mark.parametrize(
    "coeffs, p, k, expected",
    [
        ([738, -10] + [0] * 8 + [1], 3, 7, 190),
        ([-1, 1], 5, 3, 1),
        ([0, 0, 1], 2, 4, 4),  # x^2 = 0 mod 16 iff 4 | x
        ([1, 0, 1], 3, 2, 0),
        ([0], 7, 2, 49),
    ],
)
def test_brute_force_count(coeffs, p, k, expected):
    assert brute_force_count(poly(coeffs, p, k)) == expected


def test_guard():
    f = poly([0, 1], 2, 30)
    with pytest.raises(OracleGuardError) as excinfo:
        brute_force_count(f, guard=10**6)
    assert excinfo.value.modulus == 2**30
    assert "guard is 1000000" in str(excinfo.value)
