# rootcount/oracle.py
from .constants import DEFAULT_MAX_BRUTE
from .exceptions import OracleGuardError


def brute_force_count(f, guard=DEFAULT_MAX_BRUTE):
    """Number of x in [0, p^k) with f(x) = 0 mod p^k, by exhaustive Horner."""
    m = f.ring.modulus
    if m > guard:
        raise OracleGuardError(m, guard)
    return sum(1 for x in range(m) if f.eval(x) == 0)
