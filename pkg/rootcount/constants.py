# rootcount/constants.py

# Seeds
DEFAULT_SEED = 0

# Oracle: refuse to enumerate rings larger than this
DEFAULT_MAX_BRUTE = 10_000_000

# Fields up to this size are searched exhaustively instead of split at random
SMALL_P_THRESHOLD = 257

# Attempts per randomized split, before error amplification
SPLIT_BUDGET_BASE = 40

# Primality is only checked deterministically below 2**64
MAX_PRIME_BITS = 64

# Parsed polynomials larger than this are rejected before expansion
MAX_DEGREE = 300
MAX_COEFF_BITS = 20_000

# Benchmark polynomials are products of this many random cubics
BENCH_FACTORS = 5
BENCH_FACTOR_DEGREE = 3

# Output
SAVED_SUBCOMMANDS = [
    ("count", "Count roots"),
    ("tree", "Build recursion tree"),
]

FAILURE_MESSAGE = (
    "Sorry, your Las Vegas factoring method failed. "
    "You have an under-count so you should try re-running."
)
SUCCESS_MESSAGE = "If you've seen no under-count messages then your count is correct!"

# Exit codes
EXIT_EXACT = 0
EXIT_USAGE = 1
EXIT_UNDERCOUNT = 2
