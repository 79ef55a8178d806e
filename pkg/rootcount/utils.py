# rootcount/utils.py
import csv
import json
import sys
import time

from sympy.polys.densearith import dup_mul
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ

from .constants import BENCH_FACTOR_DEGREE
from .counter import build_tree, count_roots


def allow_long_decimals():
    """Counts routinely run past the interpreter's 4300-digit int/str limit."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def integer_degree(coeffs):
    """Degree of an integer coefficient vector; 0 for the zero polynomial."""
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i
    return 0


def build_record(*, p, k, degree, count, exact, failures=(), tree=None, seed, elapsed_ms):
    """
    The JSON record shared by every subcommand. Keys and their order never
    change; counts travel as decimal strings.
    """
    return {
        "p": str(p),
        "k": k,
        "degree": degree,
        "count_decimal": str(count),
        "exact": exact,
        "failures": [list(path) for path in failures],
        "tree": None if tree is None else {"depth": tree.depth, "nodes": tree.nodes},
        "seed": str(seed),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def dump_record(record):
    return json.dumps(record)


def render_dot(root, p):
    """Directed graph of the recursion tree, root at the top."""
    lines = [
        "digraph rootcount {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    ids = {}
    for node in root.walk():
        ids[id(node)] = f"n{len(ids)}"
        digits = ", ".join(str(d) for d in node.path_digits)
        lines.append(
            f'  {ids[id(node)]} [label="({node.depth}, [{digits}]) k={node.precision}"];'
        )
    for node in root.walk():
        for edge in node.children:
            lines.append(
                f'  {ids[id(node)]} -> {ids[id(edge.child)]} '
                f'[label="{p}^{edge.exponent - 1}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dict(node):
    return {
        "depth": node.depth,
        "path_digits": list(node.path_digits),
        "zeta": str(node.zeta),
        "precision": node.precision,
        "coeffs": [str(c) for c in node.poly.coeffs],
        "n_p": node.n_p,
        "full_lift_count": node.full_lift_count,
        "children": [
            {"root_digit": e.root_digit, "s": e.exponent, "node": tree_to_dict(e.child)}
            for e in node.children
        ],
    }


BENCH_COLUMNS = ["index", "seed", "degree", "count_decimal", "exact", "agrees", "elapsed_ms"]


def write_bench_csv(stream, rows):
    writer = csv.DictWriter(stream, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def random_cubic_product(rng, p, k, factors):
    """
    Product of `factors` random cubics with coefficients uniform in
    {0, ..., p^k}, little-endian.
    """
    bound = p**k
    dense = [ZZ.one]
    for _ in range(factors):
        cubic = [ZZ(rng.randint(0, bound)) for _ in range(BENCH_FACTOR_DEGREE + 1)]
        dense = dup_mul(dense, dup_strip(cubic), ZZ)
    return [int(c) for c in reversed(dense)] or [0]


def run_and_record(coeffs, p, k, seed, config, *, tree=False):
    """
    Count (or build the tree, when `tree` is set) and time it.
    Returns (root or None, CountResult, JSON record).
    """
    started = time.perf_counter()
    if tree:
        root, result = build_tree(coeffs, p, k, seed=seed, config=config)
    else:
        root, result = None, count_roots(coeffs, p, k, seed=seed, config=config)
    elapsed_ms = (time.perf_counter() - started) * 1000

    record = build_record(
        p=p,
        k=k,
        degree=integer_degree(coeffs),
        count=result.count,
        exact=result.exact,
        failures=result.failures,
        tree=result.stats if result.stats.nodes else None,
        seed=seed,
        elapsed_ms=elapsed_ms,
    )
    return root, result, record
