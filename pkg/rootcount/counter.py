# rootcount/counter.py
"""
Exact root counting in Z/(p^k) by depth-first search of the recursion tree.

At a node (f, k) with f not identically 0 mod p:

    N(f, k) = n_p + #{degenerate zeta0 : s >= k} * p^(k-1)
                  + sum over degenerate zeta0 with 2 <= s <= k-1 of
                        p^(s-1) * N(child(f, zeta0, s), k - s)

where n_p counts the non-degenerate roots of f mod p (each lifts uniquely).
Degenerate roots are isolated by a Las Vegas splitter: if it gives up, the
missing branches are dropped, the result is flagged inexact and is a lower
bound on the true count.
"""
import logging
import random
from dataclasses import dataclass, field, replace

from .arith import PrimePowerRing, pow_p
from .constants import DEFAULT_SEED, SMALL_P_THRESHOLD, SPLIT_BUDGET_BASE
from .lifting import child_poly, s_invariant
from .poly_fp import degenerate_roots, distinct_root_count
from .poly_zpk import PolyMod

logger = logging.getLogger(__name__)


def _ceil_log2(n):
    return max(n - 1, 0).bit_length()


@dataclass(frozen=True)
class CountConfig:
    small_p_threshold: int = SMALL_P_THRESHOLD
    split_budget_base: int = SPLIT_BUDGET_BASE
    # An absolute per-split budget; overrides the amplified default when set
    split_budget: int | None = None
    materialize: bool = True

    @classmethod
    def from_settings(cls, **overrides):
        from django.conf import settings

        conf = getattr(settings, "ROOTCOUNT", {})
        values = {
            "small_p_threshold": conf.get("SMALL_P_THRESHOLD", SMALL_P_THRESHOLD),
            "split_budget_base": conf.get("SPLIT_BUDGET_BASE", SPLIT_BUDGET_BASE),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def split_budget_for(self, degree, k):
        """
        Attempts allowed per randomized split. The base budget is repeated
        often enough that every one of the at most 1 + (d/2)((k-1)/2) tree
        nodes fails with probability O(1/(dk)).
        """
        if self.split_budget is not None:
            return self.split_budget
        degree = max(degree, 1)
        base = self.split_budget_base + _ceil_log2(degree * k)
        nodes = 1 + (degree // 2) * ((k - 1) // 2) * _ceil_log2(degree + 2)
        return base * max(1, _ceil_log2(nodes))


@dataclass(frozen=True)
class CountStats:
    depth: int = 0
    nodes: int = 0
    draws: int = 0


@dataclass(frozen=True)
class TreeEdge:
    root_digit: int  # the degenerate root zeta_{i-1} of the parent
    exponent: int  # s; the edge weight is p^(s-1)
    child: "TreeNode"


@dataclass(frozen=True)
class TreeNode:
    depth: int
    path_digits: tuple
    poly: PolyMod
    precision: int
    n_p: int
    full_lift_count: int
    children: tuple = ()

    @property
    def zeta(self):
        """The residue mu + p^(i-1) zeta_{i-1} named by the path digits."""
        p = self.poly.p
        return sum(d * p**i for i, d in enumerate(self.path_digits))

    def walk(self):
        yield self
        for edge in self.children:
            yield from edge.child.walk()


@dataclass(frozen=True)
class CountResult:
    count: int
    exact: bool
    failures: tuple = ()
    stats: CountStats = field(default_factory=CountStats)
    # p^scale_exponent was divided out of the input before the tree was built
    scale_exponent: int = 0


class _Search:
    def __init__(self, budget, config, rng):
        self.budget = budget
        self.config = config
        self.rng = rng
        self.failures = []
        self.nodes = 0
        self.depth = 0
        self.draws = 0

    def visit(self, f, depth, path):
        k = f.k
        self.nodes += 1
        self.depth = max(self.depth, depth)

        ft = f.mod_p_reduction()
        distinct = distinct_root_count(ft)
        degenerate = degenerate_roots(
            ft, self.rng, self.budget, self.config.small_p_threshold
        )
        self.draws += degenerate.draws
        if not degenerate.complete:
            logger.warning("root isolation incomplete at path %s", list(path))
            self.failures.append(tuple(path))

        n_p = distinct - degenerate.expected
        total = n_p
        full = 0
        children = []
        logger.debug(
            "node depth=%d path=%s k=%d n_p=%d degenerate=%s",
            depth, list(path), k, n_p, list(degenerate.roots),
        )
        for zeta0 in degenerate.roots:
            s = s_invariant(f, zeta0)
            if s.at_least_k:
                full += 1
                total += pow_p(f.ring, k - 1)
            elif s.value >= 2:
                child = child_poly(f, zeta0, s.value)
                sub, node = self.visit(child, depth + 1, path + (zeta0,))
                total += pow_p(f.ring, s.value - 1) * sub
                if node is not None:
                    children.append(TreeEdge(zeta0, s.value, node))
            # s == 1: zeta0 does not lift to a root mod p^2

        node = None
        if self.config.materialize:
            node = TreeNode(depth, tuple(path), f, k, n_p, full, tuple(children))
        return total, node


def _normalize(raw, p, k):
    ring = PrimePowerRing(p, k)
    f = PolyMod.from_integer_coeffs(raw, ring)
    return ring, f, f.content_valuation()


def _run(raw, p, k, seed, config):
    config = config or CountConfig()
    ring, f, v = _normalize(raw, p, k)

    if v.is_capped:
        return None, CountResult(ring.modulus, True)

    scale = v.value
    if scale:
        f = f.exact_divide_by_p_power(scale)

    budget = config.split_budget_for(f.formal_degree, f.k)
    search = _Search(budget, config, random.Random(seed))
    count, root = search.visit(f, 0, ())
    result = CountResult(
        count=pow_p(ring, scale) * count,
        exact=not search.failures,
        failures=tuple(search.failures),
        stats=CountStats(search.depth, search.nodes, search.draws),
        scale_exponent=scale,
    )
    logger.info(
        "p=%d k=%d degree=%d: %d-bit count, exact=%s, %d nodes, %d draws",
        p, k, f.formal_degree, result.count.bit_length(), result.exact,
        search.nodes, search.draws,
    )
    return root, result


def count_roots(raw, p, k, seed=DEFAULT_SEED, config=None):
    config = config or CountConfig()
    if config.materialize:
        config = replace(config, materialize=False)
    return _run(raw, p, k, seed, config)[1]


def build_tree(raw, p, k, seed=DEFAULT_SEED, config=None):
    """
    (root, result). root is None when the input vanishes identically mod
    p^k, or when config.materialize is off (only the statistics are kept).
    """
    return _run(raw, p, k, seed, config)


@dataclass(frozen=True)
class TreeSummary:
    depth: int
    node_count: int
    widths: tuple  # nodes per level, root level first


def tree_stats(root):
    widths = []
    stack = [root]
    while stack:
        node = stack.pop()
        if node.depth == len(widths):
            widths.append(0)
        widths[node.depth] += 1
        stack.extend(edge.child for edge in node.children)
    return TreeSummary(len(widths) - 1, sum(widths), tuple(widths))


def fold_tree(node):
    """N(node) recomputed from the materialized tree."""
    p = node.poly.p
    total = node.n_p + node.full_lift_count * p ** (node.precision - 1)
    for edge in node.children:
        total += p ** (edge.exponent - 1) * fold_tree(edge.child)
    return total
