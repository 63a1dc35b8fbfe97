"""Hypothesis-free ground-truth counters for distinct-coordinate solutions.

Three independent routes, all exact:

* brute_force_distinct -- enumerate the distinct tuples directly.
* iep_edge_subsets     -- inclusion-exclusion over all subsets of the C(k,2)
                          possible coordinate equalities: each subset forces
                          its pairs equal, merging coefficients along the
                          connected components of the pattern graph, and the
                          merged congruence is counted by lehmer_count.
* iep_partitions       -- the same sum compressed over set partitions: every
                          edge subset inducing the same component partition
                          contributes the same merged count, and the signs
                          collapse to the weight prod (-1)**(|B|-1) (|B|-1)!
                          over blocks B.

None of these require anything of the coefficients, so together they cover
instances the closed form refuses.
"""

import itertools
import math
from operator import mul
from typing import Iterable

from .congruence import CongruenceInstance, lehmer_count
from .errors import ResourceLimitError

# An equality pattern is any iterable of index pairs {u, v}, 1 <= u < v <= k.
EqualityPattern = Iterable[tuple[int, int]]

EDGE_SUBSET_MAX_K = 5
PARTITION_MAX_K = 12
DEFAULT_TUPLE_BUDGET = 10 ** 8


def all_pairs(k: int) -> tuple[tuple[int, int], ...]:
    """The C(k, 2) unordered index pairs (u, v), 1 <= u < v <= k, in lex order."""
    return tuple(itertools.combinations(range(1, k + 1), 2))


class _UnionFind:
    """Path-compressing union-find over 0..size-1."""

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def pattern_components(k: int, pattern: EqualityPattern) -> tuple[tuple[int, ...], ...]:
    """Connected components of the pattern graph on vertices 1..k.

    Blocks are sorted internally and ordered by smallest element, so the
    partition is canonical.
    """
    uf = _UnionFind(k)
    for pair in pattern:
        u, v = pair
        if not (1 <= u < v <= k):
            raise ValueError(f"pattern pair {pair!r} is not 1 <= u < v <= {k}")
        uf.union(u - 1, v - 1)
    blocks: dict[int, list[int]] = {}
    for x in range(k):
        blocks.setdefault(uf.find(x), []).append(x + 1)
    return tuple(tuple(blocks[root]) for root in sorted(blocks))


def pattern_count(inst: CongruenceInstance, pattern: EqualityPattern) -> int:
    """Solutions of the congruence with the pattern's pairs forced equal.

    Coordinates in one component of the pattern graph share a variable, so
    the coefficients merge into per-component sums and the reduced congruence
    is counted by lehmer_count.
    """
    blocks = pattern_components(inst.k, pattern)
    merged = tuple(sum(inst.coeffs[i - 1] for i in block) for block in blocks)
    return lehmer_count(CongruenceInstance(merged, inst.b, inst.n))


def iep_edge_subsets(inst: CongruenceInstance) -> int:
    """Inclusion-exclusion over every subset of possible coordinate equalities.

    sum over S of (-1)**|S| * pattern_count(inst, S), S ranging over all
    2**C(k,2) subsets of index pairs.  Exact for arbitrary coefficients, but
    doubly exponential, hence the small cap on k.
    """
    k = inst.k
    if k > EDGE_SUBSET_MAX_K:
        raise ResourceLimitError(
            f"2**C({k},2) edge subsets is too many; use iep_partitions for k <= {PARTITION_MAX_K}"
        )
    pairs = all_pairs(k)
    total = 0
    for size in range(len(pairs) + 1):
        sign = (-1) ** size
        for subset in itertools.combinations(pairs, size):
            total += sign * pattern_count(inst, subset)
    return total


def index_partitions(k: int):
    """Yield all set partitions of {1..k} as tuples of blocks.

    Blocks appear ordered by smallest element and sorted internally, matching
    pattern_components' canonical form.
    """
    blocks: list[list[int]] = []

    def place(i):
        if i > k:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from place(i + 1)
            b.pop()
        blocks.append([i])
        yield from place(i + 1)
        blocks.pop()

    yield from place(1)


def iep_partitions(inst: CongruenceInstance) -> int:
    """The edge-subset inclusion-exclusion compressed over set partitions.

    Every edge subset whose pattern graph has component partition pi
    contributes the same merged count, and the signed number of such subsets
    is prod over blocks B of (-1)**(|B|-1) (|B|-1)!.  Agrees with
    iep_edge_subsets everywhere both run, but only Bell(k) terms.
    """
    k = inst.k
    if k > PARTITION_MAX_K:
        raise ResourceLimitError(
            f"Bell({k}) partitions is too many; cap is k <= {PARTITION_MAX_K}"
        )
    total = 0
    for blocks in index_partitions(k):
        weight = 1
        merged = []
        for block in blocks:
            weight *= (-1) ** (len(block) - 1) * math.factorial(len(block) - 1)
            merged.append(sum(inst.coeffs[i - 1] for i in block))
        total += weight * lehmer_count(CongruenceInstance(tuple(merged), inst.b, inst.n))
    return total


def brute_force_distinct(
    inst: CongruenceInstance,
    budget: int = DEFAULT_TUPLE_BUDGET,
    stats: dict | None = None,
) -> int:
    """Count distinct-coordinate solutions by direct enumeration.

    Tuples are visited in lexicographic order with repeated coordinates
    pruned, i.e. exactly the n(n-1)...(n-k+1) injective tuples are evaluated,
    never more than n**k.  k > n short-circuits to 0 without enumerating.
    When a dict is passed as stats, the number of evaluated tuples is
    recorded under "tuples_evaluated".
    """
    k, n, b = inst.k, inst.n, inst.b
    if k > n:
        if stats is not None:
            stats["tuples_evaluated"] = 0
        return 0
    if n ** k > budget:
        raise ResourceLimitError(
            f"n**k = {n ** k} exceeds the enumeration budget {budget}"
        )
    coeffs = inst.coeffs
    total = 0
    if stats is None:
        for xs in itertools.permutations(range(n), k):
            if sum(map(mul, coeffs, xs)) % n == b:
                total += 1
    else:
        evaluated = 0
        for xs in itertools.permutations(range(n), k):
            evaluated += 1
            if sum(map(mul, coeffs, xs)) % n == b:
                total += 1
        stats["tuples_evaluated"] = evaluated
    return total
