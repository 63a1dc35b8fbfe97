"""Independent brute-force oracles shared by the test suite.

Everything here enumerates directly, without reusing the library's recurrence
or inclusion-exclusion code paths, so a test comparing against these helpers
compares two genuinely different routes.
"""

from itertools import combinations, product
from math import gcd


def count_components(k, edges):
    """Connected components of the graph on vertices 1..k via depth-first search."""
    adj = {v: [] for v in range(1, k + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = 0
    for start in range(1, k + 1):
        if start in seen:
            continue
        comps += 1
        stack = [start]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(w for w in adj[v] if w not in seen)
    return comps


def edge_subset_graph_counts(k):
    """Exhaustive graph counts on k labeled vertices over all 2**C(k,2) edge subsets.

    Returns (gprime, g): gprime[e] counts connected graphs with e edges and
    g[(c, e)] counts graphs with c components and e edges.
    """
    pairs = list(combinations(range(1, k + 1), 2))
    gprime = {}
    g = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        c = count_components(k, edges)
        e = len(edges)
        g[(c, e)] = g.get((c, e), 0) + 1
        if c == 1:
            gprime[e] = gprime.get(e, 0) + 1
    return gprime, g


def brute_distinct_count(coeffs, b, n):
    """Distinct-coordinate solution count by unpruned product enumeration."""
    k = len(coeffs)
    total = 0
    for xs in product(range(n), repeat=k):
        if len(set(xs)) == k and sum(a * x for a, x in zip(coeffs, xs)) % n == b % n:
            total += 1
    return total


def congruence_histogram(coeffs, n):
    """Counts of unrestricted solutions per residue b, enumerating every tuple."""
    hist = [0] * n
    for xs in product(range(n), repeat=len(coeffs)):
        hist[sum(a * x for a, x in zip(coeffs, xs)) % n] += 1
    return hist


def unit_histogram(n, k):
    """Counts per residue b of x1 + ... + xk over tuples of units mod n."""
    units = [x for x in range(n) if gcd(x, n) == 1]
    hist = [0] * n
    for xs in product(units, repeat=k):
        hist[sum(xs) % n] += 1
    return hist


def trial_division_prime(n):
    """Primality check used to validate factorizations independently."""
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))
