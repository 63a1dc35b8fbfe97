"""Exact counts of labeled simple graphs by edges and connected components.

g'(e, k) counts connected simple graphs with e edges on k labeled vertices;
g(c, e, k) counts simple graphs with c connected components.  Both tables are
built by dynamic programming on the component containing vertex 1: a graph is
connected iff that component is not smaller than the whole vertex set, and a
c-component graph is a connected vertex-1 component glued to any
(c-1)-component graph on the remaining vertices.

The alternating sums over these tables reduce to coefficient extractions from
log(1+z) and (1+z)**n; they are recomputed from the tables here so tests can
compare the two routes independently.
"""

from dataclasses import dataclass, field
from math import comb

DEFAULT_KMAX_CAP = 30


@dataclass(frozen=True)
class GraphCountTable:
    """Immutable lookup table of g'(e, k) and, optionally, g(c, e, k).

    Only nonzero entries are stored; accessors return 0 elsewhere.
    """

    k_max: int
    gprime: dict[tuple[int, int], int]
    g: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def _check_k(self, k: int):
        if not 1 <= k <= self.k_max:
            raise ValueError(f"k = {k} outside table range 1..{self.k_max}")

    @property
    def has_components(self) -> bool:
        return bool(self.g)

    def gprime_at(self, e: int, k: int) -> int:
        """g'(e, k): connected simple graphs, e edges, k labeled vertices."""
        self._check_k(k)
        return self.gprime.get((e, k), 0)

    def g_at(self, c: int, e: int, k: int) -> int:
        """g(c, e, k): simple graphs with c components, e edges, k labeled vertices."""
        self._check_k(k)
        if not self.g:
            raise ValueError("table was built without component counts")
        return self.g.get((c, e, k), 0)

    def alt_sum_connected(self, k: int) -> int:
        """sum_e (-1)**e g'(e, k), summed from the table (not the closed form)."""
        self._check_k(k)
        return sum(
            (-1) ** e * self.gprime.get((e, k), 0) for e in range(comb(k, 2) + 1)
        )

    def alt_sum_all(self, k: int, n: int) -> int:
        """sum_e sum_c (-1)**e n**c g(c, e, k), summed from the table."""
        self._check_k(k)
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if not self.g:
            raise ValueError("table was built without component counts")
        total = 0
        for e in range(comb(k, 2) + 1):
            sign = (-1) ** e
            for c in range(1, k + 1):
                cnt = self.g.get((c, e, k), 0)
                if cnt:
                    total += sign * n ** c * cnt
        return total


def _check_kmax(k_max: int, cap: int):
    if not 1 <= k_max <= cap:
        raise ValueError(f"k_max = {k_max} outside allowed range 1..{cap}")


def _build_gprime(k_max: int) -> dict[tuple[int, int], int]:
    # g'(e, k) = C(C(k,2), e) minus graphs whose vertex-1 component has j < k
    # vertices: choose its other j-1 vertices, a connected graph on them, and
    # anything at all on the remaining k-j vertices.
    gp: dict[tuple[int, int], int] = {}
    for k in range(1, k_max + 1):
        max_e = comb(k, 2)
        for e in range(max_e + 1):
            total = comb(max_e, e)
            for j in range(1, k):
                choose = comb(k - 1, j - 1)
                rest_pairs = comb(k - j, 2)
                for e1 in range(max(0, e - rest_pairs), min(e, comb(j, 2)) + 1):
                    cnt = gp.get((e1, j), 0)
                    if cnt:
                        total -= choose * cnt * comb(rest_pairs, e - e1)
            if total:
                gp[(e, k)] = total
    return gp


def _build_g(k_max: int, gp: dict[tuple[int, int], int]) -> dict[tuple[int, int, int], int]:
    # g(1, e, k) = g'(e, k); for c >= 2, pick the connected component of
    # vertex 1 (j vertices, e1 edges) and recurse with c-1 components on the
    # remaining k-j vertices.
    g: dict[tuple[int, int, int], int] = {}
    for k in range(1, k_max + 1):
        for e in range(comb(k, 2) + 1):
            cnt = gp.get((e, k), 0)
            if cnt:
                g[(1, e, k)] = cnt
        for c in range(2, k + 1):
            for e in range(comb(k, 2) + 1):
                total = 0
                for j in range(1, k - c + 2):
                    choose = comb(k - 1, j - 1)
                    for e1 in range(min(e, comb(j, 2)) + 1):
                        left = gp.get((e1, j), 0)
                        if left:
                            right = g.get((c - 1, e - e1, k - j), 0)
                            if right:
                                total += choose * left * right
                if total:
                    g[(c, e, k)] = total
    return g


def connected_counts(k_max: int, cap: int = DEFAULT_KMAX_CAP) -> GraphCountTable:
    """Table of g'(e, k) for 1 <= k <= k_max (component counts left empty)."""
    _check_kmax(k_max, cap)
    return GraphCountTable(k_max, _build_gprime(k_max))


def component_counts(k_max: int, cap: int = DEFAULT_KMAX_CAP) -> GraphCountTable:
    """Table of both g'(e, k) and g(c, e, k) for 1 <= k <= k_max."""
    _check_kmax(k_max, cap)
    gp = _build_gprime(k_max)
    return GraphCountTable(k_max, gp, _build_g(k_max, gp))
