"""Counting formulas for linear congruences a1*x1 + ... + ak*xk = b (mod n).

Four counters live here:

* lehmer_count        -- unrestricted solutions: l * n**(k-1) when
                         l = gcd(a1, ..., ak, n) divides b, else 0.
* distinct_count_formula -- pairwise-distinct coordinates, in closed form,
                         valid when every nonempty proper subset of the
                         coefficients sums to a unit mod n.
* schoenemann_count   -- the classical prime special case (b = 0, n = p,
                         coefficient sum divisible by p).
* rademacher_brauer_count -- unit coefficients, every coordinate coprime
                         to n, any b.

check_condition decides the subset-sum gcd hypothesis and reports the first
failing subset; distinct_count_formula refuses to answer when it fails, since
no closed form is claimed in that regime (the oracle module still counts).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi, factorize, falling_factorial, is_prime
from .errors import HypothesisError, ResourceLimitError

DEFAULT_SUBSET_CAP = 24


@dataclass(frozen=True)
class CongruenceInstance:
    """One congruence a1*x1 + ... + ak*xk = b (mod n).

    Coefficients and b are reduced into [0, n) on construction; every count
    below depends only on residues, so the reduced form is canonical.
    """

    coeffs: tuple[int, ...]
    b: int
    n: int

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("at least one coefficient is required")
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        object.__setattr__(self, "coeffs", tuple(a % self.n for a in coeffs))
        object.__setattr__(self, "b", self.b % self.n)

    @property
    def k(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class ConditionReport:
    """Verdict and witnesses for the subset-sum gcd condition.

    failing_subset holds 1-based indices of the first (by size, then
    lexicographically) nonempty proper subset whose coefficient sum shares a
    factor with n; it is None exactly when the condition holds.
    full_sum_gcd is gcd(a1 + ... + ak, n) and divides_b says whether it
    divides b.
    """

    holds: bool
    failing_subset: tuple[int, ...] | None
    full_sum_gcd: int
    divides_b: bool


def lehmer_count(inst: CongruenceInstance) -> int:
    """Number of unrestricted solutions in Z_n**k.

    With l = gcd(a1, ..., ak, n): l * n**(k-1) solutions if l divides b,
    none otherwise.
    """
    ell = math.gcd(*inst.coeffs, inst.n)
    if inst.b % ell != 0:
        return 0
    return ell * inst.n ** (inst.k - 1)


def check_condition(inst: CongruenceInstance, cap: int = DEFAULT_SUBSET_CAP) -> ConditionReport:
    """Decide whether every nonempty proper index subset sums to a unit mod n.

    Subsets are scanned by size, then lexicographically, so the reported
    failing subset is deterministic.  The scan walks 2**k - 2 subsets, hence
    the cap on k.  For k = 1 the condition is vacuously true.
    """
    k, n = inst.k, inst.n
    if k > cap:
        raise ResourceLimitError(
            f"subset scan would need 2**{k} - 2 gcd checks; cap is k <= {cap}"
        )
    ell = math.gcd(sum(inst.coeffs), n)
    divides_b = inst.b % ell == 0
    for size in range(1, k):
        for subset in itertools.combinations(range(1, k + 1), size):
            s = sum(inst.coeffs[i - 1] for i in subset)
            if math.gcd(s, n) > 1:
                return ConditionReport(False, subset, ell, divides_b)
    return ConditionReport(True, None, ell, divides_b)


def distinct_count_formula(inst: CongruenceInstance) -> int:
    """Closed-form count of solutions with pairwise-distinct coordinates.

    Requires the subset-sum gcd condition (enforced).  With
    l = gcd(a1 + ... + ak, n) and P = (n-1)(n-2)...(n-k+1):

        count = (-1)**k * (k-1)! + P              if l does not divide b,
        count = (-1)**(k-1) * (k-1)! * (l-1) + P  if l divides b.
    """
    report = check_condition(inst)
    if not report.holds:
        raise HypothesisError(
            "subset-sum gcd condition fails: coefficient subset "
            f"{set(report.failing_subset)} sums to a non-unit mod {inst.n}",
            report,
        )
    k = inst.k
    ell = report.full_sum_gcd
    base = falling_factorial(inst.n, k)
    fact = math.factorial(k - 1)
    if report.divides_b:
        value = (-1) ** (k - 1) * fact * (ell - 1) + base
    else:
        value = (-1) ** k * fact + base
    assert value >= 0, f"negative count {value} for {inst}"
    return value


def schoenemann_count(p: int, coeffs) -> int:
    """Distinct-coordinate count in the classical prime case.

    Preconditions: p prime, sum of coefficients divisible by p, and no
    nonempty proper subset sum divisible by p.  The value is independent of
    the coefficients:

        (-1)**(k-1) * (k-1)! * (p-1) + (p-1)(p-2)...(p-k+1)

    Delegates to distinct_count_formula with b = 0, n = p and asserts
    agreement with that closed form.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    coeffs = tuple(coeffs)
    if sum(coeffs) % p != 0:
        raise ValueError("coefficient sum must be divisible by p")
    inst = CongruenceInstance(coeffs, 0, p)
    value = distinct_count_formula(inst)
    k = len(coeffs)
    closed = (-1) ** (k - 1) * math.factorial(k - 1) * (p - 1) + falling_factorial(p, k)
    assert value == closed, f"closed form {closed} != general formula {value}"
    return value


def rademacher_brauer_count(n: int, k: int, b: int) -> int:
    """Solutions of x1 + ... + xk = b (mod n) with every gcd(xi, n) = 1.

    Evaluates phi(n)**k / n times a product over prime divisors p of n:
    factor 1 - (-1)**(k-1) / (p-1)**(k-1) when p divides b, else
    1 - (-1)**k / (p-1)**k.  Exact rational arithmetic throughout; the result
    is asserted to be a non-negative integer.  For n = 1 the empty product
    gives 1, the all-zero tuple (gcd(0, 1) = 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    value = Fraction(euler_phi(n) ** k, n)
    for p, _ in factorize(n):
        if b % p == 0:
            value *= 1 - Fraction((-1) ** (k - 1), (p - 1) ** (k - 1))
        else:
            value *= 1 - Fraction((-1) ** k, (p - 1) ** k)
    assert value.denominator == 1 and value >= 0, f"non-integral count {value}"
    return int(value)


METHODS = ("formula", "iep-edges", "iep-partitions", "brute")


def distinct_count(inst: CongruenceInstance, method: str = "formula") -> int:
    """Dispatch to the closed form or one of the oracle counters.

    All methods agree wherever their preconditions overlap; the oracles also
    accept instances the formula refuses.
    """
    from . import oracle  # deferred: oracle imports from this module

    if method == "formula":
        return distinct_count_formula(inst)
    if method == "iep-edges":
        return oracle.iep_edge_subsets(inst)
    if method == "iep-partitions":
        return oracle.iep_partitions(inst)
    if method == "brute":
        return oracle.brute_force_distinct(inst)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
