"""Truncated power series with exact rational coefficients.

Univariate series carry just enough arithmetic for coefficient extraction
(add, multiply, log, integer powers), plus the deformed exponential series
sum_m alpha**m * beta**C(m,2) / m! and the three-variable Rogers-Ramanujan
term with q-factorial denominators.  A small bivariate variant (outer
variable y, inner variable z, both truncated) backs the two-variable
coefficient identities checked against the graph tables.

All coefficients are fractions.Fraction; floating point never enters.
"""

from fractions import Fraction
from math import comb, factorial


def _strip(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


class SeriesPoly:
    """Dense coefficient list; index m holds the coefficient of the m-th power.

    Trailing zeros are insignificant for equality and hashing.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    def coeff(self, m: int) -> Fraction:
        """Coefficient of the m-th power (0 beyond the stored truncation)."""
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return _strip(self.coeffs) == _strip(other.coeffs)

    def __hash__(self):
        return hash(_strip(self.coeffs))

    def __repr__(self):
        return "SeriesPoly([" + ", ".join(str(c) for c in self.coeffs) + "])"


def series_add(p: SeriesPoly, q: SeriesPoly) -> SeriesPoly:
    """Coefficient-wise sum."""
    length = max(len(p.coeffs), len(q.coeffs))
    return SeriesPoly([p.coeff(m) + q.coeff(m) for m in range(length)])


def series_mul(p: SeriesPoly, q: SeriesPoly, order: int) -> SeriesPoly:
    """Product truncated after the coefficient of the order-th power."""
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(p.coeffs[: order + 1]):
        if not a:
            continue
        for j, b in enumerate(q.coeffs[: order + 1 - i]):
            if b:
                out[i + j] += a * b
    return SeriesPoly(out)


def series_pow(p: SeriesPoly, exponent: int, order: int) -> SeriesPoly:
    """p raised to a positive integer power, truncated at the given order."""
    if exponent < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent}")
    out = SeriesPoly(p.coeffs[: order + 1])
    for _ in range(exponent - 1):
        out = series_mul(out, p, order)
    return out


def series_log(p: SeriesPoly, order: int) -> SeriesPoly:
    """Logarithm of a series with constant term 1, truncated at the given order.

    With q = p - 1 (which has no constant term), log p = sum_{j>=1}
    (-1)**(j+1) q**j / j, and terms with j > order cannot contribute.
    """
    if p.coeff(0) != 1:
        raise ValueError("series_log requires constant term 1")
    q = SeriesPoly([Fraction(0)] + list(p.coeffs[1 : order + 1]))
    out = [Fraction(0)] * (order + 1)
    power = q
    for j in range(1, order + 1):
        sign = Fraction((-1) ** (j + 1), j)
        for m, c in enumerate(power.coeffs[: order + 1]):
            if c:
                out[m] += sign * c
        if j < order:
            power = series_mul(power, q, order)
    return SeriesPoly(out)


def deformed_exp_truncated(beta, order: int) -> SeriesPoly:
    """Deformed exponential in alpha: coefficient of alpha**m is beta**C(m,2) / m!.

    beta = 0 collapses the series to 1 + alpha, and beta = 1 gives exp.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    beta = Fraction(beta)
    return SeriesPoly([beta ** comb(m, 2) / factorial(m) for m in range(order + 1)])


def rr_series_term(m: int, alpha, beta, q) -> Fraction:
    """The m-th term of the three-variable Rogers-Ramanujan series.

    Returns alpha**m * beta**C(m,2) divided by the q-factorial product
    (1+q)(1+q+q**2)...(1+q+...+q**(m-1)); the product is empty (= 1) for
    m in {0, 1}.  At q = 1 the denominator is m!, recovering the deformed
    exponential term.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    alpha, beta, q = Fraction(alpha), Fraction(beta), Fraction(q)
    denom = Fraction(1)
    for i in range(1, m):
        denom *= sum((q ** j for j in range(i + 1)), Fraction(0))
    if denom == 0:
        raise ValueError(f"q-factorial denominator vanishes at q = {q}, m = {m}")
    return alpha ** m * beta ** comb(m, 2) / denom


# --- bivariate truncations -------------------------------------------------
#
# A bivariate truncation is a rectangular grid of Fractions: entry [e][m] is
# the coefficient of y**e z**m.  All operations truncate at the grid's shape.


def deformed_exp_bivariate(y_order: int, z_order: int) -> list[list[Fraction]]:
    """Deformed exponential evaluated at (z, 1 + y) as a bivariate truncation.

    Entry [e][m] is C(C(m,2), e) / m!, since (1+y)**C(m,2) expands binomially.
    """
    if y_order < 0 or z_order < 0:
        raise ValueError("orders must be >= 0")
    return [
        [Fraction(comb(comb(m, 2), e), factorial(m)) for m in range(z_order + 1)]
        for e in range(y_order + 1)
    ]


def _bivar_shape(a):
    return len(a) - 1, len(a[0]) - 1


def bivar_mul(a, b) -> list[list[Fraction]]:
    """Product of two same-shape bivariate truncations, truncated to that shape."""
    if _bivar_shape(a) != _bivar_shape(b):
        raise ValueError("bivariate operands must share a shape")
    ey, ez = _bivar_shape(a)
    out = [[Fraction(0)] * (ez + 1) for _ in range(ey + 1)]
    for e1 in range(ey + 1):
        for m1 in range(ez + 1):
            c = a[e1][m1]
            if not c:
                continue
            for e2 in range(ey + 1 - e1):
                row_b = b[e2]
                row_out = out[e1 + e2]
                for m2 in range(ez + 1 - m1):
                    if row_b[m2]:
                        row_out[m1 + m2] += c * row_b[m2]
    return out


def bivar_pow(a, exponent: int) -> list[list[Fraction]]:
    """a raised to a positive integer power."""
    if exponent < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent}")
    out = [row[:] for row in a]
    for _ in range(exponent - 1):
        out = bivar_mul(out, a)
    return out


def bivar_log(a) -> list[list[Fraction]]:
    """Logarithm of a bivariate truncation whose z-constant column is exactly 1.

    That condition makes q = a - 1 have positive z-valuation, so q**j
    contributes nothing beyond j = z_order and the log sum is finite.
    """
    ey, ez = _bivar_shape(a)
    if a[0][0] != 1 or any(a[e][0] for e in range(1, ey + 1)):
        raise ValueError("bivar_log requires z-constant coefficient exactly 1")
    q = [row[:] for row in a]
    q[0][0] -= 1
    out = [[Fraction(0)] * (ez + 1) for _ in range(ey + 1)]
    power = q
    for j in range(1, ez + 1):
        sign = Fraction((-1) ** (j + 1), j)
        for e in range(ey + 1):
            for m in range(ez + 1):
                if power[e][m]:
                    out[e][m] += sign * power[e][m]
        if j < ez:
            power = bivar_mul(power, q)
    return out
