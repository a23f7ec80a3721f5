"""Complex special functions with exact closed forms at non-positive integers.

Gamma is computed by reflection plus an upward recurrence shift into the
Stirling-series region.  The Hurwitz zeta function is continued with the
Euler-Maclaurin formula; Bernoulli polynomials are kept as exact rational
coefficient tables so that values at non-positive integer arguments are
available without any floating-point continuation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from .errors import (
    DegreeError,
    GammaPoleError,
    NonpositiveParameterError,
    ZetaPoleError,
)

BERNOULLI_DEGREE_MAX = 32

# Euler-Maclaurin truncation: at least J correction terms, shift until
# M + a clears both the imaginary-part rule and the convergence floor for
# large |s|.  For strongly negative Re(s) the Pochhammer factors keep the
# correction series large until 2J exceeds |Re s|, so J grows with it.
_EM_CORRECTION_TERMS = 10
_EM_CORRECTION_TERMS_MAX = BERNOULLI_DEGREE_MAX // 2

# Above this many decimal digits of predicted cancellation the float64
# path is abandoned for the same recursion at elevated precision.
_EM_FLOAT64_LOSS_DIGITS = 2.5


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials (exact rational arithmetic)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    """B_0..B_n_max as exact Fractions, convention B_1 = -1/2."""
    out = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += comb(m + 1, k) * out[k]
        out.append(-acc / (m + 1))
    return tuple(out)


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli polynomials up to degree n_max as exact coefficient lists.

    coefficients[n][k] is the coefficient of x^k in B_n(x), so B_0 = 1,
    B_n' = n B_{n-1} and the unit-interval integral of B_n vanishes for
    n >= 1.  All entries are Fractions; nothing here ever rounds.
    """

    n_max: int
    coefficients: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def build(cls, n_max: int = BERNOULLI_DEGREE_MAX) -> "BernoulliTable":
        numbers = _bernoulli_numbers(n_max)
        rows = []
        for n in range(n_max + 1):
            # B_n(x) = sum_j C(n, j) B_j x^(n - j), stored ascending in x
            row = [Fraction(0)] * (n + 1)
            for j in range(n + 1):
                row[n - j] = comb(n, j) * numbers[j]
            rows.append(tuple(row))
        return cls(n_max=n_max, coefficients=tuple(rows))

    def polynomial(self, n: int) -> tuple[Fraction, ...]:
        if not 0 <= n <= self.n_max:
            raise DegreeError(
                f"Bernoulli degree {n} outside table (n_max = {self.n_max})"
            )
        return self.coefficients[n]

    def evaluate(self, n: int, x):
        """Horner evaluation of B_n at x; exact when x is a Fraction or int."""
        coeffs = self.polynomial(n)
        acc = x * 0  # zero of the caller's arithmetic type
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def _default_table() -> BernoulliTable:
    return BernoulliTable.build(BERNOULLI_DEGREE_MAX)


def bernoulli_polynomial(n: int, x):
    """B_n(x) through the exact rational coefficient table.

    Integer or Fraction x gives an exact Fraction back; a float x is
    promoted to its exact binary value, evaluated rationally and returned
    as a float, so no precision is lost to intermediate rounding.
    """
    if n < 0:
        raise DegreeError("Bernoulli degree must be non-negative")
    table = _default_table()
    if isinstance(x, float):
        return float(table.evaluate(n, Fraction(x)))
    return table.evaluate(n, Fraction(x))


def binom_half(j: int) -> Fraction:
    """Generalized binomial coefficient (1/2 choose j), exact."""
    if j < 0:
        raise ValueError("binom_half needs a non-negative index")
    num = Fraction(1)
    for i in range(j):
        num *= Fraction(1, 2) - i
    return num / factorial(j)


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

# B_{2k} / (2k (2k-1)) for the Stirling series of log Gamma
_STIRLING_COEFFS = tuple(
    float(_bernoulli_numbers(24)[2 * k] / (2 * k * (2 * k - 1)))
    for k in range(1, 13)
)
_STIRLING_SHIFT = 16.0


def _log_gamma_stirling(w: complex) -> complex:
    """Stirling series for log Gamma, valid for Re(w) >= _STIRLING_SHIFT."""
    lg = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2.0 * math.pi)
    winv2 = 1.0 / (w * w)
    p = 1.0 / w
    for c in _STIRLING_COEFFS:
        lg += c * p
        p *= winv2
    return lg


def log_gamma(z: complex) -> complex:
    """A logarithm of Gamma(z) for Re(z) > 0 (continuous on the real axis)."""
    z = complex(z)
    if z.real <= 0:
        raise GammaPoleError("log_gamma implemented for Re(z) > 0 only")
    shift = 0j
    w = z
    while w.real < _STIRLING_SHIFT:
        shift += cmath.log(w)
        w += 1
    return _log_gamma_stirling(w) - shift


def gamma(z: complex) -> complex:
    """Gamma function, reflection plus shifted Stirling series.

    Relative accuracy is a few ulps times the shift count, comfortably
    below 1e-12 for |z| <= 50.  Raises GammaPoleError at the poles.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise GammaPoleError(f"Gamma pole at z = {z.real:g}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma(1.0 - z))
    return cmath.exp(log_gamma(z))


# ---------------------------------------------------------------------------
# Hurwitz and Riemann zeta
# ---------------------------------------------------------------------------

def _em_parameters(s: complex, a: float) -> tuple[int, int]:
    """Shift count M and correction count J for the Euler-Maclaurin sum."""
    J = _EM_CORRECTION_TERMS
    if s.real < 0:
        J = max(J, math.ceil(-s.real / 2.0) + 5)
    J = min(J, _EM_CORRECTION_TERMS_MAX)
    target = max(
        10.0 + 2.0 * abs(s.imag),
        # convergence floor: the correction-term ratio is roughly
        # (|s| + 2J)^2 / (2 pi (M+a))^2 and must decay well below 1
        0.8 * (abs(s) + 2.0 * J),
    )
    M = max(0, math.ceil(target - a))
    return M, J


def _hurwitz_em_float(s: complex, a: float, M: int, J: int) -> complex:
    """Euler-Maclaurin continuation of zeta_H(s, a) in float64."""
    partial = 0j
    for n in range(M):
        partial += (n + a) ** (-s)
    b = M + a
    tail = b ** (1.0 - s) / (s - 1.0) + 0.5 * b ** (-s)
    # corrections: B_2j / (2j)! * (s)_{2j-1} * b^(-s - 2j + 1)
    numbers = _bernoulli_numbers(2 * J)
    poch = s  # (s)_1
    bpow = b ** (-s - 1.0)
    binv2 = 1.0 / (b * b)
    corr = 0j
    for j in range(1, J + 1):
        corr += float(numbers[2 * j] / factorial(2 * j)) * poch * bpow
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        bpow *= binv2
    return partial + tail + corr


def _hurwitz_em_mp(s: complex, a: float, M: int, J: int, dps: int) -> complex:
    """Same recursion at elevated working precision (cancellation guard)."""
    with mpmath.workdps(dps):
        s_ = mpmath.mpc(s)
        a_ = mpmath.mpf(a)
        partial = mpmath.mpc(0)
        for n in range(M):
            partial += (n + a_) ** (-s_)
        b = M + a_
        tail = b ** (1 - s_) / (s_ - 1) + b ** (-s_) / 2
        numbers = _bernoulli_numbers(2 * J)
        poch = s_
        bpow = b ** (-s_ - 1)
        binv2 = 1 / (b * b)
        corr = mpmath.mpc(0)
        for j in range(1, J + 1):
            coef = mpmath.mpf(numbers[2 * j].numerator)
            coef /= numbers[2 * j].denominator * mpmath.factorial(2 * j)
            corr += coef * poch * bpow
            poch *= (s_ + 2 * j - 1) * (s_ + 2 * j)
            bpow *= binv2
        return complex(partial + tail + corr)


def hurwitz_zeta(s: complex, a: float) -> complex:
    """Hurwitz zeta(s, a) for a > 0, continued by Euler-Maclaurin.

    For strongly negative Re(s) the float64 path would cancel roughly
    (1 - Re s) * log10(M + a) digits between the partial sum and the tail
    expansion, so the identical recursion runs with enough guard digits
    instead.  Non-positive a is served by hurwitz_zeta_extended.
    """
    s = complex(s)
    if s == 1:
        raise ZetaPoleError("zeta_H has its pole at s = 1")
    if not a > 0:
        raise NonpositiveParameterError(
            "hurwitz_zeta needs a > 0; use hurwitz_zeta_extended for the "
            "polynomial continuation in the second argument"
        )
    a = float(a)
    M, J = _em_parameters(s, a)
    # digits destroyed by the partial-sum/tail cancellation
    scale_gap = (M + a) / max(a, 1.0)
    loss = max(0.0, 1.0 - s.real) * math.log10(scale_gap) if scale_gap > 1 else 0.0
    if loss <= _EM_FLOAT64_LOSS_DIGITS:
        return _hurwitz_em_float(s, a, M, J)
    return _hurwitz_em_mp(s, a, M, J, dps=20 + math.ceil(loss))


def hurwitz_zeta_extended(k: int, a: float):
    """zeta_H(-k, a) = -B_{k+1}(a) / (k+1), valid for every real a.

    This is the analytic continuation in the second argument; it is the
    only route to non-positive a, where complex powers of negative bases
    would otherwise be taken implicitly.
    """
    if k < 0:
        raise DegreeError("k must be non-negative")
    if k + 1 > BERNOULLI_DEGREE_MAX:
        raise DegreeError(
            f"k = {k} exceeds the Bernoulli table (max {BERNOULLI_DEGREE_MAX - 1})"
        )
    value = bernoulli_polynomial(k + 1, a)
    return -value / (k + 1)


def riemann_zeta(s: complex) -> complex:
    """Riemann zeta as the a = 1 slice of the Hurwitz function."""
    return hurwitz_zeta(s, 1.0)


def sphere_area(N: int) -> float:
    """Surface measure of the unit sphere in R^N, 2 pi^(N/2) / Gamma(N/2)."""
    if N < 1:
        raise NonpositiveParameterError("dimension must be a positive integer")
    return 2.0 * math.pi ** (N / 2.0) / gamma(N / 2.0).real
