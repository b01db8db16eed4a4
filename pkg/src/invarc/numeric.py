"""Floating-point engines and the error sweep.

Two independent perimeter engines (AGM iteration and direct summation of
the perimeter series), the excess h for concrete ellipses, the closed-form
evaluator, perimeter-based inversion, and the error sweep that measures
how the closed form tracks the true inverse.

The sweep needs care: near lambda = 0 the error true - approx shrinks like
h^6/32, which at lambda = 0.05 is about 2e-21 while one ulp of lambda^2 is
already 2e-19.  Float64 cannot see the signal there, so rows with lambda
at or below :data:`EXACT_SWEEP_CUTOFF` are evaluated in exact rational
arithmetic (adaptively truncated perimeter series for h, an integer-sqrt
lower bound for sqrt(1 - 3h)) and floated only for output.  Larger lambda
uses the plain float engines, whose error is then far below the signal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .derivation import ivory_coefficient


class NumericError(ArithmeticError):
    """Base class for numeric-engine failures."""


class NoConvergence(NumericError):
    """An iteration hit its cap before reaching tolerance."""


class DomainError(NumericError):
    """Input outside the mathematical domain of the operation."""


class OutOfRange(NumericError):
    """Measurement outside the feasible bracket."""


@dataclass(frozen=True)
class Ellipse:
    """Semiaxes a >= b >= 0 with a > 0; b = 0 is the degenerate segment."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0):
            raise DomainError(f"semimajor axis must be positive, got {self.a}")
        if not (self.a >= self.b >= 0):
            raise DomainError(f"need a >= b >= 0, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class PrecisionConfig:
    """Stopping control for the iterative engines.

    max_iter = None means each engine's own default cap: 64 for the
    quadratically convergent AGM, 10000 for the series summation.
    """

    abs_tol: float = 1e-14
    max_iter: int | None = None

    def __post_init__(self):
        if not (self.abs_tol > 0):
            raise DomainError("abs_tol must be positive")
        if self.max_iter is not None and self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")

    @property
    def agm_cap(self) -> int:
        return 64 if self.max_iter is None else self.max_iter

    @property
    def series_cap(self) -> int:
        return 10000 if self.max_iter is None else self.max_iter


DEFAULT_CONFIG = PrecisionConfig()

# Largest lambda handled by the exact-rational sweep path.  Chosen so both
# paths are comfortably accurate on either side: at 0.35 the float path's
# noise (~1e-16) is already five orders below the signal |diff| ~ 3e-11,
# and the exact path still needs only ~20 series terms.
EXACT_SWEEP_CUTOFF = 0.35

ERROR_TABLE_COLUMNS = ("lambda", "h", "lambda_sq_true", "lambda_sq_approx", "diff", "normalized")


@dataclass(frozen=True)
class ErrorRow:
    """One sweep row.  The first field is `lam` only because `lambda` is a
    Python keyword; it serializes under the column name "lambda"."""

    lam: float
    h: float
    lambda_sq_true: float
    lambda_sq_approx: float
    diff: float
    normalized: float

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (
            self.lam,
            self.h,
            self.lambda_sq_true,
            self.lambda_sq_approx,
            self.diff,
            self.normalized,
        )


def lambda_of(e: Ellipse) -> float:
    """Shape parameter (a - b)/(a + b), 0 for a circle, 1 when degenerate."""
    return (e.a - e.b) / (e.a + e.b)


def perimeter_series(e: Ellipse, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """Perimeter by direct summation of pi*(a+b)*sum binom(1/2,n)^2 lambda^(2n).

    Terms are positive, so partial sums increase monotonically.  Summation
    stops once a term drops below abs_tol; the terms are accumulated with
    exact rounding (math.fsum) so the engines can be compared tightly.
    """
    lam = lambda_of(e)
    x = lam * lam
    terms = [1.0]
    xpow = 1.0
    n = 0
    while True:
        n += 1
        if n > cfg.series_cap:
            raise NoConvergence(
                f"series did not reach tol {cfg.abs_tol} in {cfg.series_cap} terms"
            )
        xpow *= x
        term = float(ivory_coefficient(n)) * xpow
        if term < cfg.abs_tol:
            break
        terms.append(term)
    return math.pi * (e.a + e.b) * math.fsum(terms)


def perimeter_agm(e: Ellipse, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """Perimeter via the AGM form of the complete elliptic integral.

    Iterates x, y -> ((x+y)/2, sqrt(x*y)) from (1, b/a), accumulating the
    c_n^2 correction sum; the perimeter is 2*pi*a*(1 - sum 2^(n-1) c_n^2)/M.
    Converges quadratically.  The degenerate b = 0 case is returned exactly
    as 4a (the AGM collapses to 0 there and the formula degenerates).
    """
    if e.b == 0:
        return 4.0 * e.a
    x = 1.0
    y = e.b / e.a
    csum = 0.5 * (1.0 - y * y)
    weight = 1.0
    iterations = 0
    while abs(x - y) > cfg.abs_tol:
        iterations += 1
        if iterations > cfg.agm_cap:
            raise NoConvergence(f"AGM did not converge in {cfg.agm_cap} iterations")
        c = 0.5 * (x - y)
        x, y = 0.5 * (x + y), math.sqrt(x * y)
        csum += weight * c * c
        weight *= 2.0
    m = 0.5 * (x + y)
    return 2.0 * math.pi * e.a * (1.0 - csum) / m


def h_of(e: Ellipse, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """Perimeter excess h defined by L = pi*(a+b)*(1+h), via the AGM engine."""
    return perimeter_agm(e, cfg) / (math.pi * (e.a + e.b)) - 1.0


def ramanujan_lambda_sq(h: float) -> float:
    """The closed form 4h - 3h^2/(2 + sqrt(1 - 3h)).

    Accepts the full mathematical domain 0 <= h <= 1/3 even though physical
    ellipses only reach h = 4/pi - 1.
    """
    if h < 0.0 or h > 1.0 / 3.0:
        raise DomainError(f"h = {h} outside [0, 1/3]")
    return 4.0 * h - 3.0 * h * h / (2.0 + math.sqrt(1.0 - 3.0 * h))


def _exact_sqrt_floor(value: Fraction, bits: int) -> Fraction:
    """Lower bound for sqrt(value) with error below 2^-bits."""
    p, q = value.numerator, value.denominator
    return Fraction(math.isqrt((p * q) << (2 * bits)), q << bits)


def _exact_row(lam: float, cfg: PrecisionConfig) -> ErrorRow:
    """One sweep row in exact rational arithmetic.

    h is the perimeter-series excess summed at the exact rational lambda
    until the dropped tail is below (lambda^2/4)^6 / 1e8, i.e. far below
    the h^6/32 signal; sqrt(1 - 3h) is bounded from below by a scaled
    integer square root tight enough that the normalized column keeps
    better than 1e-4 relative accuracy at every lambda.
    """
    lam_exact = Fraction(lam)
    x = lam_exact * lam_exact
    target = (x / 4) ** 6 / 10**8
    h = Fraction(0)
    xpow = Fraction(1)
    n = 0
    while True:
        n += 1
        if n > cfg.series_cap:
            raise NoConvergence("exact series summation exceeded the iteration cap")
        xpow *= x
        term = ivory_coefficient(n) * xpow
        if n > 1 and 2 * term <= target:
            # remaining tail < 2*term for lambda <= the cutoff
            break
        h += term
    radicand = 1 - 3 * h
    lead_gap = h.denominator.bit_length() - h.numerator.bit_length()
    bits = 4 * max(1, lead_gap + 1) + 48
    root = _exact_sqrt_floor(radicand, bits)
    approx = 4 * h - 3 * h * h / (2 + root)
    diff = x - approx
    normalized = 32 * diff / h**6
    return ErrorRow(lam, float(h), float(x), float(approx), float(diff), float(normalized))


def _float_row(lam: float, cfg: PrecisionConfig) -> ErrorRow:
    h = h_of(Ellipse(1.0 + lam, 1.0 - lam), cfg)
    true = lam * lam
    approx = ramanujan_lambda_sq(h)
    diff = true - approx
    return ErrorRow(lam, h, true, approx, diff, 32.0 * diff / h**6)


def error_sweep(lambda_grid, cfg: PrecisionConfig = DEFAULT_CONFIG) -> list[ErrorRow]:
    """Evaluate the approximation error row by row over a lambda grid.

    Each row reports h for the ellipse of that shape, the exact lambda^2,
    the closed-form value, their difference, and the difference normalized
    by -h^6/32 (so normalized -> -1 as lambda -> 0; the lambda = 0 row is
    set to -1 by that limit).  Rows come back in input order.
    """
    rows = []
    for lam in lambda_grid:
        if not (0.0 <= lam < 1.0):
            raise DomainError(f"lambda = {lam} outside [0, 1)")
        if lam == 0.0:
            rows.append(ErrorRow(0.0, 0.0, 0.0, 0.0, 0.0, -1.0))
        elif lam <= EXACT_SWEEP_CUTOFF:
            rows.append(_exact_row(lam, cfg))
        else:
            rows.append(_float_row(lam, cfg))
    return rows


def invert_from_measurements(
    perimeter: float, axis_sum: float, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> Ellipse:
    """Recover semiaxes from a perimeter L and the sum s = a + b.

    Feasible measurements satisfy pi*s <= L <= 4*s (circle up to the
    degenerate segment).  h = L/(pi*s) - 1 feeds the closed form; at the
    extreme degenerate end the closed form overshoots lambda^2 = 1 by about
    5.8e-4, so lambda is clamped to 1 there to keep b >= 0.
    """
    if not (axis_sum > 0):
        raise DomainError(f"axis sum must be positive, got {axis_sum}")
    lower = math.pi * axis_sum
    upper = 4.0 * axis_sum
    if perimeter < lower:
        raise OutOfRange(
            f"perimeter {perimeter} below the circle bound pi*sum = {lower}"
        )
    if perimeter > upper:
        raise OutOfRange(
            f"perimeter {perimeter} above the degenerate bound 4*sum = {upper}"
        )
    h = max(0.0, perimeter / (math.pi * axis_sum) - 1.0)
    lam = min(1.0, math.sqrt(ramanujan_lambda_sq(h)))
    return Ellipse(axis_sum * (1.0 + lam) / 2.0, axis_sum * (1.0 - lam) / 2.0)
