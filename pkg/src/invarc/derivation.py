"""The derivation pipeline, end to end in exact arithmetic.

Starting from the perimeter series L = pi*(a+b) * sum binom(1/2,n)^2 lambda^(2n)
(Ivory's series, written in x = lambda^2), the pipeline forms the excess
series h(x) = ivory - 1, reverts it to get the true inverse x(h), expands
the closed form 4h - 3h^2/(2 + sqrt(1 - 3h)) as a series, differences the
two (the error law -h^6/32 - ...), and extracts the continued fraction of
the true inverse.  :func:`full_report` bundles all of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cfrac import CFraction, ClosedFormExpr, cfrac_expand
from .series import PowerSeries

_IVORY_COEFFS: list[Fraction] = [Fraction(1), Fraction(1, 4)]


def ivory_coefficient(n: int) -> Fraction:
    """binom(1/2, n)^2, the coefficient of lambda^(2n) in the perimeter series."""
    if n < 0:
        raise ValueError("coefficient index must be non-negative")
    while len(_IVORY_COEFFS) <= n:
        k = len(_IVORY_COEFFS)
        _IVORY_COEFFS.append(_IVORY_COEFFS[k - 1] * Fraction((2 * k - 3) ** 2, (2 * k) ** 2))
    return _IVORY_COEFFS[n]


def ivory_series(order: int) -> PowerSeries:
    """Perimeter series body in x = lambda^2: sum binom(1/2,n)^2 x^n."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return PowerSeries(ivory_coefficient(n) for n in range(order + 1))


def h_series(order: int) -> PowerSeries:
    """Perimeter excess h as a series in x = lambda^2 (the ivory series minus 1)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = [Fraction(0)] + [ivory_coefficient(n) for n in range(1, order + 1)]
    return PowerSeries(coeffs)


def true_inverse_series(order: int) -> PowerSeries:
    """lambda^2 as a series in h: the compositional inverse of the h-series."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return h_series(order).revert()


def ramanujan_series(order: int) -> PowerSeries:
    """Series expansion of the closed form 4h - 3h^2/(2 + sqrt(1 - 3h))."""
    if order < 2:
        raise ValueError("order must be at least 2")
    return ClosedFormExpr().to_series(order)


def difference_series(order: int) -> PowerSeries:
    """True inverse minus closed-form expansion; starts at -h^6/32."""
    if order < 6:
        raise ValueError("order must be at least 6 to expose the leading error term")
    return true_inverse_series(order) - ramanujan_series(order)


@dataclass(frozen=True)
class DerivationReport:
    """Every series of the pipeline at one working order, plus the fraction."""

    ivory: PowerSeries
    h_series: PowerSeries
    true_series: PowerSeries
    approx_series: PowerSeries
    difference: PowerSeries
    cfrac_true: CFraction
    working_order: int

    def series_by_name(self) -> dict[str, PowerSeries]:
        return {
            "ivory": self.ivory,
            "h-series": self.h_series,
            "true": self.true_series,
            "approx": self.approx_series,
            "difference": self.difference,
        }

    def coefficient_rows(self) -> Iterator[tuple[str, int, Fraction]]:
        """(series name, power, coefficient) for every certified coefficient."""
        for name, series in self.series_by_name().items():
            for power, coeff in enumerate(series.coeffs):
                yield name, power, coeff

    def to_text(self) -> str:
        lines = [f"working order: {self.working_order}"]
        labels = {
            "ivory": "ivory (powers of lambda^2)",
            "h-series": "h-series (powers of lambda^2)",
            "true": "true inverse (powers of h)",
            "approx": "closed-form expansion (powers of h)",
            "difference": "difference, true - approx (powers of h)",
        }
        for name, series in self.series_by_name().items():
            lines.append(f"{labels[name]}: " + ", ".join(series.to_strings()))
        lines.append(
            "continued-fraction partial numerators: "
            + ", ".join(self.cfrac_true.partial_strings())
        )
        return "\n".join(lines) + "\n"


def full_report(order: int = 12, depth: int | None = None) -> DerivationReport:
    """Run the whole pipeline at one working order.

    The continued fraction is taken to depth min(order - 2, depth); orders
    below 8 cannot certify the h^6..h^8 error coefficients and are refused.
    """
    if order < 8:
        raise ValueError("order must be at least 8 to certify the error law")
    true = true_inverse_series(order)
    approx = ramanujan_series(order)
    cap = order - 2
    eff_depth = cap if depth is None else min(depth, cap)
    return DerivationReport(
        ivory=ivory_series(order),
        h_series=h_series(order),
        true_series=true,
        approx_series=approx,
        difference=true - approx,
        cfrac_true=cfrac_expand(true, eff_depth),
        working_order=order,
    )
