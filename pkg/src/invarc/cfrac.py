"""Continued fractions in the subtracted normal form.

A :class:`CFraction` represents

    leading*h - head*h^2 / (1 - a1*h / (1 - a2*h / (1 - ...)))

as the ordered list of partial numerator coefficients a_k.  The module
expands a power series into that form, re-expands truncations back into
series (the round-trip oracle), freezes a periodic tail, solves the
periodic tail in closed form, and collapses the specific frozen shape
4h - h^2/(1 - (h/2)/B) with B periodic at 3/4 into the closed expression
4h - 3h^2/(2 + sqrt(1 - 3h)).

Everything is exact rational arithmetic; no floats enter this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import PowerSeries, NotCentered


class CFracError(ArithmeticError):
    """Base class for continued-fraction failures."""


class InsufficientOrder(CFracError):
    """The source series is too short for the requested depth."""


class InsufficientDepth(CFracError):
    """The fraction is too shallow to certify the requested order."""


class IndexOutOfRange(CFracError):
    """Freeze index outside 1..depth."""


class DegenerateHead(CFracError):
    """The series lacks the h or h^2 coefficient the normal form needs."""


class IrregularExpansion(CFracError):
    """A partial numerator vanished while the remainder did not terminate."""


class HeadMismatch(CFracError):
    """Agreement comparison between fractions with different heads."""


class NotInRamanujanShape(CFracError):
    """Collapse requested for a fraction outside the supported shape."""


@dataclass(frozen=True)
class CFraction:
    """Normal-form continued fraction data.

    periodic_from, when set, is the 1-based index from which every partial
    coefficient holds the same frozen value (the tail is conceptually
    infinite).  terminated marks an expansion that ended early because some
    remainder 1 - D_k was identically zero: the source was a rational
    function and the stored partials are complete.
    """

    leading: Fraction
    head: Fraction
    partials: tuple[Fraction, ...]
    periodic_from: int | None = None
    terminated: bool = False

    @property
    def depth(self) -> int:
        return len(self.partials)

    def partial_strings(self) -> list[str]:
        return [str(a) for a in self.partials]


@dataclass(frozen=True)
class TailClosedForm:
    """Closed form of a periodic tail B = 1 - c*h/B with B(0) = 1.

    Solving the quadratic B^2 - B + c*h = 0 and picking the branch that is
    1 at h = 0 gives B(h) = (1 + sqrt(1 - 4*c*h))/2.
    """

    numerator_coeff: Fraction
    branch_value_at_zero: Fraction = Fraction(1)

    def to_series(self, order: int) -> PowerSeries:
        radicand = PowerSeries.polynomial([1, -4 * self.numerator_coeff], order)
        return (PowerSeries.one(order) + radicand.sqrt()).scale(Fraction(1, 2))

    def radicand_string(self) -> str:
        slope = 4 * self.numerator_coeff
        if slope == 0:
            return "1"
        term = "h" if slope == 1 else f"{slope}h"
        return f"1 - {term}" if slope > 0 else f"1 + {-slope}h"

    def __str__(self) -> str:
        return f"(1 + sqrt({self.radicand_string()}))/2"


@dataclass(frozen=True)
class ClosedFormExpr:
    """The fixed-shape closed form  affine*h - num*h^2/(const + sqrt(1 + slope*h)).

    Defaults encode 4h - 3h^2/(2 + sqrt(1 - 3h)).  This is a data record,
    not a general expression tree; the one shape is all that is needed.
    """

    affine_coeff: Fraction = Fraction(4)
    quotient_numerator: Fraction = Fraction(3)
    quotient_constant: Fraction = Fraction(2)
    radicand_linear: Fraction = Fraction(-3)

    def canonical_string(self) -> str:
        slope = -self.radicand_linear
        rad = f"1 - {slope}h" if slope > 0 else f"1 + {-slope}h"
        return (
            f"{self.affine_coeff}h - {self.quotient_numerator}h^2/"
            f"({self.quotient_constant} + sqrt({rad}))"
        )

    def to_series(self, order: int) -> PowerSeries:
        if order < 2:
            raise ValueError("need order >= 2 to expand the closed form")
        root = PowerSeries.polynomial([1, self.radicand_linear], order).sqrt()
        den = PowerSeries.monomial(self.quotient_constant, 0, order) + root
        num = PowerSeries.monomial(self.quotient_numerator, 2, order)
        return PowerSeries.monomial(self.affine_coeff, 1, order) - num.divide(den)

    def __str__(self) -> str:
        return self.canonical_string()


def cfrac_expand(s: PowerSeries, depth: int) -> CFraction:
    """Extract the normal-form partial numerator coefficients of a series.

    The source must vanish at 0 with nonzero h and h^2 coefficients.  The
    head is read off first (leading = c1, head = -c2), then D_1 =
    head*h^2/(c1*h - s) is normalized to D_1(0) = 1 and each step extracts
    a_k as the linear coefficient of 1 - D_k and continues with D_{k+1} =
    a_k*h/(1 - D_k).  A depth-d truncation certifies the source through
    order d + 2, which is why the source order must be at least depth + 2.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if s.order < depth + 2:
        raise InsufficientOrder(
            f"series order {s.order} cannot support depth {depth}; need {depth + 2}"
        )
    if s[0] != 0:
        raise NotCentered("series must vanish at 0")
    c1 = s[1]
    c2 = s[2]
    if c1 == 0 or c2 == 0:
        raise DegenerateHead("normal form needs nonzero h and h^2 coefficients")
    head = -c2
    denom = PowerSeries.monomial(c1, 1, s.order) - s
    d = PowerSeries.monomial(head, 2, s.order).divide(denom)
    partials: list[Fraction] = []
    terminated = False
    for k in range(1, depth + 1):
        remainder = PowerSeries.one(d.order) - d
        if remainder.is_zero():
            terminated = True
            break
        a = remainder[1]
        if a == 0:
            raise IrregularExpansion(
                f"partial numerator {k} vanished but the remainder did not terminate"
            )
        partials.append(a)
        if k < depth:
            d = PowerSeries.monomial(a, 1, remainder.order).divide(remainder)
    return CFraction(c1, head, tuple(partials), None, terminated)


def _materialized_partials(cf: CFraction, need: int) -> list[Fraction]:
    work = list(cf.partials)
    if len(work) < need:
        if cf.periodic_from is None or not work:
            raise InsufficientDepth(
                f"depth {cf.depth} certifies only order {cf.depth + 2}"
            )
        fill = cf.partials[cf.periodic_from - 1]
        work.extend(fill for _ in range(need - len(work)))
    return work


def cfrac_to_series(cf: CFraction, order: int) -> PowerSeries:
    """Expand a truncated fraction bottom-up into a power series.

    For a plain fraction the certified range is order <= depth + 2.  A
    frozen fraction has a conceptually infinite periodic tail, so extra
    partials are materialized on demand and any order is certified.
    """
    if order < 1:
        raise ValueError("order must be positive")
    work = _materialized_partials(cf, max(0, order - 2))
    tail = PowerSeries.one(order)
    for a in reversed(work):
        tail = PowerSeries.one(order) - PowerSeries.monomial(a, 1, order).divide(tail)
    head_term = PowerSeries.monomial(cf.head, 2, order).divide(tail)
    return PowerSeries.monomial(cf.leading, 1, order) - head_term


def freeze_tail(cf: CFraction, from_index: int, value) -> CFraction:
    """Replace every partial from the 1-based from_index on with one value."""
    value = Fraction(value)
    if from_index < 1 or from_index > cf.depth:
        raise IndexOutOfRange(f"freeze index {from_index} outside 1..{cf.depth}")
    kept = cf.partials[: from_index - 1]
    frozen = (value,) * (cf.depth - from_index + 1)
    return CFraction(cf.leading, cf.head, kept + frozen, from_index, False)


def solve_periodic_tail(c) -> TailClosedForm:
    """Closed form of the all-c periodic tail, branch fixed by B(0) = 1."""
    return TailClosedForm(Fraction(c))


_RAMANUJAN_VALUE = Fraction(3, 4)
_RAMANUJAN_A1 = Fraction(1, 2)


def collapse_to_closed_form(cf: CFraction, order: int = 12) -> ClosedFormExpr:
    """Collapse the frozen fraction 4h - h^2/(1 - (h/2)/B) with B periodic
    at 3/4 into 4h - 3h^2/(2 + sqrt(1 - 3h)).

    The substitution is re-verified internally: the closed form's own
    expansion must match the series obtained by substituting B into the
    fraction, through the given order.
    """
    if cf.leading != 4 or cf.head != 1:
        raise NotInRamanujanShape(f"head is ({cf.leading}, {cf.head}), need (4, 1)")
    if cf.depth < 2 or cf.partials[0] != _RAMANUJAN_A1:
        raise NotInRamanujanShape("first partial numerator must be 1/2")
    if cf.periodic_from != 2:
        raise NotInRamanujanShape("tail must be frozen from index 2")
    if any(a != _RAMANUJAN_VALUE for a in cf.partials[1:]):
        raise NotInRamanujanShape("frozen value must be 3/4")
    b = solve_periodic_tail(_RAMANUJAN_VALUE).to_series(order)
    inner = PowerSeries.one(order) - PowerSeries.monomial(_RAMANUJAN_A1, 1, order).divide(b)
    substituted = PowerSeries.monomial(4, 1, order) - PowerSeries.monomial(1, 2, order).divide(inner)
    expr = ClosedFormExpr()
    equal, _ = substituted.agreement(expr.to_series(order))
    if not equal:
        raise CFracError("substitution and closed form disagree; collapse is invalid")
    return expr


def convergent_agreement_order(cf_a: CFraction, cf_b: CFraction) -> int:
    """Number of leading convergents on which two fractions coincide.

    Convergent 0 is the head alone (leading*h - head*h^2); convergent k
    additionally uses partials a_1..a_k.  Two fractions share convergent k
    exactly when their first k partials agree, so the count returned is
    1 + (length of the common partial prefix).  Identical fractions of
    depth d therefore agree on d + 1 convergents.
    """
    if cf_a.leading != cf_b.leading or cf_a.head != cf_b.head:
        raise HeadMismatch("fractions have different leading/head structure")
    prefix = 0
    for x, y in zip(cf_a.partials, cf_b.partials):
        if x != y:
            break
        prefix += 1
    return 1 + prefix
