"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` stores coefficients c_0 .. c_N of a single-variable
series as :class:`fractions.Fraction` values together with its truncation
order N.  Coefficients beyond the order are unknown, not zero; every
operation propagates the order pessimistically, so any coefficient a result
exposes is certified exact.

All values are immutable and all operations are pure functions, so series
can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Coefficient = Union[Fraction, int, str]


class SeriesError(ArithmeticError):
    """Base class for series arithmetic failures."""


class ZeroConstantTerm(SeriesError):
    """Division where the denominator's valuation is not compensated."""


class DivisionByZeroSeries(SeriesError):
    """Division by a series that is zero through its whole order."""


class NonUnitConstant(SeriesError):
    """Square root of a series whose constant term is not 1."""


class NonzeroInnerConstant(SeriesError):
    """Composition with an inner series whose constant term is not 0."""


class ZeroLinearTerm(SeriesError):
    """Reversion of a series with no linear term."""


class NotCentered(SeriesError):
    """Reversion of a series whose constant term is not 0."""


def _frac(value: Coefficient) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class PowerSeries:
    """Immutable truncated power series over exact rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient]):
        tup = tuple(_frac(c) for c in coeffs)
        if not tup:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "_coeffs", tup)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls((Fraction(1),) + (Fraction(0),) * order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series x, known through the given order."""
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, coeff: Coefficient, power: int, order: int) -> "PowerSeries":
        if power < 0 or power > order:
            raise ValueError("monomial power must lie within the order")
        c = [Fraction(0)] * (order + 1)
        c[power] = _frac(coeff)
        return cls(c)

    @classmethod
    def polynomial(cls, coeffs: Sequence[Coefficient], order: int) -> "PowerSeries":
        """An exact polynomial, zero-padded up to `order`.

        Padding with true zeros is legitimate here because a polynomial's
        higher coefficients really are zero; plain arithmetic never pads.
        """
        if len(coeffs) > order + 1:
            raise ValueError("polynomial longer than the requested order")
        c = [_frac(v) for v in coeffs]
        c.extend(Fraction(0) for _ in range(order + 1 - len(c)))
        return cls(c)

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "PowerSeries":
        return cls(Fraction(s) for s in strings)

    # -- basic queries ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, power: int) -> Fraction:
        if power < 0 or power > self.order:
            raise IndexError(f"coefficient {power} is beyond certified order {self.order}")
        return self._coeffs[power]

    def constant(self) -> Fraction:
        return self._coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a series; higher coefficients are unknown")
        return PowerSeries(self._coeffs[: order + 1])

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    def evaluate(self, point: Coefficient) -> Fraction:
        """Exact value of the truncated polynomial at a rational point."""
        x = _frac(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- comparison ------------------------------------------------------

    def agreement(self, other: "PowerSeries") -> tuple[bool, int]:
        """Compare through the shared prefix.

        Returns (equal, certified_order): whether all coefficients agree up
        to the smaller of the two orders, and that order.  Nothing beyond
        the certified order is claimed either way.
        """
        certified = min(self.order, other.order)
        equal = self._coeffs[: certified + 1] == other._coeffs[: certified + 1]
        return equal, certified

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self._coeffs[: n + 1], other._coeffs[: n + 1]))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(a - b for a, b in zip(self._coeffs[: n + 1], other._coeffs[: n + 1]))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self._coeffs)

    def scale(self, factor: Coefficient) -> "PowerSeries":
        f = _frac(factor)
        return PowerSeries(f * c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a = self._coeffs
            b = other._coeffs
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
            return PowerSeries(out)
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PowerSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers")
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    # -- division, sqrt, composition, reversion --------------------------

    def divide(self, den: "PowerSeries") -> "PowerSeries":
        """Exact long division.

        When the denominator has valuation v > 0 the numerator must share
        it; the common factor x^v is cancelled and the certified order
        shrinks by v.
        """
        if den.is_zero():
            raise DivisionByZeroSeries("denominator is zero through its whole order")
        v = den.valuation()
        assert v is not None
        num_c = self._coeffs
        den_c = den._coeffs
        if v > 0:
            nv = self.valuation()
            if nv is not None and nv < v:
                raise ZeroConstantTerm(
                    f"denominator valuation {v} exceeds numerator valuation {nv}"
                )
            num_c = num_c[v:] if len(num_c) > v else (Fraction(0),)
            den_c = den_c[v:]
        n = min(self.order, den.order) - v
        if n < 0:
            raise SeriesError("division result certifies no coefficients at these orders")
        lead = den_c[0]
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = num_c[k] if k < len(num_c) else Fraction(0)
            for i in range(k):
                if out[i] != 0 and k - i < len(den_c):
                    acc -= out[i] * den_c[k - i]
            out[k] = acc / lead
        return PowerSeries(out)

    __truediv__ = divide

    def sqrt(self) -> "PowerSeries":
        """Principal square root of a series with constant term 1."""
        if self._coeffs[0] != 1:
            raise NonUnitConstant(f"sqrt needs constant term 1, got {self._coeffs[0]}")
        n = self.order
        r = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = self._coeffs[k]
            for i in range(1, k):
                acc -= r[i] * r[k - i]
            r[k] = acc / 2
        return PowerSeries(r)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner) for inner with zero constant term."""
        if inner._coeffs[0] != 0:
            raise NonzeroInnerConstant("inner series must vanish at 0")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        result = PowerSeries.zero(n)
        for k in range(min(self.order, n), -1, -1):
            result = result * inner_t
            if self._coeffs[k] != 0:
                result = result + PowerSeries.monomial(self._coeffs[k], 0, n)
        return result

    def revert(self) -> "PowerSeries":
        """Compositional inverse.

        Needs constant term 0 and nonzero linear term; solves the
        coefficients one order at a time from compose(self, result) = x.
        """
        if self._coeffs[0] != 0:
            raise NotCentered("can only revert a series with zero constant term")
        if self.order < 1 or self._coeffs[1] == 0:
            raise ZeroLinearTerm("reversion needs a nonzero linear coefficient")
        n = self.order
        s1 = self._coeffs[1]
        g = [Fraction(0), 1 / s1]
        for m in range(2, n + 1):
            partial = PowerSeries(g + [Fraction(0)])
            value = self.truncate(m).compose(partial)
            g.append(-value[m] / s1)
        return PowerSeries(g)

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.to_strings())!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = c if c > 0 else -c
                body = f"x^{k}" if k > 1 else "x"
                piece = body if mag == 1 else f"{mag}*{body}"
                terms.append(piece if not terms and c > 0 else ("+ " if c > 0 else "- ") + piece)
        if not terms:
            return f"0 + O(x^{self.order + 1})"
        head = terms[0]
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + terms[1:]) + f" + O(x^{self.order + 1})"
