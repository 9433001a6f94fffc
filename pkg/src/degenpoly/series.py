"""Truncated exponential-generating-function arithmetic over BiPoly.

An ``EgfSeries`` holds coefficients a_0..a_N of f(t) = sum a_n t^n together
with the inclusive truncation order N.  The *value* of the series at index
n is n! * a_n, matching the t^n/n! convention of exponential generating
functions: extraction must multiply by the factorial.

Binary operations truncate to the smaller operand order.  Everything is
exact in Q[l, x]; no rounding ever occurs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .bipoly import BiPoly, factorial

_ONE = BiPoly.const(1)


class SeriesError(ArithmeticError):
    """Base class for truncated-series contract violations."""


class DivisionByNonUnit(SeriesError):
    """Divisor constant term is zero or not a pure rational."""


class NonzeroLowOrder(SeriesError):
    """A leading coefficient that must vanish for t-division is nonzero."""


class NonzeroConstantInner(SeriesError):
    """Inner series of a composition has a nonzero constant term."""


class BadConstantTerm(SeriesError):
    """Constant term violates the precondition of exp/log/fractional power."""


class IndexBeyondTruncation(SeriesError):
    """Requested index exceeds the truncation order."""


class EgfSeries:
    """A truncated formal power series with BiPoly coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[BiPoly | Fraction | int]):
        clean: list[BiPoly] = []
        for c in coeffs:
            if not isinstance(c, BiPoly):
                c = BiPoly.const(c)
            clean.append(c)
        if not clean:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "EgfSeries":
        return cls([BiPoly.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "EgfSeries":
        return cls([_ONE] + [BiPoly.zero()] * order)

    @classmethod
    def t(cls, order: int) -> "EgfSeries":
        """The identity series t (requires order >= 1)."""
        if order < 1:
            raise ValueError("the series t needs truncation order >= 1")
        coeffs = [BiPoly.zero()] * (order + 1)
        coeffs[1] = _ONE
        return cls(coeffs)

    @classmethod
    def constant(cls, value: BiPoly | Fraction | int, order: int) -> "EgfSeries":
        coeffs: list[BiPoly | Fraction | int] = [value] + [BiPoly.zero()] * order
        return cls(coeffs)

    # -- accessors ---------------------------------------------------------

    @property
    def order(self) -> int:
        """The inclusive truncation order N."""
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> BiPoly:
        if n < 0 or n > self.order:
            raise IndexBeyondTruncation(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def value(self, n: int) -> BiPoly:
        """The family value at index n, i.e. n! * a_n."""
        return self.coefficient(n) * factorial(n)

    def values(self) -> list[BiPoly]:
        return [self.value(n) for n in range(self.order + 1)]

    def truncate(self, order: int) -> "EgfSeries":
        """Discard coefficients above ``order`` (which must not exceed the current order)."""
        if order < 0 or order > self.order:
            raise IndexBeyondTruncation(f"cannot truncate order-{self.order} series to {order}")
        return EgfSeries(self._coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self) -> str:
        head = ", ".join(c.render() for c in self._coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"EgfSeries(order={self.order}; {head}{tail})"

    # -- arithmetic ----------------------------------------------------------

    def _aligned(self, other: "EgfSeries") -> tuple[int, "EgfSeries", "EgfSeries"]:
        order = min(self.order, other.order)
        return order, self, other

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        order, f, g = self._aligned(other)
        return EgfSeries([f._coeffs[n] + g._coeffs[n] for n in range(order + 1)])

    def __sub__(self, other: "EgfSeries") -> "EgfSeries":
        order, f, g = self._aligned(other)
        return EgfSeries([f._coeffs[n] - g._coeffs[n] for n in range(order + 1)])

    def __neg__(self) -> "EgfSeries":
        return EgfSeries([-c for c in self._coeffs])

    def __mul__(self, other: "EgfSeries") -> "EgfSeries":
        order, f, g = self._aligned(other)
        out = []
        for n in range(order + 1):
            acc = BiPoly.zero()
            for j in range(n + 1):
                fj = f._coeffs[j]
                gk = g._coeffs[n - j]
                if fj and gk:
                    acc = acc + fj * gk
            out.append(acc)
        return EgfSeries(out)

    def scale(self, c: BiPoly | Fraction | int) -> "EgfSeries":
        """Multiply every coefficient by a scalar or polynomial."""
        return EgfSeries([coeff * c for coeff in self._coeffs])

    def add_constant(self, c: BiPoly | Fraction | int) -> "EgfSeries":
        coeffs = list(self._coeffs)
        coeffs[0] = coeffs[0] + c
        return EgfSeries(coeffs)

    def divide(self, g: "EgfSeries") -> "EgfSeries":
        """Exact division f/g; g must have a nonzero pure-rational constant term."""
        g0 = g._coeffs[0].constant()
        if g0 is None or g0 == 0:
            raise DivisionByNonUnit(
                f"divisor constant term must be a nonzero rational, got {g._coeffs[0]!r}"
            )
        order = min(self.order, g.order)
        inv0 = 1 / g0
        out: list[BiPoly] = []
        for n in range(order + 1):
            acc = self._coeffs[n]
            for j in range(1, n + 1):
                gj = g._coeffs[j]
                if gj:
                    acc = acc - gj * out[n - j]
            out.append(acc * inv0)
        return EgfSeries(out)

    def shift_div_t(self, m: int = 1) -> "EgfSeries":
        """Divide by t^m; the first m coefficients must vanish.  Order drops by m."""
        if m < 1:
            raise ValueError(f"t-shift exponent must be >= 1, got {m}")
        if m > self.order:
            raise IndexBeyondTruncation(f"cannot divide an order-{self.order} series by t^{m}")
        for n in range(m):
            if self._coeffs[n]:
                raise NonzeroLowOrder(f"coefficient of t^{n} is nonzero: {self._coeffs[n]!r}")
        return EgfSeries(self._coeffs[m:])

    def compose(self, inner: "EgfSeries") -> "EgfSeries":
        """f(inner(t)) by Horner's scheme; the inner constant term must vanish."""
        if inner._coeffs[0]:
            raise NonzeroConstantInner(
                f"inner series has nonzero constant term {inner._coeffs[0]!r}"
            )
        order = min(self.order, inner.order)
        g = inner.truncate(order)
        acc = EgfSeries.constant(self._coeffs[order], order)
        for k in range(order - 1, -1, -1):
            acc = (acc * g).add_constant(self._coeffs[k])
        return acc

    def exp(self) -> "EgfSeries":
        """Formal exponential; requires a vanishing constant term.

        Uses the derivative recurrence g_n = (1/n) * sum_{k=1..n} k f_k g_{n-k}.
        """
        if self._coeffs[0]:
            raise BadConstantTerm(f"exp needs constant term 0, got {self._coeffs[0]!r}")
        out = [_ONE]
        for n in range(1, self.order + 1):
            acc = BiPoly.zero()
            for k in range(1, n + 1):
                fk = self._coeffs[k]
                if fk:
                    acc = acc + fk * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return EgfSeries(out)

    def log(self) -> "EgfSeries":
        """Formal logarithm; requires constant term 1.

        Uses L_n = f_n - (1/n) * sum_{k=1..n-1} k L_k f_{n-k}.
        """
        if self._coeffs[0] != _ONE:
            raise BadConstantTerm(f"log needs constant term 1, got {self._coeffs[0]!r}")
        out = [BiPoly.zero()]
        for n in range(1, self.order + 1):
            corr = BiPoly.zero()
            for k in range(1, n):
                fk = self._coeffs[n - k]
                if out[k] and fk:
                    corr = corr + out[k] * fk * k
            out.append(self._coeffs[n] - corr * Fraction(1, n))
        return EgfSeries(out)

    def pow(self, alpha: Fraction | int) -> "EgfSeries":
        """Raise to a rational power.

        Integer exponents use repeated squaring (and one division when
        negative), which only needs an invertible rational constant term.
        Fractional exponents use exp(alpha * log f) and require constant
        term exactly 1.
        """
        alpha = Fraction(alpha)
        if alpha.denominator == 1:
            n = alpha.numerator
            if n >= 0:
                return self._int_pow(n)
            return EgfSeries.one(self.order).divide(self._int_pow(-n))
        if self._coeffs[0] != _ONE:
            raise BadConstantTerm(
                f"fractional power needs constant term 1, got {self._coeffs[0]!r}"
            )
        return self.log().scale(alpha).exp()

    def _int_pow(self, n: int) -> "EgfSeries":
        result = EgfSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def from_values(values: Sequence[BiPoly | Fraction | int]) -> EgfSeries:
    """Build a series from family values v_n, i.e. with coefficients v_n/n!."""
    coeffs = []
    for n, v in enumerate(values):
        if not isinstance(v, BiPoly):
            v = BiPoly.const(v)
        coeffs.append(v * (1 / factorial(n)))
    return EgfSeries(coeffs)
