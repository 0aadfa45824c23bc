"""Exact truncated Laurent series in one variable t over arbitrary-precision rationals.

Everything downstream computes in the variable t with q = t^4, so that the
fractional powers q^(1/4) = t and q^(1/2) = t^2 occurring in the classical
identities are plain integer powers of t.

A series carries three pieces of state:

  * ``valuation`` -- the exponent of the lowest stored term (may be negative),
  * ``coeffs``    -- exact rational coefficients for exponents
                     valuation, valuation+1, ..., order-1,
  * ``order``     -- an *exclusive* bound: coefficients at exponents >= order
                     are unknown, not zero.

The order is a soundness contract, not a display convenience: an operation
never claims knowledge of a coefficient it cannot derive from the known
windows of its inputs.  Multiplication and division propagate orders by the
min rule (relative precision is preserved); addition takes the minimum of the
two orders.  Comparisons only ever look below the tracked order; asking for a
specific coefficient at or beyond it raises :class:`InsufficientPrecision`.

The canonical zero-to-order series is represented with an empty coefficient
tuple and ``valuation == order``, so precision keeps propagating through
cancellations.

All values are immutable after construction and all operations are pure
functions, so series may be shared freely across threads or tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm


class SeriesError(Exception):
    """Base class for series arithmetic failures."""


class DivisionByZeroSeries(SeriesError):
    """Division by a series that is zero up to its tracked order."""


class OddValuation(SeriesError):
    """Square root of a series whose valuation is odd."""


class NonSquareLeadingCoefficient(SeriesError):
    """Square root of a series whose leading coefficient has no rational root."""


class InsufficientPrecision(SeriesError):
    """A coefficient or comparison was requested beyond the tracked order."""


def sqrt_fraction(c: Fraction) -> Fraction | None:
    """Exact positive square root of a rational, or None if it is not a square."""
    if c < 0:
        return None
    rn = isqrt(c.numerator)
    rd = isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return Fraction(rn, rd)
    return None


def _scaled_ints(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Clear denominators: return (integer coefficients, common denominator)."""
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve(a: list[int], b: list[int], n: int) -> list[int]:
    """First n coefficients of the product of two integer coefficient lists."""
    out = [0] * n
    for i, ai in enumerate(a):
        if i >= n:
            break
        if not ai:
            continue
        jmax = min(len(b), n - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class LaurentSeries:
    """An immutable truncated Laurent series with exact rational coefficients.

    The constructor normalizes: coefficients are coerced to Fraction, the
    window is padded with zeros up to ``order - valuation``, and leading zeros
    are stripped (raising the valuation).  A series that is zero everywhere
    below its order collapses to the canonical zero with ``valuation == order``.
    """

    valuation: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs)
        window = self.order - self.valuation
        if window < 0:
            raise ValueError("order must be >= valuation")
        if len(coeffs) > window:
            raise ValueError("coefficient list longer than order - valuation")
        if len(coeffs) < window:
            coeffs = coeffs + (Fraction(0),) * (window - len(coeffs))
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        if lead == len(coeffs):
            object.__setattr__(self, "valuation", self.order)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "valuation", self.valuation + lead)
            object.__setattr__(self, "coeffs", coeffs[lead:])

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def zero(order: int) -> LaurentSeries:
        """The canonical zero-to-order series."""
        return LaurentSeries(order, (), order)

    @staticmethod
    def constant(value, order: int) -> LaurentSeries:
        if order <= 0:
            return LaurentSeries.zero(order)
        return LaurentSeries(0, (Fraction(value),), order)

    @staticmethod
    def monomial(exponent: int, order: int, coeff=1) -> LaurentSeries:
        """coeff * t^exponent.  Collapses to zero-to-order when exponent >= order."""
        if exponent >= order:
            return LaurentSeries.zero(order)
        return LaurentSeries(exponent, (Fraction(coeff),), order)

    @staticmethod
    def from_coefficients(valuation: int, coeffs, order: int) -> LaurentSeries:
        return LaurentSeries(valuation, tuple(coeffs), order)

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        """True when the series is zero everywhere below its order."""
        return not self.coeffs

    @property
    def precision(self) -> int:
        """Number of known coefficients counted from the valuation."""
        return self.order - self.valuation

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise DivisionByZeroSeries("zero series has no leading coefficient")
        return self.coeffs[0]

    def coefficient(self, n: int) -> Fraction:
        """The coefficient of t^n.  Exponents below the valuation are known zero."""
        if n >= self.order:
            raise InsufficientPrecision(
                f"coefficient at t^{n} requested but series is only known below t^{self.order}"
            )
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def first_nonzero_exponent(self) -> int | None:
        """Lowest exponent with a nonzero known coefficient, None for zero-to-order."""
        return None if self.is_zero else self.valuation

    def is_zero_up_to(self, n: int | None = None) -> bool:
        """True when every known coefficient below min(order, n) vanishes."""
        bound = self.order if n is None else min(self.order, n)
        return self.is_zero or self.valuation >= bound

    def equal_up_to(self, other: LaurentSeries, n: int | None = None) -> bool:
        """Compare coefficients at every exponent below min(both orders, n)."""
        bound = min(self.order, other.order)
        if n is not None:
            bound = min(bound, n)
        return (self - other).is_zero_up_to(bound)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other) -> LaurentSeries | None:
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.constant(other, self.order)
        return None

    def __add__(self, other) -> LaurentSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        order = min(self.order, rhs.order)
        start = min(self.valuation, rhs.valuation, order)
        vals = [
            self._at(n) + rhs._at(n) for n in range(start, order)
        ]
        return LaurentSeries(start, tuple(vals), order)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> LaurentSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> LaurentSeries:
        return (-self) + other

    def _at(self, n: int) -> Fraction:
        # window read without the order check; callers stay below min(order)
        if n < self.valuation or n >= self.order:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def __mul__(self, other) -> LaurentSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero or rhs.is_zero:
            return LaurentSeries.zero(
                min(self.order + rhs.valuation, rhs.order + self.valuation)
            )
        n = min(len(self.coeffs), len(rhs.coeffs))
        val = self.valuation + rhs.valuation
        a, da = _scaled_ints(self.coeffs)
        b, db = _scaled_ints(rhs.coeffs)
        prod = _convolve(a, b, n)
        dab = da * db
        return LaurentSeries(val, tuple(Fraction(v, dab) for v in prod), val + n)

    def __rmul__(self, other) -> LaurentSeries:
        return self * other

    def scale(self, c) -> LaurentSeries:
        c = Fraction(c)
        if c == 0:
            return LaurentSeries.zero(self.order)
        return LaurentSeries(self.valuation, tuple(c * v for v in self.coeffs), self.order)

    def __truediv__(self, other) -> LaurentSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroSeries("division by the zero constant")
            return self.scale(Fraction(1) / Fraction(other))
        if rhs.is_zero:
            raise DivisionByZeroSeries(
                f"divisor is zero up to its tracked order t^{rhs.order}"
            )
        if self.is_zero:
            return LaurentSeries.zero(self.order - rhs.valuation)
        n = min(len(self.coeffs), len(rhs.coeffs))
        val = self.valuation - rhs.valuation
        a, da = _scaled_ints(self.coeffs)
        b, db = _scaled_ints(rhs.coeffs)
        if b[0] in (1, -1):
            # pure-integer long division; the common case (divisors built from
            # Pochhammer products have leading coefficient 1)
            sign = b[0]
            q_int = [0] * n
            for k in range(n):
                acc = a[k] if k < len(a) else 0
                for i in range(max(0, k - len(b) + 1), k):
                    acc -= q_int[i] * b[k - i]
                q_int[k] = acc * sign
            coeffs = tuple(Fraction(v * db, da) for v in q_int)
        else:
            b0 = Fraction(b[0])
            q: list[Fraction] = [Fraction(0)] * n
            for k in range(n):
                acc = Fraction(a[k] if k < len(a) else 0)
                for i in range(max(0, k - len(b) + 1), k):
                    acc -= q[i] * b[k - i]
                q[k] = acc / b0
            coeffs = tuple(v * db / da for v in q)
        return LaurentSeries(val, coeffs, val + n)

    def __rtruediv__(self, other) -> LaurentSeries:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        num = LaurentSeries.constant(other, max(self.precision, 1))
        return num / self

    def __pow__(self, e: int) -> LaurentSeries:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (1 / self) ** (-e)
        if e == 0:
            return LaurentSeries.constant(1, max(self.precision, 1))
        result = None
        base = self
        k = e
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, j: int) -> LaurentSeries:
        """Multiply by the exact monomial t^j (shifts the knowledge window too)."""
        return LaurentSeries(self.valuation + j, self.coeffs, self.order + j)

    def substitute_power(self, k: int) -> LaurentSeries:
        """Exponent map n -> k*n, realizing q -> q^k.  Result order is k*order."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("substitution power must be a positive integer")
        if self.is_zero:
            return LaurentSeries.zero(k * self.order)
        n = len(self.coeffs)
        out = [Fraction(0)] * (k * n)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return LaurentSeries(k * self.valuation, tuple(out), k * self.order)

    def sqrt(self) -> LaurentSeries:
        """Positive-branch square root.

        Requires an even valuation and a leading coefficient that is the square
        of a rational; the root's leading coefficient is the positive rational
        square root.  The square of the result agrees with the input on the
        input's full valid range.
        """
        if self.is_zero:
            return LaurentSeries.zero((self.order + 1) // 2)
        if self.valuation % 2:
            raise OddValuation(f"sqrt of series with odd valuation {self.valuation}")
        root0 = sqrt_fraction(self.coeffs[0])
        if root0 is None or root0 == 0:
            raise NonSquareLeadingCoefficient(
                f"leading coefficient {self.coeffs[0]} is not the square of a rational"
            )
        n = len(self.coeffs)
        r: list[Fraction] = [root0] + [Fraction(0)] * (n - 1)
        twice = 2 * root0
        for k in range(1, n):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc -= r[i] * r[k - i]
            r[k] = acc / twice
        val = self.valuation // 2
        return LaurentSeries(val, tuple(r), val + n)

    def truncate(self, order: int) -> LaurentSeries:
        """Restrict the knowledge window to a smaller order."""
        if order >= self.order:
            return self
        if order <= self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries(self.valuation, self.coeffs[: order - self.valuation], order)

    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return f"O(t^{self.order})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.valuation + i
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{e}")
            elif c == -1:
                parts.append(f"-t^{e}")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts).replace("+ -", "- ") + f" + O(t^{self.order})"
