"""Truncated formal power series in x with exact Polynomial coefficients.

A series carries its truncation degree explicitly; binary operations insist
on matching truncations so precision is never lost silently.  Everything is
exact: coefficients live in Q[b, s, y, z].
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Polynomial, as_polynomial


class TruncatedSeries:
    """Dense coefficient vector for degrees 0..truncation, coefficients sparse."""

    __slots__ = ("truncation", "coeffs")

    def __init__(self, coeffs, truncation=None):
        coeffs = [as_polynomial(c) for c in coeffs]
        if truncation is None:
            truncation = len(coeffs) - 1
        if truncation < 0:
            raise ValueError("truncation degree must be non-negative")
        if len(coeffs) < truncation + 1:
            coeffs += [Polynomial()] * (truncation + 1 - len(coeffs))
        self.truncation = truncation
        self.coeffs = tuple(coeffs[: truncation + 1])

    @classmethod
    def zero(cls, truncation):
        return cls([], truncation)

    @classmethod
    def one(cls, truncation):
        return cls([Polynomial.constant(1)], truncation)

    @classmethod
    def x(cls, truncation):
        return cls.monomial(truncation, 1)

    @classmethod
    def monomial(cls, truncation, degree, coeff=1):
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        coeffs = [Polynomial()] * (truncation + 1)
        if degree <= truncation:
            coeffs[degree] = as_polynomial(coeff)
        return cls(coeffs, truncation)

    # -- basics --------------------------------------------------------------

    def coefficient(self, degree: int) -> Polynomial:
        """Exact coefficient of x^degree; degrees beyond the truncation are
        unknown, not zero, so asking for them is an error."""
        if not 0 <= degree <= self.truncation:
            raise ValueError(
                f"degree {degree} outside truncated range 0..{self.truncation}"
            )
        return self.coeffs[degree]

    def _require_same_truncation(self, other):
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.truncation, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.truncation)
        self._require_same_truncation(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.truncation
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.truncation)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.truncation)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            factor = as_polynomial(other)
            return TruncatedSeries([c * factor for c in self.coeffs], self.truncation)
        self._require_same_truncation(other)
        n = self.truncation
        out = [Polynomial() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(0, n - i + 1):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    # -- transcendental transforms -------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term, via b' = a'·b."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs a zero constant term")
        n = self.truncation
        out = [Polynomial.constant(1)] + [Polynomial()] * n
        for m in range(1, n + 1):
            acc = Polynomial()
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + (self.coeffs[k] * k) * out[m - k]
            out[m] = acc / m
        return TruncatedSeries(out, n)

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1, via l' = a'/a."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        n = self.truncation
        out = [Polynomial()] * (n + 1)
        for m in range(1, n + 1):
            acc = Polynomial()
            for k in range(1, m):
                if not out[k].is_zero():
                    acc = acc + (out[k] * k) * self.coeffs[m - k]
            out[m] = self.coeffs[m] - acc / m
        return TruncatedSeries(out, n)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        c0 = self.coeffs[0].constant_value()
        if not c0:
            raise ValueError("cannot invert a series with zero constant term")
        n = self.truncation
        r0 = Fraction(1) / c0
        out = [Polynomial.constant(r0)] + [Polynomial()] * n
        for m in range(1, n + 1):
            acc = Polynomial()
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = acc * (-r0)
        return TruncatedSeries(out, n)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); inner must have zero constant term."""
        self._require_same_truncation(inner)
        if not inner.coeffs[0].is_zero():
            raise ValueError("composition needs zero constant term in the inner series")
        n = self.truncation
        result = TruncatedSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + TruncatedSeries.monomial(n, 0, self.coeffs[k])
        return result

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse by Lagrange coefficient extraction.

        Needs zero constant term and an invertible rational linear
        coefficient; with a = x/phi, [x^m] of the inverse is
        (1/m)[x^{m-1}] phi^m.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("reversion needs a zero constant term")
        lead = self.coeffs[1]
        if not lead.is_constant() or not lead.constant_value():
            raise ValueError("reversion needs an invertible rational linear coefficient")
        n = self.truncation
        shifted = TruncatedSeries(list(self.coeffs[1:]), n)
        phi = shifted.inverse()
        out = [Polynomial()] * (n + 1)
        power = TruncatedSeries.one(n)
        for m in range(1, n + 1):
            power = power * phi
            out[m] = power.coeffs[m - 1] / m
        return TruncatedSeries(out, n)

    def substitute(self, **values) -> "TruncatedSeries":
        """Specialize indeterminates in every coefficient."""
        return TruncatedSeries(
            [c.substitute(**values) for c in self.coeffs], self.truncation
        )

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c})*x^{k}" if k else f"({c})")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^{self.truncation + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


# -- product builders ---------------------------------------------------------


def log_one_minus_monomial(truncation, degree, scale=1) -> TruncatedSeries:
    """log(1 - scale*x^degree) as a truncated series, degree >= 1."""
    if degree < 1:
        raise ValueError("monomial degree must be at least 1")
    scale = as_polynomial(scale)
    coeffs = [Polynomial() for _ in range(truncation + 1)]
    power = Polynomial.constant(1)
    for j in range(1, truncation // degree + 1):
        power = power * scale
        coeffs[degree * j] = -power / j
    return TruncatedSeries(coeffs, truncation)


def product_log(truncation, step, scale_of_k) -> TruncatedSeries:
    """Sum over k >= 1 of log(1 - scale_of_k(k) * x^(step*k))."""
    total = TruncatedSeries.zero(truncation)
    for k in range(1, truncation // step + 1):
        total = total + log_one_minus_monomial(truncation, step * k, scale_of_k(k))
    return total


def euler_product_power(power, truncation, step=1) -> TruncatedSeries:
    """Expansion of the step-dilated Euler product raised to any exact power.

    Computes prod_{k>=1} (1 - x^(step*k))^power via exp(power * sum of logs);
    the power may be an int, Fraction, or Polynomial (symbolic exponent).
    """
    if step < 1:
        raise ValueError("step must be a positive integer")
    power = as_polynomial(power)
    if power.is_zero():
        return TruncatedSeries.one(truncation)
    logs = product_log(truncation, step, lambda k: 1)
    return (logs * power).exp()


def euler_product_power_direct(power: int, truncation, step=1) -> TruncatedSeries:
    """Integer-power oracle for euler_product_power, by repeated multiplication."""
    if step < 1:
        raise ValueError("step must be a positive integer")
    if not isinstance(power, int):
        raise ValueError("the direct path only handles integer powers")
    base = TruncatedSeries.one(truncation)
    for k in range(1, truncation // step + 1):
        base = base * (
            TruncatedSeries.one(truncation)
            - TruncatedSeries.monomial(truncation, step * k)
        )
    if power < 0:
        base = base.inverse()
    result = TruncatedSeries.one(truncation)
    for _ in range(abs(power)):
        result = result * base
    return result
