"""Exact sparse polynomials over the rationals in the indeterminates b, s, y, z.

Every coefficient that flows through this package is a Polynomial; plain
rationals are constant polynomials.  All arithmetic is exact — floats are
rejected at the boundary.
"""

from __future__ import annotations

from fractions import Fraction

VARIABLES = ("b", "s", "y", "z")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXPS = (0,) * len(VARIABLES)


def as_fraction(value) -> Fraction:
    """Coerce an int or Fraction; anything inexact is a bug, so reject it."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def as_polynomial(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(as_fraction(value))


class Polynomial:
    """Map from exponent vectors (one slot per variable in VARIABLES order)
    to nonzero Fraction coefficients.  Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = as_fraction(coeff)
                if coeff:
                    exps = tuple(exps)
                    if len(exps) != len(VARIABLES) or any(e < 0 for e in exps):
                        raise ValueError(f"bad exponent vector {exps!r}")
                    cleaned[exps] = coeff
        self.terms = cleaned

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls({_ZERO_EXPS: as_fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown indeterminate {name!r}; have {VARIABLES}")
        exps = [0] * len(VARIABLES)
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): Fraction(1)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXPS for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises on anything symbolic."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms[_ZERO_EXPS]

    def is_integral(self) -> bool:
        """True when every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self.terms.values())

    def degree(self, var: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = _VAR_INDEX[var]
        return max(e[i] for e in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_polynomial(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps, Fraction(0)) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = Polynomial.__new__(Polynomial)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-as_polynomial(other))

    def __rsub__(self, other):
        return as_polynomial(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            factor = as_fraction(other)
            if not factor:
                return Polynomial()
            result = Polynomial.__new__(Polynomial)
            result.terms = {e: c * factor for e, c in self.terms.items()}
            return result
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    out[exps] = acc
                else:
                    out.pop(exps, None)
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __truediv__(self, other):
        divisor = as_fraction(other)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (Fraction(1) / divisor)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_polynomial(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution -------------------------------------------------------

    def substitute(self, **values) -> "Polynomial":
        """Replace some variables by rationals or polynomials, exactly.

        Unmentioned variables stay symbolic: p.substitute(z=9) evaluates z
        and leaves y alone.
        """
        replacements = {}
        for name, val in values.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown indeterminate {name!r}")
            replacements[_VAR_INDEX[name]] = as_polynomial(val)
        total = Polynomial()
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(coeff)
            kept = [0] * len(VARIABLES)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in replacements:
                    term = term * replacements[i] ** e
                else:
                    kept[i] = e
            if any(kept):
                term = term * Polynomial({tuple(kept): Fraction(1)})
            total = total + term
        return total

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def term_list(self):
        """JSON-friendly form: sorted [[exponents...], "p/q"] pairs."""
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_term_list(cls, data) -> "Polynomial":
        return cls({tuple(e): Fraction(c) for e, c in data})

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self})"


ZERO = Polynomial()
ONE = Polynomial.constant(1)
