"""Exact scalar, polynomial and rational-function arithmetic.

Every quantity in this package is an arbitrary-precision rational; the
scalar type is the stdlib ``fractions.Fraction``, which already keeps
values in canonical lowest terms with a positive denominator.  On top of
it this module builds dense univariate polynomials and quotients of
polynomials, both immutable and both normalized so that structural
equality is mathematical equality.  No floating point appears anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InternalError, PoleError

# The universal exact scalar.
Rational = Fraction

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form: "p/q" with q > 0, or plain "p"."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    return Fraction(s)


def format_rational(value: Scalar) -> str:
    """Canonical text form: lowest terms, "p/q" or "p" when q = 1."""
    q = Fraction(value)
    return str(q)


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer and equals only itself, so degree
    comparisons like ``f.degree <= n`` are unambiguous for f = 0.
    """

    __slots__ = ()

    def __lt__(self, other):
        return isinstance(other, int)

    def __le__(self, other):
        return isinstance(other, int) or other is self

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("degree(-inf)")

    def __repr__(self):
        return "MINUS_INFINITY"


#: Singleton returned by ``Polynomial.degree`` for the zero polynomial.
MINUS_INFINITY = _MinusInfinity()


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are stored lowest degree first with trailing zeros
    stripped; the zero polynomial is the empty tuple.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def identity(cls) -> "Polynomial":
        """The polynomial t."""
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        """Parse the wire form: comma-separated coefficients, lowest first.

        Each entry is a rational in "p/q" form, e.g. "1,0,2" is 1 + 2t^2.
        """
        parts = text.split(",")
        return cls(parse_rational(p) for p in parts)

    # -- inspection --------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or MINUS_INFINITY for the zero polynomial."""
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of t**i (0 beyond the stored degree)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        return ",".join(format_rational(c) for c in self._coeffs)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: Scalar) -> Fraction:
        """Horner evaluation at an exact point."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(t)), by Horner over polynomials."""
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self._coeffs[-1]
        if lead == 1:
            return self
        return Polynomial(c / lead for c in self._coeffs)

    def __divmod__(self, divisor: "Polynomial"):
        """Exact long division over the rationals."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dcoeffs = divisor._coeffs
        dlen = len(dcoeffs)
        lead = dcoeffs[-1]
        if len(rem) < dlen:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for i in range(len(rem) - dlen, -1, -1):
            c = rem[i + dlen - 1] / lead
            if c == 0:
                continue
            quot[i] = c
            for j, d in enumerate(dcoeffs):
                rem[i + j] -= c * d
        return Polynomial(quot), Polynomial(rem[: dlen - 1])

    def __floordiv__(self, divisor: "Polynomial"):
        q, _ = divmod(self, divisor)
        return q

    def __mod__(self, divisor: "Polynomial"):
        _, r = divmod(self, divisor)
        return r

    # -- comparisons / misc ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(format_rational(c))
            elif i == 1:
                parts.append(f"{format_rational(c)}*t")
            else:
                parts.append(f"{format_rational(c)}*t^{i}")
        return " + ".join(parts)


def _coerce_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


def poly_eval(f: Polynomial, t: Scalar) -> Fraction:
    """Evaluate f at t exactly (Horner)."""
    return f(t)


def poly_derivative(f: Polynomial) -> Polynomial:
    """Formal derivative of f."""
    return f.derivative()


def poly_reflect_shift(f: Polynomial, x: Scalar) -> Polynomial:
    """Return g with g(k) = f(x - k) for all k.

    Composes f with the polynomial x - t; applying the operation twice
    with the same x is the identity.
    """
    return f.compose(Polynomial((x, -1)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals (Euclid).

    Remainders are re-normalized to monic at every step, which keeps the
    coefficient growth polynomial for the sizes used here.
    """
    while not b.is_zero:
        a, b = b, (a % b).monic()
    return a.monic()


class RationalFunction:
    """Quotient of two polynomials in canonical form.

    Canonical means gcd(numerator, denominator) = 1 and the denominator is
    monic, so structural equality of the coefficient tuples is equality of
    the underlying rational functions.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Polynomial, denominator: Polynomial | None = None):
        num = numerator if isinstance(numerator, Polynomial) else Polynomial.constant(numerator)
        den = Polynomial.one() if denominator is None else denominator
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self._num = Polynomial()
            self._den = Polynomial.one()
            return
        g = poly_gcd(num, den)
        if g.degree != 0:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        lead = den.leading_coefficient()
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self._num = num
        self._den = den

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one())

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        return cls(Polynomial.constant(c), Polynomial.one())

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        return NotImplemented

    def __hash__(self):
        return hash((self._num, self._den))

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __call__(self, value: Scalar) -> Fraction:
        den = self._den(value)
        if den == 0:
            raise PoleError(value, "rational function evaluation")
        return self._num(value) / den

    def derivative(self) -> "RationalFunction":
        """Quotient-rule derivative, canonicalized.

        Divides out gcd(D, D') up front: for D with repeated factors this
        avoids squaring the full denominator before reduction.
        """
        n, d = self._num, self._den
        dp = d.derivative()
        g = poly_gcd(d, dp)
        if g.degree == 0:
            return RationalFunction(n.derivative() * d - n * dp, d * d)
        a = _exact_div(d, g)   # squarefree cofactor
        b = _exact_div(dp, g)
        return RationalFunction(n.derivative() * a - n * b, d * a)

    def __repr__(self):
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __str__(self):
        return f"({self._num}) / ({self._den})"


def _coerce_ratfunc(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction.from_polynomial(value)
    if isinstance(value, (int, Fraction)):
        return RationalFunction.constant(value)
    return NotImplemented


def _exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = divmod(a, b)
    if not r.is_zero:
        raise InternalError(f"inexact polynomial division: {a!r} by {b!r}")
    return q


def ratfunc_eval(R: RationalFunction, lam: Scalar, context: str = "") -> Fraction:
    """Evaluate R at lam; raises PoleError when the denominator vanishes."""
    den = R.denominator(lam)
    if den == 0:
        raise PoleError(lam, context or "rational function evaluation")
    return R.numerator(lam) / den


def ratfunc_derivative(R: RationalFunction) -> RationalFunction:
    """Derivative of R in canonical reduced, monic-denominator form."""
    return R.derivative()


@dataclass(frozen=True)
class TruncatedPowerSeries:
    """A formal power series kept only up to a declared order.

    All arithmetic treats the series as exactly ``poly``; the order M is
    carried so reports can state which truncation an identity was checked
    for.  Identities in this package hold termwise, hence exactly for
    every truncation.
    """

    poly: Polynomial
    truncation_order: int

    def __post_init__(self):
        if self.truncation_order < 0:
            raise ValueError("truncation order must be nonnegative")
        if not self.poly.degree <= self.truncation_order:
            raise ValueError(
                f"degree {self.poly.degree} exceeds truncation order {self.truncation_order}"
            )

    def __call__(self, t: Scalar) -> Fraction:
        return self.poly(t)
