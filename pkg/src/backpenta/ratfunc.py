"""Exact arithmetic kernel: rationals, univariate polynomials, and
rational functions in one indeterminate.

The solver's symbolic mode replaces zero pivots by a single placeholder
symbol ``x``; every downstream quantity then lives in the field Q(x) of
rational functions with exact rational coefficients. This module supplies
that field in a canonical form (coprime numerator/denominator, monic
denominator) so equality is structural.

Plain rationals are ``fractions.Fraction`` throughout; it already provides
the reduced p/q invariant with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

ScalarLike = Union[int, Fraction, "Polynomial", "RationalFunction"]


class DivisionByZero(ZeroDivisionError):
    """Division by an identically zero polynomial or rational function."""


class PoleAtZero(ZeroDivisionError):
    """Substituting the placeholder symbol = 0 hit a pole.

    Raised when a canonical rational function has a denominator vanishing
    at 0: the placeholder substitution fails, which means the underlying
    system is singular or the symbolic method is inapplicable to it.
    """


class BothZero(ValueError):
    """gcd of two identically zero polynomials is undefined."""


def from_literal(text: str) -> Fraction:
    """Parse a scalar literal: optional sign, integer, exact decimal, or p/q.

    Decimals convert exactly (``0.1`` becomes 1/10, not the nearest float).
    The placeholder symbol is never accepted here; it only arises
    internally in the solver's symbolic mode.
    """
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid scalar literal: {text!r}") from exc


class Polynomial:
    """Univariate polynomial over Fraction, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading (last) coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial(c / lead for c in self.coeffs)

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, k) -> "Polynomial":
        k = Fraction(k)
        return Polynomial(c * k for c in self.coeffs)

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quo = [Fraction(0)] * (dq + 1)
        dlead = other.leading
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            c = rem[len(other.coeffs) + k - 1] / dlead
            quo[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[i + k] -= c * oc
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            if p == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if p == 1 else f"{mag}x^{p}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over Q."""
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while not q.is_zero:
        p, q = q, p % q
    return p.monic()


class RationalFunction:
    """Quotient of two polynomials in canonical form.

    Canonical means: numerator and denominator coprime, denominator monic.
    With that, ``__eq__`` is structural and canonicalization is a fixpoint.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if den is None:
            den = Polynomial.constant(1)
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            self.num = Polynomial()
            self.den = Polynomial.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def x(cls) -> "RationalFunction":
        """The placeholder symbol itself."""
        return cls(Polynomial.x())

    @property
    def is_zero(self) -> bool:
        """Identically zero, not merely zero at the point 0."""
        return self.num.is_zero

    def __bool__(self):
        return not self.is_zero

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den - o.num * self.den,
                                self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero:
            raise DivisionByZero("division by identically zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def eval_at_zero(self) -> Fraction:
        """Value at the placeholder = 0; the symbolic algorithm's final step."""
        d0 = self.den.evaluate(0)
        if d0 == 0:
            raise PoleAtZero(f"pole at 0 in {self}")
        return self.num.evaluate(0) / d0

    def evaluate(self, t) -> Fraction:
        d = self.den.evaluate(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at {t}")
        return self.num.evaluate(t) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _integer_scaled(self):
        # Common rational multiplier that makes both polynomials integer
        # and jointly primitive; used only for display.
        coeffs = list(self.num.coeffs) + list(self.den.coeffs)
        denom_lcm = 1
        for c in coeffs:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        num_gcd = 0
        for c in coeffs:
            num_gcd = _gcd(num_gcd, abs(c.numerator * (denom_lcm // c.denominator)))
        mult = Fraction(denom_lcm, num_gcd or 1)
        num = self.num.scale(mult)
        den = self.den.scale(mult)
        if not den.is_zero and den.leading < 0:
            num, den = num.scale(-1), den.scale(-1)
        return num, den

    def __str__(self):
        if self.is_zero:
            return "0"
        num, den = self._integer_scaled()
        if den == Polynomial.constant(1):
            return str(num)
        nrep = str(num) if num.degree < 1 else f"({num})"
        drep = str(den) if den.degree < 1 else f"({den})"
        return f"{nrep}/{drep}"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
