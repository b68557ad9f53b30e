"""Exact univariate polynomials over the rationals.

All coefficients are `fractions.Fraction`; there is no floating point
anywhere.  The recursion that consumes these polynomials produces
half-integral intermediate coefficients but integral final answers, so
integrality is something callers assert at the boundary (see
`Poly.is_integral_nonneg`) rather than an invariant of the ring.

Polynomials are immutable and hashable.  Two text encodings are
supported: a human form like ``5*x^4 + 9*x^3 + 6*x^2 + 3*x + 1``
(descending degrees, ``parse`` round-trips it) and a JSON-friendly list
of coefficient strings in ascending degree, each an exact integer or
``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction


class Poly:
    """Univariate polynomial in x, stored sparsely as {degree: coefficient}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
            for deg, c in items:
                deg = int(deg)
                if deg < 0:
                    raise ValueError("negative degree %d" % deg)
                c = Fraction(c)
                if c:
                    data[deg] = data.get(deg, Fraction(0)) + c
                    if not data[deg]:
                        del data[deg]
        self._coeffs = data

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero():
        return Poly()

    @staticmethod
    def one():
        return Poly({0: 1})

    @staticmethod
    def monomial(degree, coeff=1):
        """coeff * x**degree"""
        return Poly({degree: coeff})

    # -- basic queries ---------------------------------------------------------

    def is_zero(self):
        return not self._coeffs

    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def coefficient(self, degree):
        return self._coeffs.get(degree, Fraction(0))

    def coefficients_ascending(self):
        """Dense coefficient list [c0, c1, ..., c_deg]; empty for zero."""
        d = self.degree()
        return [self.coefficient(k) for k in range(d + 1)]

    def is_integral_nonneg(self):
        """Return (integral, nonneg): all coefficients integers, and moreover >= 0."""
        integral = all(c.denominator == 1 for c in self._coeffs.values())
        nonneg = integral and all(c >= 0 for c in self._coeffs.values())
        return integral, nonneg

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        data = dict(self._coeffs)
        for deg, c in other._coeffs.items():
            s = data.get(deg, Fraction(0)) + c
            if s:
                data[deg] = s
            elif deg in data:
                del data[deg]
        out = Poly.__new__(Poly)
        out._coeffs = data
        return out

    def __neg__(self):
        out = Poly.__new__(Poly)
        out._coeffs = {deg: -c for deg, c in self._coeffs.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        data = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                deg = d1 + d2
                s = data.get(deg, Fraction(0)) + c1 * c2
                if s:
                    data[deg] = s
                elif deg in data:
                    del data[deg]
        out = Poly.__new__(Poly)
        out._coeffs = data
        return out

    __rmul__ = __mul__

    def scale(self, scalar):
        """Multiply by an exact scalar (int or Fraction)."""
        scalar = Fraction(scalar)
        if not scalar:
            return Poly()
        out = Poly.__new__(Poly)
        out._coeffs = {deg: c * scalar for deg, c in self._coeffs.items()}
        return out

    def eval_at(self, a):
        """Exact value at an integer or rational point, as a Fraction."""
        a = Fraction(a)
        total = Fraction(0)
        for deg, c in self._coeffs.items():
            total += c * a**deg
        return total

    # -- equality / hashing ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- text form ---------------------------------------------------------------

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for deg in sorted(self._coeffs, reverse=True):
            c = self._coeffs[deg]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if deg == 0:
                body = str(c)
            else:
                xpart = "x" if deg == 1 else "x^%d" % deg
                body = xpart if c == 1 else "%s*%s" % (c, xpart)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "Poly(%s)" % self

    @staticmethod
    def parse(text):
        """Inverse of str(): accepts e.g. '5*x^4 + 9*x^3 + 1', '1/2*x - 1/2', '0'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        total = Poly()
        term_re = re.compile(
            r"([+-])(?:(\d+(?:/\d+)?)\*?)?(x(?:\^(\d+))?)?"
        )
        pos = 0
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos + 1:
                raise ValueError("cannot parse polynomial near %r" % s[pos:])
            sign, coeff, xpart, power = m.groups()
            if coeff is None and xpart is None:
                raise ValueError("cannot parse polynomial near %r" % s[pos:])
            c = Fraction(coeff) if coeff is not None else Fraction(1)
            if sign == "-":
                c = -c
            deg = 0
            if xpart is not None:
                deg = int(power) if power is not None else 1
            total += Poly.monomial(deg, c)
            pos = m.end()
        return total

    # -- JSON form ------------------------------------------------------------------

    def to_coeff_strings(self):
        """Ascending coefficient list as exact strings ('3', '1/2', ...)."""
        return [str(c) for c in self.coefficients_ascending()]

    @staticmethod
    def from_coeff_strings(strings):
        return Poly({k: Fraction(s) for k, s in enumerate(strings)})


def geom(m):
    """1 + x + ... + x^(m-1); the empty sum geom(0) is 0."""
    if m < 0:
        raise ValueError("geom needs m >= 0, got %d" % m)
    return Poly({k: 1 for k in range(m)})
