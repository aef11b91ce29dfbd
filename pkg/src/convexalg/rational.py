"""Exact rational scalars and the probability subtype.

All algebraic coefficients in this package are rationals in lowest terms
(`fractions.Fraction`, re-exported as ``Rat``).  Exact arithmetic turns
every law check into a decidable equality test; no floats enter the
algebraic core.  The restriction from real to rational coefficients is a
deliberate design choice, documented in the README.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import OutOfRangeError, ParseError, ZeroDenominatorError

# Rationals are stored reduced with positive denominator; Fraction
# guarantees both, and its equality/hash are structural.
Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class Prob(Fraction):
    """A rational constrained to [0, 1], used as the mixing index.

    Arithmetic inherited from Fraction returns plain Fractions, so
    expressions like ``1 - p`` stay exact without re-validation.
    """

    def __new__(cls, numerator=0, denominator=None) -> "Prob":
        try:
            self = super().__new__(cls, numerator, denominator)
        except ZeroDivisionError:
            raise ZeroDenominatorError(f"denominator 0 in {numerator}/{denominator}") from None
        if self < 0 or self > 1:
            raise OutOfRangeError(f"probability {self} outside [0, 1]")
        return self

    def __repr__(self) -> str:
        return f"Prob({str(self)!r})"


def prob_new(num: int, den: int) -> Prob:
    """Build num/den as a probability, rejecting den = 0 and values outside [0, 1]."""
    if den == 0:
        raise ZeroDenominatorError(f"denominator 0 in {num}/{den}")
    return Prob(num, den)


def complement(p: Prob) -> Prob:
    """1 - p."""
    return Prob(1 - p)


def s_of(p: Prob, q: Prob) -> Prob:
    """The outer parameter of quasi-associativity: 1 - (1-p)(1-q)."""
    return Prob(1 - (1 - p) * (1 - q))


def r_of(p: Prob, q: Prob) -> Prob:
    """The inner parameter of quasi-associativity: p/s if s != 0, else 0.

    In range because p <= s = p + (1-p)q.  When s = 0 the returned value
    is immaterial to the law; 0 is the fixed convention here.
    """
    s = s_of(p, q)
    if s == 0:
        return Prob(0)
    return Prob(Fraction(p) / s)


def parse_rational(text: str) -> Rat:
    """Parse "num/den" or integer shorthand ("1") into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r} ({exc})") from None


def parse_prob(text: str) -> Prob:
    # malformed text is a ParseError; a well-formed value outside
    # [0, 1] keeps the range error from the Prob constructor
    return Prob(parse_rational(text))


def format_rational(value: Rat) -> str:
    """Canonical textual form: "num/den", or "num" for integers."""
    return str(Fraction(value))
