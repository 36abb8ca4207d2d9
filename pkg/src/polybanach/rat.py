"""Exact rational scalars.

Every number in this library is an exact rational; no floating point is
used anywhere a norm, constant, or containment decision is made.  gmpy2's
GMP-backed ``mpq`` is used when available (it is roughly an order of
magnitude faster than ``fractions.Fraction``); the stdlib ``Fraction`` is
the drop-in fallback.  Both types store lowest terms with a positive
denominator and hash/compare identically, so the choice is invisible to
callers.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq

    _BACKEND = "gmpy2"

    def rat(numerator=0, denominator=None):
        if denominator is None:
            return _mpq(numerator)
        return _mpq(numerator, denominator)

    RatType = type(_mpq())
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _Fraction

    _BACKEND = "fractions"

    def rat(numerator=0, denominator=None):
        if denominator is None:
            return _Fraction(numerator)
        return _Fraction(numerator, denominator)

    RatType = _Fraction

#: exact rational type used throughout; construct via :func:`rat`.
Rat = RatType

ZERO = rat(0)
ONE = rat(1)


def backend() -> str:
    """Name of the arithmetic backend in use ("gmpy2" or "fractions")."""
    return _BACKEND


def parse_rat(text: str) -> Rat:
    """Parse "p/q" or "p" into an exact rational.

    Raises ValueError on anything else (floats are rejected on purpose).
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        p = int(num.strip())
        q = int(den.strip())
        if q == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return rat(p, q)
    return rat(int(s))


def rat_str(value) -> str:
    """Render a rational as "p/q", omitting "/q" when the denominator is 1."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
