"""Exact rational coefficients.

All arithmetic in this package is over the rationals in characteristic 0.
Coefficients are gmpy2.mpq when available (much faster), else
fractions.Fraction; both store lowest terms with positive denominator.
"""
from __future__ import annotations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def qq_from_str(text: str):
    """Parse 'p' or 'p/q' into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return QQ(int(num), int(den))
    return QQ(int(text))


def qq_to_str(value) -> str:
    """Canonical text form: 'p' if integral, else 'p/q'."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
