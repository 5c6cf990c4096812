"""Exact rational coefficients.

Uses gmpy2.mpq when available (noticeably faster on gcd-heavy work),
otherwise fractions.Fraction.  Both are always reduced with positive
denominator, which is the representation contract relied on everywhere.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)


def q(value, den=None):
    """Coerce to a rational; accepts ints, strings like '3/2', rationals."""
    if den is not None:
        return Q(value, den)
    return Q(value)


def qstr(value):
    """Canonical text: 'num' or 'num/den'."""
    return str(value)
