"""Rational scalars.

``fractions.Fraction`` already keeps numerator and denominator reduced with a
positive denominator, so it is used directly as the rational type.
"""
from fractions import Fraction
from math import isqrt

Rational = Fraction


def as_rational(value):
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rational_str(q):
    """Serialize as ``"p/q"``, or ``"p"`` for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_perfect_square(q):
    """Return the nonnegative rational square root of ``q``, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def rational_root(q, k):
    """Exact ``k``-th root of a rational if it exists (real root for odd k)."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign = -1
        q = -q
    rn, rd = _iroot(q.numerator, k), _iroot(q.denominator, k)
    if rn is None or rd is None:
        return None
    return sign * Fraction(rn, rd)


def _iroot(n, k):
    if n < 2:
        return n
    # integer Newton iteration, started above the root
    r = 1 << (n.bit_length() // k + 1)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r if r**k == n else None
