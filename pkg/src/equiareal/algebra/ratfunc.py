"""Rational functions in ``t`` over Q, kept in lowest terms with monic denominator."""
from fractions import Fraction

from equiareal.algebra.upoly import UPoly, exact_quotient, poly_gcd

_SCALARS = (int, Fraction)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


class RatFunc:
    """Element ``num/den`` of Q(t).

    >>> t = RatFunc.gen()
    >>> (t**2 - 1) / (t - 1)
    RatFunc('t + 1')
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_upoly(num)
        den = _as_upoly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = UPoly(), UPoly.constant(1)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = exact_quotient(num, g), exact_quotient(den, g)
        lead = den.lc
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _reduced(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def gen(cls):
        return cls._reduced(UPoly.gen(), UPoly.constant(1))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (UPoly,) + _SCALARS):
            return RatFunc._reduced(_as_upoly(other), UPoly.constant(1))
        return NotImplemented

    def is_polynomial(self):
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc._reduced(self.num + other.num, self.den)
        if self.is_polynomial():
            return RatFunc._reduced(self.num * other.den + other.num, other.den)
        if other.is_polynomial():
            return RatFunc._reduced(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)
        bd, dd = exact_quotient(self.den, g), exact_quotient(other.den, g)
        return RatFunc(self.num * dd + other.num * bd, self.den * dd)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return RatFunc._reduced(self.num * other, self.den) if other else RatFunc(0)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RatFunc(0)
        # cross-cancel first so the products stay small
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 else None
        if g1 is not None and g1.degree > 0:
            a, d = exact_quotient(a, g1), exact_quotient(d, g1)
        g2 = poly_gcd(c, b) if b.degree > 0 else None
        if g2 is not None and g2.degree > 0:
            c, b = exact_quotient(c, g2), exact_quotient(b, g2)
        num, den = a * c, b * d
        lead = den.lc
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        return RatFunc._reduced(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        lead = self.num.lc
        return RatFunc._reduced(self.den * (1 / lead), self.num * (1 / lead))

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(t)")
            return RatFunc._reduced(self.num * (1 / Fraction(other)), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._reduced(self.num**n, self.den**n)

    # -- evaluation and comparison --------------------------------------

    def __call__(self, t0):
        """Evaluate at a rational; raises PoleError at a root of the denominator."""
        d = self.den(t0)
        if d == 0:
            raise PoleError(f"pole at t = {t0}")
        return self.num(t0) / d

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc('{self}')"


def _as_upoly(value):
    if isinstance(value, UPoly):
        return value
    if isinstance(value, _SCALARS):
        return UPoly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} in Q(t)")
