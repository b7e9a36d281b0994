"""Dense univariate polynomials over Q in the indeterminate ``t``.

Coefficients are stored as integer numerators over one positive common
denominator, which keeps multiplication on machine-level integer kernels.
"""
from fractions import Fraction
from math import gcd

from equiareal._core import poly_mul
from equiareal.algebra.rational import rational_root, rational_str

_SCALARS = (int, Fraction)


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class UPoly:
    """Polynomial ``sum(c[i] * t**i)`` with exact rational coefficients.

    >>> t = UPoly.gen()
    >>> (t**2 - 1) // (t - 1)
    UPoly('t + 1')
    """

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs=()):
        fracs = [Fraction(c) for c in coeffs]
        d = 1
        for f in fracs:
            d = d * f.denominator // gcd(d, f.denominator)
        ints = [f.numerator * (d // f.denominator) for f in fracs]
        self._set(ints, d)

    def _set(self, ints, d):
        ints = _strip(ints)
        if not ints:
            self._c, self._d = (), 1
        else:
            g = gcd(_content(ints), d)
            if g > 1:
                ints = [c // g for c in ints]
                d //= g
            self._c, self._d = tuple(ints), d
        self._hash = None

    @classmethod
    def _raw(cls, ints, d=1):
        obj = cls.__new__(cls)
        if d < 0:
            ints, d = [-c for c in ints], -d
        obj._set(ints, d)
        return obj

    @classmethod
    def gen(cls):
        """The indeterminate ``t``."""
        return cls._raw([0, 1])

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls._raw([value.numerator], value.denominator)

    # -- inspection -----------------------------------------------------

    @property
    def coeffs(self):
        """Coefficients as Fractions, lowest degree first."""
        return tuple(Fraction(c, self._d) for c in self._c)

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return Fraction(self._c[-1], self._d) if self._c else Fraction(0)

    def is_constant(self):
        return len(self._c) <= 1

    def constant_value(self):
        if len(self._c) > 1:
            raise ValueError("polynomial is not constant")
        return Fraction(self._c[0], self._d) if self._c else Fraction(0)

    def integer_coeffs(self):
        """Coefficients as ints; raises if some coefficient is not integral."""
        if self._d != 1:
            raise ValueError("polynomial has non-integral coefficients")
        return list(self._c)

    def primitive(self):
        """Split as ``content * primitive`` with an integer primitive part.

        The primitive part has positive leading coefficient.
        """
        if not self._c:
            return Fraction(0), UPoly()
        g = _content(self._c)
        if self._c[-1] < 0:
            g = -g
        return Fraction(g, self._d), UPoly._raw([c // g for c in self._c])

    def monic(self):
        if not self._c:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lead = self._c[-1]
        return UPoly._raw(list(self._c), lead) if lead > 0 else UPoly._raw([-c for c in self._c], -lead)

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, _SCALARS):
            return UPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        g = gcd(self._d, other._d)
        fa, fb = other._d // g, self._d // g
        n = max(len(self._c), len(other._c))
        a = list(self._c) + [0] * (n - len(self._c))
        b = list(other._c) + [0] * (n - len(other._c))
        return UPoly._raw([x * fa + y * fb for x, y in zip(a, b)], self._d * fa)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-c for c in self._c], self._d)

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
            other = Fraction(other)
            return UPoly._raw([c * other.numerator for c in self._c], self._d * other.denominator)
        if not isinstance(other, UPoly):
            return NotImplemented
        return UPoly._raw(poly_mul(list(self._c), list(other._c)), self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative int exponent")
        result, base = UPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        q = [Fraction(0)] * max(len(rem) - len(dv) + 1, 0)
        for k in range(len(rem) - len(dv), -1, -1):
            coef = rem[k + len(dv) - 1] / lead
            q[k] = coef
            if coef:
                for j, c in enumerate(dv):
                    rem[k + j] -= coef * c
        return UPoly(q), UPoly(rem[: len(dv) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / other)
        if isinstance(other, UPoly):
            from equiareal.algebra.ratfunc import RatFunc

            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS):
            from equiareal.algebra.ratfunc import RatFunc

            return RatFunc(UPoly.constant(other), self)
        return NotImplemented

    # -- evaluation -----------------------------------------------------

    def __call__(self, x):
        """Evaluate at a rational (fast integer Horner) or at any ring element."""
        if isinstance(x, _SCALARS):
            x = Fraction(x)
            p, q = x.numerator, x.denominator
            acc, qpow = 0, 1
            for c in reversed(self._c):
                acc = acc * p + c * qpow
                qpow *= q
            # acc = sum c_i p^i q^(n-i); qpow = q^(n+1)
            return Fraction(acc * q, qpow * self._d) if self._c else Fraction(0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = UPoly.constant(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._c == other._c and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._c, self._d)) if len(self._c) > 1 else hash(self.constant_value())
        return self._hash

    # -- roots and gcd --------------------------------------------------

    def iroot(self, k):
        """Exact ``k``-th root in Q[t] with positive leading coefficient, or None."""
        if not self._c:
            return UPoly()
        n = self.degree
        if n % k:
            return None
        lead = rational_root(self.lc, k)
        if lead is None:
            return None
        if lead < 0:
            lead = -lead
        # low-degree zeros
        low = 0
        while self._c[low] == 0:
            low += 1
        if low % k:
            return None
        # power-series k-th root of the reversed polynomial, leading term first
        rev = list(reversed(self.coeffs))
        m = n // k - low // k
        root = [lead]
        for j in range(1, m + 1):
            # coefficient j of root^k must equal rev[j]
            partial = _power_coeff(root + [Fraction(0)], k, j)
            root.append((rev[j] - partial) / (k * lead ** (k - 1)))
        cand = UPoly(list(reversed(root)) ) * UPoly.gen() ** (low // k)
        return cand if cand**k == self else None

    # -- formatting -----------------------------------------------------

    def to_json(self):
        return [rational_str(c) for c in self.coeffs]

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = Fraction(self._c[i], self._d)
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{rational_str(mag)}*{mono}"
            else:
                body = rational_str(mag)
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def __repr__(self):
        return f"UPoly('{self}')"


def _power_coeff(series, k, j):
    """Coefficient ``j`` of ``series**k`` (``series[j]`` taken as zero)."""
    prod = [Fraction(1)]
    trunc = series[: j + 1]
    for _ in range(k):
        nxt = [Fraction(0)] * (j + 1)
        for a, x in enumerate(prod):
            if x:
                for b in range(0, j + 1 - a):
                    if b < len(trunc):
                        nxt[a + b] += x * trunc[b]
        prod = nxt
    return prod[j]


def _int_prem(a, b):
    """Pseudo-remainder of integer coefficient lists, made primitive."""
    a = list(a)
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [x * lb for x in a]
        for j, c in enumerate(b):
            a[shift + j] -= la * c
        a = _strip(a)
    if a:
        g = _content(a)
        if g > 1:
            a = [x // g for x in a]
    return a


def poly_gcd(a, b):
    """Monic greatest common divisor of two polynomials (not both zero)."""
    a, b = UPoly._coerce(a), UPoly._coerce(b)
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not b:
        return a.monic()
    if not a:
        return b.monic()
    _, pa = a.primitive()
    _, pb = b.primitive()
    x, y = list(pa._c), list(pb._c)
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prem(x, y)
    return UPoly._raw(x).monic()


def exact_quotient(a, b):
    """``a / b`` in Q[t] when ``b`` divides ``a``; raises otherwise."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return UPoly()
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    num, den = list(pa._c), pb._c
    lead, db = den[-1], len(den) - 1
    q = [0] * (len(num) - db) if len(num) > db else []
    for k in range(len(num) - 1 - db, -1, -1):
        top = num[k + db]
        if top % lead:
            raise ArithmeticError("polynomial division is not exact")
        coef = top // lead
        q[k] = coef
        if coef:
            for j, c in enumerate(den):
                num[k + j] -= coef * c
    if any(num[:db]):
        raise ArithmeticError("polynomial division is not exact")
    return UPoly._raw(q) * (ca / cb)
