"""The octic form phi, its parametric solutions, and equiareal triangles.

phi(x1, x2, x3) = x1^8 + x2^8 + x3^8 - 2 x1^4 x2^4 - 2 x1^4 x3^4 - 2 x2^4 x3^4
is minus sixteen times the squared area of the triangle with sides
x1^2, x2^2, x3^2, so phi(x) = phi(y) asks for two equiareal triangles with
perfect-square sides.

Everything here is generic over the coefficient ring: entries may be ints,
Fractions, UPolys in ``t``, RatFuncs or MPolys.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from equiareal.algebra import MPoly, UPoly, as_rational, is_perfect_square


class DegenerateSolutionError(ValueError):
    """The solution has a zero entry or phi = 0: no triangle and no curve."""


class NotATriangleError(ValueError):
    """Squared sides that violate a strict triangle inequality."""


@dataclass(frozen=True)
class Triple:
    x1: object
    x2: object
    x3: object

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))

    def map(self, fn):
        return Triple(*(fn(v) for v in self))


@dataclass(frozen=True)
class SolutionPair:
    """Two triples with phi(x) = phi(y)."""

    x: Triple
    y: Triple

    def entries(self):
        return (*self.x, *self.y)

    def residual(self):
        return phi(self.x) - phi(self.y)

    def is_solution(self):
        return self.residual() == 0

    def map(self, fn):
        return SolutionPair(self.x.map(fn), self.y.map(fn))

    def at(self, t0):
        """Specialize a polynomial solution at a rational parameter."""
        t0 = as_rational(t0)
        return self.map(lambda v: v(t0) if callable(v) else Fraction(v))

    @property
    def degenerate(self):
        return any(v == 0 for v in self.entries()) or phi(self.x) == 0

    def to_json(self):
        from equiareal.algebra import rational_str

        def enc(v):
            return v.to_json() if hasattr(v, "to_json") else rational_str(v)

        return {"x": [enc(v) for v in self.x], "y": [enc(v) for v in self.y]}


def _triple(t):
    return t if isinstance(t, Triple) else Triple(*t)


def phi(t):
    """The symmetric octic form."""
    x1, x2, x3 = _triple(t)
    a, b, c = x1**4, x2**4, x3**4
    return a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c


def phi_factors(t):
    """The four quadratic factors whose product is phi."""
    x1, x2, x3 = _triple(t)
    a, b, c = x1**2, x2**2, x3**2
    return (a - b - c, a - b + c, a + b - c, a + b + c)


def sixteen_area_squared(a, b, c):
    """(4 * area)^2 of the triangle with side lengths a, b, c (Heron)."""
    a2, b2, c2 = a * a, b * b, c * c
    return -(a2 * a2 + b2 * b2 + c2 * c2 - 2 * a2 * b2 - 2 * a2 * c2 - 2 * b2 * c2)


def triangle_check(a, b, c):
    return a + b > c and a + c > b and b + c > a


# -- parametric solutions ----------------------------------------------


def _param(t):
    return UPoly.gen() if t is None else as_rational(t)


def sol1(t=None):
    """Degree-8 solution built from the fac1 identity (``t=None`` gives UPolys)."""
    t = _param(t)
    t2 = t * t
    x1 = 16 * t2 * (t2 - 3) * (t2 + 3)
    x2 = (t2 - 3) ** 2 * (t2 + 9) * (t2 + 1)
    x3 = 16 * t2 * (t2 + 2 * t + 3) * (t2 - 2 * t + 3)
    y1 = t**8 + 4 * t**6 + 86 * t**4 + 36 * t2 + 81
    y2 = 4 * t * (t2 - 3) * (t2 + 2 * t + 3) * (t2 - 2 * t + 3)
    y3 = 4 * t * (t2 - 3) * (t2 + 9) * (t2 + 1)
    return SolutionPair(Triple(x1, x2, x3), Triple(y1, y2, y3))


def sol2(t=None):
    """Degree-5 solution from the fac2 family with p = q t."""
    t = _param(t)
    quartic = 2 * t**4 + 3 * t**3 + 3 * t**2 + 3 * t
    x1 = t * (quartic - 1)
    x2 = t * (quartic + 2)
    x3 = 3 * t * (t * t + t + 1)
    y1 = t**4 - 3 * t**3 - 3 * t**2 - 3 * t - 2
    y2 = 3 * t * t * (t * t + t + 1)
    y3 = quartic + 2
    return SolutionPair(Triple(x1, x2, x3), Triple(y1, y2, y3))


FAMILIES = {"sol1": sol1, "sol2": sol2}


@dataclass(frozen=True)
class Fac1Solution:
    """(p^4 + q^4)(u^4 + v^4) = x1^4 + y1^4."""

    p: object
    q: object
    u: object
    v: object
    x1: object
    y1: object

    def sides(self):
        return (self.p**4 + self.q**4) * (self.u**4 + self.v**4), self.x1**4 + self.y1**4

    def residual(self):
        lhs, rhs = self.sides()
        return lhs - rhs


def fac1_solution(t=None):
    """A known parametric solution of (p^4+q^4)(u^4+v^4) = x1^4 + y1^4."""
    t = _param(t)
    t2 = t * t
    return Fac1Solution(
        p=t2 - 3,
        q=4 * t,
        u=(t2 - 3) * (t2 + 9) * (t2 + 1),
        v=4 * t * (t2 + 2 * t + 3) * (t2 - 2 * t + 3),
        x1=16 * t2 * (t2 - 3) * (t2 + 3),
        y1=t**8 + 4 * t**6 + 86 * t**4 + 36 * t2 + 81,
    )


@dataclass(frozen=True)
class Fac2Solution:
    """x1^4 + h v^4 = y1^4 + h u^4 with h = p^4 - q^4."""

    x1: object
    y1: object
    u: object
    v: object
    h: object

    def sides(self):
        return self.x1**4 + self.h * self.v**4, self.y1**4 + self.h * self.u**4

    def residual(self):
        lhs, rhs = self.sides()
        return lhs - rhs


PQ_VARS = ("p", "q")


def fac2_solution(p=None, q=None):
    """Solution of x1^4 + h v^4 = y1^4 + h u^4 derived from (p, q, 1, 0).

    With no arguments the entries are MPolys in ``p, q``.
    """
    if p is None and q is None:
        p, q = MPoly.gens(PQ_VARS)
    else:
        p, q = as_rational(p), as_rational(q)
    mid = 3 * p**3 * q + 3 * p**2 * q**2 + 3 * p * q**3
    return Fac2Solution(
        x1=p * (2 * p**4 + mid - q**4),
        y1=q * (p**4 - mid - 2 * q**4),
        u=2 * p**4 + mid + 2 * q**4,
        v=3 * (p**2 + p * q + q**2) * p * q,
        h=p**4 - q**4,
    )


def substitute_pquv(p, q, u, v, x1, y1):
    """x = (x1, p u, q v), y = (y1, p v, q u); note x2 x3 = y2 y3."""
    return SolutionPair(Triple(x1, p * u, q * v), Triple(y1, p * v, q * u))


REDUCTION_VARS = ("x1", "y1", "p", "q", "u", "v")


@dataclass(frozen=True)
class ReductionCheck:
    sign: int
    residual: MPoly
    difference: MPoly

    @property
    def holds(self):
        return self.sign != 0 and self.residual.is_zero()


def reduction_identity_check():
    """Expand phi(x1, pu, qv) - phi(y1, pv, qu) and match it to the product of
    the fac1 and fac2 factors; reports the sign that makes it exact."""
    x1, y1, p, q, u, v = MPoly.gens(REDUCTION_VARS)
    diff = phi((x1, p * u, q * v)) - phi((y1, p * v, q * u))
    first = x1**4 + y1**4 - (p**4 + q**4) * (u**4 + v**4)
    second = x1**4 - y1**4 - (p**4 - q**4) * (u**4 - v**4)
    prod = first * second
    for sign in (1, -1):
        residual = diff - sign * prod
        if residual.is_zero():
            return ReductionCheck(sign, residual, diff)
    return ReductionCheck(0, diff - prod, diff)


# -- triviality, scaling, triangles ------------------------------------


def is_trivial(s):
    """y is a signed permutation of x."""
    return sorted(abs(Fraction(v)) for v in s.y) == sorted(abs(Fraction(v)) for v in s.x)


def scale_to_primitive(s):
    """Scale all six entries by one positive rational to coprime integers."""
    vals = [Fraction(v) for v in s.entries()]
    if all(v == 0 for v in vals):
        raise DegenerateSolutionError("the zero solution has no primitive form")
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vals), 1)
    ints = [int(v * den) for v in vals]
    g = reduce(gcd, ints)
    ints = [Fraction(n // g) for n in ints]
    return SolutionPair(Triple(*ints[:3]), Triple(*ints[3:]))


@dataclass(frozen=True)
class TrianglePair:
    roots_x: tuple
    roots_y: tuple
    sides_x: tuple  # squared sides
    sides_y: tuple
    sixteen_area_sq: int
    rational_area: bool
    primitive: bool = True

    def to_json(self):
        return {
            "roots_x": [str(v) for v in self.roots_x],
            "roots_y": [str(v) for v in self.roots_y],
            "sides_x": [str(v) for v in self.sides_x],
            "sides_y": [str(v) for v in self.sides_y],
            "sixteen_area_sq": str(self.sixteen_area_sq),
            "rational_area": self.rational_area,
            "primitive": self.primitive,
        }


def triangle_pair(family, t):
    """Equiareal triangles with square sides from ``family`` at rational ``t``."""
    make = FAMILIES[family] if isinstance(family, str) else family
    t = as_rational(t)
    sol = make(t)
    if sol.degenerate:
        raise DegenerateSolutionError(f"solution at t = {t} is degenerate")
    prim = scale_to_primitive(sol)
    rx = tuple(abs(int(v)) for v in prim.x)
    ry = tuple(abs(int(v)) for v in prim.y)
    sx, sy = tuple(v * v for v in rx), tuple(v * v for v in ry)
    for sides in (sx, sy):
        if not triangle_check(*sides):
            raise NotATriangleError(f"sides {sides} at t = {t} do not form a triangle")
    area_x, area_y = sixteen_area_squared(*sx), sixteen_area_squared(*sy)
    if area_x != area_y:
        raise ArithmeticError("triangle areas differ; the solution identity failed")
    # area = sqrt(16 A^2) / 4 is rational iff 16 A^2 is a square
    rational = is_perfect_square(Fraction(area_x, 16)) is not None
    return TrianglePair(rx, ry, sx, sy, area_x, rational)
