"""Short Weierstrass curves y^2 = x^3 + a4 x + a6 over Q or Q(t), their group
law, and the curves/points attached to solutions of phi(x) = phi(y)."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from equiareal.algebra import (
    PoleError,
    RatFunc,
    UPoly,
    as_rational,
    factor_rational,
    is_perfect_square,
)
from equiareal.octic import phi, phi_factors, sol2


class SingularCurveError(ValueError):
    """Zero discriminant (including phi = 0 for curves built from solutions)."""


class SpecializationError(ValueError):
    """Specializing at a pole of a coordinate or at a singular fibre."""


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a4 x + a6.

    ``factor_hint`` optionally lists rationals whose product is ``a4``; it lets
    height and torsion code factor a4 without attacking a large integer blind.
    """

    a4: object
    a6: object = 0
    factor_hint: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        # int / int would silently produce floats in the group law
        for name in ("a4", "a6"):
            if isinstance(getattr(self, name), int):
                object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurveError(f"singular curve y^2 = x^3 + ({self.a4})x + ({self.a6})")

    @property
    def discriminant(self):
        return -16 * (4 * self.a4**3 + 27 * self.a6**2)

    def contains(self, x, y):
        return y * y == x * x * x + self.a4 * x + self.a6

    def point(self, x, y, check=True):
        if isinstance(x, int):
            x = Fraction(x)
        if isinstance(y, int):
            y = Fraction(y)
        if check and not self.contains(x, y):
            raise ValueError(f"({x}, {y}) is not on {self}")
        return Point(self, x, y)

    @property
    def infinity(self):
        return Point(self, None, None)

    def __str__(self):
        return f"y^2 = x^3 + ({self.a4})*x + ({self.a6})"


@dataclass(frozen=True, eq=False)
class Point:
    """Affine point, or the point at infinity when ``x is None``."""

    curve: Curve
    x: object
    y: object

    @property
    def is_infinity(self):
        return self.x is None

    def on_curve(self):
        return self.is_infinity or self.curve.contains(self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, Point) or self.curve != other.curve:
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, negate(other))

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return scalar_mul(n, self)

    __rmul__ = __mul__

    def to_json(self):
        if self.is_infinity:
            return "infinity"
        return [_enc(self.x), _enc(self.y)]

    def __repr__(self):
        return "Point(infinity)" if self.is_infinity else f"Point({self.x}, {self.y})"


def _enc(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    from equiareal.algebra import rational_str

    return rational_str(v)


# -- group law ----------------------------------------------------------


def negate(P):
    return P if P.is_infinity else Point(P.curve, P.x, -P.y)


def add(P, Q):
    """Chord-tangent addition; total on all inputs."""
    if P.curve != Q.curve:
        raise ValueError("points lie on different curves")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return P.curve.infinity
        return double(P)
    lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return Point(P.curve, x3, lam * (P.x - x3) - P.y)


def double(P):
    if P.is_infinity or P.y == 0:
        return P.curve.infinity
    lam = (3 * P.x * P.x + P.curve.a4) / (2 * P.y)
    x3 = lam * lam - 2 * P.x
    return Point(P.curve, x3, lam * (P.x - x3) - P.y)


def scalar_mul(n, P):
    """Double-and-add."""
    if n < 0:
        return scalar_mul(-n, negate(P))
    result, base = P.curve.infinity, P
    while n:
        if n & 1:
            result = add(result, base)
        n >>= 1
        if n:
            base = double(base)
    return result


def combination(coeffs, points):
    """sum(c_i * P_i) by exact group law."""
    if not points:
        raise ValueError("need at least one point")
    total = points[0].curve.infinity
    for c, P in zip(coeffs, points):
        if c:
            total = add(total, scalar_mul(c, P))
    return total


def match_up_to_sign(P, Q):
    """'+' if P == Q, '-' if P == -Q (and not +), else None."""
    if P == Q:
        return "+"
    if P == negate(Q):
        return "-"
    return None


# -- curves attached to solutions ---------------------------------------


def _five_points(sol, scale=1):
    """(X, Y) for the five points with abscissae x1²x2², x1²x3², x2²x3²,
    y1²y2², y1²y3², scaled by (scale², scale³)."""
    x1, x2, x3 = sol.x
    y1, y2, y3 = sol.y
    s2, s3 = scale * scale, scale * scale * scale
    a1, a2, a3 = x1**4, x2**4, x3**4
    b1, b2, b3 = y1**4, y2**4, y3**4
    raw = [
        (x1 * x1 * x2 * x2, x1 * x2 * (a1 + a2 - a3)),
        (x1 * x1 * x3 * x3, x1 * x3 * (a1 - a2 + a3)),
        (x2 * x2 * x3 * x3, x2 * x3 * (a1 - a2 - a3)),
        (y1 * y1 * y2 * y2, y1 * y2 * (b1 + b2 - b3)),
        (y1 * y1 * y3 * y3, y1 * y3 * (b1 - b2 + b3)),
    ]
    return [(s2 * X, s3 * Y / 2) for X, Y in raw]


def curve_from_solution(s):
    """Y^2 = X^3 + (phi/4) X over Q with its five points from the solution."""
    s = s.map(as_rational)
    value = phi(s.x)
    if value == 0:
        raise SingularCurveError("phi(x) = 0: the solution gives no elliptic curve")
    if s.residual() != 0:
        raise ValueError("not a solution of phi(x) = phi(y)")
    curve = Curve(value / 4, 0, factor_hint=(Fraction(1, 4), *phi_factors(s.x)))
    return curve, [curve.point(X, Y) for X, Y in _five_points(s)]


# -- the E_t family -----------------------------------------------------

_t = UPoly.gen()
H = (
    _t**4 - 3 * _t**2 - 2,
    2 * _t**4 + 3 * _t**2 + 2,
    2 * _t**4 + 3 * _t**2 - 1,
    4 * _t**4 + 12 * _t**3 + 15 * _t**2 + 12 * _t + 4,
    4 * _t**4 + 12 * _t**3 + 15 * _t**2 + 12 * _t + 7,
    7 * _t**4 + 12 * _t**3 + 15 * _t**2 + 12 * _t + 4,
)
THETA1 = 2 * _t**4 - 3 * _t**3 - 3 * _t**2 - 6 * _t - 4
THETA2 = UPoly([-32, -144, -312, -492, -588, -522, -381, -183, -27, 27, 66, 12, 16])
THETA3 = UPoly([8, 12, 6, 3, -20, 3, 6, 12, 8])
H_PRODUCT = H[0] * H[1] * H[2] * H[3] * H[4] * H[5]
A4_POLY = 36 * H_PRODUCT


def h_values(t0):
    t0 = as_rational(t0)
    return tuple(h(t0) for h in H)


def family_curve(t=None):
    """V^2 = U^3 + A4 U with A4 = 36 h1...h6; over Q(t) when ``t`` is None."""
    if t is None:
        return Curve(RatFunc(A4_POLY))
    vals = h_values(t)
    zero = [f"h{i + 1}" for i, v in enumerate(vals) if v == 0]
    if zero:
        raise SpecializationError(f"singular fibre at t = {t}: {', '.join(zero)} vanish")
    return Curve(A4_POLY(as_rational(t)), 0, factor_hint=(Fraction(36), *vals))


class ScalingError(ArithmeticError):
    """No rational-function fourth root for the model scaling."""


@lru_cache(maxsize=None)
def model_scaling():
    """The m in Q(t) with m^4 phi(sol2(t)) = 144 h1...h6.

    Derived from the on-curve constraint for (m^2 X, m^3 Y); it is 2/t^2.
    """
    quotient = RatFunc(144 * H_PRODUCT, phi(sol2().x))
    num_root = quotient.num.iroot(4)
    den_root = quotient.den.iroot(4)
    if num_root is None or den_root is None:
        raise ScalingError("144 h1...h6 / phi(sol2) is not a fourth power in Q(t)")
    return RatFunc(num_root, den_root)


def family_points(t=None):
    """P1(t)..P5(t) on E_t; rational points on E_{t0} when ``t`` is given."""
    if t is None:
        curve = family_curve()
        m = model_scaling()
        sol = sol2().map(RatFunc)
        return [curve.point(X, Y) for X, Y in _five_points(sol, m)]
    t = as_rational(t)
    curve = family_curve(t)
    if t == 0:
        raise SpecializationError("t = 0 is a pole of the model scaling")
    m = model_scaling()(t)
    return [curve.point(X, Y) for X, Y in _five_points(sol2(t), m)]


@lru_cache(maxsize=None)
def generator_formulas():
    """G1(t), G2(t) on E_t over Q(t) from the theta polynomials."""
    curve = family_curve()
    t = RatFunc.gen()
    h1, h2, h3, h4, h5, h6 = (RatFunc(h) for h in H)
    th1, th2, th3 = RatFunc(THETA1), RatFunc(THETA2), RatFunc(THETA3)
    g1 = curve.point(2 * h2 * h6 * th1**2 / t**4, 4 * h2 * h6 * th1 * th2 / t**6)
    quartic_prod = 4 * h1 * h2 * h3 * h4
    g2 = curve.point(quartic_prod / t**2, quartic_prod * th3 / t**3)
    return g1, g2


def doubling_identities():
    """Sign with which 2 G1 = -P3 - P4 + P5 and 2 G2 = P1 - P2 + P4 - P5 hold over Q(t).

    '+' exact, '-' only after negating one side, None if neither.
    """
    g1, g2 = generator_formulas()
    p1, p2, p3, p4, p5 = family_points()
    return {
        "2G1 = -P3 - P4 + P5": match_up_to_sign(double(g1), combination((-1, -1, 1), (p3, p4, p5))),
        "2G2 = P1 - P2 + P4 - P5": match_up_to_sign(double(g2), combination((1, -1, 1, -1), (p1, p2, p4, p5))),
    }


@dataclass(frozen=True)
class CurveFamily:
    h: tuple
    a4_poly: UPoly
    m: RatFunc
    points: tuple
    g1: Point
    g2: Point

    @property
    def curve(self):
        return self.points[0].curve


@lru_cache(maxsize=None)
def curve_family():
    g1, g2 = generator_formulas()
    return CurveFamily(H, A4_POLY, model_scaling(), tuple(family_points()), g1, g2)


# -- specialization and torsion ----------------------------------------


def specialize(obj, t0):
    """Evaluate a curve, point or sequence of them over Q(t) at ``t0``."""
    t0 = as_rational(t0)
    if isinstance(obj, (list, tuple)):
        return type(obj)(specialize(o, t0) for o in obj)
    if isinstance(obj, Curve):
        try:
            a4, a6 = _eval(obj.a4, t0, "a4"), _eval(obj.a6, t0, "a6")
        except PoleError as exc:
            raise SpecializationError(str(exc)) from exc
        hint = ()
        if obj.a4 == RatFunc(A4_POLY) and obj.a6 == 0:
            vals = h_values(t0)
            zero = [f"h{i + 1}" for i, v in enumerate(vals) if v == 0]
            if zero:
                raise SpecializationError(f"singular fibre at t = {t0}: {', '.join(zero)} vanish")
            hint = (Fraction(36), *vals)
        try:
            return Curve(a4, a6, factor_hint=hint)
        except SingularCurveError as exc:
            raise SpecializationError(f"singular fibre at t = {t0}") from exc
    if isinstance(obj, Point):
        curve = specialize(obj.curve, t0)
        if obj.is_infinity:
            return curve.infinity
        try:
            return curve.point(_eval(obj.x, t0, "x"), _eval(obj.y, t0, "y"))
        except PoleError as exc:
            raise SpecializationError(str(exc)) from exc
    return _eval(obj, t0, "value")


def _eval(value, t0, what):
    if isinstance(value, (RatFunc, UPoly)):
        try:
            return value(t0)
        except PoleError as exc:
            raise PoleError(f"{what}: denominator {value.den} vanishes at t = {t0}") from exc
    return Fraction(value)


def factor_with_hint(value, hint=()):
    """Prime exponents of a nonzero rational, using a product hint when given."""
    value = Fraction(value)
    if hint:
        prod = Fraction(1)
        for h in hint:
            prod *= Fraction(h)
        if prod == value:
            exps = {}
            for h in hint:
                for p, e in factor_rational(h).factors:
                    exps[p] = exps.get(p, 0) + e
            return {p: e for p, e in exps.items() if e}
    return dict(factor_rational(value).factors)


def fourth_power_free_part(a4, hint=()):
    """Integer D with a4 = D * r^4 for some rational r, D fourth-power free."""
    exps = factor_with_hint(a4, hint)
    d = 1 if a4 > 0 else -1
    for p, e in exps.items():
        d *= p ** (e % 4)
    return d


def torsion_classify(curve):
    """Torsion subgroup of y^2 = x^3 + D x over Q."""
    a4 = Fraction(curve.a4)
    if curve.a6 != 0 or a4 == 0:
        raise ValueError("torsion_classify needs a6 = 0 and a4 != 0")
    d = fourth_power_free_part(a4, curve.factor_hint)
    if d == 4:
        return "Z/4Z"
    if is_perfect_square(-d) is not None:
        return "Z/2Z x Z/2Z"
    return "Z/2Z"


__all__ = [
    "A4_POLY",
    "Curve",
    "CurveFamily",
    "H",
    "Point",
    "ScalingError",
    "SingularCurveError",
    "SpecializationError",
    "THETA1",
    "THETA2",
    "THETA3",
    "add",
    "combination",
    "curve_family",
    "curve_from_solution",
    "double",
    "doubling_identities",
    "family_curve",
    "family_points",
    "generator_formulas",
    "h_values",
    "match_up_to_sign",
    "model_scaling",
    "negate",
    "scalar_mul",
    "specialize",
    "torsion_classify",
]
