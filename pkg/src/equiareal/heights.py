"""Canonical heights, regulators, generator relations and the Gusic-Tadic
injectivity criterion.

Canonical heights use the normalization hhat(P) = lim 4^-n h(x(2^n P)) with
h(a/b) = log max(|a|, |b|) ("unhalved"); the "halved" convention is half of it.

For a point Q with nonsingular reduction at every prime on an integral model,
the non-archimedean local heights sum to log d where x(Q) = a/d^2, so

    hhat(Q) = 2 * (lambda_inf(Q) + log d)

with lambda_inf given by Tate's series on a translated model whose real
points all have x > 0. A general P is handled through its smallest multiple
Q = mP with everywhere nonsingular reduction (m <= 12 since the component
groups have order at most 4), and hhat(P) = hhat(Q) / m^2.
"""
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

from equiareal.algebra import (
    DEFAULT_PRECISION,
    IMatrix,
    Real,
    det,
    factor_integer,
    factor_quartic,
    is_perfect_square,
    make_context,
    squarefree_divisors,
)
from equiareal.algebra.factor import Factorization
from equiareal.elliptic import (
    H,
    Curve,
    SpecializationError,
    add,
    combination,
    double,
    factor_with_hint,
    match_up_to_sign,
)

NORMALIZATIONS = ("unhalved", "halved")
INDEPENDENCE_THRESHOLD = Fraction(1, 10**4)
MIN_CONTEXT_PRECISION = 128
MAX_MULTIPLE = 12
PRECISION_ENV = "EQUIAREAL_PRECISION"


class PrecisionError(ArithmeticError):
    """The estimated error bound exceeds the requested tolerance."""


def default_precision():
    value = os.environ.get(PRECISION_ENV)
    return int(value) if value else DEFAULT_PRECISION


# -- context ------------------------------------------------------------


def _ceil_div(a, b):
    return -((-a) // b)


def _integral_exponents(curve):
    """Prime exponents of u with u^4 a4 and u^6 a6 integral.

    With a factor hint and a6 = 0, fourth powers are also removed from a4.
    """
    a4, a6 = Fraction(curve.a4), Fraction(curve.a6)
    if a6 == 0 and curve.factor_hint:
        exps = {p: _ceil_div(-e, 4) for p, e in factor_with_hint(a4, curve.factor_hint).items()}
        return {p: e for p, e in exps.items() if e}
    exps = {}
    for p, e in factor_integer(a4.denominator).factors:
        exps[p] = _ceil_div(e, 4)
    if a6:
        for p, e in factor_integer(a6.denominator).factors:
            exps[p] = max(exps.get(p, 0), _ceil_div(e, 6))
    return exps


class HeightContext:
    """Integral model, factored discriminant and working precision for one curve.

    Immutable after construction.
    """

    def __init__(self, curve, prec=None, normalization="unhalved"):
        if not isinstance(curve, Curve):
            raise TypeError("HeightContext needs a Curve over Q")
        prec = default_precision() if prec is None else prec
        if prec < MIN_CONTEXT_PRECISION:
            raise ValueError(f"precision must be at least {MIN_CONTEXT_PRECISION} bits")
        if normalization not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
        self.curve = curve
        self.prec = prec
        self.normalization = normalization
        self._u_exps = _integral_exponents(curve)
        u = Fraction(1)
        for p, e in self._u_exps.items():
            u *= Fraction(p) ** e
        self.scale = u
        A, B = u**4 * Fraction(curve.a4), u**6 * Fraction(curve.a6)
        if A.denominator != 1 or B.denominator != 1:
            raise ArithmeticError("integral model scaling failed")
        self.A, self.B = A.numerator, B.numerator
        self.discriminant = -16 * (4 * self.A**3 + 27 * self.B**2)
        self.disc_factorization = self._factor_discriminant()
        if self.disc_factorization.value() != self.discriminant:
            raise ArithmeticError("discriminant factorization does not multiply back")
        self.bad_primes = self.disc_factorization.primes()
        self._ctx = make_context(prec + 32)
        self._setup_series()

    def _factor_discriminant(self):
        if self.B == 0:
            # -64 A^3; factor A through the curve's hint when it has one
            if self.curve.factor_hint:
                a_exps = factor_with_hint(Fraction(self.curve.a4), self.curve.factor_hint)
                for p, e in self._u_exps.items():
                    a_exps[p] = a_exps.get(p, 0) + 4 * e
                a_exps = {p: e for p, e in a_exps.items() if e}
            else:
                a_exps = dict(factor_integer(self.A).factors)
            d_exps = {p: 3 * e for p, e in a_exps.items()}
            d_exps[2] = d_exps.get(2, 0) + 6
            sign = -1 if self.A > 0 else 1
            return Factorization(sign, tuple(sorted(d_exps.items())))
        return factor_integer(self.discriminant)

    def _setup_series(self):
        ctx = self._ctx
        A, B = ctx.mpf(self.A), ctx.mpf(self.B)
        if self.B == 0:
            roots = [ctx.mpf(0)]
            if self.A < 0:
                s = ctx.sqrt(-A)
                roots += [s, -s]
            size = ctx.sqrt(abs(A))
        else:
            allroots = ctx.polyroots([1, 0, A, B], maxsteps=500, extraprec=2 * self.prec)
            roots = [ctx.re(r) for r in allroots if abs(ctx.im(r)) <= abs(r) * ctx.mpf(2) ** (-self.prec // 2)]
            size = max(abs(r) for r in allroots)
        r = min(roots) - (1 + size)
        a2, a4, a6 = 3 * r, 3 * r * r + A, r**3 + A * r + B
        self._shift = r
        self._b2, self._b4, self._b6 = 4 * a2, 2 * a4, 4 * a6
        self._b8 = 4 * a2 * a6 - a4 * a4

    def to_integral(self, P):
        u = self.scale
        if P.is_infinity:
            return None
        return Fraction(P.x) * u * u, Fraction(P.y) * u**3

    def describe(self):
        return {
            "integral_a4": str(self.A),
            "integral_a6": str(self.B),
            "scale": str(self.scale),
            "discriminant": str(self.discriminant),
            "discriminant_factorization": self.disc_factorization.to_json(),
            "precision_bits": self.prec,
            "normalization": self.normalization,
        }

    # -- local pieces ---------------------------------------------------

    def _singular_somewhere(self, x, y):
        """True if (x, y) on the integral model reduces to a singular point mod a bad prime."""
        a, d2 = x.numerator, x.denominator
        d = isqrt(d2)
        b = (y * d**3).numerator
        fx = 3 * a * a + self.A * d2 * d2
        fy = 2 * b
        for p in self.bad_primes:
            if d % p and fx % p == 0 and fy % p == 0:
                return True
        return False

    def _tate_series(self, x):
        """lambda_inf at x (Silverman normalization, no discriminant term) and its error bound."""
        ctx = self._ctx
        b2, b4, b6, b8 = self._b2, self._b4, self._b6, self._b8
        xs = ctx.mpf(x.numerator) / x.denominator - self._shift
        t = 1 / xs
        total, weight = ctx.mpf(0), ctx.mpf(1)
        eps = ctx.mpf(2) ** (-(self.prec + 8))
        worst = ctx.mpf(1)
        n = 0
        while True:
            t2 = t * t
            w = 4 * t + b2 * t2 + 2 * b4 * t2 * t + b6 * t2 * t2
            z = 1 - b4 * t2 - 2 * b6 * t2 * t - b8 * t2 * t2
            term = ctx.log(abs(z))
            worst = max(worst, abs(term))
            total += weight * term
            t = w / z
            weight /= 4
            n += 1
            if weight * worst * 4 < eps or n > 4 * self.prec:
                break
        tail = weight * worst * 2 / 3
        value = ctx.log(abs(xs)) / 2 + total / 8
        rounding = ctx.mpf(2) ** (-self.prec) * (abs(value) + n)
        return value, tail / 8 + rounding

    def good_multiple(self, P):
        """Smallest m <= 12 such that mP has everywhere nonsingular reduction."""
        Q = P
        for m in range(1, MAX_MULTIPLE + 1):
            if m > 1:
                Q = add(Q, P)
            if Q.is_infinity:
                return m, Q
            if not self._singular_somewhere(*self.to_integral(Q)):
                return m, Q
        raise ArithmeticError("no multiple up to 12 has nonsingular reduction everywhere")


# -- heights --------------------------------------------------------------


def is_torsion(P):
    """Exact torsion test: infinity, 2-torsion, or finite order <= 12."""
    if P.is_infinity or P.y == 0:
        return True
    Q = P
    for _ in range(MAX_MULTIPLE):
        Q = add(Q, P)
        if Q.is_infinity:
            return True
    return False


def _factor(ctx):
    return 2 if ctx.normalization == "unhalved" else 1


def canonical_height(ctx, P):
    """Neron-Tate height of a rational point, as a Real at the context precision."""
    if P.curve != ctx.curve:
        raise ValueError("point is not on the context's curve")
    mp = ctx._ctx
    if is_torsion(P):
        return Real(mp.mpf(0), ctx.prec)
    m, Q = ctx.good_multiple(P)
    x, _ = ctx.to_integral(Q)
    lam, err = ctx._tate_series(x)
    log_d = mp.log(isqrt(x.denominator))
    scale = mp.mpf(_factor(ctx)) / (m * m)
    return Real(+(scale * (lam + log_d)), ctx.prec, scale * err)


def naive_height(P):
    """log max(|num x|, |den x|) of the x-coordinate; 0 at infinity."""
    import mpmath

    if P.is_infinity:
        return mpmath.mpf(0)
    x = Fraction(P.x)
    return mpmath.log(max(abs(x.numerator), x.denominator))


def naive_doubling_estimate(P, n, prec=None):
    """4^-n h(x(2^n P)); converges to the unhalved canonical height."""
    if not 0 <= n <= 5:
        raise ValueError("doubling estimate supports 0 <= n <= 5")
    mp = make_context(prec or default_precision())
    Q = P
    for _ in range(n):
        Q = double(Q)
    if Q.is_infinity:
        return Real(mp.mpf(0), mp.prec)
    x = Fraction(Q.x)
    value = mp.log(max(abs(x.numerator), x.denominator)) / mp.mpf(4) ** n
    return Real(value, mp.prec)


@dataclass
class HeightReport:
    heights: list
    gram: list  # list of rows of mpf
    regulator: Real
    independent: bool
    error_bound: object
    prec: int
    normalization: str

    def to_json(self):
        digits = max(15, int(self.prec * 0.30103) - 10)
        from mpmath import nstr

        return {
            "heights": [nstr(h.value, digits) for h in self.heights],
            "gram": [[nstr(v, digits) for v in row] for row in self.gram],
            "regulator": nstr(self.regulator.value, digits),
            "error_bound": nstr(self.error_bound, 3),
            "independent": self.independent,
            "precision_bits": self.prec,
            "normalization": self.normalization,
        }


def pairing(ctx, P, Q, hP=None, hQ=None):
    hP = hP or canonical_height(ctx, P)
    hQ = hQ or canonical_height(ctx, Q)
    hPQ = canonical_height(ctx, add(P, Q))
    value = (hPQ.value - hP.value - hQ.value) / 2
    return value, (hPQ.error + hP.error + hQ.error) / 2


def regulator(ctx, points):
    """Gram matrix of height pairings and its determinant."""
    mp = ctx._ctx
    n = len(points)
    heights = [canonical_height(ctx, P) for P in points]
    gram = [[mp.mpf(0)] * n for _ in range(n)]
    entry_err = mp.mpf(0)
    for i in range(n):
        gram[i][i] = heights[i].value
        entry_err = max(entry_err, heights[i].error)
        for j in range(i + 1, n):
            v, e = pairing(ctx, points[i], points[j], heights[i], heights[j])
            gram[i][j] = gram[j][i] = v
            entry_err = max(entry_err, e)
    if n == 0:
        reg = mp.mpf(1)
        err = mp.mpf(0)
    else:
        M = mp.matrix(gram)
        reg = mp.det(M)
        # first-order perturbation: |d det| <= eps * sum |adjugate entries|
        try:
            adj_sum = sum(abs(v) for v in (mp.inverse(M) * reg)) if reg != 0 else None
        except ZeroDivisionError:
            adj_sum = None
        if adj_sum is None:
            norms = [mp.sqrt(sum(v * v for v in row)) for row in gram]
            bound = mp.mpf(1)
            for r in norms:
                bound *= r + 1
            adj_sum = n * bound
        err = entry_err * adj_sum + mp.mpf(2) ** (-ctx.prec) * abs(reg) * n**3
    if abs(reg) <= err:
        reg = mp.mpf(0)
    return HeightReport(
        heights=heights,
        gram=gram,
        regulator=Real(reg, ctx.prec, err),
        independent=reg > mp.mpf(INDEPENDENCE_THRESHOLD.numerator) / INDEPENDENCE_THRESHOLD.denominator,
        error_bound=err,
        prec=ctx.prec,
        normalization=ctx.normalization,
    )


# -- relations and bases --------------------------------------------------


@dataclass(frozen=True)
class RelationSet:
    """Rows express targets as integer combinations of a basis."""

    matrix: IMatrix
    row_labels: tuple = ()
    col_labels: tuple = ()

    @classmethod
    def from_rows(cls, rows, row_labels=(), col_labels=()):
        return cls(IMatrix(rows), tuple(row_labels), tuple(col_labels))


def verify_relations(rel, basis, targets, sign_tolerant=False):
    """Evaluate each row by the exact group law; one bool per row."""
    out = []
    for row, target in zip(rel.matrix.rows, targets):
        value = combination(row, basis)
        if sign_tolerant:
            out.append(match_up_to_sign(value, target) is not None)
        else:
            out.append(value == target)
    return out


def relation_signs(rel, basis, targets):
    """Per row: '+' exact, '-' only up to negation, None if neither."""
    return [match_up_to_sign(combination(row, basis), target) for row, target in zip(rel.matrix.rows, targets)]


@dataclass(frozen=True)
class BasisAnalysis:
    det: int
    unimodular: bool
    index: int

    def to_json(self):
        return {"det": str(self.det), "unimodular": self.unimodular, "index": str(self.index)}


def basis_analysis(rel):
    d = det(rel.matrix if isinstance(rel, RelationSet) else IMatrix(rel))
    return BasisAnalysis(d, abs(d) == 1, abs(d))


def starred_generators(points, g1, g2):
    """P2* = P2 + G1 + G2, P4* = P4 + G1 + G2, P5* = P5 + G2."""
    _, p2, _, p4, p5 = points
    s = add(g1, g2)
    return add(p2, s), add(p4, s), add(p5, g2)


# -- Gusic-Tadic ------------------------------------------------------------


@dataclass(frozen=True)
class GTDivisor:
    polynomial: str
    constant: int
    factors: tuple  # labels of the irreducible factors used
    value: Fraction
    is_square: bool

    @property
    def label(self):
        body = "*".join(self.factors)
        if self.constant == 1:
            return body
        return "-" + body if self.constant == -1 else f"{self.constant}*{body}"

    def to_json(self):
        from equiareal.algebra import rational_str

        return {
            "polynomial": self.polynomial,
            "divisor": self.label,
            "value": rational_str(self.value),
            "square": self.is_square,
        }


@dataclass(frozen=True)
class GTReport:
    t0: Fraction
    contents: dict  # polynomial label -> integer content
    factors: tuple  # (label, UPoly) of distinct irreducible factors
    divisors: tuple
    include_content: bool
    passed: bool

    @property
    def squares(self):
        return [d for d in self.divisors if d.is_square]

    def to_json(self):
        from equiareal.algebra import rational_str

        return {
            "t": rational_str(self.t0),
            "passed": self.passed,
            "include_content": self.include_content,
            "contents": {k: str(v) for k, v in self.contents.items()},
            "factors": {label: f.to_json() for label, f in self.factors},
            "divisor_count": len(self.divisors),
            "squares": [d.label + " @ " + d.polynomial for d in self.squares],
            "divisors": [d.to_json() for d in self.divisors],
        }


def _label_factor(f):
    for i, h in enumerate(H):
        if h.primitive()[1] == f:
            return f"h{i + 1}"
    return f"({f})"


def gusic_tadic_check(t0, include_content=True):
    """Square test on the squarefree divisors of 36 prod h_i and -144 prod h_i at t0.

    Divisors are d * prod(f for f in S) for S a nonempty set of distinct
    irreducible factors; d runs over the signed squarefree divisors of the
    content (``include_content``) or over +-1 only.
    """
    from equiareal.algebra import as_rational

    t0 = as_rational(t0)
    if any(h(t0) == 0 for h in H):
        raise SpecializationError(f"t = {t0} is a root of h1...h6")
    content = Fraction(1)
    irreducible = []
    for h in H:
        fac = factor_quartic(h)
        content *= fac.content
        irreducible.extend(fac.factors)
    distinct = []
    for f in irreducible:
        if f not in distinct:
            distinct.append(f)
    labelled = tuple((_label_factor(f), f) for f in distinct)
    values = {label: f(t0) for label, f in labelled}
    polys = {"36*prod(h)": 36 * content, "-144*prod(h)": -144 * content}
    divisors_out = []
    for pname, c in polys.items():
        c = int(c)
        consts = squarefree_divisors(abs(c)) if include_content else [1]
        signed = [s * d for d in consts for s in (1, -1)]
        for r in range(1, len(labelled) + 1):
            for subset in combinations(labelled, r):
                base = Fraction(1)
                for label, _ in subset:
                    base *= values[label]
                for d in signed:
                    value = d * base
                    divisors_out.append(
                        GTDivisor(pname, d, tuple(label for label, _ in subset), value, is_perfect_square(value) is not None)
                    )
    passed = not any(d.is_square for d in divisors_out)
    return GTReport(t0, {k: int(v) for k, v in polys.items()}, labelled, tuple(divisors_out), include_content, passed)


__all__ = [
    "BasisAnalysis",
    "GTDivisor",
    "GTReport",
    "HeightContext",
    "HeightReport",
    "PrecisionError",
    "RelationSet",
    "basis_analysis",
    "canonical_height",
    "gusic_tadic_check",
    "is_torsion",
    "naive_doubling_estimate",
    "naive_height",
    "pairing",
    "regulator",
    "relation_signs",
    "starred_generators",
    "verify_relations",
]
