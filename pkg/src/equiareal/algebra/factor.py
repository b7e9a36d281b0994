"""Integer factorization and factorization of quartics over Q."""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from equiareal._core import pollard_brent, trial_division
from equiareal.algebra.upoly import UPoly

TRIAL_LIMIT = 10**6
MR_ROUNDS = 64
RHO_ITERATIONS = 2_000_000
RHO_ATTEMPTS = 24


class FactorizationError(ArithmeticError):
    """A composite cofactor survived the configured effort."""

    def __init__(self, n, cofactor):
        super().__init__(f"could not split {cofactor} (while factoring {n})")
        self.n = n
        self.cofactor = cofactor


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple  # ((prime, exponent), ...) ascending

    def value(self):
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self):
        return tuple(p for p, _ in self.factors)

    def to_json(self):
        return {"sign": self.sign, "factors": [[str(p), e] for p, e in self.factors]}


def is_probable_prime(n, rounds=MR_ROUNDS):
    """Miller-Rabin with ``rounds`` bases drawn from an RNG seeded by ``n``.

    Composite survival probability is below ``4**-rounds``.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _split(n):
    """A nontrivial divisor of the composite ``n``, or None."""
    r = isqrt(n)
    if r * r == n:
        return r
    rng = random.Random(n ^ 0x5DEECE66D)
    for _ in range(RHO_ATTEMPTS):
        d = pollard_brent(n, rng.randrange(1, n - 1), rng.randrange(0, n), RHO_ITERATIONS)
        if d:
            return d
    return None


def factor_integer(n):
    """Factor a nonzero integer into sign and prime powers.

    Trial division to 10**6, then Miller-Rabin / Pollard-Brent on the
    cofactor. Raises FactorizationError if a composite cannot be split.
    """
    n = int(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found, cofactor = trial_division(m, TRIAL_LIMIT)
    counts = dict(found)
    stack = [cofactor] if cofactor > 1 else []
    while stack:
        c = stack.pop()
        if c < TRIAL_LIMIT * TRIAL_LIMIT or is_probable_prime(c):
            # no factor below the trial bound, so c < bound**2 is prime
            counts[c] = counts.get(c, 0) + 1
            continue
        d = _split(c)
        if d is None:
            raise FactorizationError(n, c)
        stack.extend((d, c // d))
    return Factorization(sign, tuple(sorted(counts.items())))


def factor_rational(q):
    """Signed prime factorization of a nonzero rational (negative exponents for the denominator)."""
    q = Fraction(q)
    num, den = factor_integer(q.numerator), factor_integer(q.denominator)
    exps = dict(num.factors)
    for p, e in den.factors:
        exps[p] = exps.get(p, 0) - e
    return Factorization(num.sign, tuple(sorted(exps.items())))


def divisors(n):
    """Positive divisors of a nonzero integer, ascending."""
    out = [1]
    for p, e in factor_integer(n).factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def squarefree_divisors(n):
    """Positive squarefree divisors of a nonzero integer, ascending."""
    out = [1]
    for p, _ in factor_integer(n).factors:
        out += [d * p for d in out]
    return sorted(out)


# -- quartics ----------------------------------------------------------


@dataclass(frozen=True)
class PolyFactorization:
    content: Fraction
    factors: tuple  # irreducible primitive UPolys with positive leading coefficient, repeated by multiplicity

    def expand(self):
        out = UPoly.constant(self.content)
        for f in self.factors:
            out = out * f
        return out


def _rational_root(coeffs):
    """A rational root of the integer polynomial, or None."""
    a0, an = coeffs[0], coeffs[-1]
    if a0 == 0:
        return Fraction(0)
    f = UPoly(coeffs)
    for p in divisors(a0):
        for q in divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if f(r) == 0:
                    return r
    return None


def _quadratic_split(c):
    """Split a primitive integer quartic into two integer quadratics, or None."""
    c0, c1, c2, c3, c4 = c
    bound = 4 * isqrt(sum(x * x for x in c)) + 4
    for a in divisors(c4):
        d = c4 // a
        for cc in divisors(c0):
            for cc_s in (cc, -cc):
                f = c0 // cc_s
                # t^3: a*e + b*d = c3 ; t^1: b*f + cc*e = c1
                det = d * cc_s - a * f
                if det != 0:
                    bn = c3 * cc_s - a * c1
                    en = d * c1 - f * c3
                    if bn % det or en % det:
                        continue
                    cands = [(bn // det, en // det)]
                else:
                    cands = []
                    for b in range(-bound, bound + 1):
                        if (c3 - b * d) % a == 0:
                            cands.append((b, (c3 - b * d) // a))
                for b, e in cands:
                    if a * f + b * e + cc_s * d == c2 and b * f + cc_s * e == c1:
                        return UPoly([cc_s, b, a]), UPoly([f, e, d])
    return None


def _primitive_int(f):
    content, prim = f.primitive()
    return content, prim.integer_coeffs()


def factor_quartic(f):
    """Factor a nonzero polynomial of degree at most 4 over Q.

    Returns ``content`` and irreducible primitive integer factors, each with a
    positive leading coefficient, whose product times ``content`` is ``f``.
    """
    if not isinstance(f, UPoly):
        f = UPoly(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > 4:
        raise ValueError("factor_quartic handles degree <= 4 only")
    content, coeffs = _primitive_int(f)
    factors = []
    work = UPoly(coeffs)
    while work.degree >= 1:
        cs = work.integer_coeffs()
        if work.degree == 1:
            factors.append(work)
            break
        r = _rational_root(cs)
        if r is not None:
            lin = UPoly([-r.numerator, r.denominator])
            factors.append(lin)
            quo, rem = divmod(work, lin)
            assert not rem
            _, work = quo.primitive()
            continue
        if work.degree == 4:
            split = _quadratic_split(cs)
            if split is not None:
                for g in split:
                    factors.append(g.primitive()[1])
                break
        factors.append(work)
        break
    factors = tuple(sorted(factors, key=lambda g: (g.degree, g.coeffs)))
    out = PolyFactorization(content, factors)
    if out.expand() != f:
        raise ArithmeticError("quartic factorization does not multiply back")
    return out


def is_irreducible_quartic(f):
    fac = factor_quartic(f)
    return len(fac.factors) == 1


__all__ = [
    "FactorizationError",
    "Factorization",
    "PolyFactorization",
    "divisors",
    "factor_integer",
    "factor_quartic",
    "factor_rational",
    "is_irreducible_quartic",
    "is_probable_prime",
    "squarefree_divisors",
]
