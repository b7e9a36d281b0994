from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiareal.algebra import (
    IMatrix,
    MPoly,
    PoleError,
    RatFunc,
    UPoly,
    as_rational,
    det,
    exact_quotient,
    factor_integer,
    factor_quartic,
    factor_rational,
    is_perfect_square,
    is_probable_prime,
    poly_gcd,
    rational_root,
    rational_str,
    squarefree_divisors,
)
from equiareal.algebra.factor import divisors, is_irreducible_quartic
from equiareal.algebra.real import Real, make_context

small = st.integers(-50, 50)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)
polys = st.lists(small, min_size=0, max_size=6).map(UPoly)
nonzero_polys = st.lists(small, min_size=1, max_size=5).filter(lambda c: any(c)).map(UPoly)


def naive_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- rationals --------------------------------------------------------------


@pytest.mark.parametrize("text,value", [("3/4", Fraction(3, 4)), ("-7", Fraction(-7)), (" 12/-8 ", Fraction(-3, 2))])
def test_as_rational_parses(text, value):
    assert as_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5"])
def test_as_rational_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        as_rational(bad)


def test_rational_str():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(-5)) == "-5"


@given(rationals)
def test_square_detection_matches_construction(q):
    assert is_perfect_square(q * q) == abs(q)


@given(st.integers(2, 10**6))
def test_nonsquare_integers(n):
    r = is_perfect_square(n)
    assert (r is not None) == (int(n**0.5 + 0.5) ** 2 == n)


@given(st.integers(1, 10**30), st.integers(2, 6))
def test_rational_root_inverts_power(n, k):
    assert rational_root(Fraction(n) ** k, k) == n


# -- polynomials -----------------------------------------------------------


@given(polys, polys)
def test_upoly_mul_matches_convolution(a, b):
    assert (a * b).coeffs == UPoly(naive_mul(list(a.coeffs), list(b.coeffs))).coeffs


@given(polys, nonzero_polys)
def test_divmod_reconstructs(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, rationals)
def test_evaluation_is_a_ring_map(a, x):
    assert (a * a + 3 * a)(x) == a(x) ** 2 + 3 * a(x)


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert exact_quotient(a * c, g) * g == a * c
    assert not divmod(g, c.monic())[1]


def test_upoly_str_and_json():
    t = UPoly.gen()
    f = 2 * t**4 + 3 * t**2 - 1
    assert str(f) == "2*t^4 + 3*t^2 - 1"
    assert f.to_json() == ["-1", "0", "3", "0", "2"]


def test_iroot():
    t = UPoly.gen()
    assert (4 * t**2 + 4 * t + 1).iroot(2) == 2 * t + 1
    assert (t**2 + 1).iroot(2) is None


# -- rational functions ----------------------------------------------------


@given(nonzero_polys, nonzero_polys, rationals)
@settings(max_examples=80)
def test_ratfunc_field_ops(a, b, x):
    f = RatFunc(a, b)
    assert f * f.inverse() == RatFunc(UPoly([1]))
    if b(x) != 0 and a(x) != 0:
        assert (f + 1 / f)(x) == a(x) / b(x) + b(x) / a(x)


def test_ratfunc_pole():
    t = RatFunc.gen()
    with pytest.raises(PoleError):
        (1 / t)(0)


def test_ratfunc_reduces():
    t = UPoly.gen()
    f = RatFunc(t**2 - 1, 2 * t - 2)
    assert f.den == UPoly([1])
    assert f.num == (t + 1) * Fraction(1, 2)


# -- multivariate ------------------------------------------------------------


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_mpoly_eval_is_multiplicative(u, v):
    x, y, z = MPoly.gens("xyz")
    f = x * y - 3 * z**2 + 1
    g = x + y * z
    assert (f * g)(*u) == f(*u) * g(*u)
    assert (f + g)(*v) == f(*v) + g(*v)


def test_mpoly_named_eval_and_order():
    x, y = MPoly.gens(("x", "y"))
    f = y**2 + 2 * x * y + x**3
    assert f(x=2, y=3) == 8 + 12 + 9
    assert str(f) == "x^3 + 2*x*y + y^2"


def test_mpoly_variable_mismatch():
    (x,) = MPoly.gens(("x",))
    (y,) = MPoly.gens(("y",))
    with pytest.raises(ValueError):
        x + y


# -- determinants ------------------------------------------------------------


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(n))


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += prod
    return total


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(rows):
    assert det(IMatrix(rows)) == cofactor_det(rows) == leibniz_det(rows)


def test_identity_det():
    assert det(IMatrix.identity(4)) == 1


# -- factorization -----------------------------------------------------------


def brute_factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(sorted(out.items()))


@given(st.integers(1, 10**7))
def test_factor_matches_trial_division(n):
    assert factor_integer(n).factors == brute_factor(n)


@given(st.integers(-(10**40), 10**40).filter(bool))
@settings(max_examples=40)
def test_factor_multiplies_back(n):
    f = factor_integer(n)
    assert f.value() == n
    assert all(is_probable_prime(p) for p in f.primes())


def test_factor_semiprime_beyond_trial_bound():
    p, q = 1000000007, 998244353
    assert factor_integer(p * q).factors == ((q, 1), (p, 1))
    big = (2**61 - 1) * (2**31 - 1) ** 2
    assert factor_integer(big).factors == ((2**31 - 1, 2), (2**61 - 1, 1))


def test_factor_e2_coefficient():
    assert factor_integer(2624072905728).factors == ((2, 10), (3, 2), (23, 1), (31, 1), (37, 1), (43, 1), (251, 1))


def test_factor_rational_and_divisors():
    assert dict(factor_rational(Fraction(-12, 35)).factors) == {2: 2, 3: 1, 5: -1, 7: -1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert squarefree_divisors(36) == [1, 2, 3, 6]


@given(st.integers(2, 10**6))
def test_miller_rabin_agrees_with_trial(n):
    assert is_probable_prime(n) == (brute_factor(n) == ((n, 1),))


def test_factor_quartic_splits():
    t = UPoly.gen()
    f = 6 * (t**2 + 1) * (2 * t - 3) * (t + 5)
    fac = factor_quartic(f)
    assert fac.expand() == f
    assert len(fac.factors) == 3
    g = (t**2 + t + 1) * (3 * t**2 - 2)
    assert len(factor_quartic(g).factors) == 2
    assert is_irreducible_quartic(t**4 + 1)


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3), st.lists(st.integers(-6, 6), min_size=3, max_size=3))
@settings(max_examples=60)
def test_factor_quartic_product_of_quadratics(a, b):
    f = UPoly(a) * UPoly(b)
    if f.degree < 1:
        return
    fac = factor_quartic(f)
    assert fac.expand() == f
    assert all(g.degree >= 1 for g in fac.factors)


# -- reals -------------------------------------------------------------------


def test_private_contexts_do_not_interfere():
    lo, hi = make_context(64), make_context(256)
    x = hi.mpf(1) / 3
    assert lo.prec == 64 and hi.prec == 256
    assert len(str(Real(x, 256))) > 60


def test_real_rejects_low_precision():
    with pytest.raises(ValueError):
        Real(make_context(64).mpf(1), 32)
