# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: integer convolution, trial division, Pollard-Brent.

The rho walk runs in machine words with 128-bit products whenever the
modulus fits in 63 bits; larger moduli use Python integers.
"""
from math import gcd

from equiareal._kernels_py import small_primes
from equiareal._kernels_py import pollard_brent as _pollard_brent_big

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline unsigned long long equiareal_mulmod(
        unsigned long long a, unsigned long long b, unsigned long long n) {
        return (unsigned long long)(((unsigned __int128)a * b) % n);
    }
    """
    u64 _mulmod "equiareal_mulmod"(u64 a, u64 b, u64 n) nogil


cdef inline u64 _gcd64(u64 a, u64 b) nogil:
    while b:
        a, b = b, a % b
    return a


def poly_mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] += ai * b[j]
    return out


def trial_division(n, long limit):
    cdef tuple primes = small_primes(limit)
    cdef list factors = []
    cdef u64 m, p
    cdef int e
    cdef Py_ssize_t idx
    if n < (1 << 63):
        m = n
        for idx in range(len(primes)):
            p = primes[idx]
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        n = m
    else:
        for pp in primes:
            if pp * pp > n:
                break
            if n % pp == 0:
                e = 0
                while n % pp == 0:
                    n //= pp
                    e += 1
                factors.append((pp, e))
    if 1 < n <= limit:
        factors.append((n, 1))
        n = 1
    return factors, n


def pollard_brent(n, c, y0, max_iter):
    if n >= (1 << 63):
        return _pollard_brent_big(n, c, y0, max_iter)
    cdef u64 N = n, C = c % n, y = y0 % n, x, ys, q = 1, g = 1, diff
    cdef u64 r = 1, k, i, lim, m = 128, steps = 0, cap = max_iter
    x = ys = y
    with nogil:
        while g == 1:
            x = y
            for i in range(r):
                y = (_mulmod(y, y, N) + C) % N
            k = 0
            while k < r and g == 1:
                ys = y
                lim = m if m < r - k else r - k
                for i in range(lim):
                    y = (_mulmod(y, y, N) + C) % N
                    diff = x - y if x > y else y - x
                    q = _mulmod(q, diff, N)
                g = _gcd64(q, N)
                k += m
            steps += r
            r <<= 1
            if steps > cap:
                break
        if g == N:
            g = 1
            while g == 1:
                ys = (_mulmod(ys, ys, N) + C) % N
                diff = x - ys if x > ys else ys - x
                g = _gcd64(diff, N)
    if g == 1 or g == N:
        return 0
    return int(g)
