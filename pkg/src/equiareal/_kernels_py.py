"""Pure-Python versions of the hot kernels.

Same call signatures as the compiled ``_kernels`` extension; used when the
extension is not built.
"""
from math import gcd

_PRIME_CACHE = {}


def small_primes(limit):
    """Primes ``<= limit`` by an Eratosthenes sieve (cached per limit)."""
    cached = _PRIME_CACHE.get(limit)
    if cached is not None:
        return cached
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    primes = tuple(i for i in range(limit + 1) if sieve[i])
    _PRIME_CACHE[limit] = primes
    return primes


def poly_mul(a, b):
    """Convolution of two integer coefficient lists (low degree first)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def trial_division(n, limit):
    """Strip every prime ``p <= limit`` from ``n > 0``.

    Returns ``(factors, cofactor)`` with ``factors`` a list of ``(p, e)``.
    """
    factors = []
    for p in small_primes(limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    if 1 < n <= limit:
        factors.append((n, 1))
        n = 1
    return factors, n


def pollard_brent(n, c, y0, max_iter):
    """Brent's cycle variant of Pollard rho on ``x -> x^2 + c mod n``.

    Returns a nontrivial divisor of ``n`` or 0 when ``max_iter`` steps of the
    walk find nothing (including the degenerate case where the walk collapses
    to ``n``).
    """
    y, r, q, g = y0 % n, 1, 1, 1
    m = 128
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        steps += r
        r <<= 1
        if steps > max_iter:
            break
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    if g == 1 or g == n:
        return 0
    return g
