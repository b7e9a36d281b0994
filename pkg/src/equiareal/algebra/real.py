"""Precision-tagged real numbers on top of mpmath."""
from dataclasses import dataclass

import mpmath

DEFAULT_PRECISION = 192
MIN_PRECISION = 64


def make_context(prec):
    """Private mpmath context at ``prec`` bits (no shared global state)."""
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits")
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


@dataclass(frozen=True)
class Real:
    """A binary floating value with the precision it was computed at.

    ``error`` is an estimated absolute error bound.
    """

    value: mpmath.mpf
    prec: int
    error: mpmath.mpf = mpmath.mpf(0)

    def __post_init__(self):
        if self.prec < MIN_PRECISION:
            raise ValueError(f"precision must be at least {MIN_PRECISION} bits")

    def __float__(self):
        return float(self.value)

    def digits(self, n=20):
        return mpmath.nstr(self.value, n)

    def __str__(self):
        return self.digits(max(15, int(self.prec * 0.30103) - 5))
