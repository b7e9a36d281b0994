"""Sparse multivariate polynomials over Q on a declared variable tuple."""
from fractions import Fraction

from equiareal.algebra.rational import rational_str

_SCALARS = (int, Fraction)


class MPoly:
    """Map from exponent vectors to nonzero Fraction coefficients.

    Terms are ordered lexicographically over ``variables`` (first variable
    most significant), highest monomial first.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector does not match the variables")
            c = Fraction(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables):
        """All variables of ``variables`` as MPolys, in order."""
        return tuple(cls.var(v, variables) for v in variables)

    @classmethod
    def constant(cls, value, variables):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError("MPoly operands use different variable tuples")
            return other
        if isinstance(other, _SCALARS):
            return MPoly.constant(other, self.variables)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _from_clean(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return _from_clean(self.variables, {e: -c for e, c in self.terms.items()})

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
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return _from_clean(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative int exponent required")
        result, base = MPoly.constant(1, self.variables), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, *args, **kwargs):
        """Evaluate; values by position or by variable name. Works over any ring."""
        if args and kwargs:
            raise TypeError("give values either by position or by name")
        if kwargs:
            args = tuple(kwargs[v] for v in self.variables)
        if len(args) != len(self.variables):
            raise ValueError("wrong number of values")
        total = 0
        for exps, c in self.terms.items():
            mono = c
            for value, k in zip(args, exps):
                if k:
                    mono = mono * value**k
            total = total + mono
        return total

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = MPoly.constant(other, self.variables)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in the canonical lexicographic order, highest first."""
        return sorted(self.terms.items(), reverse=True)

    def to_json(self):
        return {
            "variables": list(self.variables),
            "terms": [[list(e), rational_str(c)] for e, c in self.sorted_terms()],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exps) if k
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{rational_str(mag)}*{mono}"
            else:
                body = rational_str(mag)
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f"{sign} {body}"))
        return " ".join(parts)

    def __repr__(self):
        return f"MPoly({self.variables!r}, '{self}')"


def _from_clean(variables, terms):
    obj = MPoly.__new__(MPoly)
    obj.variables = variables
    obj.terms = terms
    return obj
