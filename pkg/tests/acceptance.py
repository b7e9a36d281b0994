"""One function per acceptance criterion, each returning an Outcome.

Shared by tests/test_acceptance.py and ``python tests/acceptance.py``.
"""
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from equiareal import known
from equiareal.elliptic import (
    add,
    curve_from_solution,
    double,
    family_points,
    negate,
    torsion_classify,
)
from equiareal.heights import (
    HeightContext,
    RelationSet,
    basis_analysis,
    canonical_height,
    gusic_tadic_check,
    naive_doubling_estimate,
    regulator,
    starred_generators,
    verify_relations,
)
from equiareal.octic import sol1, triangle_pair
from equiareal.suites import e2_data, run_suite

RESULTS = {}


@dataclass
class Outcome:
    number: int
    title: str
    parts: dict = field(default_factory=dict)  # name -> (passed, detail)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(ok for ok, _ in self.parts.values())

    def failing(self):
        return {k: d for k, (ok, d) in self.parts.items() if not ok}

    def line(self):
        verdict = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else "; failing: " + ", ".join(f"{k} ({d})" for k, d in self.failing().items())
        return f"criterion {self.number} [{verdict}] {self.title} ({self.seconds:.1f}s){extra}"


def _record(number, title):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            out = Outcome(number, title)
            fn(out.parts)
            out.seconds = time.perf_counter() - start
            RESULTS[number] = out
            return out

        run.__name__ = fn.__name__
        return run

    return wrap


def rel(a, b):
    return abs(mpmath.mpf(a) - mpmath.mpf(b)) / abs(mpmath.mpf(b))


@_record(1, "symbolic identity suite, zero residuals")
def criterion_1(parts):
    start = time.perf_counter()
    checks = run_suite("octic") + run_suite("elliptic")
    for c in checks:
        parts[c.name] = (c.passed, c.detail)
    elapsed = time.perf_counter() - start
    parts["runtime < 30 s"] = (elapsed < 30, f"{elapsed:.1f}s")


@_record(2, "triangle reproduction at t = 4 and t = 3/2")
def criterion_2(parts):
    p = triangle_pair("sol1", 4)
    parts["t=4 sides"] = ((p.roots_x, p.roots_y) == known.T4_ROOTS, str(p.roots_x))
    parts["t=4 16A^2"] = (p.sixteen_area_sq == known.T4_SIXTEEN_AREA_SQ, str(p.sixteen_area_sq))
    parts["t=4 irrational area"] = (not p.rational_area, "")
    q = triangle_pair("sol2", Fraction(3, 2))
    parts["t=3/2 sides"] = ((q.roots_x, q.roots_y) == known.T3_2_ROOTS, str(q.roots_x))


@_record(3, "curve and point golden values")
def criterion_3(parts):
    curve, pts = curve_from_solution(sol1(4))
    parts["t=4 a4"] = (curve.a4 == known.T4_A4, str(curve.a4))
    parts["t=4 points"] = ([(p.x, p.y) for p in pts] == [(Fraction(x), Fraction(y)) for x, y in known.T4_POINTS], "")
    e2, P, G = e2_data()
    parts["E2 A4"] = (e2.a4 == known.E2_A4, str(e2.a4))
    parts["E2 points"] = (family_points(2) == P, "")
    parts["E2 generators on curve"] = (all(g.on_curve() for g in G), "")
    parts["E2 torsion"] = (torsion_classify(e2) == known.E2_TORSION, torsion_classify(e2))


@_record(4, "regulators within 1e-6 relative at 192 bits")
def criterion_4(parts):
    for label, (curve, pts), target in (
        ("t=4 sol1", curve_from_solution(sol1(4)), known.T4_REGULATOR),
        ("E2", e2_data()[:2], known.E2_REGULATOR),
    ):
        start = time.perf_counter()
        r = regulator(HeightContext(curve, prec=192), pts)
        elapsed = time.perf_counter() - start
        err = rel(r.regulator.value, target)
        parts[f"{label} regulator"] = (err < 1e-6, f"{mpmath.nstr(r.regulator.value, 18)} rel err {mpmath.nstr(err, 3)}")
        parts[f"{label} runtime < 60 s"] = (elapsed < 60, f"{elapsed:.1f}s")


@_record(5, "relations and bases on E2")
def criterion_5(parts):
    curve, P, G = e2_data()
    rel_set = RelationSet.from_rows(known.E2_RELATIONS)
    parts["five relations"] = (all(verify_relations(rel_set, G, P)), "")
    a = basis_analysis(rel_set)
    parts["det 4, index 4"] = (a.det == 4 and a.index == 4 and not a.unimodular, f"det {a.det}")
    starred = RelationSet.from_rows(known.E2_STARRED_RELATIONS)
    b = basis_analysis(starred)
    parts["starred det +-1"] = (b.unimodular, f"det {b.det}")
    p2s, p4s, p5s = starred_generators(P, G[0], G[1])
    parts["starred relations"] = (all(verify_relations(starred, G, [P[0], p2s, P[2], p4s, p5s])), "")
    ctx = HeightContext(curve)
    rp, rg = regulator(ctx, P).regulator.value, regulator(ctx, G).regulator.value
    parts["R(P) = 16 R(G)"] = (rel(rp, 16 * rg) < 1e-4, f"ratio {mpmath.nstr(rp / rg, 12)}")


@_record(6, "Gusic-Tadic: pass at t = 2, fail at t = 0, full table")
def criterion_6(parts):
    r2 = gusic_tadic_check(2)
    squares = ", ".join(f"{d.label}={d.value}" for d in r2.squares)
    parts["t=2 passes"] = (r2.passed, f"square divisors: {squares}" if squares else "")
    r0 = gusic_tadic_check(0)
    h4 = any(d.factors == ("h4",) and d.constant == 1 and d.value == 4 for d in r0.squares)
    parts["t=0 fails on h4 = 4"] = (not r0.passed and h4, "")
    parts["full table emitted"] = (len(r2.divisors) == len(r0.divisors) == 1008, f"{len(r2.divisors)} divisors")


@_record(7, "property suites")
def criterion_7(parts):
    curve, P, G = e2_data()
    ctx = HeightContext(curve)
    t4_curve, t4_pts = curve_from_solution(sol1(4))
    t4_ctx = HeightContext(t4_curve)
    a, b, c = P[0], G[1], P[3]
    group = add(add(a, b), c) == add(a, add(b, c)) and add(a, b) == add(b, a) and add(a, negate(a)).is_infinity
    parts["group law axioms"] = (group, "")
    hs = {}

    def h(q, cx=ctx):
        key = (id(cx), q.x, q.y)
        if key not in hs:
            hs[key] = canonical_height(cx, q)
        return hs[key]

    worst_quad = max(abs(h(double(q)).value - 4 * h(q).value) - 5 * h(q).error - h(double(q)).error for q in P + G)
    parts["quadraticity"] = (worst_quad <= 0, "")
    para = abs(h(add(a, b)).value + h(add(a, negate(b))).value - 2 * h(a).value - 2 * h(b).value)
    parts["parallelogram"] = (para < 1e-40, mpmath.nstr(para, 3))
    misses = []
    for cx, pts, names in ((ctx, P + G, [f"E2 P{i}" for i in range(1, 6)] + [f"E2 G{i}" for i in range(1, 6)]), (t4_ctx, t4_pts, [f"t4 P{i}" for i in range(1, 6)])):
        for name, q in zip(names, pts):
            d = abs(naive_doubling_estimate(q, 4).value - h(q, cx).value)
            if d >= 1e-2:
                misses.append(f"{name} {mpmath.nstr(d, 3)}")
    parts["doubling estimate n=4 within 1e-2"] = (not misses, "; ".join(misses))
    parts["torsion height 0"] = (canonical_height(ctx, curve.point(0, 0)).value == 0, "")
    rt = regulator(ctx, P[:4] + [curve.point(0, 0)])
    parts["regulator 0 with torsion"] = (rt.regulator.value == 0, "")
    e1 = family_points(1)
    r1 = regulator(HeightContext(e1[0].curve), e1)
    parts["regulator 0 at t=1"] = (r1.regulator.value == 0, "")


@_record(8, "Table 1 scan: five independent points at all eleven t")
def criterion_8(parts):
    for t in [t for ts in known.HIGH_RANK_T.values() for t in ts]:
        pts = family_points(t)
        r = regulator(HeightContext(pts[0].curve), pts)
        parts[f"t={t}"] = (r.independent and r.regulator.value > 1e-4, mpmath.nstr(r.regulator.value, 10))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]

# parts that cannot hold; see the README section on the acceptance suite
EXPECTED_FAILURES = {
    6: {"t=2 passes"},
    7: {"doubling estimate n=4 within 1e-2"},
}


if __name__ == "__main__":
    for crit in CRITERIA:
        print(crit().line(), flush=True)
