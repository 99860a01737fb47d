"""The acceptance battery: every exit criterion as an executable check.

Each criterion returns a CriterionResult with the measured wall time;
a criterion passes only if its checks hold exactly (integer and
polynomial equality, no tolerances) and it finishes inside its stated
time limit.  ``run_all`` executes them in order; the CLI ``suite``
subcommand and the acceptance tests both run exactly this code.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd

from . import braid, modarith, tangles
from .alexander import (alexander_from_braid, canonical, compose_power,
                        equal_up_to_units, is_palindromic, product,
                        torus_alexander)
from .families import (FamilyParams, composite_base, reduce_to_composite,
                       twisted_params, verify_family_instance)

RANDOM_SEED = 20260810


@dataclass
class CriterionResult:
    ident: str
    description: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.ident} {status} ({self.seconds:.2f}s / limit {self.limit:.0f}s) "
                f"{self.description}: {self.detail}")


def _run(ident: str, description: str, limit: float, body) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # a crash is a failure, not an abort
        elapsed = time.perf_counter() - start
        return CriterionResult(ident, description, False, elapsed, limit,
                               f"raised {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        return CriterionResult(ident, description, False, elapsed, limit,
                               f"{detail}; exceeded time limit")
    return CriterionResult(ident, description, ok, elapsed, limit, detail)


def criterion_a1() -> CriterionResult:
    def body():
        pairs = 0
        for p0 in range(3, 61):
            for q0 in range(2, p0):
                if gcd(p0, q0) != 1:
                    continue
                pairs += 1
                quad = modarith.coeff_quadruple(p0, q0)
                if quad != modarith.coeff_quadruple_bruteforce(p0, q0):
                    return False, f"solver disagrees with scan at ({p0}, {q0})"
                if not (quad.a + quad.b == p0 and quad.c + quad.d == q0
                        and quad.a * quad.d - quad.b * quad.c == -1):
                    return False, f"identities fail at ({p0}, {q0})"
        return True, f"{pairs} coprime pairs, solver == brute force"
    return _run("A1", "coefficient solver vs exhaustive scan", 5.0, body)


def criterion_a2() -> CriterionResult:
    def body():
        count = 0
        for e in range(1, 5):
            for k1 in range(2, 6):
                for k2 in range(2, 6):
                    count += 1
                    closed = modarith.family_quadruple(e, k1, k2)
                    general = modarith.coeff_quadruple(closed.p0, closed.q0)
                    if closed != general:
                        return False, f"mismatch at ({e}, {k1}, {k2})"
        return True, f"{count} grid points, closed forms == solver"
    return _run("A2", "family closed forms vs general solver", 1.0, body)


def criterion_a3() -> CriterionResult:
    def body():
        rng = random.Random(RANDOM_SEED)
        done = 0
        while done < 200:
            p0 = rng.randrange(2, 61)
            q0 = rng.randrange(2, 61)
            if gcd(p0, q0) != 1:
                continue
            x1 = rng.randrange(1, 21)
            x2 = rng.randrange(1, 21)
            quad = modarith.coeff_quadruple(p0, q0)
            p, q = modarith.parallel_pq(quad, x1, x2)
            if gcd(p, q) != gcd(x1, x2):
                return False, f"gcd law fails at ({p0}, {q0}, {x1}, {x2})"
            done += 1
        braids = 0
        for p0 in range(3, 10):
            for q0 in range(2, p0):
                if gcd(p0, q0) != 1:
                    continue
                base = braid.torus_braid(p0, q0)
                for x1 in range(1, 4):
                    for x2 in range(1, 4):
                        braids += 1
                        got = braid.component_count(braid.parallelize(base, x1, x2))
                        if got != gcd(x1, x2):
                            return False, (f"component count {got} != gcd at "
                                           f"({p0}, {q0}, {x1}, {x2})")
        return True, f"200 random gcd-law tuples, {braids} parallelized closures"
    return _run("A3", "gcd law, arithmetic and braid closures", 60.0, body)


def criterion_a4() -> CriterionResult:
    def body():
        count = 0
        for p in range(2, 8):
            for q in range(p + 1, 14):
                if gcd(p, q) != 1:
                    continue
                count += 1
                got = alexander_from_braid(braid.torus_braid(p, q))
                want = torus_alexander(p, q)
                if got != want:
                    return False, f"oracle mismatch at T({p}, {q})"
                if abs(got.at_one()) != 1 or not is_palindromic(got):
                    return False, f"invariant violation at T({p}, {q})"
        return True, f"{count} torus knots, braid pipeline == closed form"
    return _run("A4", "Alexander oracle agreement on torus knots", 60.0, body)


def criterion_a5() -> CriterionResult:
    def body():
        for x2, name in ((1, "(16,9;13,-1)"), (3, "(20,11;15,-1)")):
            report = verify_family_instance(FamilyParams(1, 2, 2, 2, x2))
            if report.verdict != "verified":
                failed = [c.name for c in report.checks if c.status == "fail"]
                return False, f"instance x2={x2} against {name} failed: {failed}"
        return True, "both flagship instances verified, polynomials equal"
    return _run("A5", "parallelized construction vs direct braid", 300.0, body)


def criterion_a6() -> CriterionResult:
    def body():
        for e in (1, 2):
            for k1 in (2, 3):
                for k2 in (2, 3):
                    cb = composite_base(e, k1, k2)
                    whole = alexander_from_braid(
                        braid.twisted_torus_braid(*cb.base.as_tuple()))
                    factors = product(torus_alexander(k1, e * k1 + 1),
                                      torus_alexander(k2, (e + 1) * k2 + 1))
                    if not equal_up_to_units(whole, factors):
                        return False, f"factorization fails at ({e}, {k1}, {k2})"
        return True, "8 composite bases factor through their torus summands"
    return _run("A6", "connected-sum factorization of base knots", 180.0, body)


def criterion_a7() -> CriterionResult:
    def body():
        count = 0
        for e in range(1, 4):
            for k1 in range(2, 5):
                for k2 in range(2, 5):
                    for x2 in range(1, 5):
                        count += 1
                        fp = FamilyParams(e, k1, k2, 1, x2)
                        k1p, k2p = reduce_to_composite(fp)
                        if twisted_params(fp) != composite_base(e, k1p, k2p).base:
                            return False, f"routes differ at ({e}, {k1}, {k2}, 1, {x2})"
        return True, f"{count} single-copy instances, both routes agree"
    return _run("A7", "single-copy reduction route equality", 1.0, body)


def criterion_a8() -> CriterionResult:
    def body():
        word = braid.twisted_torus_braid(7, 3, 6, 1)
        got = alexander_from_braid(word)
        satellite = canonical(compose_power(torus_alexander(2, 3), 3)
                              * torus_alexander(3, 19))
        if got != satellite:
            return False, "cable polynomial disagrees with satellite formula"
        return True, "cable of T(2,3) with pattern (3,19) confirmed"
    return _run("A8", "cable structure vs satellite formula", 30.0, body)


def criterion_a9() -> CriterionResult:
    def body():
        arcs = classes = 0
        for p in range(3, 13):
            for q in range(p + 1, 14):
                if gcd(p, q) != 1:
                    continue
                spec2 = tangles.TangleSpec(p, q, 2)
                dec = tangles.tangle_arcs(spec2)
                arcs += 1
                n, m = divmod(q, p)
                if sum(a.passes for a in dec.arcs) != p:
                    return False, f"pass counts at ({p}, {q})"
                if sum(a.longitude for a in dec.arcs) != q:
                    return False, f"longitudes at ({p}, {q})"
                if not any(a.knotted for a in dec.arcs):
                    return False, f"no knotted arc at ({p}, {q})"
                for k in range(3, p):
                    cls = tangles.parallel_classes(tangles.TangleSpec(p, q, k))
                    classes += 1
                    if len(cls.classes) != 2 or sum(cls.sizes) != k:
                        return False, f"class structure at ({p}, {q}, {k})"
        return True, f"{arcs} arc decompositions, {classes} class partitions"
    return _run("A9", "tangle arc and parallel-class combinatorics", 30.0, body)


CRITERIA = (criterion_a1, criterion_a2, criterion_a3, criterion_a4,
            criterion_a5, criterion_a6, criterion_a7, criterion_a8,
            criterion_a9)


def run_all(only: set[str] | None = None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        ident = crit.__name__.rsplit("_", 1)[1].upper()
        if only and ident not in only:
            continue
        results.append(crit())
    return results
