"""Parameter families of twisted torus knots and their verification.

A family instance (e, k1, k2, x1, x2) describes the parallelization,
with x1 and x2 parallel copies of the two closure arcs, of the
composite twisted torus knot whose base parameters are

    p0 = (e+1)(k1+k2) + 1,   q0 = e(k1+k2) + 1,   r0 = p0 - k1,  s0 = -1.

The derived knot T(p, q; r, -1) has an x1-string tangle decomposition
obtained by fusing a torus knot and a torus link; its exterior contains
an essential torus whose companion is a small torus knot.  Everything
arithmetic or polynomial about this picture is checked computationally
here; the essentiality statements themselves are theorem inputs and are
reported as such, never recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import braid
from .alexander import alexander_from_braid, equal_up_to_units, DEFAULT_PRIMES
from .modarith import family_quadruple


class OracleBudgetError(RuntimeError):
    """More Alexander computations were required than the budget allows."""


@dataclass(frozen=True)
class FamilyParams:
    e: int
    k1: int
    k2: int
    x1: int
    x2: int

    def __post_init__(self):
        if self.e < 1 or self.k1 < 2 or self.k2 < 2:
            raise ValueError(f"need e > 0 and k1, k2 > 1, got "
                             f"({self.e}, {self.k1}, {self.k2})")
        if self.x1 < 1 or self.x2 < 1:
            raise ValueError(f"need x1, x2 > 0, got ({self.x1}, {self.x2})")
        if gcd(self.x1, self.x2) != 1:
            raise ValueError(f"x1, x2 must be coprime, got ({self.x1}, {self.x2})")

    def as_dict(self) -> dict:
        return {"e": self.e, "k1": self.k1, "k2": self.k2,
                "x1": self.x1, "x2": self.x2}


@dataclass(frozen=True)
class TwistedTorusParams:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if not (self.p > self.r > 1):
            raise ValueError(f"need p > r > 1, got p={self.p}, r={self.r}")
        if self.q <= 0:
            raise ValueError(f"need q > 0, got {self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) not coprime")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}


@dataclass(frozen=True)
class FusionDescription:
    """The two fusion factors and the companion of the essential torus.

    ``factor_knot`` and ``companion`` are coprime torus-knot parameter
    pairs; ``factor_link`` has gcd x1 (a torus link for x1 > 1), so no
    polynomial is ever attached to it.
    """

    strings: int
    factor_knot: tuple[int, int]
    factor_link: tuple[int, int]
    companion: tuple[int, int]

    def as_dict(self) -> dict:
        return {"strings": self.strings,
                "factor_knot": list(self.factor_knot),
                "factor_link": list(self.factor_link),
                "companion": list(self.companion)}


@dataclass(frozen=True)
class CableDescription:
    k: int
    cable: tuple[int, int]
    companion: tuple[int, int]
    degenerate: bool = False

    def as_dict(self) -> dict:
        return {"k": self.k, "cable": list(self.cable),
                "companion": list(self.companion), "degenerate": self.degenerate}


@dataclass(frozen=True)
class CompositeBase:
    """Base twisted torus knot that is a connected sum of two torus knots."""

    base: TwistedTorusParams
    factor1: tuple[int, int]
    factor2: tuple[int, int]

    def as_dict(self) -> dict:
        return {"base": self.base.as_dict(),
                "factor1": list(self.factor1), "factor2": list(self.factor2)}


def twisted_params(fp: FamilyParams) -> TwistedTorusParams:
    """Parameters of the parallelized knot."""
    e, k1, k2, x1, x2 = fp.e, fp.k1, fp.k2, fp.x1, fp.x2
    k = k1 + k2
    p = ((e + 1) * (k - 1) + 1) * x1 + (e + 1) * x2
    q = (e * (k - 1) + 1) * x1 + e * x2
    r = ((e + 1) * (k - 1) - k1 + 2) * x1 + e * x2
    return TwistedTorusParams(p, q, r, -1)


def fusion_description(fp: FamilyParams) -> FusionDescription:
    e, k1, k2, x1, x2 = fp.e, fp.k1, fp.k2, fp.x1, fp.x2
    knot_p = (k1 - 1) * x1 + x2
    return FusionDescription(
        strings=x1,
        factor_knot=(knot_p, e * knot_p + x1),
        factor_link=(k2 * x1, -((e + 1) * k2 + 1) * x1),
        companion=(k2, -(e + 1) * k2 - 1),
    )


def composite_base(e: int, k1: int, k2: int) -> CompositeBase:
    """Base knot of a family and its two connected-sum factors."""
    quad = family_quadruple(e, k1, k2)  # validates e, k1, k2
    p0, q0 = quad.p0, quad.q0
    return CompositeBase(
        base=TwistedTorusParams(p0, q0, p0 - k1, -1),
        factor1=(k1, e * k1 + 1),
        factor2=(k2, -(e + 1) * k2 - 1),
    )


def reduce_to_composite(fp: FamilyParams) -> tuple[int, int]:
    """Fold x2 into k1 when x1 = 1.

    A single-copy first arc means the knot is itself a composite base:
    twisted_params(fp) equals composite_base(e, k1 + x2 - 1, k2).base.
    """
    if fp.x1 != 1:
        raise ValueError(f"reduction needs x1 = 1, got x1 = {fp.x1}")
    return fp.k1 + fp.x2 - 1, fp.k2


def cable_detect(tp: TwistedTorusParams) -> CableDescription | None:
    """Cable structure present exactly when q divides r.

    Then the knot is the (q, p + k^2*q*s)-cable over the torus knot
    (k, k*s + 1) with k = r/q.  k = 1 is reported but flagged
    degenerate: its companion is the unknot.
    """
    if tp.r % tp.q != 0:
        return None
    k = tp.r // tp.q
    return CableDescription(
        k=k,
        cable=(tp.q, tp.p + k * k * tp.q * tp.s),
        companion=(k, k * tp.s + 1),
        degenerate=(k == 1),
    )


def family_membership(tp: TwistedTorusParams, *, max_e: int = 4,
                      max_k: int = 6, max_x: int = 6) -> list[FamilyParams]:
    """Exhaustive search for family parameters deriving to tp."""
    if tp.s != -1:
        return []
    found = []
    for e in range(1, max_e + 1):
        for k1 in range(2, max_k + 1):
            for k2 in range(2, max_k + 1):
                for x1 in range(1, max_x + 1):
                    for x2 in range(1, max_x + 1):
                        if gcd(x1, x2) != 1:
                            continue
                        fp = FamilyParams(e, k1, k2, x1, x2)
                        if twisted_params(fp).as_tuple() == tp.as_tuple():
                            found.append(fp)
    return found


def construction_braid(fp: FamilyParams) -> braid.BraidWord:
    """Parallelized braid of the family's composite base."""
    cb = composite_base(fp.e, fp.k1, fp.k2)
    p0, q0, r0, s0 = cb.base.as_tuple()
    base_word = braid.twisted_torus_braid(p0, q0, r0, s0)
    return braid.parallelize(base_word, fp.x1, fp.x2, twist_region=(r0, s0))


@dataclass
class Check:
    name: str
    status: str          # "pass" | "fail" | "cited"
    detail: str
    evidence: str        # "computed" | "cited-theorem"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status,
                "detail": self.detail, "evidence": self.evidence}


@dataclass
class VerificationReport:
    family: FamilyParams
    derived: TwistedTorusParams
    base: TwistedTorusParams
    fusion: FusionDescription
    components: dict
    alexander_match: bool
    checks: list[Check] = field(default_factory=list)
    verdict: str = "failed"

    def as_dict(self) -> dict:
        return {
            "family": self.family.as_dict(),
            "derived": self.derived.as_dict(),
            "base": self.base.as_dict(),
            "fusion": self.fusion.as_dict(),
            "components": self.components,
            "alexander_match": self.alexander_match,
            "checks": [c.as_dict() for c in self.checks],
            "verdict": self.verdict,
        }


def verify_family_instance(fp: FamilyParams, oracle_budget: int = 4,
                           primes: tuple[int, int] = DEFAULT_PRIMES,
                           backend: str | None = None) -> VerificationReport:
    """Check everything computable about one family instance.

    Builds the parallelized braid of the composite base and the direct
    braid of the derived parameters, compares component counts and
    Alexander polynomials, and verifies the arithmetic identities.  The
    two Alexander computations each consume one unit of the oracle
    budget; an insufficient budget raises OracleBudgetError rather than
    silently skipping the comparison.
    """
    needed = 2
    if oracle_budget < needed:
        raise OracleBudgetError(
            f"verification needs {needed} Alexander computations, "
            f"budget allows {oracle_budget}")

    derived = twisted_params(fp)
    cb = composite_base(fp.e, fp.k1, fp.k2)
    fusion = fusion_description(fp)
    checks: list[Check] = []

    constructed = construction_braid(fp)
    direct = braid.twisted_torus_braid(*derived.as_tuple())

    strands_ok = constructed.strands == derived.p
    checks.append(Check(
        "strand-count", "pass" if strands_ok else "fail",
        f"parallelized braid has {constructed.strands} strands, derived p = {derived.p}",
        "computed"))

    comp_c = braid.component_count(constructed)
    comp_d = braid.component_count(direct)
    comps_ok = comp_c == 1 and comp_d == 1
    checks.append(Check(
        "knot-closures", "pass" if comps_ok else "fail",
        f"components: constructed {comp_c}, direct {comp_d}", "computed"))

    alexander_match = False
    if comps_ok:
        poly_c = alexander_from_braid(constructed, primes=primes, backend=backend)
        poly_d = alexander_from_braid(direct, primes=primes, backend=backend)
        alexander_match = equal_up_to_units(poly_c, poly_d)
    checks.append(Check(
        "alexander-match", "pass" if alexander_match else "fail",
        "construction and direct braid have equal canonical Alexander polynomials"
        if alexander_match else "polynomials differ or closures were not knots",
        "computed"))

    r_ok = derived.r == derived.p - ((fp.k1 - 1) * fp.x1 + fp.x2)
    checks.append(Check(
        "twist-width-identity", "pass" if r_ok else "fail",
        f"r = p - ((k1-1)*x1 + x2) gives {derived.p - ((fp.k1 - 1) * fp.x1 + fp.x2)}, "
        f"derived r = {derived.r}", "computed"))

    checks.append(Check(
        "tangle-essentiality", "cited",
        f"the {fp.x1}-string tangle decomposition is essential; theorem input, "
        "not recomputed here (see the tangles module for the certificates)",
        "cited-theorem"))
    checks.append(Check(
        "essential-torus", "cited",
        f"exterior contains an essential torus with companion "
        f"T{fusion.companion}; theorem input", "cited-theorem"))

    verdict = ("verified" if all(c.status == "pass" for c in checks
                                 if c.evidence == "computed") else "failed")
    return VerificationReport(
        family=fp, derived=derived, base=cb.base, fusion=fusion,
        components={"constructed": comp_c, "direct": comp_d},
        alexander_match=alexander_match, checks=checks, verdict=verdict)
