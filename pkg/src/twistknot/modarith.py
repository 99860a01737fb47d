"""Residue bookkeeping for coprime torus parameters.

Cutting a closed (p0, q0) torus braid along its two rightmost strands
splits the knot into two arcs.  Their pass counts through the braid are
the unique positive integers a, b with

    a + b = p0,   a*q0 === -1 (mod p0),   b*q0 === +1 (mod p0),

and the companion pair c, d satisfies c + d = q0, c*p0 === +1 and
d*p0 === -1 (mod q0).  The quadruple always has determinant
a*d - b*c = -1.  Replacing the arcs with x1 and x2 parallel copies
produces the pair

    p = a*x1 + b*x2,   q = c*x1 + d*x2,     gcd(p, q) = gcd(x1, x2).

All functions are pure and operate on immutable values; concurrent use
is safe.  The brute-force solvers are shipped alongside the closed
forms on purpose: they are the independent oracle for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CoeffQuadruple:
    """The unique quadruple (a, b, c, d) attached to a coprime pair."""

    p0: int
    q0: int
    a: int
    b: int
    c: int
    d: int

    def as_dict(self) -> dict:
        return {"p0": self.p0, "q0": self.q0, "a": self.a, "b": self.b,
                "c": self.c, "d": self.d}


@dataclass(frozen=True)
class SlotPartition:
    """Visit orders of the two cut arcs over the slots 0..p0-1.

    ``s1`` starts at slot p0-1 and ``s2`` at slot p0-2; together they
    partition {0, ..., p0-1}.  Slot 0 is the leftmost strand.
    """

    p0: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"p0": self.p0, "s1": list(self.s1), "s2": list(self.s2)}


def _check_pair(p0: int, q0: int) -> None:
    if p0 < 2 or q0 < 2:
        raise ValueError(
            f"need p0 >= 2 and q0 >= 2, got ({p0}, {q0}); "
            "the positive residue system degenerates below that")
    if gcd(p0, q0) != 1:
        raise ValueError(f"({p0}, {q0}) are not coprime")


def coeff_quadruple(p0: int, q0: int) -> CoeffQuadruple:
    """Solve the congruence system for a coprime pair directly."""
    _check_pair(p0, q0)
    a = (-pow(q0, -1, p0)) % p0
    b = p0 - a
    c = pow(p0, -1, q0)
    d = q0 - c
    quad = CoeffQuadruple(p0, q0, a, b, c, d)
    assert verify_quadruple(quad)
    return quad


def coeff_quadruple_bruteforce(p0: int, q0: int) -> CoeffQuadruple:
    """Scan all residues for the solution; the independent oracle.

    Returns the unique quadruple, raising if none or more than one
    candidate survives the full set of congruences.
    """
    _check_pair(p0, q0)
    found = []
    for a in range(1, p0):
        b = p0 - a
        if (a * q0) % p0 != p0 - 1 or (b * q0) % p0 != 1:
            continue
        for c in range(1, q0):
            d = q0 - c
            if (c * p0) % q0 != 1 or (d * p0) % q0 != q0 - 1:
                continue
            found.append(CoeffQuadruple(p0, q0, a, b, c, d))
    if len(found) != 1:
        raise ArithmeticError(
            f"expected exactly one quadruple for ({p0}, {q0}), found {len(found)}")
    return found[0]


def verify_quadruple(quad: CoeffQuadruple) -> bool:
    """Check every defining property of a quadruple."""
    p0, q0, a, b, c, d = quad.p0, quad.q0, quad.a, quad.b, quad.c, quad.d
    if not (0 < a < p0 and 0 < b < p0 and 0 < c < q0 and 0 < d < q0):
        return False
    return (a + b == p0 and c + d == q0
            and (a * q0) % p0 == p0 - 1 and (b * q0) % p0 == 1
            and (c * p0) % q0 == 1 and (d * p0) % q0 == q0 - 1
            and a * d - b * c == -1)


def parallel_pq(quad: CoeffQuadruple, x1: int, x2: int) -> tuple[int, int]:
    """Parameters of the parallelized pair: (a*x1 + b*x2, c*x1 + d*x2)."""
    if x1 < 1 or x2 < 1:
        raise ValueError(f"multiplicities must be positive, got ({x1}, {x2})")
    return quad.a * x1 + quad.b * x2, quad.c * x1 + quad.d * x2


def trace_arc_slots(p0: int, q0: int) -> SlotPartition:
    """Trace the two cut arcs slot by slot.

    Walks the closure step i -> (i + q0) mod p0: the first arc enters at
    slot p0-1 and runs until it would exit at p0-2, the second arc the
    other way round.  The walk is the ground truth; the sizes are
    checked against the congruence solution afterwards.
    """
    _check_pair(p0, q0)
    if p0 <= 2:
        raise ValueError(f"tracing needs p0 > 2, got {p0}")
    quad = coeff_quadruple(p0, q0)

    def walk(start: int, stop: int) -> tuple[int, ...]:
        slots = [start]
        x = (start + q0) % p0
        while x != stop:
            slots.append(x)
            x = (x + q0) % p0
        return tuple(slots)

    s1 = walk(p0 - 1, p0 - 2)
    s2 = walk(p0 - 2, p0 - 1)
    if len(s1) != quad.a or len(s2) != quad.b:
        raise ArithmeticError(
            f"arc sizes ({len(s1)}, {len(s2)}) disagree with ({quad.a}, {quad.b})")
    return SlotPartition(p0, s1, s2)


def family_quadruple(e: int, k1: int, k2: int) -> CoeffQuadruple:
    """Closed-form quadruple for the pair p0 = (e+1)(k1+k2)+1, q0 = e(k1+k2)+1.

    This is the base pair of the composite twisted torus knots; the
    closed forms a = (e+1)(k1+k2-1)+1, b = e+1, c = e(k1+k2-1)+1, d = e
    must agree with :func:`coeff_quadruple` (tested on a grid).
    """
    if e < 1 or k1 < 2 or k2 < 2:
        raise ValueError(f"need e >= 1 and k1, k2 >= 2, got ({e}, {k1}, {k2})")
    k = k1 + k2
    quad = CoeffQuadruple(
        p0=(e + 1) * k + 1,
        q0=e * k + 1,
        a=(e + 1) * (k - 1) + 1,
        b=e + 1,
        c=e * (k - 1) + 1,
        d=e,
    )
    assert verify_quadruple(quad)
    return quad
