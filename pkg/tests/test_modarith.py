import random
from math import gcd

import pytest

from twistknot.modarith import (CoeffQuadruple, coeff_quadruple,
                                coeff_quadruple_bruteforce, family_quadruple,
                                parallel_pq, trace_arc_slots, verify_quadruple)


@pytest.mark.parametrize("p0,q0,expected", [
    (11, 6, (9, 2, 5, 1)),
    (5, 3, (3, 2, 2, 1)),
    (3, 2, (1, 2, 1, 1)),
    (9, 5, (7, 2, 4, 1)),
])
def test_coeff_quadruple_known_values(p0, q0, expected):
    quad = coeff_quadruple(p0, q0)
    assert (quad.a, quad.b, quad.c, quad.d) == expected
    assert quad == coeff_quadruple_bruteforce(p0, q0)


@pytest.mark.parametrize("p0,q0", [(4, 2), (6, 3), (9, 6)])
def test_coeff_quadruple_rejects_non_coprime(p0, q0):
    with pytest.raises(ValueError):
        coeff_quadruple(p0, q0)


@pytest.mark.parametrize("p0,q0", [(5, 1), (1, 5), (2, 1)])
def test_coeff_quadruple_rejects_degenerate(p0, q0):
    with pytest.raises(ValueError):
        coeff_quadruple(p0, q0)


def test_solver_matches_scan_below_thirty():
    for p0 in range(3, 31):
        for q0 in range(2, p0):
            if gcd(p0, q0) == 1:
                assert coeff_quadruple(p0, q0) == coeff_quadruple_bruteforce(p0, q0)


def test_quadruple_allows_q0_above_p0():
    quad = coeff_quadruple(5, 7)
    assert verify_quadruple(quad)
    assert quad.a + quad.b == 5 and quad.c + quad.d == 7


def test_verify_quadruple_rejects_shuffles():
    assert verify_quadruple(CoeffQuadruple(11, 6, 9, 2, 5, 1))
    assert not verify_quadruple(CoeffQuadruple(11, 6, 2, 9, 5, 1))
    assert not verify_quadruple(CoeffQuadruple(11, 6, 9, 2, 1, 5))


def test_parallel_pq_examples():
    assert parallel_pq(coeff_quadruple(9, 5), 2, 3) == (20, 11)
    assert parallel_pq(coeff_quadruple(3, 2), 1, 1) == (3, 2)
    p, q = parallel_pq(coeff_quadruple(11, 6), 2, 3)
    assert (p, q) == (24, 13) and gcd(p, q) == 1


def test_parallel_pq_rejects_nonpositive():
    quad = coeff_quadruple(5, 3)
    with pytest.raises(ValueError):
        parallel_pq(quad, 0, 2)
    with pytest.raises(ValueError):
        parallel_pq(quad, 2, -1)


def test_gcd_law_randomized():
    rng = random.Random(417)
    done = 0
    while done < 200:
        p0, q0 = rng.randrange(2, 50), rng.randrange(2, 50)
        if gcd(p0, q0) != 1:
            continue
        x1, x2 = rng.randrange(1, 15), rng.randrange(1, 15)
        p, q = parallel_pq(coeff_quadruple(p0, q0), x1, x2)
        assert gcd(p, q) == gcd(x1, x2)
        done += 1


def test_trace_arc_slots_known_values():
    part = trace_arc_slots(11, 6)
    assert part.s1 == (10, 5, 0, 6, 1, 7, 2, 8, 3)
    assert part.s2 == (9, 4)
    part = trace_arc_slots(3, 2)
    assert part.s1 == (2,) and part.s2 == (1, 0)


def test_trace_partitions_and_matches_quadruple():
    for p0 in range(3, 20):
        for q0 in range(2, 18):
            if gcd(p0, q0) != 1:
                continue
            part = trace_arc_slots(p0, q0)
            quad = coeff_quadruple(p0, q0)
            assert sorted(part.s1 + part.s2) == list(range(p0))
            assert len(part.s1) == quad.a and len(part.s2) == quad.b


def test_trace_rejects_tiny():
    with pytest.raises(ValueError):
        trace_arc_slots(2, 3)


@pytest.mark.parametrize("e,k1,k2,pair,expected", [
    (1, 3, 2, (11, 6), (9, 2, 5, 1)),
    (1, 2, 2, (9, 5), (7, 2, 4, 1)),
    (2, 2, 3, (16, 11), (13, 3, 9, 2)),
])
def test_family_quadruple_values(e, k1, k2, pair, expected):
    quad = family_quadruple(e, k1, k2)
    assert (quad.p0, quad.q0) == pair
    assert (quad.a, quad.b, quad.c, quad.d) == expected
    assert quad == coeff_quadruple(*pair)


def test_family_quadruple_matches_solver_on_grid():
    for e in range(1, 5):
        for k1 in range(2, 6):
            for k2 in range(2, 6):
                quad = family_quadruple(e, k1, k2)
                assert quad == coeff_quadruple(quad.p0, quad.q0)


def test_family_quadruple_bounds():
    with pytest.raises(ValueError):
        family_quadruple(0, 2, 2)
    with pytest.raises(ValueError):
        family_quadruple(1, 1, 2)
