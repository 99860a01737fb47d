from math import gcd

import pytest

from twistknot.families import (CompositeBase, FamilyParams, OracleBudgetError,
                                TwistedTorusParams, cable_detect,
                                composite_base, construction_braid,
                                family_membership, fusion_description,
                                reduce_to_composite, twisted_params,
                                verify_family_instance)


def test_family_params_validation():
    FamilyParams(1, 2, 2, 2, 3)
    with pytest.raises(ValueError):
        FamilyParams(0, 2, 2, 1, 1)
    with pytest.raises(ValueError):
        FamilyParams(1, 1, 2, 1, 1)
    with pytest.raises(ValueError):
        FamilyParams(1, 2, 2, 2, 4)   # x1, x2 not coprime


def test_twisted_params_flagship_values():
    assert twisted_params(FamilyParams(1, 2, 2, 2, 3)).as_tuple() == (20, 11, 15, -1)
    assert twisted_params(FamilyParams(1, 2, 2, 2, 1)).as_tuple() == (16, 9, 13, -1)
    assert twisted_params(FamilyParams(1, 2, 2, 3, 1)).as_tuple() == (23, 13, 19, -1)


def test_twisted_params_invariants_on_grid():
    for e in (1, 2):
        for k1 in (2, 3):
            for k2 in (2, 3):
                for x1 in (1, 2, 3):
                    for x2 in (1, 2, 3):
                        if gcd(x1, x2) != 1:
                            continue
                        fp = FamilyParams(e, k1, k2, x1, x2)
                        tp = twisted_params(fp)   # constructor revalidates
                        assert tp.p > tp.r > 1 and tp.q > 0
                        assert gcd(tp.p, tp.q) == 1
                        assert tp.p - tp.r == (k1 - 1) * x1 + x2


def test_fusion_description_values():
    fd = fusion_description(FamilyParams(1, 2, 2, 2, 3))
    assert fd.strings == 2
    assert fd.factor_knot == (5, 7)
    assert fd.factor_link == (4, -10)
    assert fd.companion == (2, -5)
    fd = fusion_description(FamilyParams(1, 2, 2, 2, 1))
    assert fd.factor_knot == (3, 5) and fd.factor_link == (4, -10)
    fd = fusion_description(FamilyParams(2, 3, 4, 1, 1))
    assert fd.factor_knot == (3, 2 * 3 + 1)
    assert fd.companion == (4, -3 * 4 - 1)
    assert gcd(*fd.factor_knot) == 1
    assert gcd(*fd.factor_link) == 1  # x1 = 1 here


def test_fusion_factor_link_gcd_is_x1():
    fd = fusion_description(FamilyParams(1, 3, 2, 4, 3))
    assert gcd(fd.factor_link[0], abs(fd.factor_link[1])) == 4


def test_composite_base_values():
    cb = composite_base(1, 3, 2)
    assert cb.base.as_tuple() == (11, 6, 8, -1)
    assert cb.factor1 == (3, 4) and cb.factor2 == (2, -5)
    cb = composite_base(1, 2, 2)
    assert cb.base.as_tuple() == (9, 5, 7, -1)
    assert cb.factor1 == (2, 3) and cb.factor2 == (2, -5)
    cb = composite_base(2, 2, 3)
    assert cb.base.as_tuple() == (16, 11, 14, -1)
    assert cb.factor1 == (2, 5) and cb.factor2 == (3, -10)


def test_reduce_to_composite():
    fp = FamilyParams(1, 2, 2, 1, 3)
    assert reduce_to_composite(fp) == (4, 2)
    assert twisted_params(fp) == composite_base(1, 4, 2).base
    assert twisted_params(fp).as_tuple() == (13, 7, 9, -1)
    assert reduce_to_composite(FamilyParams(2, 3, 4, 1, 1)) == (3, 4)
    fp = FamilyParams(2, 3, 2, 1, 2)
    assert reduce_to_composite(fp) == (4, 2)
    assert twisted_params(fp) == composite_base(2, 4, 2).base
    with pytest.raises(ValueError):
        reduce_to_composite(FamilyParams(1, 2, 2, 2, 1))


def test_reduce_route_equality_grid():
    for e in range(1, 4):
        for k1 in range(2, 5):
            for k2 in range(2, 5):
                for x2 in range(1, 5):
                    fp = FamilyParams(e, k1, k2, 1, x2)
                    k1p, k2p = reduce_to_composite(fp)
                    assert twisted_params(fp) == composite_base(e, k1p, k2p).base


def test_cable_detect():
    desc = cable_detect(TwistedTorusParams(7, 3, 6, 1))
    assert desc is not None
    assert desc.k == 2 and desc.cable == (3, 19) and desc.companion == (2, 3)
    assert not desc.degenerate
    assert cable_detect(TwistedTorusParams(20, 11, 15, -1)) is None
    deg = cable_detect(TwistedTorusParams(7, 3, 3, 1))
    assert deg is not None and deg.k == 1 and deg.degenerate
    assert deg.companion == (1, 2) and deg.cable == (3, 10)


def test_cable_detect_presence_matches_divisibility():
    for p, q, r, s in [(7, 3, 6, 1), (11, 4, 8, -1), (9, 5, 4, 2), (9, 4, 6, 1)]:
        tp = TwistedTorusParams(p, q, r, s)
        assert (cable_detect(tp) is not None) == (r % q == 0)


def test_family_membership():
    hits = family_membership(TwistedTorusParams(20, 11, 15, -1),
                             max_e=5, max_k=5, max_x=5)
    assert FamilyParams(1, 2, 2, 2, 3) in hits
    hits = family_membership(TwistedTorusParams(16, 9, 13, -1),
                             max_e=5, max_k=5, max_x=5)
    assert FamilyParams(1, 2, 2, 2, 1) in hits
    assert family_membership(TwistedTorusParams(7, 3, 6, 1),
                             max_e=5, max_k=5, max_x=5) == []


def test_family_membership_contains_self():
    for e in (1, 2):
        for k1 in (2, 3):
            for k2 in (2, 3):
                for x1, x2 in [(1, 1), (1, 2), (2, 1), (2, 3)]:
                    fp = FamilyParams(e, k1, k2, x1, x2)
                    assert fp in family_membership(
                        twisted_params(fp), max_e=2, max_k=3, max_x=3)


def test_construction_braid_strand_count():
    fp = FamilyParams(1, 2, 2, 2, 3)
    assert construction_braid(fp).strands == 20


def test_verify_trivial_parallelization():
    report = verify_family_instance(FamilyParams(1, 2, 2, 1, 1))
    assert report.verdict == "verified"
    assert report.alexander_match
    assert report.derived.as_tuple() == report.base.as_tuple() == (9, 5, 7, -1)
    assert report.components == {"constructed": 1, "direct": 1}
    evidence = {c.evidence for c in report.checks}
    assert evidence == {"computed", "cited-theorem"}


def test_verify_budget_enforced():
    with pytest.raises(OracleBudgetError):
        verify_family_instance(FamilyParams(1, 2, 2, 1, 1), oracle_budget=1)


def test_report_serialization_shape():
    report = verify_family_instance(FamilyParams(1, 2, 2, 1, 1))
    data = report.as_dict()
    assert set(data) == {"family", "derived", "base", "fusion", "components",
                         "alexander_match", "checks", "verdict"}
    assert all(set(c) == {"name", "status", "detail", "evidence"}
               for c in data["checks"])


def test_composite_base_type():
    assert isinstance(composite_base(1, 2, 2), CompositeBase)
