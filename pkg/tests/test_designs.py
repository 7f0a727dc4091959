import itertools
import math

import pytest

from conftest import get_code
from jacweight.codes import BudgetExceeded, LinearCode
from jacweight.designs import (
    BlockMultiset,
    DesignReport,
    is_t_design,
    is_t_homogeneous,
    lambda_identity_holds,
    supports,
)
from jacweight.enumerators import cwe
from jacweight.rings import field_ring

F2 = field_ring(2)
F3 = field_ring(3)


def complete_design(n, k):
    return BlockMultiset(n, k, tuple(itertools.combinations(range(n), k)))


def test_block_validation():
    with pytest.raises(ValueError):
        BlockMultiset(4, 2, ((0, 0),))
    with pytest.raises(ValueError):
        BlockMultiset(4, 2, ((0, 4),))
    with pytest.raises(ValueError):
        BlockMultiset(4, 3, ((0, 1),))


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_complete_design_lambda(t):
    bm = complete_design(5, 3)
    report = is_t_design(bm, t)
    assert report.lam == math.comb(5 - t, 3 - t)
    assert lambda_identity_holds(report)


def test_t_range_validation():
    bm = complete_design(5, 3)
    with pytest.raises(ValueError):
        is_t_design(bm, -1)
    with pytest.raises(ValueError):
        is_t_design(bm, 4)


def test_budget_gate(monkeypatch):
    monkeypatch.setenv("JF_BUDGET", "4")
    bm = complete_design(6, 3)
    with pytest.raises(BudgetExceeded):
        is_t_design(bm, 3)


def test_e8_weight_four_is_a_3_design():
    e8 = get_code("e8")
    bm = supports(e8, 4)
    assert len(bm.blocks) == 14
    report = is_t_design(bm, 3)
    assert report.lam == 1
    assert report.block_count == 14
    assert lambda_identity_holds(report)


def test_octads_form_a_steiner_system():
    g24 = get_code("g24")
    bm = supports(g24, 8)
    assert len(bm.blocks) == 759
    report = is_t_design(bm, 5)
    assert (report.lam, report.min_coverage, report.max_coverage) == (1, 1, 1)
    assert lambda_identity_holds(report)


def test_octad_lambda_chain():
    # coverage grows by the standard ratio as t drops
    g24 = get_code("g24")
    bm = supports(g24, 8)
    expected = {5: 1, 4: 5, 3: 21, 2: 77, 1: 253}
    for t, lam in expected.items():
        report = is_t_design(bm, t)
        assert report.lam == lam
        assert lambda_identity_holds(report)


def test_block_counts_match_enumerator_coefficients():
    e8 = get_code("e8")
    p = cwe(e8)
    bm = supports(e8, 4)
    assert p.terms[(4, 4)] == len(bm.blocks)
    assert p.terms[(0, 8)] == len(supports(e8, 8).blocks)


def test_multiset_keeps_repeated_supports():
    rep = LinearCode(F3, 2, ((1, 1),))
    bm = supports(rep, 2)
    # words 11 and 22 share the same support
    assert bm.blocks == ((0, 1), (0, 1))
    report = is_t_design(bm, 1)
    assert report.lam == 2


def test_not_a_design():
    span = LinearCode(F2, 2, ((1, 0),))
    report = is_t_design(supports(span, 1), 1)
    assert report.lam is None
    assert report.min_coverage == 0
    assert report.max_coverage == 1
    assert not report.is_design
    with pytest.raises(ValueError):
        lambda_identity_holds(report)


def test_report_json_shape():
    report = DesignReport(
        n=8, weight=4, t=3, lam=1, min_coverage=1, max_coverage=1, block_count=14
    )
    assert report.to_json_obj() == {
        "weight": 4,
        "t": 3,
        "lambda": 1,
        "min": 1,
        "max": 1,
    }


def test_e8_is_3_homogeneous():
    verdict, reports = is_t_homogeneous(get_code("e8"), 3)
    assert verdict
    lams = {r.weight: r.lam for r in reports}
    assert lams == {4: 1, 8: 1}
    assert all(lambda_identity_holds(r) for r in reports)


def test_g24_is_5_homogeneous():
    verdict, reports = is_t_homogeneous(get_code("g24"), 5)
    assert verdict
    lams = {r.weight: r.lam for r in reports}
    assert lams == {8: 1, 12: 48, 16: 78, 24: 1}
    assert all(lambda_identity_holds(r) for r in reports)


def test_d24plus_is_1_homogeneous():
    verdict, reports = is_t_homogeneous(get_code("d24plus"), 1)
    assert verdict
    lams = {r.weight: r.lam for r in reports}
    assert lams == {4: 5, 8: 213, 12: 1378, 16: 426, 20: 25, 24: 1}
    assert all(lambda_identity_holds(r) for r in reports)


def test_e8x2_is_not_2_homogeneous():
    verdict, reports = is_t_homogeneous(get_code("e8x2"), 2)
    assert not verdict
    by_weight = {r.weight: r for r in reports}
    assert by_weight[4].lam is None
    assert by_weight[4].min_coverage == 0
    assert by_weight[4].max_coverage == 3
    assert by_weight[16].lam == 1


def test_undersized_class_blocks_the_verdict():
    # weight-2 words cannot carry a 3-design
    code = LinearCode(F2, 4, ((1, 1, 0, 0), (0, 0, 1, 1)))
    verdict, reports = is_t_homogeneous(code, 3)
    assert not verdict
    small = [r for r in reports if r.weight < 3]
    assert small
    for r in small:
        assert r.lam is None
        assert (r.min_coverage, r.max_coverage) == (0, 0)
    top = [r for r in reports if r.weight == 4][0]
    assert top.lam == 1


def test_zero_weight_class_is_skipped():
    code = LinearCode(F2, 3, ((1, 1, 1),))
    verdict, reports = is_t_homogeneous(code, 1)
    assert verdict
    assert [r.weight for r in reports] == [3]
