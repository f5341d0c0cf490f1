"""Triple counts, missing-summand scans, tables, and side questions."""

from fractions import Fraction
from itertools import product

import pytest

from liefold import (
    PairKind,
    ResourceLimitExceeded,
    build_table,
    even_multiplicity_check,
    pair_table_cell,
    question1_compare,
    question2_compare,
    scan_missing,
    special_case_counts,
    triple_report,
    verify_conjecture,
)

EVEN2 = PairKind("even", 2)
ODD2 = PairKind("odd", 2)


def test_triple_report_fields():
    r = triple_report(EVEN2, (1, 0), (1, 0), (2, 0))
    assert r.pair == EVEN2
    assert r.folded_triple == ((1, 0), (1, 0), (2, 0))
    assert (r.m_sl, r.m_fold, r.m_tilde) == (1, 1, 1)
    assert not r.is_missing


def test_triple_report_missing_example():
    r = triple_report(EVEN2, (1, 0), (1, 0), (1, 0))
    assert (r.m_sl, r.m_fold, r.m_tilde) == (2, 0, 1)
    assert r.is_missing


def test_parity_identity_on_samples():
    for t1, t2, t3 in product([(0, 1), (1, 0), (1, 1), (2, 0)], repeat=3):
        r = triple_report(EVEN2, t1, t2, t3)
        assert r.m_sl % 2 == r.m_fold % 2
        assert 2 * r.m_tilde == r.m_sl + r.m_fold
        assert r.m_fold <= r.m_sl


FROZEN_EVEN_CELLS = [
    ((0, 1), (1, 0), (4, 2, 2, 0), ()),
    ((0, 1), (0, 1), (3, 3, 3, 0), ()),
    ((1, 1), (1, 0), (10, 4, 4, 0), ()),
    ((2, 1), (2, 0), (31, 9, 9, 0), ()),
    ((2, 0), (5, 0), (27, 9, 6, 3), ((6, 0, 6), (4, 2, 4), (4, 0, 4))),
]


@pytest.mark.parametrize("a,b,counts,missing", FROZEN_EVEN_CELLS)
def test_even_pair_cells(a, b, counts, missing):
    cell = pair_table_cell(EVEN2, EVEN2.fold(a), EVEN2.fold(b))
    assert cell.counts == counts
    assert cell.missing == missing


FROZEN_ODD_CELLS = [
    ((1, 0), (0, 1), (7, 2, 2, 0)),
    ((1, 0), (1, 0), (6, 3, 3, 0)),
    ((0, 1), (0, 1), (12, 4, 3, 1)),
    ((2, 0), (0, 1), (14, 3, 3, 0)),
]


@pytest.mark.parametrize("a,b,counts", FROZEN_ODD_CELLS)
def test_odd_pair_cells(a, b, counts):
    cell = pair_table_cell(ODD2, ODD2.fold(a), ODD2.fold(b))
    assert cell.counts == counts


def test_odd_pair_missing_weight():
    cell = pair_table_cell(ODD2, ODD2.fold((0, 1)), ODD2.fold((0, 1)))
    assert cell.missing == ((0, 1, 1, 0),)


def test_scan_height_one_matches_triple_reports():
    report = scan_missing(EVEN2, 1)
    assert report.triples_examined == 64
    grid = list(product([0, 1], repeat=2))
    invariant = 0
    missing = []
    for t1 in grid:
        for t2 in grid:
            for t3 in grid:
                r = triple_report(EVEN2, t1, t2, t3)
                if r.m_sl > 0:
                    invariant += 1
                    if r.is_missing:
                        missing.append((t1, t2, t3))
    assert report.total_invariant_triples == invariant == 23
    assert report.missing_triples == len(missing) == 1
    assert report.missing_found == tuple(missing)
    assert report.density == Fraction(1, 23)
    assert not report.truncated


def test_scan_height_two_frozen():
    report = scan_missing(EVEN2, 2)
    assert report.triples_examined == 9**3
    assert report.total_invariant_triples == 231
    assert report.missing_triples == 7
    assert report.density == Fraction(1, 33)


def test_scan_filter():
    report = scan_missing(EVEN2, 1, filter="last_zero(1),last_zero(2)")
    assert report.triples_examined == 16
    assert report.total_invariant_triples == 5
    assert report.missing_triples == 1
    assert report.filter == "last_zero(1),last_zero(2)"


def test_scan_filter_rejects_garbage():
    with pytest.raises(ValueError):
        scan_missing(EVEN2, 1, filter="bogus")
    with pytest.raises(ValueError):
        scan_missing(EVEN2, 1, filter="last_zero(4)")
    with pytest.raises(ValueError):
        scan_missing(EVEN2, 1, filter="last_zero(0)")


def test_scan_truncation_is_deterministic():
    a = scan_missing(EVEN2, 2, triple_limit=100)
    assert a.truncated
    assert a.triples_examined == 100
    b = scan_missing(EVEN2, 2, triple_limit=100, workers=2)
    assert a == b


def test_scan_workers_agree():
    a = scan_missing(EVEN2, 2)
    b = scan_missing(EVEN2, 2, workers=3)
    assert a == b


def test_verify_conjecture_small():
    even = verify_conjecture(EVEN2, "C1", 1)
    assert even.hypothesis == "C1"
    assert even.counterexamples == ()
    assert even.total_invariant_triples == 23
    odd = verify_conjecture(ODD2, "C3", 1)
    assert odd.counterexamples == ()
    assert (odd.total_invariant_triples, odd.missing_triples) == (34, 12)


def test_verify_conjecture_validation():
    with pytest.raises(ValueError):
        verify_conjecture(EVEN2, "C9", 1)
    with pytest.raises(ValueError):
        verify_conjecture(EVEN2, "C3", 1)
    with pytest.raises(ValueError):
        verify_conjecture(ODD2, "C1", 1)


def test_even_multiplicity_check_clean():
    assert even_multiplicity_check(2, 1) == []


def test_special_case_counts():
    pair = PairKind("even", 3)
    r = special_case_counts(pair, 2, 1)
    assert r.selfdual_total == 4 == r.paper_claims["selfdual_total"]
    assert r.missing_total == 1 == r.paper_claims["missing_total"]
    assert r.p_range_sl == (1, 2, 3)
    assert r.p_range_spin == (1, 3)
    assert r.paper_claims["p_min"] == 1
    assert r.paper_claims["p_max"] == 3
    assert r.paper_claims["spin_parity"] == 1
    # Off-diagonal cells carry no closed form for the distinct count.
    assert r.paper_claims["distinct_total"] is None
    assert r.distinct_total == 8

    diag = special_case_counts(pair, 2, 2)
    assert diag.selfdual_total == 9
    assert diag.missing_total == 3
    assert diag.p_range_sl == (0, 1, 2, 3, 4)
    assert diag.p_range_spin == (0, 2, 4)
    # The claimed diagonal formula disagrees with the computed count;
    # both are reported, neither is asserted against the other.
    assert diag.paper_claims["distinct_total"] == 6
    assert diag.distinct_total == 19


def test_special_case_requires_even_three():
    with pytest.raises(ValueError):
        special_case_counts(PairKind("even", 2), 1, 1)
    with pytest.raises(ValueError):
        special_case_counts(PairKind("odd", 3), 1, 1)


def test_question1():
    big = question1_compare(3, 2, 1)
    assert big.multiplicity_free_b and big.multiplicity_free_c
    assert big.constituents_match is True
    assert big.doubling_match is None

    small = question1_compare(2, 2, 2)
    assert small.multiplicity_free_b and small.multiplicity_free_c
    assert small.constituents_match is None
    assert small.doubling_match is True
    assert sorted(small.cn_terms) == [
        (0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (4, 0),
    ]
    assert sorted(small.bn_terms) == [
        (0, 0), (0, 2), (0, 4), (2, 0), (2, 2), (4, 0),
    ]


def test_question2():
    for n, k, ell in [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)]:
        r = question2_compare(n, k, ell)
        assert r.bijection_holds, (n, k, ell)
        assert r.multiplicities_preserved, (n, k, ell)
        assert len(r.odd_terms_even_sl) == len(r.odd_terms_odd_sl)


def test_build_table_matches_cells():
    rows = [(0, 1), (2, 0)]
    cols = [(1, 0), (5, 0)]
    table = build_table(EVEN2, rows, cols)
    assert len(table) == 2 and all(len(row) == 2 for row in table)
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            direct = pair_table_cell(EVEN2, EVEN2.fold(a), EVEN2.fold(b))
            assert table[i][j] == direct


def test_build_table_workers_agree():
    rows = [(0, 1), (2, 0)]
    cols = [(1, 0), (1, 1)]
    assert build_table(EVEN2, rows, cols) == build_table(
        EVEN2, rows, cols, workers=2
    )


def test_build_table_limit():
    rows = [(0, 1)] * 101
    cols = [(1, 0)] * 101
    with pytest.raises(ResourceLimitExceeded):
        build_table(EVEN2, rows, cols)
    assert build_table(EVEN2, [], []) == []


def test_build_table_validates_headers():
    with pytest.raises(ValueError):
        build_table(EVEN2, [(0, 1, 0)], [(1, 0)])
