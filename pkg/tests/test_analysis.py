import pytest

from latinpat.analysis import (
    column_avoider_count,
    compute_lambda_exhaustive,
    full_length_count,
    lambda_bound_report,
    lambda_lower_bound,
    lambda_witness_cap,
    verify_cyclic_structure,
    verify_erdos_szekeres,
    verify_full_length_counts,
    verify_triple_containment,
    wilf_classes,
)
from latinpat.construct import connolly_square
from latinpat.enumeration import FeasibilityError
from latinpat.perm import longest_monotone
from latinpat.square import latin_square, max_monotone



def brute_lower_bound(n):
    m = 2
    while m * (m - 1) + 2 <= n:
        m += 1
    return m


# ---------------------------------------------------------------------------
# monotone lower bound
# ---------------------------------------------------------------------------

def test_lower_bound_values():
    assert lambda_lower_bound(2) == 2
    assert lambda_lower_bound(4) == 3
    assert lambda_lower_bound(9) == 4
    assert lambda_lower_bound(16) == 5
    with pytest.raises(ValueError):
        lambda_lower_bound(1)


def test_lower_bound_matches_inversion_small_range():
    for n in range(2, 10_001):
        assert lambda_lower_bound(n) == brute_lower_bound(n)


# ---------------------------------------------------------------------------
# exhaustive minimax
# ---------------------------------------------------------------------------

def test_lambda_exhaustive_small_orders():
    for n, expected in [(1, 1), (2, 2), (3, 3), (4, 3)]:
        report = compute_lambda_exhaustive(n)
        assert report.exact_value == expected
        assert report.method == "exhaustive"
        assert max_monotone(report.witness) == expected
        if n >= 2:
            assert report.exact_value >= report.lower_bound


def test_lambda_exhaustive_bound_is_not_tight_at_3():
    report = compute_lambda_exhaustive(3)
    assert report.lower_bound == 2
    assert report.exact_value == 3


def test_lambda_exhaustive_bound_tight_at_4():
    report = compute_lambda_exhaustive(4)
    assert report.lower_bound == 3
    assert report.exact_value == 3


def test_lambda_exhaustive_refuses_large_order():
    with pytest.raises(FeasibilityError):
        compute_lambda_exhaustive(6)


def test_lambda_parallel_matches_serial():
    serial = compute_lambda_exhaustive(4)
    parallel = compute_lambda_exhaustive(4, jobs=4)
    assert parallel.exact_value == serial.exact_value
    assert parallel.witness == serial.witness


# ---------------------------------------------------------------------------
# witness caps and bound reports
# ---------------------------------------------------------------------------

def test_witness_caps():
    assert lambda_witness_cap(connolly_square(3)) == 4
    assert lambda_witness_cap(connolly_square(4)) == 5
    assert lambda_witness_cap(latin_square([[1, 2], [2, 1]])) == 2


def test_bound_report_perfect_squares():
    for root in (2, 3, 4):
        report = lambda_bound_report(root * root)
        assert report.method == "witness-capped"
        assert report.lower_bound == root + 1
        assert report.exact_value == root + 1
        assert report.witness_cap == root + 1


def test_bound_report_non_square():
    report = lambda_bound_report(10)
    assert report.method == "bound-only"
    assert report.lower_bound == 4
    assert report.exact_value is None
    assert report.witness is None


def test_four_extremal_lines_reach_bound(squares3, squares4):
    # the row/column starting with n and the row/column starting with 1 all
    # carry a monotone run of the guaranteed length
    from conftest import collect_squares

    for squares in (collect_squares(2), squares3, squares4):
        n = squares[0].order
        m = lambda_lower_bound(n)
        for sq in squares:
            lines = []
            for anchor in (1, n):
                lines.append(next(r for r in sq.grid if r[0] == anchor))
                lines.append(next(c for c in zip(*sq.grid) if c[0] == anchor))
            assert all(longest_monotone(line) >= m for line in lines)


# ---------------------------------------------------------------------------
# full-length counting formulas
# ---------------------------------------------------------------------------

def test_full_length_count_small():
    assert full_length_count(1) == 0
    assert full_length_count(2) == 0
    assert full_length_count(3) == 3  # (6-3)^2/36 * 12
    assert full_length_count(4) == 400


def test_full_length_count_with_supplied_total():
    # totals may come from a cache instead of a fresh enumeration
    assert full_length_count(5, total=161280) == 148120
    assert column_avoider_count(5, total=161280) == 154560
    assert column_avoider_count(4) == 480


def test_verify_full_length_counts():
    for n in (2, 3, 4):
        report = verify_full_length_counts(n)
        assert report["ok"], report
    r4 = verify_full_length_counts(4, patterns=[(1, 2, 3, 4)])
    check = r4["checks"][0]
    assert check["column_avoiders"] == 480
    assert check["full_avoiders"] == 400


def test_verify_full_length_rejects_short_pattern():
    with pytest.raises(ValueError):
        verify_full_length_counts(4, patterns=[(1, 2, 3)])


# ---------------------------------------------------------------------------
# Wilf classes
# ---------------------------------------------------------------------------

def test_wilf_length3_order4_single_class():
    report = wilf_classes(3, 4)
    assert len(report.classes) == 1
    count, members = report.classes[0]
    assert count == 4
    assert len(members) == 6


def test_wilf_filter_matches_pruned():
    f = wilf_classes(3, 4, mode="filter")
    p = wilf_classes(3, 4, mode="pruned")
    assert f.counts == p.counts
    f4 = wilf_classes(4, 4, mode="filter")
    p4 = wilf_classes(4, 4, mode="pruned")
    assert f4.counts == p4.counts
    assert set(f4.counts.values()) == {400}


def test_wilf_pattern_longer_than_order():
    report = wilf_classes(4, 3)
    assert set(report.counts.values()) == {12}
    assert len(report.classes) == 1


def test_wilf_trivial_pattern():
    report = wilf_classes(1, 3)
    assert report.counts == {(1,): 0}


def test_wilf_feasibility_box():
    with pytest.raises(FeasibilityError):
        wilf_classes(5, 5)
    with pytest.raises(FeasibilityError):
        wilf_classes(4, 6)


def test_wilf_report_serialization():
    report = wilf_classes(3, 4)
    js = report.to_json()
    assert js["num_classes"] == 1
    assert js["counts"]["123"] == 4
    csv = report.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "pattern,count,class_id"
    assert "123,4,1" in lines
    assert report.class_id((1, 2, 3)) == 1


def test_wilf_parallel_matches_serial():
    serial = wilf_classes(3, 4)
    parallel = wilf_classes(3, 4, jobs=4)
    assert serial.counts == parallel.counts


# ---------------------------------------------------------------------------
# structural verifications
# ---------------------------------------------------------------------------

def test_triple_containment_small_orders():
    for n in (2, 3, 4):
        report = verify_triple_containment(n)
        assert report["ok"], report
        assert report["violations"] == []


def test_cyclic_structure():
    for n in (2, 3, 4, 5):
        report = verify_cyclic_structure(n)
        assert report["ok"], report
        assert report["count"] == n


def test_verify_erdos_szekeres():
    assert verify_erdos_szekeres(2, 2)["ok"]
    assert verify_erdos_szekeres(2, 3)["ok"]
    assert verify_erdos_szekeres(1, 1)["ok"]
    with pytest.raises(FeasibilityError):
        verify_erdos_szekeres(3, 3)
    with pytest.raises(ValueError):
        verify_erdos_szekeres(0, 2)


def test_lambda_report_serialization():
    report = compute_lambda_exhaustive(3)
    js = report.to_json()
    assert js["exact_value"] == 3
    assert js["witness"]["order"] == 3
    csv = lambda_bound_report(9).to_csv()
    assert csv.splitlines()[1] == "9,4,4,4,witness-capped"
