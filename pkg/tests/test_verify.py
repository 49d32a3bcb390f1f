"""Verification suites: spot cells, passing grids, fault injection,
report plumbing."""

import pytest

from partitionlab import stats, verify
from partitionlab.verify import (
    RunConfig,
    bad_exponent_witness_report,
    find_bad_exponent_counterexample,
    reports_to_json,
    run_all,
    uncorrected_exponent_report,
    verify_gen17,
    verify_m_routes,
    verify_overpartition_identities,
    verify_thmcomb,
    verify_thmgf,
    verify_trunc,
    verify_trunc_corollaries,
)

# ---------------------------------------------------------------------------
# suite-level passes


def test_thmgf_passes():
    report = verify_thmgf(20, 4)
    assert report.passed and report.total > 0


def test_thmcomb_passes():
    report = verify_thmcomb(80, 6)
    assert report.passed


@pytest.mark.parametrize("k,ell", [(1, 1), (2, 3), (3, 2), (4, 5)])
def test_trunc_passes(k, ell):
    assert verify_trunc(k, ell, 60).passed


def test_trunc_corollaries_pass():
    for k in (1, 2, 3):
        assert verify_trunc_corollaries(k, 4, 60).passed


@pytest.mark.parametrize("k,ell", [(1, 1), (2, 2), (3, 1), (4, 3)])
def test_gen17_passes(k, ell):
    assert verify_gen17(k, ell, 60).passed


def test_overpartition_identities_pass():
    for k in (1, 2, 3):
        assert verify_overpartition_identities(k, 20).passed


def test_m_routes_pass():
    assert verify_m_routes(4, 80).passed


# ---------------------------------------------------------------------------
# spot cells


def test_trunc_spot_cell_6_3_1():
    # n=6, k=3, ell=1: lhs = b_3(6) - b_3(5) - 6/3, rhs = 1*M_1(3) + 2*M_1(0)
    b3 = stats.b_k_table(3, 6)
    m1 = stats.m_ell_table(1, 6)
    lhs = b3[6] - b3[5] - 2
    rhs = 1 * m1[3] + 2 * m1[0]
    assert lhs == rhs == 1
    report = verify_trunc(3, 1, 6)
    assert report.passed


def test_trunc_zero_below_first_window():
    # tiny n: both sides are empty sums
    report = verify_trunc(5, 2, 4)
    assert report.passed
    assert report.total == 5


def test_bilateral_sum_spot_values():
    # k=3: at n=6 the bilateral alternating sum equals 6/3 = 2, and it
    # vanishes whenever 3 does not divide n
    b3 = stats.b_k_table(3, 30)
    def bilateral(n):
        total = 0
        j = 0
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > n and g2 > n:
                break
            s = -1 if j % 2 else 1
            if g1 <= n:
                total += s * b3[n - g1]
            if j and g2 <= n:
                total += s * b3[n - g2]
            j += 1
        return total

    assert bilateral(6) == 2
    for n in range(1, 30):
        if n % 3:
            assert bilateral(n) == 0


def test_trunc_expression_vanishes_beyond_pentagonal_support():
    # once ell exceeds every j with a pentagonal number <= n, the
    # truncated sum is the full bilateral one, so the whole signed
    # expression collapses to exactly zero
    for k in (2, 3):
        b_tab = stats.b_k_table(k, 30)
        for n in range(31):
            assert verify._trunc_lhs(b_tab, k, 10, n) == 0
    assert verify.verify_trunc(2, 10, 30).passed


def test_gen17_spot_cell_3_1_9():
    b3 = stats.b_k_table(3, 9)
    c3 = stats.c_k_table(3, 9)
    mp1 = stats.mp_ell_table(1, 9)
    lhs = b3[9] - b3[8] - c3[9]
    rhs = sum(c3[j] * mp1[9 - j] for j in range(10))
    assert lhs == rhs == 4


def test_gen17_displayed_indicator_variant_fails_for_k3():
    # restricting the subtrahend to multiples of k breaks the identity
    # as soon as c_k is nonzero off the multiples; first cell: k=3, n=5
    report = verify_gen17(3, 1, 10, indicator_form=True)
    assert not report.passed
    first = report.failures[0]
    assert first.identity_id == "Gen17-eq"
    assert first.params["n"] == 5


def test_gen17_indicator_variant_is_identical_for_k2():
    # c_2 vanishes on odd arguments, so the indicator is a no-op there
    assert verify_gen17(2, 2, 40, indicator_form=True).passed


# ---------------------------------------------------------------------------
# the exponent correction


def test_bad_exponent_witness():
    assert find_bad_exponent_counterexample(60) == (5, 2)


def test_bad_exponent_absent_for_ell_1():
    # with ell=1 the two sign rules coincide on j in {0, 1}
    assert find_bad_exponent_counterexample(120, ell_max=1) is None


def test_uncorrected_exponent_report_collects_failures():
    report = uncorrected_exponent_report(30, 2)
    assert not report.passed
    first = report.failures[0]
    assert (first.params["n"], first.params["ell"]) == (5, 2)


def test_bad_exponent_witness_report_passes_when_witness_exists():
    report = bad_exponent_witness_report(60, 3)
    assert report.passed
    assert report.total == 1


# ---------------------------------------------------------------------------
# fault injection


def test_injected_fault_breaks_dependent_suites_only(monkeypatch):
    real = stats.b_k_table

    def corrupted(k, n_max):
        table = real(k, n_max)
        values = list(table.values)
        if len(values) > 7:
            values[7] += 1
        return stats.StatTable(table.stat_id, table.params, tuple(values))

    monkeypatch.setattr(stats, "b_k_table", corrupted)
    assert not verify_trunc(2, 1, 30).passed
    assert not verify_thmgf(12, 2).passed
    # suites that never touch the b tables stay green
    assert verify_m_routes(2, 30).passed
    assert verify_overpartition_identities(2, 10).passed


# ---------------------------------------------------------------------------
# run_all and reports


def test_run_all_default_passes():
    reports = run_all(RunConfig())
    assert [r.suite_id for r in reports] == list(verify.SUITE_ORDER)
    assert all(r.passed for r in reports)


def test_run_all_empty_ranges_pass():
    cfg = RunConfig(n_max=10, k_range=(2, 1), ell_range=(2, 1))
    reports = run_all(cfg)
    for r in reports:
        assert r.passed
        if r.suite_id != "bad-exponent":
            assert r.total == 0 or r.suite_id in ()


def test_run_all_selected_suite():
    reports = run_all(RunConfig(n_max=20, enum_cap=10), suites={"trunc"})
    assert len(reports) == 1
    assert reports[0].suite_id == "trunc"


def test_run_all_thread_determinism():
    cfg1 = RunConfig(n_max=30, enum_cap=15, threads=1)
    cfg8 = RunConfig(n_max=30, enum_cap=15, threads=8)
    assert reports_to_json(run_all(cfg1)).encode() == reports_to_json(
        run_all(cfg8)
    ).encode()


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(n_max=-1).validate()
    with pytest.raises(ValueError):
        RunConfig(k_range=(0, 2)).validate()
    with pytest.raises(ValueError):
        RunConfig(n_max=2, k_range=(1, 5)).validate()
    with pytest.raises(ValueError):
        RunConfig(threads=0).validate()
    with pytest.raises(ValueError):
        RunConfig(output_format="xml").validate()


def test_report_json_big_integers_become_strings():
    big = 1 << 60
    case = verify.IdentityCase("Trunc-eq", {"n": 1}, big, big + 1, False)
    payload = verify.case_jsonable(case)
    assert payload["lhs"] == str(big)
    assert payload["rhs"] == str(big + 1)
    small = verify.IdentityCase("Trunc-eq", {"n": 1}, 7, 7, True)
    assert verify.case_jsonable(small)["lhs"] == 7


def test_json_serialization_excludes_wall_time():
    reports = run_all(RunConfig(n_max=12, enum_cap=6), suites={"m-routes"})
    text = reports_to_json(reports)
    assert "wall" not in text
    assert '"suite": "m-routes"' in text
