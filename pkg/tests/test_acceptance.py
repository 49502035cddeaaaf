"""Acceptance criteria. All equalities are exact; each test prints one
PASS/FAIL line, and the lines are repeated in the terminal summary."""

import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from overq import cli
from overq.enumeration import box_weight_polynomial, gap_congruence_counts, overpartition_part_counts
from overq.harness import (
    verify_key_theorem,
    verify_limit,
    verify_parts_gf,
    verify_parts_limit,
    verify_pascal,
    verify_rank,
    verify_rr,
    verify_sylvester,
    verify_sylvester_limit,
    verify_tau_congruence,
    verify_theta,
    theta_series,
)
from overq.qbinomial import Method, clear_caches, over_poly, over_qbinomial
from overq.series import QSeries


@contextmanager
def criterion(num, title):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        line = f"{status} criterion {num:>2}: {title} ({time.perf_counter() - t0:.3f} s)"
        print(line)
        ACCEPTANCE_LINES.append(line)


def check(report):
    assert report.passed, report.to_json()


def test_criterion_01_three_by_three_polynomial():
    with criterion(1, "3x3 over q-binomial polynomial, under 1 ms"):
        clear_caches()
        t0 = time.perf_counter()
        s = over_qbinomial(3, 3)
        elapsed = time.perf_counter() - t0
        assert s == QSeries([1, 2, 4, 8, 10, 12, 12, 8, 4, 2], 9)
        assert s.degree() == 9
        assert elapsed < 1e-3, elapsed


def test_criterion_02_triple_agreement():
    with criterion(2, "closed sum = rec1 = rec2 = enumeration on 8x8, formulas agree on 12x12, under 10 s"):
        clear_caches()
        t0 = time.perf_counter()
        for M in range(9):
            for N in range(9):
                oracle = box_weight_polynomial(M, N).dense()
                for method in Method:
                    assert list(over_poly(M, N, method)) == oracle, (M, N, method)
        for M in range(13):
            for N in range(13):
                closed = over_poly(M, N, Method.CLOSED_SUM)
                assert closed == over_poly(M, N, Method.RECURRENCE_1), (M, N)
                assert closed == over_poly(M, N, Method.RECURRENCE_2), (M, N)
        assert time.perf_counter() - t0 < 10


def test_criterion_03_recurrences():
    with criterion(3, "both box recurrences exact on the 12x12 grid from closed-sum cells, under 5 s"):
        clear_caches()
        t0 = time.perf_counter()
        check(verify_pascal(12, 12, oracle_max=0))
        assert time.perf_counter() - t0 < 5


def test_criterion_04_count_level_recurrence():
    with criterion(4, "count-level recurrence on enumeration tables, 8x8 grid"):
        check(verify_pascal(0, 0, oracle_max=8))


def test_criterion_05_limit():
    with criterion(5, "box (N-j) x j vs (-q)_j/(q)_j, and the finite sum identity to q^50"):
        check(verify_limit(range(6), (15, 20, 25), T=50, finite_jmax=10))


def test_criterion_06_parts_generating_function():
    with criterion(6, "parts-counting identity on (X=6, T=30) for N <= 8, limit form vs pbar(n,k), n <= 20"):
        for N in range(1, 9):
            check(verify_parts_gf(N, X=6, T=30, nmax=20))
        check(verify_parts_limit(T=20, nmax=20))
        assert overpartition_part_counts(3)[3, 2] == 4  # 2+1 with any flags


def test_criterion_07_tau_congruence():
    with criterion(7, "pbar(n) = 2 tau(n) mod 4 for n <= 200, under 1 s"):
        t0 = time.perf_counter()
        check(verify_tau_congruence(200))
        assert time.perf_counter() - t0 < 1


def test_criterion_08_sylvester():
    with criterion(8, "Sylvester analogue for N <= 10 on (6, 40), N = inf, theta to q^50"):
        for N in range(1, 11):
            check(verify_sylvester(N, X=6, T=40))
        check(verify_sylvester_limit(X=6, T=40))
        check(verify_theta(50))
        want = {0: 1, 1: -2, 4: 2, 9: -2, 16: 2, 25: -2, 36: 2, 49: -2}
        assert theta_series(50).coeffs == want


def test_criterion_09_rank():
    with criterion(9, "rank: formula, enumeration and product form agree, m <= 5, n <= 30"):
        check(verify_rank(mmax=5, T=30, nmax=30))


def test_criterion_10_key_theorem():
    with criterion(10, "g recurrence, C recurrence and g - C memberships for 2 <= N <= 10, x=1 series to q^60"):
        r = verify_key_theorem(range(2, 11), X=8, Tpad=20, T_x1=60)
        check(r)
        orders = r.info["observed_min_q_order"]
        for N in range(2, 11):
            assert orders[str(N)]["g_minus_C_min_q"] >= N + 3
            assert orders[str(N)]["C_recurrence_min_q"] >= N + 3


def test_criterion_11_rogers_ramanujan_type(capsys):
    with criterion(11, "A = B = C for n <= 60, product forms to q^60, full verify all under 60 s"):
        counts = gap_congruence_counts(60)
        assert counts["A"][8] == counts["B"][8] == 16
        check(verify_rr(nmax=60, T=60))
        clear_caches()
        t0 = time.perf_counter()
        code = cli.main(["verify", "all"])
        elapsed = time.perf_counter() - t0
        out = capsys.readouterr().out
        assert code == 0, out
        assert "FAIL" not in out
        assert elapsed < 60, elapsed
