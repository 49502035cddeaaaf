import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_overpartitions, box_overpartitions
from overq.enumeration import (
    DEFAULT_CELL_BUDGET,
    DEFAULT_NMAX_BUDGET,
    CountTable,
    Overpartition,
    box_counts,
    box_weight_polynomial,
    budget_limits,
    congruence_overpartitions,
    enum_overpartitions_box,
    gap_congruence_counts,
    gap_overpartitions,
    is_congruence,
    is_gap,
    is_regular4,
    overpartition_counts,
    overpartition_part_counts,
    overpartitions,
    partitions,
    rank_counts,
    regular4_partitions,
    tau,
)
from overq.errors import BudgetExceeded, DomainError, OutOfRange
from overq.qbinomial import gaussian, over_poly, over_term


def parse_all(text):
    return [Overpartition.parse(t) for t in text.split(",")]


OVERPARTITIONS_OF_3 = parse_all("3, 3', 2+1, 2'+1, 2+1', 2'+1', 1+1+1, 1+1+1'")
BOX_33_WEIGHT_5 = parse_all(
    "3+2, 3'+2, 3+2', 3'+2', 3+1+1, 3'+1+1, 3+1+1', 3'+1+1', "
    "2+2+1, 2+2'+1, 2+2+1', 2+2'+1'"
)
GAP_8 = parse_all(
    "8, 8', 7+1, 7'+1, 6+2, 6'+2, 6+2', 6'+2', 5+3, 5'+3, 5+3', 5'+3', "
    "5+2+1, 5'+2+1, 4+3+1, 4+3'+1"
)
CONGRUENCE_8 = parse_all(
    "8', 7'+1', 6'+2', 6+2, 6'+2, 6+2', 5'+3', 5'+2'+1', 5'+2+1', 4'+3'+1', "
    "4'+2+2, 4'+2+2', 3'+2+2+1', 3'+2+2'+1', 2+2+2+2, 2+2+2+2'"
)


# ------------------------------------------------------------ Overpartition


def test_parse_and_render():
    op = Overpartition.parse("3' + 2 + 2'")
    assert op.parts == (3, 2, 2) and op.overlined == (True, False, True)
    assert op.ascii() == "3' + 2 + 2'"
    assert str(op) == "3̅ + 2 + 2̅"
    assert (op.weight, op.length, op.overline_count, op.rank) == (7, 3, 2, 0)
    empty = Overpartition.parse("()")
    assert str(empty) == "()" and empty.weight == 0


def test_invariants_enforced():
    with pytest.raises(ValueError):
        Overpartition((2, 2), (True, False))
    with pytest.raises(ValueError):
        Overpartition((1, 2), (False, False))
    with pytest.raises(ValueError):
        Overpartition((0,), (False,))
    with pytest.raises(ValueError):
        Overpartition((1,), ())


def test_empty_has_no_rank():
    with pytest.raises(DomainError):
        Overpartition().rank


# ---------------------------------------------------------- worked listings


def test_overpartitions_of_three_in_order():
    assert list(overpartitions(3)) == OVERPARTITIONS_OF_3
    got = [op for op in enum_overpartitions_box(3, 3) if op.weight == 3]
    assert got == OVERPARTITIONS_OF_3


def test_box_weight_five_in_order():
    got = [op for op in enum_overpartitions_box(3, 3) if op.weight == 5]
    assert got == BOX_33_WEIGHT_5


def test_gap_and_congruence_lists_at_eight():
    assert list(gap_overpartitions(8)) == GAP_8
    assert sorted(congruence_overpartitions(8), key=repr) == sorted(CONGRUENCE_8, key=repr)
    assert len(list(regular4_partitions(8))) == 16


def test_unit_box():
    assert [op.ascii() for op in enum_overpartitions_box(1, 1)] == ["()", "1", "1'"]


# ---------------------------------------------------------- box enumeration


def _key(op):
    return op.parts, op.overlined


@pytest.mark.parametrize("M,N", [(0, 0), (0, 3), (2, 2), (3, 3), (4, 2), (2, 5), (5, 4)])
def test_box_matches_oracle_exactly_once(M, N):
    got = [_key(op) for op in enum_overpartitions_box(M, N)]
    assert len(got) == len(set(got))
    assert set(got) == set(box_overpartitions(M, N))


def test_box_order_is_deterministic():
    a = enum_overpartitions_box(3, 4)
    assert a == enum_overpartitions_box(3, 4)
    weights = [op.weight for op in a]
    assert weights == sorted(weights)


@pytest.mark.parametrize("M,N", [(2, 3), (4, 4), (6, 3)])
def test_conjugate_box_counts(M, N):
    assert box_weight_polynomial(M, N).dense() == box_weight_polynomial(N, M).dense()


def test_weight_polynomial_slices():
    assert box_weight_polynomial(3, 3).dense() == [1, 2, 4, 8, 10, 12, 12, 8, 4, 2]
    by_k = box_weight_polynomial(3, 3, by_overlines=True)
    assert [by_k[n, 0] for n in range(10)] == gaussian(3, 3).dense()
    for k in range(4):
        assert [by_k[n, k] for n in range(10)] == over_term(3, 3, k).dense()
    by_parts = box_weight_polynomial(2, 2, by_parts=True)
    assert by_parts[2, 2] == 2  # 1+1 and 1+1'
    both = box_weight_polynomial(2, 2, by_overlines=True, by_parts=True)
    assert both.key_names == ("n", "overlines", "parts")
    assert both[2, 0, 2] == 1 and both[2, 1, 2] == 1


@pytest.mark.parametrize("M", range(1, 9))
def test_count_level_recurrence(M):
    for N in range(1, 9):
        if M * N > DEFAULT_CELL_BUDGET:
            continue
        big, left = box_counts(M, N), box_counts(M, N - 1)
        a, b = box_counts(M - 1, N - 1), box_counts(M - 1, N)
        for n in range(M * N + 1):
            assert big[n] - left[n] == a[n - N] + b[n - N], (M, N, n)


def test_box_counts_match_formula():
    for M, N in [(4, 4), (8, 8), (7, 5)]:
        t = box_counts(M, N)
        assert [t[n] for n in range(M * N + 1)] == list(over_poly(M, N))


# ---------------------------------------------------------------- budgets


def test_budget_guards(monkeypatch):
    monkeypatch.delenv("OVERQ_BUDGET", raising=False)
    assert budget_limits() == (DEFAULT_CELL_BUDGET, DEFAULT_NMAX_BUDGET)
    with pytest.raises(BudgetExceeded):
        enum_overpartitions_box(9, 9)
    with pytest.raises(BudgetExceeded):
        rank_counts(DEFAULT_NMAX_BUDGET + 1)
    with pytest.raises(BudgetExceeded):
        gap_congruence_counts(DEFAULT_NMAX_BUDGET + 1)
    assert box_weight_polynomial(9, 9, budget=81).trunc == 81


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("OVERQ_BUDGET", "100")
    assert budget_limits() == (100, 100)
    assert box_weight_polynomial(9, 9).dense() == list(over_poly(9, 9))
    monkeypatch.setenv("OVERQ_BUDGET", "unlimited")
    assert budget_limits() == (float("inf"), float("inf"))
    monkeypatch.setenv("OVERQ_BUDGET", "5")
    # small values never lower the defaults
    assert budget_limits() == (DEFAULT_CELL_BUDGET, DEFAULT_NMAX_BUDGET)


def test_out_of_range_inputs():
    with pytest.raises(OutOfRange):
        enum_overpartitions_box(-1, 2)
    with pytest.raises(OutOfRange):
        rank_counts(-1)
    with pytest.raises(OutOfRange):
        gap_congruence_counts(-1)


# ------------------------------------------------------------ count tables


def test_overpartition_counts():
    t = overpartition_counts(5)
    assert [t[n] for n in range(6)] == [1, 2, 4, 8, 14, 24]
    brute = [sum(1 for _ in all_overpartitions(n)) for n in range(12)]
    t = overpartition_counts(11)
    assert [t[n] for n in range(12)] == brute


def test_part_counts_against_oracle():
    t = overpartition_part_counts(10)
    for n in range(11):
        for k in range(n + 1):
            want = sum(1 for p, _f in all_overpartitions(n) if len(p) == k)
            assert t[n, k] == want


def test_rank_counts():
    t = rank_counts(25)
    assert t[0, 1] == 2
    assert t[0, 2] == 0
    for m in range(0, 20):
        assert t[m, m + 1] == 2
    assert sum(c for (m, n), c in t.counts.items() if n == 3) == 8
    # the empty overpartition has no rank
    assert all(n >= 1 for (_m, n) in t.counts)
    for (m, n), c in t.counts.items():
        assert t[-m, n] == c


def test_csv_export():
    t = CountTable(("n", "k"), {(2, 1): 2, (1, 1): 2, (0, 0): 1})
    assert t.to_csv() == "n,k,count\n0,0,1\n1,1,2\n2,1,2\n"
    assert t[5, 5] == 0


def test_tau():
    assert [tau(n) for n in (1, 2, 6, 12, 36, 97)] == [1, 2, 4, 6, 9, 2]
    with pytest.raises(DomainError):
        tau(0)


def test_tau_congruence_small():
    t = overpartition_counts(200)
    for n in range(1, 201):
        assert t[n] % 4 == 2 * tau(n) % 4


# ------------------------------------------------------- gap / congruence


@pytest.mark.parametrize("n", range(16))
def test_generators_match_predicate_filters(n):
    every = list(overpartitions(n))
    assert set(map(_key, gap_overpartitions(n))) == {_key(o) for o in every if is_gap(o)}
    cong = list(congruence_overpartitions(n))
    assert len(cong) == len(set(map(_key, cong)))
    assert set(map(_key, cong)) == {_key(o) for o in every if is_congruence(o)}
    assert set(map(_key, regular4_partitions(n))) == {_key(o) for o in every if is_regular4(o)}


def test_one_bar_is_never_a_gap_part():
    assert not is_gap(Overpartition.parse("1'"))
    assert is_gap(Overpartition.parse("3'+1"))
    assert not is_gap(Overpartition.parse("3'+2"))


def test_family_counts_agree():
    counts = gap_congruence_counts(40)
    A, B, C = counts["A"], counts["B"], counts["C"]
    assert A[0] == B[0] == C[0] == 1
    assert A[8] == B[8] == C[8] == 16
    for n in range(41):
        assert A[n] == B[n] == C[n]
    for n in range(13):
        assert A[n] == sum(1 for _ in gap_overpartitions(n))
        assert B[n] == sum(1 for _ in congruence_overpartitions(n))
        assert C[n] == sum(1 for _ in regular4_partitions(n))


@given(st.integers(0, 25), st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_partitions_respect_bounds(n, max_part, max_len):
    seen = list(partitions(n, max_part, max_len))
    assert len(seen) == len(set(seen))
    assert seen == sorted(seen, reverse=True)
    for p in seen:
        assert sum(p) == n and len(p) <= max_len and all(0 < v <= max_part for v in p)
        assert list(p) == sorted(p, reverse=True)
