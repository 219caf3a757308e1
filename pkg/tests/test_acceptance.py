"""Exit criteria. Every check is exact; each test prints one PASS/FAIL line."""

import random
from itertools import permutations

import pytest

from circsort.cli import random_permutation, run_bench
from circsort.displacement import (
    DisplacementVector,
    initial_displacement,
    is_feasible,
    lower_bound,
    net_swap_matrix,
    satisfies_opt,
)
from circsort.oracle import bfs_distance, bidirectional_distance, distance_table, feng_worst_case
from circsort.perm_core import Permutation, inversions, transposition_to_swap
from circsort.reduction import (
    check_deletion,
    verify_appendix,
    verify_induction_step,
    verify_lemma_prop,
)
from circsort.sorter import bubble_sort, diameter_bound, optimal_sort, sequence_net_counts

P = Permutation


@pytest.fixture
def announce(capsys):
    def _announce(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        assert ok, f"{label}: {detail}"

    return _announce


def all_perms(n):
    return (P(line) for line in permutations(range(1, n + 1)))


def test_criterion_1_optimality(announce):
    mismatches, checked = [], 0
    for n in range(2, 8):
        table = distance_table(n)
        for p in all_perms(n):
            checked += 1
            if len(optimal_sort(p)) != table.distance(p):
                mismatches.append(p)
    announce(
        "1 optimal_sort length == BFS distance, n=2..7",
        not mismatches,
        f"{checked} permutations, {len(mismatches)} mismatches" + (f", first {mismatches[0]}" if mismatches else ""),
    )


def test_criterion_2_diameter(announce):
    longest = [max(len(optimal_sort(p)) for p in all_perms(n)) for n in range(2, 8)]
    bfs = [distance_table(n).diameter for n in range(2, 8)]
    expected = [diameter_bound(n) for n in range(2, 8)]
    assert expected == [1, 2, 4, 6, 9, 12]
    announce(
        "2 max optimal_sort length == floor(n^2/4), n=2..7",
        longest == expected == bfs,
        f"sorter {longest}, BFS {bfs}",
    )


def test_criterion_3_half_rotation_witness(announce):
    results = {}
    for n in (2, 4, 6, 8):
        w = feng_worst_case(n)
        results[n] = (len(optimal_sort(w)), bidirectional_distance(w) if n == 8 else bfs_distance(w))
    ok = all(a == b == n * n // 4 for n, (a, b) in results.items())
    announce("3 half-rotation witness needs exactly n^2/4, n=2,4,6,8", ok, str(results))


def test_criterion_4_lower_bound_counterexample(announce):
    perm = P((3, 2, 1, 4))
    d = DisplacementVector.from_list([-2, 0, 2, 0])
    opt_len = len(optimal_sort(perm))
    facts = [is_feasible(perm, d), satisfies_opt(d), lower_bound(d) == 2, opt_len == 3]

    def no_swap_decreases(vec):
        total = vec.abs_total()
        for p in range(1, perm.n + 1):
            i, j = transposition_to_swap(perm, p)
            if vec.updated({i: -1, j: 1}).abs_total() < total:
                return False
        return True

    facts.append(no_swap_decreases(d))
    # The same four numbers read element-by-element are also a valid optimal vector.
    alt = DisplacementVector.from_list([2, 0, -2, 0])
    facts += [is_feasible(perm, alt), satisfies_opt(alt), no_swap_decreases(alt)]
    announce(
        "4 (3,2,1,4): lower bound 2 < optimum 3, no swap lowers sum|d|",
        all(facts),
        f"lower_bound={lower_bound(d)}, optimal={opt_len}",
    )


def test_criterion_5_closed_form_counts(announce):
    bad, checked = [], 0
    for n in range(2, 7):
        for p in all_perms(n):
            checked += 1
            c, d = sequence_net_counts(optimal_sort(p))
            if c != net_swap_matrix(p, d):
                bad.append(p)
    announce("5 tallied net counts == closed form, n<=6", not bad, f"{checked} permutations, {len(bad)} mismatches")


def _structure_failures(p, seq, k_choices):
    problems = []
    for r in (verify_lemma_prop(p, seq), verify_induction_step(p, seq)):
        if not r.overall:
            problems.append(r)
    for k in k_choices:
        chk = check_deletion(seq, k)
        if not chk.passed:
            problems.append(chk)
    return problems


def test_criterion_6_structure_suite(announce):
    failures, counts = [], {}
    for n in range(2, 7):
        for p in all_perms(n):
            seq = optimal_sort(p)
            failures += _structure_failures(p, seq, p.one_line)
            rec = verify_induction_step(p, seq, recursive=True)
            if not rec.overall:
                failures.append(rec)
        counts[n] = "all"
    rng = random.Random(20240601)
    for n in (20, 50, 100):
        for _ in range(1000):
            p = random_permutation(n, rng)
            seq = optimal_sort(p)
            failures += _structure_failures(p, seq, rng.sample(range(1, n + 1), 3))
        counts[n] = 1000
    announce(
        "6 net-count constraints, deletion, induction step (n<=6 exhaustive; 1000 random at 20/50/100)",
        not failures,
        f"{len(failures)} failures" + (f", first {failures[0]}" if failures else ""),
    )


def test_criterion_7_appendix_suite(announce):
    rng = random.Random(7)
    failures = 0
    for n in range(4, 11):
        for _ in range(1000):
            p = random_permutation(n, rng)
            shifts = [rng.randint(-2, 2) for _ in range(n - 1)]
            shifts.append(-sum(shifts))
            d0 = initial_displacement(p)
            d = DisplacementVector({i: d0[i] + n * s for i, s in zip(range(1, n + 1), shifts)})
            if not verify_appendix(p, d).overall:
                failures += 1
    announce("7 skew symmetry and per-move update incl. wrap, 1000 random states at n=4..10", failures == 0,
             f"{failures} failures")


def test_criterion_8_bubble_baseline(announce):
    bad = []
    for n in range(1, 8):
        for p in all_perms(n):
            if len(bubble_sort(p)) != inversions(p):
                bad.append(p)
    rng = random.Random(8)
    for _ in range(200):
        p = random_permutation(rng.randint(2, 200), rng)
        if len(bubble_sort(p)) != inversions(p):
            bad.append(p)
    for n in range(2, 201):
        rev = P(range(n, 0, -1))
        if len(bubble_sort(rev)) != n * (n - 1) // 2:
            bad.append(rev)
    announce("8 bubble length == inversions; reversal == n(n-1)/2", not bad, f"{len(bad)} mismatches")


def test_bench_bound_at_n100(announce):
    rows, summary = run_bench(100, 50, 7)
    ok = all(r["length"] <= 2500 for r in rows) and summary["max_length"] <= 2500
    announce("bench n=100: every sample within floor(n^2/4)=2500", ok, f"max {summary['max_length']}")
