"""Runtime verifiers for the structure of shortest cyclic-swap sorts.

Each verifier returns a :class:`VerificationReport`; failed checks are data,
only malformed inputs raise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .displacement import (
    InfeasibleDisplacementError,
    is_feasible,
    net_swap_matrix,
    satisfies_opt,
)
from .perm_core import (
    InvalidSwapError,
    Permutation,
    PermutationError,
    apply_transposition,
    is_restriction,
    next_position,
    restrict,
)
from .sorter import SwapSequence, diameter_bound, sequence_net_counts

CHECK_NAMES = (
    "lemma4a",
    "lemma4b",
    "lemma4c",
    "lemma5_valid_restriction",
    "thm3_k_bound",
    "thm3_k_swap_count",
    "thm3_spread",
    "thm3_length_bound",
    "appendix_skew",
    "appendix_decrement",
)

_MAX_EVIDENCE = 5


class Check(NamedTuple):
    name: str
    passed: bool
    evidence: str = ""


@dataclass
class VerificationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    rejected: str | None = None

    @property
    def overall(self) -> bool:
        return self.rejected is None and all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.overall

    def add(self, name: str, passed: bool, evidence: str = "") -> None:
        self.checks.append(Check(name, bool(passed), evidence))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "overall": self.overall,
            "rejected": self.rejected,
            "checks": [c._asdict() for c in self.checks],
        }


def _fmt_violations(pairs: list) -> str:
    head = ", ".join(map(str, pairs[:_MAX_EVIDENCE]))
    more = len(pairs) - _MAX_EVIDENCE
    return head + (f" (+{more} more)" if more > 0 else "")


def _require_initial(perm: Permutation, seq: SwapSequence) -> None:
    if seq.initial != perm:
        raise PermutationError("sequence does not start at the given permutation")
    seq.final  # invalid sequences raise here


def verify_lemma_prop(perm: Permutation, seq: SwapSequence) -> VerificationReport:
    """Sign and size constraints on net counts when the spread is at most n."""
    _require_initial(perm, seq)
    report = VerificationReport(f"net-count constraints for ({perm}), {len(seq)} swaps")
    c, d = sequence_net_counts(seq)
    n = perm.n
    if not satisfies_opt(d):
        report.rejected = f"spread {d.spread()} exceeds n={n}"
        return report
    bad_a, bad_b, bad_c = [], [], []
    for i in perm.one_line:
        for j in perm.one_line:
            if i == j or d[i] < d[j]:
                continue
            cij = c[i, j]
            if not 0 <= cij <= 1:
                bad_a.append((i, j, cij))
            if d[i] == d[j] and cij != 0:
                bad_b.append((i, j, cij))
            if d[i] - d[j] == n and cij != 1:
                bad_c.append((i, j, cij))
    report.add("lemma4a", not bad_a, _fmt_violations(bad_a))
    report.add("lemma4b", not bad_b, _fmt_violations(bad_b))
    report.add("lemma4c", not bad_c, _fmt_violations(bad_c))
    return report


def delete_element_swaps(seq: SwapSequence, k: int) -> SwapSequence:
    """Drop every swap touching ``k`` and start from the canonical restriction."""
    seq.final
    return SwapSequence(restrict(seq.initial, k), tuple(s for s in seq.swaps if k not in s))


def check_deletion(seq: SwapSequence, k: int) -> Check:
    reduced = delete_element_swaps(seq, k)
    try:
        end = reduced.final
    except InvalidSwapError as exc:
        return Check("lemma5_valid_restriction", False, f"k={k}: {exc}")
    ok = is_restriction(end, seq.final, k)
    evidence = f"k={k}: ends at ({end})" + ("" if ok else f", not a restriction of ({seq.final})")
    return Check("lemma5_valid_restriction", ok, evidence)


def choose_pivot(d: Mapping[int, int]) -> int:
    """Element of extreme displacement whose magnitude is at most n/2.

    Prefers the maximum; ties go to the smallest label.
    """
    n = len(d)
    hi, lo = max(d.values()), min(d.values())
    target = hi if 2 * hi <= n else lo
    return min(e for e, v in d.items() if v == target)


def _pairs_swapped_once(seq: SwapSequence) -> bool:
    counts = Counter(frozenset(s) for s in seq.swaps)
    return all(v <= 1 for v in counts.values())


def verify_induction_step(
    perm: Permutation, seq: SwapSequence, recursive: bool = False
) -> VerificationReport:
    """Remove a pivot element and confirm the reduced sequence keeps every hypothesis.

    With ``recursive=True`` the reduction is repeated down to two elements.
    """
    _require_initial(perm, seq)
    report = VerificationReport(f"induction step for ({perm}), {len(seq)} swaps")
    _, d = sequence_net_counts(seq)
    if not seq.final.is_sorted():
        report.rejected = f"sequence ends at ({seq.final}), which is not sorted"
    elif not _pairs_swapped_once(seq):
        report.rejected = "some pair of elements is swapped more than once"
    elif not satisfies_opt(d):
        report.rejected = f"spread {d.spread()} exceeds n={perm.n}"
    else:
        _induction_level(seq, report, recursive)
    return report


def _induction_level(seq: SwapSequence, report: VerificationReport, recursive: bool) -> None:
    while True:
        n = seq.initial.n
        m = len(seq)
        c, d = sequence_net_counts(seq)
        if n <= 2:
            report.add("thm3_length_bound", m <= diameter_bound(n), f"n={n}: {m} <= {diameter_bound(n)}")
            return
        k = choose_pivot(d)
        dk = abs(d[k])
        report.add("thm3_k_bound", 2 * dk <= n, f"n={n}: k={k}, |d(k)|={dk}")

        involved = sum(1 for s in seq.swaps if k in s)
        report.add("thm3_k_swap_count", involved == dk, f"n={n}: k={k} in {involved} swaps, |d(k)|={dk}")

        deletion = check_deletion(seq, k)
        report.checks.append(deletion._replace(evidence=f"n={n}: {deletion.evidence}"))
        if not deletion.passed:
            return
        reduced = delete_element_swaps(seq, k)
        _, d_reduced = sequence_net_counts(reduced)
        mismatched = [i for i in d_reduced if d_reduced[i] != d[i] - c[i, k]]
        spread = d_reduced.spread()
        report.add(
            "thm3_spread",
            not mismatched and spread <= n - 1,
            f"n={n}: spread(d')={spread} <= {n - 1}"
            + (f"; d' != d - c(.,k) at {_fmt_violations(mismatched)}" if mismatched else ""),
        )

        m_reduced = len(reduced)
        report.add(
            "thm3_length_bound",
            m == m_reduced + dk and m <= diameter_bound(n),
            f"n={n}: {m} = {m_reduced} + {dk} <= {diameter_bound(n)}",
        )
        if not recursive:
            return
        seq = reduced


def verify_appendix(perm: Permutation, d: Mapping[int, int]) -> VerificationReport:
    """Skew symmetry of the closed-form counts and their response to each single move."""
    if not is_feasible(perm, d):
        raise InfeasibleDisplacementError("verify_appendix needs a feasible displacement vector")
    report = VerificationReport(f"closed-form count updates for ({perm})")
    c = net_swap_matrix(perm, d)
    asym = [(i, j) for (i, j), v in c.items() if v != -c[j, i]]
    report.add("appendix_skew", not asym, _fmt_violations(asym))

    n = perm.n
    bad = []
    for p in range(1, n + 1) if n >= 2 else ():
        k, l = perm.element(p), perm.element(next_position(p, n))
        moved = apply_transposition(perm, p)
        d_moved = dict(d)
        d_moved[k] -= 1
        d_moved[l] += 1
        c_moved = net_swap_matrix(moved, d_moved)
        for pair, before in c.items():
            if pair == (k, l):
                expect = before - 1
            elif pair == (l, k):
                expect = before + 1
            else:
                expect = before
            if c_moved[pair] != expect:
                bad.append((p, pair, before, c_moved[pair]))
    report.add("appendix_decrement", not bad, _fmt_violations(bad))
    return report
