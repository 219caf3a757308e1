"""Sorting with cyclically adjacent swaps driven by a displacement vector."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple

from .displacement import (
    DisplacementVector,
    InfeasibleDisplacementError,
    initial_displacement,
    is_feasible,
    lower_bound,
    optimal_displacement,
)
from .perm_core import InvalidSwapError, Permutation, PermutationError, Swap


def diameter_bound(n: int) -> int:
    return n * n // 4


@dataclass(frozen=True)
class SwapSequence:
    """Swaps applied in order to ``initial``; validity is checked on first replay."""

    initial: Permutation
    swaps: tuple[Swap, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "swaps", tuple(Swap(*s) for s in self.swaps))

    def __len__(self) -> int:
        return len(self.swaps)

    def _walk(self) -> Iterator[tuple[int, list[int]]]:
        # Yields (0-based position of the clockwise mover, line after the swap);
        # the line is mutated in place.
        line = list(self.initial.one_line)
        pos = {e: p for p, e in enumerate(line)}
        n = len(line)
        for step, (i, j) in enumerate(self.swaps):
            if i == j or i not in pos or j not in pos or pos[j] != (pos[i] + 1) % n:
                raise InvalidSwapError(
                    f"step {step}: {i} is not directly before {j} in ({' '.join(map(str, line))})",
                    step=step,
                )
            p, q = pos[i], pos[j]
            line[p], line[q] = j, i
            pos[i], pos[j] = q, p
            yield p, line

    def states(self) -> Iterator[Permutation]:
        """Yield the permutation before the first swap and after every swap."""
        yield self.initial
        for _, line in self._walk():
            yield Permutation(line)

    @cached_property
    def _replayed(self) -> tuple[Permutation, tuple[int, ...]]:
        line = list(self.initial.one_line)
        ts = []
        for p, line in self._walk():
            ts.append(p + 1)
        return Permutation(line), tuple(ts)

    @property
    def final(self) -> Permutation:
        return self._replayed[0]

    @property
    def transpositions(self) -> tuple[int, ...]:
        """1-based position of the clockwise-moving element at each step."""
        return self._replayed[1]


class NetCountMatrix:
    """Skew-symmetric net swap counts ``c[i, j]``; missing pairs are zero."""

    __slots__ = ("labels", "_c")

    def __init__(self, labels: Iterable[int], counts: Mapping[tuple[int, int], int] = ()):
        self.labels = tuple(sorted(labels))
        self._c = {k: v for k, v in dict(counts).items() if v}

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self._c.get(pair, 0)

    def nonzero(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def row_sum(self, i: int) -> int:
        return sum(self[i, j] for j in self.labels if j != i)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): self[i, j] for i in self.labels for j in self.labels if i != j}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NetCountMatrix):
            return self.labels == other.labels and self._c == other._c
        if isinstance(other, Mapping):
            return self.as_dict() == {k: v for k, v in other.items()}
        return NotImplemented

    def __repr__(self) -> str:
        return f"NetCountMatrix({self._c!r})"


def sequence_net_counts(seq: SwapSequence) -> tuple[NetCountMatrix, DisplacementVector]:
    seq.final  # raises InvalidSwapError on a bad sequence
    counts: dict[tuple[int, int], int] = {}
    d = {e: 0 for e in seq.initial.one_line}
    for i, j in seq.swaps:
        counts[i, j] = counts.get((i, j), 0) + 1
        counts[j, i] = counts.get((j, i), 0) - 1
        d[i] += 1
        d[j] -= 1
    return NetCountMatrix(seq.initial.one_line, counts), DisplacementVector(d)


class Validation(NamedTuple):
    ok: bool
    step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_sequence(seq: SwapSequence, target: Permutation) -> Validation:
    try:
        final = seq.final
    except InvalidSwapError as exc:
        return Validation(False, exc.step, str(exc))
    if final != target:
        return Validation(False, len(seq), f"sequence ends at ({final}), not ({target})")
    return Validation(True)


def _greedy(perm: Permutation, d: Mapping[int, int], wrap: bool) -> SwapSequence:
    line = list(perm.one_line)
    n = len(line)
    cur = dict(d)
    swaps = []
    last = n - 1 if wrap else n - 2
    start = 0
    while True:
        # Pairs before ``start`` are known not to qualify, so this finds the
        # first qualifying position counted from 1.
        p = start
        while p <= last:
            q = (p + 1) % n
            if cur[line[p]] > cur[line[q]]:
                break
            p += 1
        else:
            break
        q = (p + 1) % n
        i, j = line[p], line[q]
        # Feasibility forces a gap of at least 2, so the sum of squares drops
        # by at least 2 and the spread cannot grow.
        assert cur[i] - cur[j] >= 2
        cur[i] -= 1
        cur[j] += 1
        line[p], line[q] = j, i
        swaps.append(Swap(i, j))
        start = 0 if p == n - 1 else max(0, p - 1)
    if any(cur.values()):
        raise InfeasibleDisplacementError(f"greedy sort stranded with residual displacement {cur}")
    return SwapSequence(perm, swaps)


def sort_by_displacement(perm: Permutation, d: Mapping[int, int]) -> SwapSequence:
    """Sort ``perm`` with net displacement ``d``.

    Repeatedly swaps the first cyclically adjacent pair (scanning positions
    from 1) whose leading element has the larger residual displacement.
    """
    if not is_feasible(perm, d):
        raise InfeasibleDisplacementError("displacement vector is not feasible for this permutation")
    return _greedy(perm, d, wrap=True)


def optimal_sort(perm: Permutation) -> SwapSequence:
    """Minimum-length sort by cyclically adjacent transpositions."""
    return _greedy(perm, optimal_displacement(perm), wrap=True)


def bubble_sort(perm: Permutation) -> SwapSequence:
    """Adjacent-only sort: the greedy rule with d(i) = i - pi(i) and no wrap move."""
    return _greedy(perm, initial_displacement(perm), wrap=False)


def sequence_to_json(seq: SwapSequence) -> dict:
    perm = seq.initial
    if not perm.has_standard_labels():
        raise PermutationError("JSON output requires labels 1..n")
    _, d = sequence_net_counts(seq)
    return {
        "n": perm.n,
        "pi_inv": list(perm.one_line),
        "d_by_element": d.by_element(),
        "d_by_position": d.by_position(perm),
        "swaps": [list(s) for s in seq.swaps],
        "transpositions": list(seq.transpositions),
        "length": len(seq),
        "upper_bound": diameter_bound(perm.n),
        "lower_bound": lower_bound(d),
    }
