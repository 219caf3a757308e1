"""Displacement vectors: feasibility, normalization, and net swap counts.

``d[i]`` is the net clockwise displacement of element ``i`` over a sequence of
swaps.  A vector is feasible for a permutation when it sums to zero and moves
every element onto its sorted position modulo n.  Among feasible vectors, those
with spread ``max d - min d <= n`` are the ones realised by shortest sorts.
"""

from __future__ import annotations

from itertools import permutations as _ordered_pairs
from typing import Iterable, Iterator, Mapping

from .perm_core import Permutation, PermutationError


class InfeasibleDisplacementError(ValueError):
    pass


class DisplacementVector(Mapping[int, int]):
    """Immutable element -> signed displacement mapping.

    The modulus ``n`` is the number of elements.
    """

    __slots__ = ("_d",)

    def __init__(self, values: Mapping[int, int] | Iterable[tuple[int, int]]):
        self._d = dict(sorted(dict(values).items()))

    @classmethod
    def from_list(cls, values: Iterable[int]) -> DisplacementVector:
        """Element-ordered list for labels 1..n."""
        return cls({i: v for i, v in enumerate(values, start=1)})

    @classmethod
    def zeros(cls, labels: Iterable[int]) -> DisplacementVector:
        return cls({i: 0 for i in labels})

    def __getitem__(self, i: int) -> int:
        return self._d[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DisplacementVector):
            return self._d == other._d
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(tuple(self._d.items()))

    def __repr__(self) -> str:
        return f"DisplacementVector({self._d!r})"

    @property
    def n(self) -> int:
        return len(self._d)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(self._d)

    def by_element(self) -> list[int]:
        return list(self._d.values())

    def by_position(self, perm: Permutation) -> list[int]:
        return [self._d[e] for e in perm.one_line]

    def spread(self) -> int:
        if not self._d:
            return 0
        return max(self._d.values()) - min(self._d.values())

    def total(self) -> int:
        return sum(self._d.values())

    def abs_total(self) -> int:
        return sum(abs(v) for v in self._d.values())

    def updated(self, changes: Mapping[int, int]) -> DisplacementVector:
        d = dict(self._d)
        for i, delta in changes.items():
            d[i] += delta
        return DisplacementVector(d)


def _target_positions(labels: Iterable[int]) -> dict[int, int]:
    # Sorted order is the target; for labels 1..n this is i -> i.
    return {e: r for r, e in enumerate(sorted(labels), start=1)}


def _check_labels(perm: Permutation, d: Mapping[int, int]) -> None:
    if set(perm.one_line) != set(d):
        raise PermutationError("displacement vector and permutation have different labels")


def initial_displacement(perm: Permutation) -> DisplacementVector:
    """d(i) = i - pi(i): the displacement bubble sort would realise."""
    if not perm.has_standard_labels():
        raise PermutationError("initial displacement requires labels 1..n")
    return DisplacementVector({i: i - perm.position(i) for i in perm.one_line})


def is_feasible(perm: Permutation, d: Mapping[int, int]) -> bool:
    _check_labels(perm, d)
    if sum(d.values()) != 0:
        return False
    n = perm.n
    target = _target_positions(perm.one_line)
    return all((perm.position(i) + d[i]) % n == target[i] % n for i in perm.one_line)


def satisfies_opt(d: Mapping[int, int]) -> bool:
    if not d:
        return True
    return max(d.values()) - min(d.values()) <= len(d)


def normalize_steps(perm: Permutation, d: Mapping[int, int]) -> Iterator[DisplacementVector]:
    """Yield the vector after each ``+-n`` shift, ending with one satisfying the spread bound."""
    if not is_feasible(perm, d):
        raise InfeasibleDisplacementError("normalize needs a feasible displacement vector")
    n = perm.n
    cur = dict(d)
    while True:
        hi = max(cur.values())
        lo = min(cur.values())
        if hi - lo <= n:
            return
        i = min(e for e, v in cur.items() if v == hi)
        j = min(e for e, v in cur.items() if v == lo)
        before = sum(abs(v) for v in cur.values())
        cur[i] -= n
        cur[j] += n
        after = sum(abs(v) for v in cur.values())
        assert after < before, "normalization must strictly decrease sum |d|"
        yield DisplacementVector(cur)


def normalize(perm: Permutation, d: Mapping[int, int]) -> DisplacementVector:
    out = DisplacementVector(d)
    for out in normalize_steps(perm, d):
        pass
    return out


def optimal_displacement(perm: Permutation) -> DisplacementVector:
    return normalize(perm, initial_displacement(perm))


def lower_bound(d: Mapping[int, int]) -> int:
    """Half the total absolute displacement; each swap moves it by at most one."""
    if sum(d.values()) != 0:
        raise ValueError("lower bound is defined only for vectors summing to zero")
    total = sum(abs(v) for v in d.values())
    assert total % 2 == 0
    return total // 2


def _max_shift_below(a: int, b: int, n: int) -> int:
    # max{m : a > b + m*n}
    return -((b - a) // n) - 1


def net_swap_count(perm: Permutation, d: Mapping[int, int], i: int, j: int) -> int:
    """Closed-form net number of ``(i, j)`` swaps in any sort of ``perm`` realising ``d``."""
    if i == j:
        raise PermutationError("net_swap_count needs two distinct elements")
    if not is_feasible(perm, d):
        raise InfeasibleDisplacementError("net_swap_count needs a feasible displacement vector")
    return _net_swap_count(perm, d, i, j)


def _net_swap_count(perm: Permutation, d: Mapping[int, int], i: int, j: int) -> int:
    pi, pj = perm.position(i), perm.position(j)
    m = _max_shift_below(pi + d[i], pj + d[j], perm.n)
    return m + 1 if pi < pj else m


def net_swap_matrix(perm: Permutation, d: Mapping[int, int]) -> dict[tuple[int, int], int]:
    """Formula value of c(i, j) for every ordered pair of distinct elements."""
    if not is_feasible(perm, d):
        raise InfeasibleDisplacementError("net_swap_matrix needs a feasible displacement vector")
    return {(i, j): _net_swap_count(perm, d, i, j) for i, j in _ordered_pairs(perm.one_line, 2)}
