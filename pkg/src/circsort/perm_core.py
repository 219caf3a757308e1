"""Permutations over arbitrary positive-integer label sets, arranged on a cycle.

A permutation is stored in one-line notation: ``one_line[p - 1]`` is the
element sitting in position ``p``.  Positions are always ``1..n``; element
labels may be any distinct positive integers, which is what restriction
(dropping one element) produces.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class PermutationError(ValueError):
    """Malformed permutation input or an operation outside its domain."""


class InvalidSwapError(PermutationError):
    """A swap was requested for elements that are not cyclically adjacent."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class Swap(NamedTuple):
    """Element-level move: ``i`` goes clockwise (p -> p+1), ``j`` counterclockwise."""

    i: int
    j: int


class Permutation:
    __slots__ = ("one_line", "_pos")

    def __init__(self, one_line: Iterable[int]):
        one_line = tuple(one_line)
        if not one_line:
            raise PermutationError("permutation must contain at least one element")
        pos = {}
        for p, e in enumerate(one_line, start=1):
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise PermutationError(f"element {e!r} is not a positive integer")
            if e in pos:
                raise PermutationError(f"duplicate element {e}")
            pos[e] = p
        self.one_line = one_line
        self._pos = pos

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.one_line)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.one_line))

    def position(self, i: int) -> int:
        """Position of element ``i``."""
        try:
            return self._pos[i]
        except KeyError:
            raise PermutationError(f"unknown element {i}") from None

    def element(self, p: int) -> int:
        """Element at position ``p``."""
        if not 1 <= p <= self.n:
            raise PermutationError(f"position {p} out of range 1..{self.n}")
        return self.one_line[p - 1]

    def __contains__(self, i: object) -> bool:
        return i in self._pos

    def is_sorted(self) -> bool:
        return all(a < b for a, b in zip(self.one_line, self.one_line[1:]))

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 1))

    def has_standard_labels(self) -> bool:
        return self.labels == tuple(range(1, self.n + 1))

    def inverse(self) -> Permutation:
        if not self.has_standard_labels():
            raise PermutationError("inverse requires labels 1..n")
        return Permutation(self._pos[i] for i in range(1, self.n + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line == other.one_line

    def __hash__(self) -> int:
        return hash(self.one_line)

    def __len__(self) -> int:
        return len(self.one_line)

    def __repr__(self) -> str:
        return f"Permutation({self.one_line!r})"

    def __str__(self) -> str:
        return " ".join(map(str, self.one_line))


def make_permutation(one_line: Sequence[int]) -> Permutation:
    return Permutation(one_line)


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3 2 1 4"`` or ``"3,2,1,4"`` into a permutation.

    Error messages name the offending token.
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    if not tokens:
        raise PermutationError("empty permutation")
    values = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise PermutationError(f"invalid token {tok!r}: not an integer") from None
        if v < 1:
            raise PermutationError(f"invalid token {tok!r}: not a positive integer")
        values.append(v)
    return Permutation(values)


def format_permutation(perm: Permutation) -> str:
    return str(perm)


def next_position(p: int, n: int) -> int:
    return p % n + 1


def generators(n: int) -> list[int]:
    """Distinct cyclically adjacent transpositions, each named by its first position.

    For n = 2 the pair (1, 2) and the wrap (2, 1) are the same move, so only
    position 1 is listed.
    """
    if n <= 1:
        return []
    if n == 2:
        return [1]
    return list(range(1, n + 1))


def directly_before(perm: Permutation, i: int, j: int) -> bool:
    """True iff ``j`` occupies the position cyclically following ``i``."""
    if i == j:
        raise PermutationError("directly_before needs two distinct elements")
    pi, pj = perm.position(i), perm.position(j)
    return pj == next_position(pi, perm.n)


def _check_position(perm: Permutation, p: int) -> None:
    if not 1 <= p <= perm.n:
        raise PermutationError(f"position {p} out of range 1..{perm.n}")
    if perm.n == 1:
        raise PermutationError("a single-element permutation has no transpositions")


def apply_transposition(perm: Permutation, p: int) -> Permutation:
    """Exchange the elements at positions ``p`` and ``p+1`` (mod n)."""
    _check_position(perm, p)
    q = next_position(p, perm.n)
    line = list(perm.one_line)
    line[p - 1], line[q - 1] = line[q - 1], line[p - 1]
    return Permutation(line)


def transposition_to_swap(perm: Permutation, p: int) -> Swap:
    _check_position(perm, p)
    return Swap(perm.element(p), perm.element(next_position(p, perm.n)))


def apply_swap(perm: Permutation, s: Swap) -> Permutation:
    i, j = s
    if i == j or i not in perm or j not in perm or not directly_before(perm, i, j):
        raise InvalidSwapError(f"{i} is not directly before {j} in ({perm})")
    return apply_transposition(perm, perm.position(i))


def restrict(perm: Permutation, k: int) -> Permutation:
    """Drop ``k`` and close the gap; every other element keeps its relative order."""
    if k not in perm:
        raise PermutationError(f"unknown element {k}")
    if perm.n == 1:
        raise PermutationError("cannot restrict a single-element permutation")
    return Permutation(e for e in perm.one_line if e != k)


def _successor_map(perm: Permutation) -> dict[int, int]:
    line = perm.one_line
    return {line[p]: line[(p + 1) % len(line)] for p in range(len(line))}


def required_successors(perm: Permutation, k: int) -> dict[int, int]:
    """The ``i -> j`` relations any restriction of ``perm`` to labels without ``k`` must have."""
    succ = _successor_map(perm)
    out = {}
    for i, j in succ.items():
        if i == k:
            continue
        out[i] = succ[k] if j == k else j
    return out


def is_restriction(candidate: Permutation, perm: Permutation, k: int) -> bool:
    if k not in perm:
        raise PermutationError(f"unknown element {k}")
    expected = set(perm.one_line) - {k}
    if set(candidate.one_line) != expected:
        raise PermutationError("candidate labels must equal the original labels minus k")
    if candidate.n == 1:
        return True
    cand_succ = _successor_map(candidate)
    return all(cand_succ[i] == j for i, j in required_successors(perm, k).items())


def inversions(perm: Permutation) -> int:
    """Number of element pairs appearing in decreasing order."""
    return sum(1 for a, b in combinations(perm.one_line, 2) if a > b)


def rotations(perm: Permutation) -> list[Permutation]:
    line = perm.one_line
    return [Permutation(line[r:] + line[:r]) for r in range(len(line))]
