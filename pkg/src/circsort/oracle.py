"""Exact distances in the Cayley graph of S_n under cyclically adjacent transpositions.

Permutations are packed 4 bits per position into a single int (element - 1
in the nibble for that position), which keeps the visited sets small.
Every generator is an involution, so the graph is undirected and the
distance from a permutation to the identity equals the distance back.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from .perm_core import Permutation, PermutationError, generators

DEFAULT_CAP = 10
PACK_LIMIT = 16


class OracleCapError(ValueError):
    """Requested n is above the configured cap."""


def _check_n(n: int, cap: int) -> None:
    if n > PACK_LIMIT:
        raise OracleCapError(f"n={n} exceeds the packing limit of {PACK_LIMIT}")
    if n > cap:
        raise OracleCapError(f"n={n} exceeds the oracle cap {cap}")


def pack(one_line) -> int:
    key = 0
    for p, e in enumerate(one_line):
        key |= (e - 1) << (4 * p)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple(((key >> (4 * p)) & 0xF) + 1 for p in range(n))


def _moves(n: int) -> list[tuple[int, int]]:
    return [(4 * (p - 1), 4 * (p % n)) for p in generators(n)]


def _neighbours(key: int, moves: list[tuple[int, int]]):
    for a, b in moves:
        x = ((key >> a) ^ (key >> b)) & 0xF
        yield key ^ ((x << a) | (x << b))


def _standard(perm: Permutation) -> None:
    if not perm.has_standard_labels():
        raise PermutationError("the oracle works on labels 1..n")


class DistanceTable(NamedTuple):
    n: int
    dist: dict[int, int]
    diameter: int
    witnesses: tuple[tuple[int, ...], ...]

    def distance(self, perm: Permutation) -> int:
        return self.dist[pack(perm.one_line)]


_built: set[int] = set()


@lru_cache(maxsize=None)
def _table(n: int) -> DistanceTable:
    moves = _moves(n)
    start = pack(range(1, n + 1))
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for key in frontier:
            for nb in _neighbours(key, moves):
                if nb not in dist:
                    dist[nb] = depth
                    nxt.append(nb)
        if not nxt:
            depth -= 1
        frontier = nxt
    witnesses = tuple(sorted(unpack(k, n) for k, v in dist.items() if v == depth))
    return DistanceTable(n, dist, depth, witnesses)


def distance_table(n: int, cap: int = DEFAULT_CAP) -> DistanceTable:
    """Full BFS from the identity; built once per n and cached."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_n(n, cap)
    _built.add(n)
    return _table(n)


def bidirectional_distance(perm: Permutation) -> int:
    """Single-pair search meeting in the middle; expands whole layers of the smaller side."""
    _standard(perm)
    n = perm.n
    src, dst = pack(perm.one_line), pack(range(1, n + 1))
    if src == dst:
        return 0
    moves = _moves(n)
    seen = ({src: 0}, {dst: 0})
    frontiers = ([src], [dst])
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = seen[side], seen[1 - side]
        best = None
        nxt = []
        for key in frontiers[side]:
            dk = mine[key] + 1
            for nb in _neighbours(key, moves):
                if nb in other:
                    total = dk + other[nb]
                    if best is None or total < best:
                        best = total
                if nb not in mine:
                    mine[nb] = dk
                    nxt.append(nb)
        if best is not None:
            return best
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    raise AssertionError("Cayley graph of S_n is connected; search cannot fail")


def bfs_distance(perm: Permutation, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum number of cyclically adjacent transpositions that sort ``perm``."""
    _standard(perm)
    _check_n(perm.n, cap)
    if perm.n in _built:
        return _table(perm.n).distance(perm)
    return bidirectional_distance(perm)


def diameter(n: int, cap: int = DEFAULT_CAP) -> tuple[int, tuple[tuple[int, ...], ...]]:
    if n < 2:
        raise ValueError("diameter needs n >= 2")
    table = distance_table(n, cap)
    return table.diameter, table.witnesses


def distance_histogram(n: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    if n < 2:
        raise ValueError("histogram needs n >= 2")
    table = distance_table(n, cap)
    return dict(sorted(Counter(table.dist.values()).items()))


def feng_worst_case(n: int) -> Permutation:
    """(n/2+1, ..., n, 1, ..., n/2): needs exactly n^2/4 moves."""
    if n < 2 or n % 2:
        raise ValueError("the half-rotation witness is defined for even n >= 2")
    h = n // 2
    return Permutation(list(range(h + 1, n + 1)) + list(range(1, h + 1)))


def rotate_relabel(perm: Permutation, shift: int = 1) -> Permutation:
    """Conjugate by the n-cycle: rotate positions and add ``shift`` to every label mod n."""
    _standard(perm)
    n = perm.n
    line = [0] * n
    for p, e in enumerate(perm.one_line):
        line[(p + shift) % n] = (e - 1 + shift) % n + 1
    return Permutation(line)
