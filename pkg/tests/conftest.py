"""Independent reference implementations used as oracles by the tests.

Nothing here imports the package's search or sorting code: permutations are
plain tuples and moves are done by hand.
"""

from collections import deque
from functools import lru_cache
from itertools import permutations

import pytest
from hypothesis import strategies as st


def cyclic_moves(line):
    """Yield (swap, next_line) for every cyclically adjacent exchange."""
    n = len(line)
    for p in range(n):
        q = (p + 1) % n
        if p == q:
            continue
        nxt = list(line)
        nxt[p], nxt[q] = nxt[q], nxt[p]
        nxt = tuple(nxt)
        yield (line[p], line[q]), nxt


@lru_cache(maxsize=None)
def naive_distances(n):
    """Plain BFS from the identity over tuples."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for _, nxt in cyclic_moves(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    return dist


def all_perms(n):
    return list(permutations(range(1, n + 1)))


def shortest_swap_sequences(line):
    """Every minimum-length sequence of element swaps that sorts ``line``."""
    dist = naive_distances(len(line))
    out = []

    def walk(cur, acc):
        if dist[cur] == 0:
            out.append(tuple(acc))
            return
        for swap, nxt in cyclic_moves(cur):
            if dist[nxt] == dist[cur] - 1:
                walk(nxt, acc + [swap])

    walk(tuple(line), [])
    return out


def tally(swaps, labels):
    """Net counts c[(i, j)] and displacement d[i] of a swap list."""
    c = {(i, j): 0 for i in labels for j in labels if i != j}
    d = {i: 0 for i in labels}
    for i, j in swaps:
        c[i, j] += 1
        c[j, i] -= 1
        d[i] += 1
        d[j] -= 1
    return c, d


def feasible_states(min_n=2, max_n=9):
    """Random permutation with a random feasible vector (initial plus +-n shifts)."""

    from circsort.displacement import DisplacementVector, initial_displacement
    from circsort.perm_core import Permutation

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        perm = Permutation(draw(st.permutations(range(1, n + 1))))
        shifts = draw(st.lists(st.integers(-2, 2), min_size=n - 1, max_size=n - 1))
        shifts.append(-sum(shifts))
        d0 = initial_displacement(perm)
        return perm, DisplacementVector({i: d0[i] + n * s for i, s in zip(range(1, n + 1), shifts)})

    return build()


@pytest.fixture
def example_b():
    """(3,4,1,2) sorted by [(4,1),(3,1),(4,2),(3,2)]."""
    from circsort import Permutation, SwapSequence

    return SwapSequence(Permutation((3, 4, 1, 2)), [(4, 1), (3, 1), (4, 2), (3, 2)])
