"""Independent oracles for the frozen mutation-class sizes.

Two deduplication schemes that share no code with the canonical module:
a full n!-minimization BFS for small rank, and a networkx DiGraphMatcher
BFS for the larger classes.  E8(1,1) (5739 members, ~6 min with the
networkx oracle) was cross-checked once the same way and is pinned in
GOLDEN_CLASS_SIZES; it is not re-run here.
"""

from collections import defaultdict, deque
from itertools import permutations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher, numerical_edge_match

from quiver_atlas.explore import explore
from quiver_atlas.grassmannian import GrassmannianSpec, initial_quiver
from quiver_atlas.matrix import from_matrix

from conftest import GOLDEN_CLASS_SIZES
from test_matrix import A3_PATH


def factorial_min_key(m):
    n = m.n
    rows = m.rows
    return min(
        tuple(rows[inv[i]][inv[j]] for i in range(n) for j in range(n))
        for inv in permutations(range(n))
    )


def bfs_class_size_factorial(start):
    seen = {factorial_min_key(start)}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for k in range(m.n):
            c = m.mutate(k)
            key = factorial_min_key(c)
            if key not in seen:
                seen.add(key)
                queue.append(c)
    return len(seen)


def _to_graph(m):
    g = nx.DiGraph()
    g.add_nodes_from(range(m.n))
    for i, j, w in m.arrow_pairs():
        g.add_edge(i, j, w=w)
    return g


def _invariant(m):
    sigs = []
    for v in range(m.n):
        out = sorted(x for x in m.rows[v] if x > 0)
        inn = sorted(-x for x in m.rows[v] if x < 0)
        sigs.append((tuple(out), tuple(inn)))
    return tuple(sorted(sigs))


def bfs_class_size_networkx(start):
    edge_match = numerical_edge_match("w", 1)
    buckets = defaultdict(list)

    def add_if_new(m):
        g = _to_graph(m)
        bucket = buckets[_invariant(m)]
        for h in bucket:
            if DiGraphMatcher(g, h, edge_match=edge_match).is_isomorphic():
                return False
        bucket.append(g)
        return True

    add_if_new(start)
    count = 1
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for k in range(m.n):
            c = m.mutate(k)
            if add_if_new(c):
                count += 1
                queue.append(c)
    return count


@pytest.mark.parametrize(
    "build,expected",
    [
        (lambda: from_matrix(A3_PATH), 4),
        (lambda: initial_quiver(GrassmannianSpec(2, 5)), 6),  # A4
        (lambda: initial_quiver(GrassmannianSpec(3, 3)), GOLDEN_CLASS_SIZES["D4"]),
        (lambda: initial_quiver(GrassmannianSpec(3, 4)), GOLDEN_CLASS_SIZES["E6"]),
    ],
    ids=["A3", "A4", "D4", "E6"],
)
def test_factorial_oracle_agrees(build, expected):
    start = build()
    assert bfs_class_size_factorial(start) == expected
    assert explore(start).class_size == expected


@pytest.mark.parametrize(
    "cell,name",
    [((3, 3), "D4"), ((3, 4), "E6"), ((4, 4), "E7(1,1)"), ((3, 5), "E8")],
)
def test_networkx_oracle_agrees(cell, name):
    start = initial_quiver(GrassmannianSpec(*cell))
    assert bfs_class_size_networkx(start) == GOLDEN_CLASS_SIZES[name]
