"""Canonical labeling of quivers up to vertex permutation.

The canonical form is computed by weighted-degree partition refinement
(vertices are colored by the multiset of signed incident weights and their
neighbors' colors, iterated to a fixed point) followed by backtracking over
the surviving candidate orderings.  Among all labelings compatible with the
refinement, the one whose row-major integer serialization is lexicographically
smallest is chosen, so the resulting key is deterministic across runs and
platforms, invariant under vertex relabeling, and equal keys imply isomorphic
quivers.

A full n!-enumeration oracle is provided for cross-checking in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .matrix import ExchangeMatrix


@dataclass(frozen=True)
class QuiverKey:
    """Stable identifier of a quiver up to vertex relabeling."""

    data: bytes
    n: int

    def hex(self) -> str:
        """Lowercase hex rendering, used in logs and cache files."""
        return self.data.hex()


def _refine(rows, colors, n):
    """Iterate neighborhood-signature coloring to a fixed point.

    Colors are normalized to ranks of sorted signatures each round, so the
    result depends only on the quiver up to relabeling.
    """
    while True:
        sigs = []
        for v in range(n):
            rv = rows[v]
            nb = sorted(
                (colors[w], rv[w]) for w in range(n) if rv[w] != 0
            )
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(ranks[s] for s in sigs)
        if new == colors:
            return colors
        colors = new


def _canonical_flat(rows, n):
    """Return (flat row-major tuple, permutation old->new) of the canonical form."""
    best_flat = None
    best_perm = None

    def visit_leaf(colors):
        nonlocal best_flat, best_perm
        inv = [0] * n
        for v, c in enumerate(colors):
            inv[c] = v
        flat = tuple(rows[inv[i]][inv[j]] for i in range(n) for j in range(n))
        if best_flat is None or flat < best_flat:
            best_flat = flat
            best_perm = colors
        return flat

    def search(colors):
        colors = _refine(rows, colors, n)
        # target cell: lowest color class that is not a singleton
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = -1
        for c, cnt in enumerate(counts):
            if cnt > 1:
                target = c
                break
        if target < 0:
            visit_leaf(colors)
            return
        for v in range(n):
            if colors[v] == target:
                search(tuple(-1 if w == v else colors[w] for w in range(n)))

    if all(x == 0 for row in rows for x in row):
        # zero matrix: every labeling is equivalent, avoid n! branching
        return tuple(0 for _ in range(n * n)), tuple(range(n))
    search((0,) * n)
    return best_flat, tuple(best_perm)


def _flat_to_bytes(flat, n) -> bytes:
    body = ",".join(
        "[" + ",".join(str(flat[i * n + j]) for j in range(n)) + "]"
        for i in range(n)
    )
    return ("[" + body + "]").encode("ascii")


def canonical_form(m: ExchangeMatrix) -> tuple[QuiverKey, tuple[int, ...]]:
    """Canonical key and a permutation (old -> new) realizing it.

    ``m.permuted(perm).serialize().encode()`` equals ``key.data``.
    """
    flat, perm = _canonical_flat(m.rows, m.n)
    return QuiverKey(_flat_to_bytes(flat, m.n), m.n), perm


def canonical_key(m: ExchangeMatrix) -> QuiverKey:
    return canonical_form(m)[0]


def is_isomorphic(m1: ExchangeMatrix, m2: ExchangeMatrix) -> bool:
    """True iff some vertex permutation maps m1 onto m2."""
    if m1.n != m2.n:
        return False
    return canonical_key(m1).data == canonical_key(m2).data


def brute_force_key(m: ExchangeMatrix) -> bytes:
    """Reference oracle: minimum serialization over all n! permutations.

    Exponential; intended for tests with n <= 8.
    """
    n = m.n
    rows = m.rows
    best = None
    for inv in permutations(range(n)):
        flat = tuple(rows[inv[i]][inv[j]] for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    return _flat_to_bytes(best, n)


def brute_force_isomorphic(m1: ExchangeMatrix, m2: ExchangeMatrix) -> bool:
    """Reference oracle: search all n! permutations for an isomorphism."""
    if m1.n != m2.n:
        return False
    n = m1.n
    a, b = m1.rows, m2.rows
    for perm in permutations(range(n)):
        if all(
            a[i][j] == b[perm[i]][perm[j]] for i in range(n) for j in range(n)
        ):
            return True
    return False
