"""Initial quivers of Grassmannian cluster structures Gr(p, p+q).

The seed quiver lives on a (p-1) x (q-1) grid of mutable vertices with
rightward, downward, and back-diagonal arrows; its mutation class determines
the classification of the cluster algebra, which is also predicted in closed
form by the parameter r = (p-2)(q-2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .explore import Classification
from .matrix import ExchangeMatrix, QuiverError


class InvalidSpec(QuiverError):
    """Raised for (p, q) outside the supported range p, q >= 2."""


@dataclass(frozen=True)
class GrassmannianSpec:
    """Parameters of Gr(p, p+q): subspace dimension p, codimension q."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise InvalidSpec(f"require p, q >= 2, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        """Ambient dimension p + q."""
        return self.p + self.q

    @property
    def r(self) -> int:
        """Classification parameter (p-2)(q-2)."""
        return (self.p - 2) * (self.q - 2)

    @property
    def rank(self) -> int:
        """Number of mutable vertices, (p-1)(q-1)."""
        return (self.p - 1) * (self.q - 1)

    @property
    def dual(self) -> "GrassmannianSpec":
        return GrassmannianSpec(self.q, self.p)


def initial_quiver(spec: GrassmannianSpec) -> ExchangeMatrix:
    """Grid seed quiver of Gr(p, p+q) on (p-1)(q-1) vertices.

    Vertices v(i, j) for 1 <= i <= p-1, 1 <= j <= q-1 are numbered row-major.
    Arrows: v(i,j) -> v(i,j+1), v(i,j) -> v(i+1,j), and the back-diagonal
    v(i+1,j+1) -> v(i,j).  All weights are 1.
    """
    rows_n = spec.p - 1
    cols_n = spec.q - 1
    n = rows_n * cols_n
    b = [[0] * n for _ in range(n)]

    def idx(i: int, j: int) -> int:
        return (i - 1) * cols_n + (j - 1)

    def arrow(a: int, c: int) -> None:
        b[a][c] += 1
        b[c][a] -= 1

    for i in range(1, rows_n + 1):
        for j in range(1, cols_n + 1):
            if j < cols_n:
                arrow(idx(i, j), idx(i, j + 1))
            if i < rows_n:
                arrow(idx(i, j), idx(i + 1, j))
            if i < rows_n and j < cols_n:
                arrow(idx(i + 1, j + 1), idx(i, j))
    return ExchangeMatrix.from_rows(b)


def expected_classification(spec: GrassmannianSpec) -> Classification:
    """Closed-form classification from r: finite for r < 4, finite mutation
    type for r = 4, infinite mutation type for r > 4."""
    if spec.r < 4:
        return Classification.FINITE_TYPE
    if spec.r == 4:
        return Classification.FINITE_MUTATION_TYPE
    return Classification.INFINITE_MUTATION_TYPE


_TYPE_NAMES = {
    frozenset({3, 3}): "D4",
    frozenset({3, 4}): "E6",
    frozenset({3, 5}): "E8",
    frozenset({4, 4}): "E7(1,1)",
    frozenset({3, 6}): "E8(1,1)",
}


def expected_type_name(spec: GrassmannianSpec) -> str | None:
    """Known type label of Gr(p, p+q), or None outside the named cells."""
    if spec.p == 2:
        return f"A{spec.q - 1}"
    if spec.q == 2:
        return f"A{spec.p - 1}"
    return _TYPE_NAMES.get(frozenset({spec.p, spec.q}))
