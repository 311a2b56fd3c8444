"""Side-by-side classification of Gr(p, p+q) and the tiling {p,q}.

The two trichotomies are matched under finite type <-> spherical,
finite mutation type <-> planar, infinite mutation type <-> hyperbolic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .explore import (
    DEFAULT_CAP,
    Classification,
    MutationClassReport,
    explore,
)
from .grassmannian import GrassmannianSpec, initial_quiver
from .tiling import GeometryClass, SchlafliSymbol, TilingReport, tiling_report

CATEGORY_MAP = {
    Classification.FINITE_TYPE: GeometryClass.SPHERICAL,
    Classification.FINITE_MUTATION_TYPE: GeometryClass.PLANAR,
    Classification.INFINITE_MUTATION_TYPE: GeometryClass.HYPERBOLIC,
}

REGISTRY_ANCHORS = {
    (4, 4): "E7(1,1)",
    (3, 6): "E8(1,1)",
}


@dataclass(frozen=True)
class CorrespondenceRow:
    p: int
    q: int
    r: int
    cluster: MutationClassReport
    tiling: TilingReport
    match: bool


def categories_match(
    classification: Classification, geometry: GeometryClass
) -> bool:
    return CATEGORY_MAP.get(classification) is geometry


def reference_registry(cap: int = DEFAULT_CAP, explorer=None) -> dict[str, str]:
    """Fingerprint -> name registry for finite-mutation-type classes.

    Anchored to the known assignments class(Gr(4,8)) = E7(1,1) and
    class(Gr(3,9)) = E8(1,1); built by exploring those two classes.
    """
    if explorer is None:
        explorer = explore
    registry = {}
    for (p, q), name in REGISTRY_ANCHORS.items():
        report = explorer(initial_quiver(GrassmannianSpec(p, q)), cap)
        if report.fingerprint is None:
            raise RuntimeError(
                f"registry anchor Gr({p},{p + q}) did not enumerate "
                f"(classification {report.classification.value})"
            )
        registry[report.fingerprint] = name
    return registry


def classify_cell(
    p: int,
    q: int,
    cap: int = DEFAULT_CAP,
    registry: dict[str, str] | None = None,
    explorer=None,
) -> CorrespondenceRow:
    """Run both classifications for one (p, q) cell.

    ``explorer`` may be swapped for a caching wrapper; it must have the same
    signature and semantics as :func:`quiver_atlas.explore.explore`.
    """
    if explorer is None:
        explorer = explore
    spec = GrassmannianSpec(p, q)
    cluster = explorer(initial_quiver(spec), cap, registry)
    tiling = tiling_report(SchlafliSymbol(p, q))
    return CorrespondenceRow(
        p=p,
        q=q,
        r=spec.r,
        cluster=cluster,
        tiling=tiling,
        match=categories_match(cluster.classification, tiling.geometry),
    )
