"""Mutation-class enumeration and classification.

Breadth-first closure of a quiver under mutation at every vertex,
deduplicated by canonical key.  Classification:

* infinite mutation type: some reached quiver carries an edge of weight >= 3
  inside a connected component with at least 3 vertices (early exit, with a
  replayable witness sequence);
* finite type: the closure completes and every member has weights <= 1;
* finite mutation type: the closure completes with some weight 2;
* inconclusive: the exploration cap was hit first.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .canonical import canonical_key
from .matrix import ExchangeMatrix, QuiverError

DEFAULT_CAP = 10**6

UNNAMED_FINITE_MUTATION = "unnamed-finite-mutation"


class CapZero(QuiverError):
    """Raised when explore() is called with cap < 1."""


class NoTreeRepresentative(QuiverError):
    """No class member is an A/D/E tree; signals a classification bug."""


class Classification(Enum):
    FINITE_TYPE = "finite"
    FINITE_MUTATION_TYPE = "finite-mutation"
    INFINITE_MUTATION_TYPE = "infinite-mutation"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MutationClassReport:
    """Outcome of a mutation-class exploration.

    class_size and member_keys are present iff the class was fully
    enumerated; infinite_witness is present iff the classification is
    infinite mutation type, and replaying it from the start quiver reaches
    an edge weight >= 3.
    """

    classification: Classification
    class_size: int | None
    max_weight_seen: int
    infinite_witness: tuple[int, ...] | None
    type_name: str | None
    explored: int
    member_keys: tuple[str, ...] | None = None
    fingerprint: str | None = None


def _has_heavy_component(m: ExchangeMatrix) -> bool:
    """True iff some |b_ij| >= 3 lies in a connected component of size >= 3.

    The weight criterion for infinite mutation type is false at rank 2, so
    heavy edges in 2-vertex components are ignored.
    """
    n = m.n
    heavy = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if abs(m.rows[i][j]) >= 3
    ]
    if not heavy:
        return False
    comps = m.components()
    size_of = {}
    for comp in comps:
        for v in comp:
            size_of[v] = len(comp)
    return any(size_of[i] >= 3 for i, _ in heavy)


def replay(start: ExchangeMatrix, witness) -> ExchangeMatrix:
    """Apply a mutation sequence to the start quiver."""
    return start.mutate_sequence(witness)


PROBE_BEAM = 4
PROBE_WIDTH = 16


def _probe_candidates(m: ExchangeMatrix) -> list[int]:
    """Mutation candidates for the witness probe: vertices carrying the
    heaviest incident weights, ties broken by index."""
    scored = sorted(
        (-max((abs(x) for x in m.rows[v]), default=0), v) for v in range(m.n)
    )
    return [v for _, v in scored[:PROBE_WIDTH]]


def _witness_probe(start: ExchangeMatrix) -> tuple[tuple[int, ...] | None, int]:
    """Deterministic guided search for a weight->=3 witness.

    Beam search over mutation sequences, scored by (max weight, sum of
    squared entries); both grow along mutation-infinite directions.  Returns
    (witness, quivers examined); (None, examined) means the probe budget ran
    out without a witness, which is expected for mutation-finite classes.
    """
    n = start.n
    if n < 3:
        return None, 0
    max_steps = 8 * n
    beam = [(start, ())]
    seen = {start.rows}
    for _ in range(max_steps):
        scored = []
        for m, seq in beam:
            for k in _probe_candidates(m):
                c = m.mutate(k)
                if _has_heavy_component(c):
                    return seq + (k,), len(seen)
                if c.rows in seen:
                    continue
                seen.add(c.rows)
                w = c.max_weight()
                ss = sum(x * x for row in c.rows for x in row)
                scored.append(((w, ss), c, seq + (k,)))
        if not scored:
            return None, len(seen)
        scored.sort(key=lambda t: t[0], reverse=True)
        beam = [(c, seq) for _, c, seq in scored[:PROBE_BEAM]]
    return None, len(seen)


def class_fingerprint(member_keys) -> str:
    """sha256 over the sorted canonical keys of a fully enumerated class."""
    h = hashlib.sha256()
    for k in sorted(member_keys):
        h.update(k.encode("ascii"))
        h.update(b"\n")
    return h.hexdigest()


def explore(
    start: ExchangeMatrix,
    cap: int = DEFAULT_CAP,
    registry: dict[str, str] | None = None,
) -> MutationClassReport:
    """Enumerate the mutation class of ``start`` up to isomorphism.

    ``cap`` bounds the number of canonical forms visited; hitting it without
    an infinite-type witness yields Inconclusive (never an exception).
    ``registry`` maps class fingerprints to names for finite-mutation-type
    classes; when given, unknown fingerprints are named
    ``unnamed-finite-mutation``.
    """
    if cap < 1:
        raise CapZero("exploration cap must be >= 1")
    n = start.n
    max_w = start.max_weight()
    if _has_heavy_component(start):
        return MutationClassReport(
            classification=Classification.INFINITE_MUTATION_TYPE,
            class_size=None,
            max_weight_seen=max_w,
            infinite_witness=(),
            type_name=None,
            explored=1,
            member_keys=None,
            fingerprint=None,
        )
    witness, probed = _witness_probe(start)
    if witness is not None:
        m = start
        for k in witness:
            m = m.mutate(k)
            w = m.max_weight()
            if w > max_w:
                max_w = w
        return MutationClassReport(
            classification=Classification.INFINITE_MUTATION_TYPE,
            class_size=None,
            max_weight_seen=max_w,
            infinite_witness=witness,
            type_name=None,
            explored=probed,
            member_keys=None,
            fingerprint=None,
        )
    start_key = canonical_key(start)
    seen: dict[str, ExchangeMatrix] = {start_key.hex(): start}
    queue = deque([(start, ())])
    capped = False
    while queue and not capped:
        m, seq = queue.popleft()
        last = seq[-1] if seq else -1
        for k in range(n):
            if k == last:
                continue  # involution: mutating back reproduces the parent
            child = m.mutate(k)
            w = child.max_weight()
            if w > max_w:
                max_w = w
            if _has_heavy_component(child):
                return MutationClassReport(
                    classification=Classification.INFINITE_MUTATION_TYPE,
                    class_size=None,
                    max_weight_seen=max_w,
                    infinite_witness=seq + (k,),
                    type_name=None,
                    explored=len(seen),
                    member_keys=None,
                    fingerprint=None,
                )
            key = canonical_key(child).hex()
            if key not in seen:
                if len(seen) >= cap:
                    capped = True
                    break
                seen[key] = child
                queue.append((child, seq + (k,)))
    if capped:
        return MutationClassReport(
            classification=Classification.INCONCLUSIVE,
            class_size=None,
            max_weight_seen=max_w,
            infinite_witness=None,
            type_name=None,
            explored=len(seen),
            member_keys=None,
            fingerprint=None,
        )
    member_keys = tuple(sorted(seen))
    fingerprint = class_fingerprint(member_keys)
    if max_w <= 1:
        classification = Classification.FINITE_TYPE
        type_name = _try_name_finite_type(seen.values())
    else:
        classification = Classification.FINITE_MUTATION_TYPE
        type_name = None
        if registry is not None:
            type_name = registry.get(fingerprint, UNNAMED_FINITE_MUTATION)
    return MutationClassReport(
        classification=classification,
        class_size=len(seen),
        max_weight_seen=max_w,
        infinite_witness=None,
        type_name=type_name,
        explored=len(seen),
        member_keys=member_keys,
        fingerprint=fingerprint,
    )


def _tree_shape_name(m: ExchangeMatrix) -> str | None:
    """A/D/E label of a weight-1 tree quiver, or None if not such a tree."""
    n = m.n
    if m.max_weight() > 1:
        return None
    adj = [[] for _ in range(n)]
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if m.rows[i][j] != 0:
                adj[i].append(j)
                adj[j].append(i)
                edges += 1
    if edges != n - 1 or not m.is_connected():
        return None
    degrees = [len(a) for a in adj]
    if any(d > 3 for d in degrees):
        return None
    branch_nodes = [v for v in range(n) if degrees[v] == 3]
    if not branch_nodes:
        return f"A{n}"
    if len(branch_nodes) > 1:
        return None
    c = branch_nodes[0]
    lengths = []
    for start in adj[c]:
        prev, cur, length = c, start, 1
        while degrees[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        lengths.append(length)
    lengths.sort()
    if lengths[0] == 1 and lengths[1] == 1:
        return f"D{n}"
    if lengths == [1, 2, 2]:
        return "E6"
    if lengths == [1, 2, 3]:
        return "E7"
    if lengths == [1, 2, 4]:
        return "E8"
    return None


def _try_name_finite_type(members) -> str | None:
    for m in members:
        name = _tree_shape_name(m)
        if name is not None:
            return name
    return None


def name_finite_type(members) -> str:
    """A/D/E label of a finite-type class given its members.

    Every finite-type class of a connected quiver contains an orientation of
    its Dynkin diagram; failure to find one signals a classification bug.
    """
    name = _try_name_finite_type(members)
    if name is None:
        raise NoTreeRepresentative(
            "no class member is a tree of A/D/E shape"
        )
    return name


def name_finite_mutation_type(
    report: MutationClassReport, registry: dict[str, str]
) -> str:
    """Look up a finite-mutation-type class in a reference registry."""
    if report.fingerprint is None:
        return UNNAMED_FINITE_MUTATION
    return registry.get(report.fingerprint, UNNAMED_FINITE_MUTATION)


def report_to_dict(report: MutationClassReport) -> dict:
    return {
        "classification": report.classification.value,
        "class_size": report.class_size,
        "max_weight_seen": report.max_weight_seen,
        "infinite_witness": (
            list(report.infinite_witness)
            if report.infinite_witness is not None
            else None
        ),
        "type_name": report.type_name,
        "explored": report.explored,
        "fingerprint": report.fingerprint,
    }


def report_from_dict(data: dict, member_keys=None) -> MutationClassReport:
    return MutationClassReport(
        classification=Classification(data["classification"]),
        class_size=data["class_size"],
        max_weight_seen=data["max_weight_seen"],
        infinite_witness=(
            tuple(data["infinite_witness"])
            if data["infinite_witness"] is not None
            else None
        ),
        type_name=data["type_name"],
        explored=data["explored"],
        member_keys=tuple(member_keys) if member_keys is not None else None,
        fingerprint=data["fingerprint"],
    )
