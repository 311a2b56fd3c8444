"""On-disk cache of mutation-class reports.

One JSON file per starting-quiver canonical key, named by the sha256 of the
key bytes (keys themselves can exceed filename limits at large rank).  Each
file stores the schema version, the start key in lowercase hex, the cap the
report was computed at, the report, and the sorted member keys when the
class was fully enumerated.  Corrupt files are ignored with a warning and
the report is recomputed.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import logging
import os
from pathlib import Path

from .canonical import QuiverKey, canonical_form
from .explore import (
    DEFAULT_CAP,
    Classification,
    MutationClassReport,
    explore,
    report_from_dict,
    report_to_dict,
)
from .matrix import ExchangeMatrix, QuiverError

SCHEMA_VERSION = 1

CACHE_ENV_VAR = "ATLAS_CACHE"
DEFAULT_CACHE_DIR = ".atlas-cache"

log = logging.getLogger(__name__)


class CacheCorrupt(QuiverError):
    """A cache file exists but cannot be parsed or validated."""


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR))


def cache_path(cache_dir: Path, key: QuiverKey) -> Path:
    return Path(cache_dir) / (hashlib.sha256(key.data).hexdigest() + ".json")


def store_report(
    cache_dir: Path, key: QuiverKey, report: MutationClassReport, cap: int
) -> Path:
    path = cache_path(cache_dir, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "start_key": key.hex(),
        "cap": cap,
        "report": report_to_dict(report),
        "member_keys": (
            list(report.member_keys) if report.member_keys is not None else None
        ),
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    tmp.replace(path)
    return path


def load_report(
    cache_dir: Path, key: QuiverKey, cap: int
) -> MutationClassReport | None:
    """Load a cached report, or None on miss / cap-incompatible entry.

    Raises CacheCorrupt on unreadable or inconsistent files.
    """
    path = cache_path(cache_dir, key)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
        if payload["schema_version"] != SCHEMA_VERSION:
            raise CacheCorrupt(f"unknown schema version in {path}")
        if payload["start_key"] != key.hex():
            raise CacheCorrupt(f"start key mismatch in {path}")
        report = report_from_dict(payload["report"], payload["member_keys"])
    except CacheCorrupt:
        raise
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise CacheCorrupt(f"unreadable cache file {path}: {e}") from e
    if (
        report.classification is Classification.INCONCLUSIVE
        and payload["cap"] < cap
    ):
        return None  # a larger cap may resolve the class
    return report


def explore_cached(
    start: ExchangeMatrix,
    cap: int = DEFAULT_CAP,
    registry: dict[str, str] | None = None,
    cache_dir: Path | None = None,
) -> MutationClassReport:
    """explore() backed by the on-disk cache.

    The cache entry is computed from the canonical representative of the
    starting quiver, so isomorphic starts share one byte-identical file and
    the result never depends on which labeling got explored first.  The
    witness in the returned report is translated back into the caller's
    vertex labels.  Finite-mutation-type names are resolved from ``registry``
    at load time so a cached report is field-for-field identical to a
    recomputed one.
    """
    if cache_dir is None:
        return explore(start, cap, registry)
    key, perm = canonical_form(start)
    try:
        report = load_report(cache_dir, key, cap)
    except CacheCorrupt as e:
        log.warning("ignoring corrupt cache entry: %s", e)
        report = None
    if report is None:
        report = explore(start.permuted(perm), cap, None)
        store_report(cache_dir, key, report, cap)
    if report.infinite_witness:
        # perm maps caller label -> canonical label; invert it
        inverse = [0] * len(perm)
        for old, new in enumerate(perm):
            inverse[new] = old
        report = dataclasses.replace(
            report,
            infinite_witness=tuple(
                inverse[v] for v in report.infinite_witness
            ),
        )
    if (
        report.classification is Classification.FINITE_MUTATION_TYPE
        and registry is not None
        and report.fingerprint is not None
    ):
        from .explore import UNNAMED_FINITE_MUTATION

        name = registry.get(report.fingerprint, UNNAMED_FINITE_MUTATION)
        if name != report.type_name:
            report = dataclasses.replace(report, type_name=name)
    return report
