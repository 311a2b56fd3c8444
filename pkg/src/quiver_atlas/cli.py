"""Command-line front end.

Subcommands: classify one cell, reproduce the full table, dump an initial
quiver, explore a mutation class (with on-disk caching), run the full
verification suite, and run randomized self-tests.

Exit codes for classify/table/verify: 0 on full agreement, 2 on a
classification mismatch, 3 when any exploration was inconclusive.
"""

from __future__ import annotations

import os
import random
import sys
from pathlib import Path

import click

from . import __version__
from .cache import default_cache_dir, explore_cached
from .canonical import canonical_form, canonical_key, is_isomorphic
from .correspondence import classify_cell, reference_registry
from .explore import DEFAULT_CAP, Classification, explore
from .grassmannian import GrassmannianSpec, initial_quiver
from .matrix import ExchangeMatrix
from .render import render_rows, row_to_dict
from .verify import compute_grid, run_verification

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INCONCLUSIVE = 3


def _cache_opts(f):
    f = click.option(
        "--cache-dir",
        type=click.Path(path_type=Path),
        default=None,
        help="Class-cache directory (default: $ATLAS_CACHE or ./.atlas-cache).",
    )(f)
    f = click.option("--no-cache", is_flag=True, help="Disable the class cache.")(f)
    return f


def _resolve_cache(cache_dir, no_cache):
    if no_cache:
        return None
    return Path(cache_dir) if cache_dir is not None else default_cache_dir()


def _explorer(cache_dir):
    if cache_dir is None:
        return None

    def explorer(start, cap=DEFAULT_CAP, registry=None):
        return explore_cached(start, cap, registry, cache_dir=cache_dir)

    return explorer


def _needs_registry(p, q):
    return (p - 2) * (q - 2) == 4


@click.group()
@click.version_option(__version__)
def main():
    """Cross-check Grassmannian mutation classes against regular tilings."""


@main.command()
@click.option("--p", "p", type=click.IntRange(min=2), required=True)
@click.option("--q", "q", type=click.IntRange(min=2), required=True)
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_CAP, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["markdown", "csv", "json"]),
    default="markdown",
    show_default=True,
)
@_cache_opts
def classify(p, q, cap, fmt, cache_dir, no_cache):
    """Classify one cell on both sides and report whether they agree."""
    cache = _resolve_cache(cache_dir, no_cache)
    explorer = _explorer(cache)
    registry = (
        reference_registry(cap, explorer=explorer) if _needs_registry(p, q) else None
    )
    row = classify_cell(p, q, cap=cap, registry=registry, explorer=explorer)
    click.echo(render_rows([row_to_dict(row)], fmt), nl=False)
    if row.cluster.classification is Classification.INCONCLUSIVE:
        sys.exit(EXIT_INCONCLUSIVE)
    if not row.match:
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--pmax", type=click.IntRange(min=2), default=7, show_default=True)
@click.option("--qmax", type=click.IntRange(min=2), default=7, show_default=True)
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_CAP, show_default=True)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=lambda: os.cpu_count() or 1,
    help="Parallel per-cell jobs (default: available parallelism).",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["markdown", "csv", "json"]),
    default="markdown",
    show_default=True,
)
@_cache_opts
def table(pmax, qmax, cap, workers, fmt, cache_dir, no_cache):
    """Reproduce the classification table over the whole grid."""
    cache = _resolve_cache(cache_dir, no_cache)
    rows = compute_grid(pmax, qmax, cap=cap, workers=workers, cache_dir=cache)
    ordered = [rows[key] for key in sorted(rows)]
    click.echo(render_rows([row_to_dict(r) for r in ordered], fmt), nl=False)
    mismatches = sum(1 for r in ordered if not r.match)
    inconclusive = sum(
        1
        for r in ordered
        if r.cluster.classification is Classification.INCONCLUSIVE
    )
    click.echo(f"mismatches: {mismatches}  inconclusive: {inconclusive}", err=True)
    if inconclusive:
        sys.exit(EXIT_INCONCLUSIVE)
    if mismatches:
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--p", "p", type=click.IntRange(min=2), required=True)
@click.option("--q", "q", type=click.IntRange(min=2), required=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "dot"]),
    default="json",
    show_default=True,
)
def quiver(p, q, fmt):
    """Print the initial quiver of Gr(p, p+q) as JSON or DOT."""
    m = initial_quiver(GrassmannianSpec(p, q))
    if fmt == "json":
        click.echo(m.serialize())
    else:
        click.echo(m.to_dot(), nl=False)


@main.command("explore")
@click.option("--p", "p", type=click.IntRange(min=2), required=True)
@click.option("--q", "q", type=click.IntRange(min=2), required=True)
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_CAP, show_default=True)
@_cache_opts
def explore_cmd(p, q, cap, cache_dir, no_cache):
    """Enumerate the mutation class of the Gr(p, p+q) initial quiver."""
    cache = _resolve_cache(cache_dir, no_cache)
    explorer = _explorer(cache) or explore
    registry = (
        reference_registry(cap, explorer=explorer) if _needs_registry(p, q) else None
    )
    start = initial_quiver(GrassmannianSpec(p, q))
    report = explorer(start, cap, registry)
    import json as _json

    from .explore import report_to_dict

    click.echo(_json.dumps(report_to_dict(report), sort_keys=True, indent=1))
    if report.classification is Classification.INCONCLUSIVE:
        sys.exit(EXIT_INCONCLUSIVE)


@main.command()
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_CAP, show_default=True)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=lambda: os.cpu_count() or 1,
    help="Parallel per-cell jobs (default: available parallelism).",
)
@_cache_opts
def verify(cap, workers, cache_dir, no_cache):
    """Run the full reproduction suite (tables, duality, trichotomy)."""
    cache = _resolve_cache(cache_dir, no_cache)
    results = run_verification(
        cap=cap, workers=workers, cache_dir=cache
    )
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        click.echo(f"[{status}] {name} ({detail})")
        if not ok:
            failed += 1
    if failed:
        click.echo(f"{failed} of {len(results)} checks failed", err=True)
        sys.exit(EXIT_MISMATCH)
    click.echo(f"all {len(results)} checks passed")


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--cases", type=click.IntRange(min=1), default=500, show_default=True)
def selftest(seed, cases):
    """Randomized property checks: involution, equivariance, canonical keys."""
    rng = random.Random(seed)
    failures = []

    def random_quiver(n):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                w = rng.randint(-3, 3)
                rows[i][j] = w
                rows[j][i] = -w
        return ExchangeMatrix.from_rows(rows)

    for case in range(cases):
        n = rng.randint(1, 8)
        m = random_quiver(n)
        k = rng.randrange(n)
        if m.mutate(k).mutate(k) != m:
            failures.append(f"involution case {case}")
        perm = list(range(n))
        rng.shuffle(perm)
        pm = m.permuted(perm)
        if m.mutate(k).permuted(perm) != pm.mutate(perm[k]):
            failures.append(f"equivariance case {case}")
        if n <= 7 and canonical_key(m).data != canonical_key(pm).data:
            failures.append(f"canonical invariance case {case}")
        if n <= 5 and not is_isomorphic(m, pm):
            failures.append(f"isomorphism case {case}")
        key, cperm = canonical_form(m)
        if m.permuted(cperm).serialize().encode() != key.data:
            failures.append(f"canonical permutation case {case}")
    for f in failures[:10]:
        click.echo(f"FAIL {f}", err=True)
    if failures:
        click.echo(f"{len(failures)} of {cases} cases failed", err=True)
        sys.exit(1)
    click.echo(f"all {cases} randomized cases passed (seed {seed})")


if __name__ == "__main__":
    main()
