#!/usr/bin/env python3
"""
Positional Isomorphism Toolkit CLI

Decide graph isomorphism with the BFS-level positioning heuristic, dump its
round-by-round characteristics, and check it against an exact oracle over
seeded and curated graph corpora.
"""

import click
import logging
import sys
from pathlib import Path

from src.config import config
from src.bench import run_bench
from src.corpus import (
    FORMATS,
    GraphFormatError,
    emit_graph,
    export_fixtures,
    gen_connected_gnp,
    gen_gnp,
    list_named_graphs,
    load_graph,
    named_graph,
    parse_graph,
    resolve_format,
    save_graph,
)
from src.exact_oracle import BACKTRACK_LIMIT, exact_isomorphism
from src.graph_core import Graph
from src.iso_heuristic import check_pair
from src.mining import MiningPipeline, replay_archive, settings_from_config
from src.reporting import render_bench, render_mapping, render_trace

# Configure logging
_handlers = [logging.StreamHandler(sys.stderr)]
if config.LOG_FILE:
    _handlers.append(logging.FileHandler(config.LOG_FILE))
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL.upper()),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=_handlers
)

logger = logging.getLogger(__name__)

NAMED_PREFIX = "name:"
FORMAT_CHOICE = click.Choice(FORMATS)
SEED_TYPE = click.IntRange(0, 2**64 - 1)


def _load(source: str, fmt) -> Graph:
    """Load a graph from a file, or from the catalog with name:<graph>"""
    if source.startswith(NAMED_PREFIX):
        return named_graph(source[len(NAMED_PREFIX):])
    return load_graph(source, fmt)


def _fail(message: str):
    click.echo(f"✗ {message}", err=True)
    sys.exit(1)


def _parse_sizes(ctx, param, value):
    if value is None:
        return None
    try:
        sizes = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not sizes:
        raise click.BadParameter("at least one size is required")
    return sizes


@click.group()
@click.version_option(version='0.1.0')
def cli():
    """Positional isomorphism heuristic, exact oracle and corpus tools"""
    pass


@cli.command()
@click.argument('file_g')
@click.argument('file_h')
@click.option('--format', '-f', 'fmt', type=FORMAT_CHOICE, default=None,
              help='Input format (default: inferred from the file suffix)')
@click.option('--oracle', is_flag=True, help='Also print the exact oracle answer')
def check(file_g, file_h, fmt, oracle):
    """Run the heuristic on two graphs and print its verdict"""
    try:
        g, h = _load(file_g, fmt), _load(file_h, fmt)
        result = check_pair(g, h)
        exact = exact_isomorphism(g, h) if oracle and g.order == h.order else None
    except (OSError, ValueError) as e:
        _fail(str(e))

    click.echo(result.verdict.describe())
    mapping_line = render_mapping(result)
    if mapping_line:
        click.echo(mapping_line)
    if oracle:
        answer = exact is not None and exact.isomorphic
        click.echo(f"oracle: {'ISOMORPHIC' if answer else 'NOT_ISOMORPHIC'}")


@cli.command()
@click.argument('file_g')
@click.argument('file_h')
@click.option('--format', '-f', 'fmt', type=FORMAT_CHOICE, default=None,
              help='Input format (default: inferred from the file suffix)')
def trace(file_g, file_h, fmt):
    """Print the round-by-round levels and characteristics tables"""
    try:
        g, h = _load(file_g, fmt), _load(file_h, fmt)
        result = check_pair(g, h)
    except (OSError, ValueError) as e:
        _fail(str(e))

    click.echo(render_trace(g, h, result.verdict, result.trace), nl=False)
    mapping_line = render_mapping(result)
    if mapping_line:
        click.echo(mapping_line)


@cli.command()
@click.option('--trials', '-t', type=int, default=None, help=f'Number of random trials (default {config.MINE_TRIALS})')
@click.option('--min-n', type=int, default=None, help=f'Smallest vertex count (default {config.MINE_MIN_N})')
@click.option('--max-n', type=int, default=None, help=f'Largest vertex count (default {config.MINE_MAX_N})')
@click.option('--p', 'p', type=float, default=None, help=f'Edge probability (default {config.EDGE_PROBABILITY})')
@click.option('--seed', '-s', type=SEED_TYPE, default=None, help=f'Unsigned 64-bit seed (default {config.DEFAULT_SEED})')
@click.option('--out', '-o', 'out', type=click.Path(file_okay=False, path_type=Path), default=None,
              help=f'Archive directory (default {config.MINE_OUTPUT_PATH})')
@click.option('--workers', '-w', type=int, default=None, help=f'Worker processes (default {config.MINE_WORKERS})')
@click.option('--cross-check-rate', type=float, default=None,
              help=f'Fraction of small trials also decided by enumeration (default {config.CROSS_CHECK_RATE})')
@click.option('--stress/--no-stress', default=True, help='Append the rook_4x4/shrikhande trial')
@click.option('--quiet', '-q', is_flag=True, help='Hide the progress bar')
def mine(trials, min_n, max_n, p, seed, out, workers, cross_check_rate, stress, quiet):
    """Compare heuristic verdicts with the exact oracle and archive disagreements"""
    trials = config.MINE_TRIALS if trials is None else trials
    workers = workers or config.MINE_WORKERS
    out = out or config.MINE_OUTPUT_PATH
    if trials < 0:
        raise click.BadParameter("must be non-negative", param_hint='--trials')

    try:
        settings = settings_from_config(
            seed=seed, min_n=min_n, max_n=max_n,
            edge_probability=p, cross_check_rate=cross_check_rate,
        )
        if not 1 <= settings.min_n <= settings.max_n <= BACKTRACK_LIMIT:
            raise click.BadParameter(
                f"need 1 <= min-n <= max-n <= {BACKTRACK_LIMIT}", param_hint='--min-n/--max-n'
            )
        config.setup_directories(out)
        report = MiningPipeline(settings, out).run(trials, workers=workers, stress=stress, progress=not quiet)
    except click.ClickException:
        raise
    except (OSError, ValueError) as e:
        logger.exception("Mining failed")
        _fail(f"Mining failed: {e}")

    for key, value in report.summary().items():
        click.echo(f"{key}={value}")
    click.echo(f"archive={out}")


@cli.command()
@click.argument('directory', type=click.Path(exists=True, file_okay=False, path_type=Path))
def replay(directory):
    """Re-run every archived disagreement and confirm it reproduces"""
    try:
        results = replay_archive(directory)
    except (OSError, ValueError) as e:
        _fail(str(e))

    failures = 0
    for result in results:
        status = "reproduced" if result.reproduced else "CHANGED"
        click.echo(f"trial={result.record.trial} {status} heuristic={result.heuristic} oracle={result.oracle}")
        failures += not result.reproduced
    click.echo(f"replayed={len(results)} changed={failures}")
    if failures:
        sys.exit(1)


@cli.command()
@click.option('--sizes', callback=_parse_sizes, default=None,
              help=f"Comma-separated vertex counts (default {','.join(map(str, config.BENCH_SIZES))})")
@click.option('--p', 'p', type=float, default=None, help=f'Edge probability (default {config.EDGE_PROBABILITY})')
@click.option('--reps', '-r', type=int, default=None, help=f'Repetitions per size (default {config.BENCH_REPS})')
@click.option('--seed', '-s', type=SEED_TYPE, default=None, help=f'Unsigned 64-bit seed (default {config.DEFAULT_SEED})')
@click.option('--quiet', '-q', is_flag=True, help='Hide the progress bar')
def bench(sizes, p, reps, seed, quiet):
    """Time the heuristic on relabeled pairs and fit the log-log slope"""
    try:
        report = run_bench(
            sizes if sizes is not None else config.BENCH_SIZES,
            config.EDGE_PROBABILITY if p is None else p,
            reps or config.BENCH_REPS,
            config.DEFAULT_SEED if seed is None else seed,
            retries=config.CONNECTED_RETRIES,
            progress=not quiet,
        )
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(render_bench(report), nl=False)


def _generate(spec: str, seed: int) -> Graph:
    """<name> | gnp:<n>:<p> | cgnp:<n>:<p>"""
    kind, _, rest = spec.partition(":")
    if kind in ("gnp", "cgnp") and rest:
        try:
            n_text, p_text = rest.split(":")
            n, p = int(n_text), float(p_text)
        except ValueError:
            raise GraphFormatError(f"Expected {kind}:<n>:<p>, got {spec}")
        if kind == "gnp":
            return gen_gnp(n, p, seed)
        return gen_connected_gnp(n, p, seed, config.CONNECTED_RETRIES)
    return named_graph(spec)


@cli.command()
@click.argument('spec')
@click.option('--seed', '-s', type=SEED_TYPE, default=None, help=f'Unsigned 64-bit seed (default {config.DEFAULT_SEED})')
@click.option('--out', '-o', 'out', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Output file (default: standard output)')
@click.option('--format', '-f', 'fmt', type=FORMAT_CHOICE, default=None,
              help='Output format (default: from the file suffix, or g6 on standard output)')
def gen(spec, seed, out, fmt):
    """Generate a named graph, gnp:<n>:<p> or cgnp:<n>:<p> (connected)"""
    try:
        graph = _generate(spec, config.DEFAULT_SEED if seed is None else seed)
        if out is None:
            click.echo(emit_graph(graph, fmt or "g6"), nl=False)
        else:
            save_graph(graph, out, fmt)
            click.echo(f"✓ Wrote {spec} to {out}", err=True)
    except (OSError, ValueError) as e:
        _fail(str(e))


@cli.command()
@click.argument('source', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('target', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--from', 'from_fmt', type=FORMAT_CHOICE, default=None, help='Input format')
@click.option('--to', 'to_fmt', type=FORMAT_CHOICE, default=None, help='Output format')
def convert(source, target, from_fmt, to_fmt):
    """Convert a graph between graph6 and edge-list text"""
    try:
        graph = parse_graph(source.read_text(encoding="ascii"), resolve_format(source, from_fmt))
        save_graph(graph, target, to_fmt)
    except (OSError, ValueError) as e:
        _fail(str(e))
    click.echo(f"✓ Converted {source} -> {target}", err=True)


@cli.command()
@click.option('--out', '-o', 'out', type=click.Path(file_okay=False, path_type=Path), default=None,
              help=f'Fixture directory (default {config.FIXTURES_PATH})')
def fixtures(out):
    """Write every fixed named graph as <out>/<name>.g6"""
    out = out or config.FIXTURES_PATH
    try:
        written = export_fixtures(out)
    except OSError as e:
        _fail(str(e))
    for path in written:
        click.echo(str(path))


@cli.command()
def names():
    """List named graphs"""
    for name in list_named_graphs():
        click.echo(name)


if __name__ == '__main__':
    cli()
