"""Command-line interface.

Exit codes: 0 on success, 1 when a computation is refused (component
above a cap), 2 on usage errors including malformed graph IDs.
"""

from __future__ import annotations

import functools
import itertools
import sys

import click

from . import __version__
from .cache import SldCache, cached_sld_of_graph
from .errors import ComputationRefusedError, DomainError
from .graph import GraphKind, decode_graph_id, encode_graph_id, generate, graph_from_json
from .serialize import canonical_json
from .sld import SLD, decay, ensure_computable, threshold_report
from .stabilizer import ENUMERATION_CAP, enumerate_stabilizers

_BAR_WIDTH = 40


def _engine_errors(fn):
    """Map engine exceptions onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ComputationRefusedError as exc:
            raise click.ClickException(str(exc))  # exit code 1
        except DomainError as exc:
            raise click.UsageError(str(exc))  # exit code 2

    return wrapper


def _cache_option(fn):
    return click.option(
        "--cache-path",
        envvar="GSV_CACHE_PATH",
        default=None,
        help="SLD cache log file (defaults to $GSV_CACHE_PATH; no persistence when unset).",
    )(fn)


def _format_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "json"]),
        default="table",
        show_default=True,
        help="Output style.",
    )(fn)


@click.group()
@click.version_option(version=__version__, prog_name="gsv")
def cli():
    """Analyze qubit graph states: stabilizers, sector lengths, thresholds."""


def _sld_table(sld: SLD, values: tuple[float, ...] | None) -> str:
    scale = max(values) if values is not None else max(sld.A)
    scale = scale or 1
    lines = ["  k  A_k" + ("  decayed" if values is not None else "")]
    for k, a in enumerate(sld.A):
        shown = values[k] if values is not None else a
        bar = "#" * round(_BAR_WIDTH * shown / scale)
        if values is not None:
            lines.append(f"{k:3d}  {a:<10d} {shown:<12.6g} {bar}")
        else:
            lines.append(f"{k:3d}  {a:<10d} {bar}")
    return "\n".join(lines)


@cli.command("sld")
@click.argument("graph_id")
@_format_option
@click.option("--noise", type=float, default=None, help="Depolarizing probability in [0,1].")
@click.option("--force", is_flag=True, help="Compute components above the auto limit.")
@click.option("--workers", type=int, default=1, show_default=True, help="Parallel kernel shards.")
@_cache_option
@_engine_errors
def sld_command(graph_id, fmt, noise, force, workers, cache_path):
    """Sector length distribution of the graph state behind GRAPH_ID."""
    g = decode_graph_id(graph_id)
    ensure_computable(g, force=force)
    cache = SldCache(cache_path) if cache_path else None
    sld = cached_sld_of_graph(g, cache, workers=workers)
    decayed = decay(sld, noise) if noise is not None else None
    if fmt == "json":
        payload = sld.to_json()
        if decayed is not None:
            payload["p"] = decayed.p
            payload["values"] = list(decayed.values)
        click.echo(canonical_json(payload))
    else:
        click.echo(_sld_table(sld, decayed.values if decayed is not None else None))


@cli.command("thresholds")
@click.argument("graph_id")
@_format_option
@click.option("--force", is_flag=True, help="Compute components above the auto limit.")
@_cache_option
@_engine_errors
def thresholds_command(graph_id, fmt, force, cache_path):
    """Lower bounds on the entanglement-loss probability."""
    g = decode_graph_id(graph_id)
    ensure_computable(g, force=force)
    cache = SldCache(cache_path) if cache_path else None
    report = threshold_report(g, cached_sld_of_graph(g, cache))
    if fmt == "json":
        click.echo(canonical_json(report.to_json()))
    else:
        click.echo(f"nSector       {report.n_sector:.9f}")
        click.echo(f"majorization  {report.majorization:.9f}")
        click.echo(f"distillation  {report.distillation:.9f}")


@cli.command("stabilizers")
@click.argument("graph_id")
@click.option("--limit", type=int, default=64, show_default=True, help="Elements to print.")
@_format_option
@_engine_errors
def stabilizers_command(graph_id, limit, fmt):
    """First stabilizer group elements, in ascending index order."""
    g = decode_graph_id(graph_id)
    if g.n > ENUMERATION_CAP:
        raise ComputationRefusedError(
            f"stabilizer enumeration is capped at {ENUMERATION_CAP} vertices",
            size=g.n,
            limit=ENUMERATION_CAP,
        )
    if limit < 0:
        raise DomainError(f"limit must be nonnegative, got {limit}")
    elements = itertools.islice(enumerate_stabilizers(g), limit)
    if fmt == "json":
        payload = {
            "total": 1 << g.n,
            "limit": limit,
            "stabilizers": [e.to_json() for e in elements],
        }
        click.echo(canonical_json(payload))
    else:
        for element in elements:
            click.echo(element.render())


@cli.command("lc")
@click.argument("graph_id")
@click.argument("vertex", type=int)
@_format_option
@_engine_errors
def lc_command(graph_id, vertex, fmt):
    """Graph ID after local complementation at VERTEX (1-based)."""
    g = decode_graph_id(graph_id)
    new_id = encode_graph_id(g.local_complement(vertex))
    click.echo(canonical_json({"id": new_id}) if fmt == "json" else new_id)


@cli.group("id")
def id_group():
    """Convert between graph IDs and graph JSON."""


@id_group.command("encode")
@click.argument("graph_json")
@_engine_errors
def id_encode(graph_json):
    """Encode graph JSON {"n":..,"edges":[[i,j],..]} (or '-' for stdin)."""
    import json as _json

    text = sys.stdin.read() if graph_json == "-" else graph_json
    try:
        doc = _json.loads(text)
    except _json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}")
    click.echo(encode_graph_id(graph_from_json(doc)))


@id_group.command("decode")
@click.argument("graph_id")
@_engine_errors
def id_decode(graph_id):
    """Decode a graph ID to graph JSON."""
    click.echo(canonical_json(decode_graph_id(graph_id).to_json()))


@cli.command("random")
@click.option("--n", type=int, required=True, help="Vertex count.")
@click.option("--p", type=float, required=True, help="Edge probability in [0,1].")
@click.option("--seed", type=int, required=True, help="RNG seed (reproducible).")
@_format_option
@_engine_errors
def random_command(n, p, seed, fmt):
    """Graph ID of a seeded random graph."""
    graph_id = encode_graph_id(generate(GraphKind.RANDOM, n, p=p, seed=seed))
    if fmt == "json":
        click.echo(canonical_json({"id": graph_id, "n": n, "p": p, "seed": seed}))
    else:
        click.echo(graph_id)


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option(
    "--frontend-dir",
    default=None,
    help="Directory of built web-app assets to serve at /.",
)
@_cache_option
def serve_command(host, port, frontend_dir, cache_path):
    """Run the JSON HTTP service."""
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(cache_path, frontend_dir=frontend_dir), host=host, port=port)


def main():
    cli()


if __name__ == "__main__":
    main()
