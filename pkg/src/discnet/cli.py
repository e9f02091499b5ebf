"""Command-line front end.

Exit codes: 0 on success, 2 when the inputs fail validation (malformed
files, constraint violations, degenerate statistics, bad step/metric), and
1 for everything else (missing sessions, I/O problems).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import gateway, report
from .corpus import MATCH_MODES, MatchPolicy
from .errors import WorkbenchError
from .exports import triple_json_bytes
from .sessions import SessionStore

_VALIDATION_ERRORS = (
    "corpus-format",
    "encoding",
    "integrity",
    "empty-corpus",
    "empty-vocabulary",
    "bad-parameter",
    "step-out-of-range",
    "sample-size",
    "pairing",
    "degenerate-variance",
    "sheet-precondition",
)


def _fail(exc: WorkbenchError) -> None:
    click.echo(f"error: {exc.message}", err=True)
    sys.exit(2 if exc.code in _VALIDATION_ERRORS else 1)


def _store(ctx: click.Context) -> SessionStore:
    return SessionStore(ctx.obj["store"])


def _write_out(payload: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)


@click.group()
@click.option(
    "--store",
    envvar="DISCNET_STORE",
    default=".discnet-sessions",
    show_default=True,
    help="Directory holding analysis sessions.",
)
@click.pass_context
def main(ctx: click.Context, store: str) -> None:
    """Discourse network workbench."""
    ctx.ensure_object(dict)
    ctx.obj["store"] = store


@main.command()
@click.argument("corpus_csv", type=click.Path(exists=True, dir_okay=False))
@click.argument("wordlist", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(MATCH_MODES), default="normalized-token", show_default=True)
@click.option("--case-fold/--no-case-fold", default=True, show_default=True)
@click.option("--unicode-normalize/--no-unicode-normalize", default=True, show_default=True)
@click.pass_context
def build(ctx, corpus_csv, wordlist, mode, case_fold, unicode_normalize):
    """Create a session from a transcript CSV and a target-word list."""
    policy = MatchPolicy(mode=mode, case_fold=case_fold, unicode_normalize=unicode_normalize)
    try:
        session = _store(ctx).create(
            Path(corpus_csv).read_bytes(), Path(wordlist).read_bytes(), policy
        )
    except WorkbenchError as exc:
        _fail(exc)
    for w in session.corpus.warnings:
        click.echo(f"warning: {w}", err=True)
    click.echo(
        f"session {session.session_id}: {session.n_units} units, "
        f"{session.n_words} words, {len(session.corpus.agent_order)} agents",
        err=True,
    )
    click.echo(session.session_id)


@main.command()
@click.option("--session", "session_id", required=True)
@click.option("--step", type=int, default=None, help="Prefix length k (default: all units).")
@click.option("-o", "--out", default=None, help="Write to file instead of stdout.")
@click.pass_context
def networks(ctx, session_id, step, out):
    """Print the three network projections at step k as JSON."""
    try:
        session = _store(ctx).get(session_id)
        k = session.n_units if step is None else step
        triple = gateway.get_networks(session, k)
    except WorkbenchError as exc:
        _fail(exc)
    _write_out(triple_json_bytes(triple), out)


@main.command()
@click.option("--session", "session_id", required=True)
@click.option("--kind", type=click.Choice(("words", "units", "agents")), default="words", show_default=True)
@click.option("--metric", default="density", show_default=True)
@click.option("-o", "--out", default=None)
@click.pass_context
def series(ctx, session_id, kind, metric, out):
    """Print one metric evaluated at every step as CSV."""
    try:
        session = _store(ctx).get(session_id)
        bundle = gateway.export(session, "csv", kind, metric=metric)
    except WorkbenchError as exc:
        _fail(exc)
    _write_out(bundle.payload, out)


@main.command()
@click.option("--session", "session_id", required=True)
@click.option("--format", "fmt", type=click.Choice(("json", "dot", "csv")), default="json", show_default=True)
@click.option("--kind", type=click.Choice(("words", "units", "agents")), default="words", show_default=True)
@click.option("--step", type=int, default=None, help="Prefix length k (default: all units).")
@click.option("--metric", default="density", show_default=True, help="Metric for csv format.")
@click.option("-o", "--out", default=None)
@click.pass_context
def export(ctx, session_id, fmt, kind, step, metric, out):
    """Export one network snapshot (json/dot) or a metric series (csv)."""
    try:
        session = _store(ctx).get(session_id)
        bundle = gateway.export(session, fmt, kind, step=step, metric=metric)
    except WorkbenchError as exc:
        _fail(exc)
    _write_out(bundle.payload, out)


@main.group()
def sheet() -> None:
    """Analysis sheet commands."""


@sheet.command("validate")
@click.option("--session", "session_id", required=True)
@click.argument("sheet_json", type=click.Path(exists=True, dir_okay=False), required=False)
@click.pass_context
def sheet_validate(ctx, session_id, sheet_json):
    """Validate a sheet document (or the session's saved sheet)."""
    store = _store(ctx)
    try:
        if sheet_json:
            obj = json.loads(Path(sheet_json).read_text(encoding="utf-8"))
            report_ = store.save_sheet(session_id, obj)
        else:
            report_ = store.load_sheet(session_id).validate()
    except WorkbenchError as exc:
        _fail(exc)
    except json.JSONDecodeError as exc:
        click.echo(f"error: sheet file is not valid JSON: {exc}", err=True)
        sys.exit(2)
    for v in report_.warnings:
        click.echo(f"warning [{v.code}]: {v.message}", err=True)
    if report_.ok:
        click.echo("sheet is complete")
        return
    for v in report_.violations:
        click.echo(f"violation [{v.code}]: {v.message}")
    sys.exit(2)


@main.group()
def stats() -> None:
    """Assessment statistics."""


@stats.command("ttest")
@click.option("--paired/--unpaired", default=False, help="Paired or two-sample test.")
@click.option("--welch", is_flag=True, default=False, help="Welch variant (unpaired only).")
@click.option("--a", "a_values", required=True, help="Comma-separated scores (pre, for paired).")
@click.option("--b", "b_values", required=True, help="Comma-separated scores (post, for paired).")
def stats_ttest(paired, welch, a_values, b_values):
    """Run a t-test and print {t, df, p, kind} as JSON."""

    def parse(text: str, name: str) -> list[float]:
        try:
            return [float(x) for x in text.split(",") if x.strip()]
        except ValueError:
            click.echo(f"error: --{name} must be comma-separated numbers", err=True)
            sys.exit(2)

    a = parse(a_values, "a")
    b = parse(b_values, "b")
    try:
        result = gateway.run_stats("paired" if paired else "unpaired", a, b, welch=welch)
    except WorkbenchError as exc:
        _fail(exc)
    sys.stdout.buffer.write(result.to_json_bytes())


@main.command("report")
@click.option("--session", "session_id", required=True)
@click.option("--out", "out_dir", required=True, help="Directory for figures and CSVs.")
@click.option("--kind", "kinds", multiple=True, type=click.Choice(("words", "units", "agents")))
@click.option("--metric", "metric_names", multiple=True)
@click.option("--step", "steps", multiple=True, type=int, help="Snapshot steps to draw.")
@click.pass_context
def report_cmd(ctx, session_id, out_dir, kinds, metric_names, steps):
    """Render metric CSVs plus matplotlib figures into a directory."""
    try:
        session = _store(ctx).get(session_id)
        written = report.write_report(
            session,
            out_dir,
            kinds=kinds or ("words", "units", "agents"),
            metric_names=metric_names or ("density", "total-degree"),
            steps=steps or None,
        )
    except WorkbenchError as exc:
        _fail(exc)
    for path in written:
        click.echo(str(path))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8750, show_default=True)
@click.option("--lan", is_flag=True, default=False, help="Bind 0.0.0.0 for classroom demos.")
@click.option("--ui", "ui_dir", default=None, help="Static directory to serve at /.")
@click.pass_context
def serve(ctx, host, port, lan, ui_dir):
    """Run the local HTTP API (loopback by default)."""
    import uvicorn

    from .api import create_app

    app = create_app(_store(ctx), ui_dir=ui_dir)
    uvicorn.run(app, host="0.0.0.0" if lan else host, port=port)


if __name__ == "__main__":
    main()
