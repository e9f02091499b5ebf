"""Operations shared by the CLI and the HTTP service.

Both front ends call through here so exports are byte-identical whichever
path produced them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exports, metrics, stats
from .errors import ParameterError
from .netcore import NetworkTriple, step_state
from .sessions import Session


@dataclass(frozen=True)
class ExportBundle:
    format: str
    payload: bytes
    deterministic: bool = True


def get_networks(session: Session, step: int) -> NetworkTriple:
    return step_state(session.bip, step)


def networks_wire(session: Session, step: int) -> dict:
    return exports.triple_to_obj(get_networks(session, step))


def get_metric_series(session: Session, kind: str, metric: str):
    return metrics.metric_timeseries(session.bip, kind, metric)


def run_stats(
    kind: str, a: list[float], b: list[float], welch: bool = False
) -> stats.TTestResult:
    if kind == "paired":
        if welch:
            raise ParameterError("welch applies to the unpaired test only")
        return stats.paired_t(a, b)
    if kind == "unpaired":
        return stats.unpaired_t(a, b, welch=welch)
    raise ParameterError(f"unknown test kind {kind!r}; expected 'paired' or 'unpaired'")


def export(
    session: Session,
    format: str,
    kind: str,
    step: int | None = None,
    metric: str = "density",
) -> ExportBundle:
    """Deterministic bytes for one network snapshot or metric series.

    ``json`` and ``dot`` render the projection of ``kind`` at ``step``
    (default: the full corpus); ``csv`` renders the metric series over all
    steps, ignoring ``step``.
    """
    if format not in exports.FORMATS:
        raise ParameterError(
            f"unknown export format {format!r}; expected one of {exports.FORMATS}"
        )
    if format == "csv":
        series = get_metric_series(session, kind, metric)
        return ExportBundle(format="csv", payload=exports.series_csv_bytes(series))
    k = session.n_units if step is None else step
    net = metrics.network_at_step(session.bip, kind, k)
    if format == "json":
        return ExportBundle(format="json", payload=exports.network_json_bytes(net, step=k))
    return ExportBundle(format="dot", payload=exports.network_dot_bytes(net))
