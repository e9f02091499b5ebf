"""Deterministic serialization of networks and metric series.

All exporters return bytes and promise byte-identical output for identical
inputs: nodes appear in canonical order, edges as lexicographically sorted
label pairs, floats formatted to 12 significant digits.
"""

from __future__ import annotations

import json

from .netcore import MetricSeries, Network, NetworkTriple

FORMATS = ("json", "dot", "csv")


def fmt_number(x: float) -> str:
    """12 significant digits, no trailing noise; integers stay bare."""
    if isinstance(x, int):
        return str(x)
    return format(x, ".12g")


def network_to_obj(net: Network, step: int | None = None) -> dict:
    obj: dict = {"kind": net.kind}
    if step is not None:
        obj["step"] = step
    obj["nodes"] = list(net.nodes)
    obj["edges"] = [
        {"source": a, "target": b, "weight": w} for a, b, w in net.sorted_edges()
    ]
    return obj


def network_json_bytes(net: Network, step: int | None = None) -> bytes:
    return (json.dumps(network_to_obj(net, step), ensure_ascii=False, indent=2) + "\n").encode(
        "utf-8"
    )


def network_dot_bytes(net: Network) -> bytes:
    """DOT graph, node statements in canonical order, edges lexicographic."""

    def quote(label: str) -> str:
        return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph {"]
    for node in net.nodes:
        lines.append(f"  {quote(node)};")
    for a, b, _ in net.sorted_edges():
        lines.append(f"  {quote(a)} -- {quote(b)};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def triple_to_obj(triple: NetworkTriple) -> dict:
    """Wire form of one step: the three networks plus per-node degree."""
    obj: dict = {"step": triple.step}
    for name, net in triple.networks().items():
        net_obj = network_to_obj(net)
        net_obj["degree"] = {v: net.degrees[v] for v in net.nodes}
        obj[name] = net_obj
    return obj


def triple_json_bytes(triple: NetworkTriple) -> bytes:
    return (json.dumps(triple_to_obj(triple), ensure_ascii=False, indent=2) + "\n").encode(
        "utf-8"
    )


def series_csv_bytes(series: MetricSeries) -> bytes:
    lines = ["step,metric,value"]
    for k, v in enumerate(series.values):
        lines.append(f"{k},{series.metric},{fmt_number(v)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def series_to_obj(series: MetricSeries) -> dict:
    return {
        "kind": series.kind,
        "metric": series.metric,
        "values": [float(fmt_number(v)) for v in series.values],
    }
