"""Report serialization: canonical JSON plus CSV and DOT derived artifacts.

All floats are written with 7 significant digits and keys are sorted, so a
report is byte-identical across runs for the same input, config, and seed.
"""

from __future__ import annotations

import json
import math
from typing import Iterable

from .clustering import Clustering, RatioTable, TrimResult
from .graphs import DirectedGraph

SIG_DIGITS = 7


def round_for_report(value, sig: int = SIG_DIGITS):
    """Recursively round floats to `sig` significant digits; infinities and
    NaNs become strings since canonical JSON has no literal for them."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return float(f"{value:.{sig}g}")
    if isinstance(value, dict):
        return {str(k): round_for_report(v, sig) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_for_report(v, sig) for v in value]
    return value


def report_json(doc: dict) -> str:
    return json.dumps(round_for_report(doc), indent=2, sort_keys=True, allow_nan=False) + "\n"


def fmt(x: float) -> str:
    return f"{x:.{SIG_DIGITS}g}"


def eigenvalues_csv(rows: Iterable[tuple]) -> str:
    lines = ["re,im,r,theta,class"]
    for re, im, r, theta, label in rows:
        lines.append(f"{fmt(re)},{fmt(im)},{fmt(r)},{fmt(theta)},{label}")
    return "\n".join(lines) + "\n"


def ratios_csv(tables: list[RatioTable]) -> str:
    lines = ["mode,from,to,edge_count,ratio"]
    for table in tables:
        k = len(table.cluster_sizes)
        for x in range(k):
            for y in range(k):
                lines.append(
                    f"{table.mode},{x},{y},{int(table.edge_counts[x, y])},{fmt(float(table.cells[x, y]))}"
                )
    return "\n".join(lines) + "\n"


def trim_curve_csv(trim: TrimResult) -> str:
    lines = ["fraction,objective"]
    for rho, val in trim.objective_curve:
        lines.append(f"{fmt(rho)},{fmt(val)}")
    return "\n".join(lines) + "\n"


def sweep_csv(rows: list[dict]) -> str:
    lines = ["degree,mean_F,std_F,mean_radial,mean_angular"]
    for row in rows:
        lines.append(
            f"{fmt(row['degree'])},{fmt(row['mean_f'])},{fmt(row['std_f'])},"
            f"{fmt(row['mean_radial'])},{fmt(row['mean_angular'])}"
        )
    return "\n".join(lines) + "\n"


def clusters_json_dict(clustering: Clustering, extras: dict | None = None) -> dict:
    doc = {
        "n_clusters": clustering.n_clusters,
        "clusters": [clustering.members(c) for c in range(clustering.n_clusters)],
        "sink_cluster": sorted(clustering.sink_cluster),
        "disconnected_cluster": sorted(clustering.disconnected_cluster),
        "zero_component_nodes": list(clustering.zero_component_nodes),
    }
    if extras:
        doc.update(extras)
    return doc


_PALETTE = [
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#999999",
]


def clusters_dot(g: DirectedGraph, clustering: Clustering) -> str:
    """DOT digraph with cluster-colored nodes; cross edges inherit the color
    of their source cluster, internal edges stay black."""
    labels = clustering.labels
    lines = ["digraph clusters {", "  node [style=filled, shape=circle, fontsize=8];"]
    for c in range(clustering.n_clusters):
        color = _PALETTE[c % len(_PALETTE)]
        for nid in clustering.members(c):
            lines.append(f'  {nid} [fillcolor="{color}"];')
    for src, dst, _ in g.edges:
        cs = labels.get(src)
        cd = labels.get(dst)
        if cs is None or cd is None:
            continue
        if cs == cd:
            lines.append(f"  {src} -> {dst};")
        else:
            color = _PALETTE[cs % len(_PALETTE)]
            lines.append(f'  {src} -> {dst} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
