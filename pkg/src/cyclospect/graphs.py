"""Directed weighted graphs and plain-text ingestion.

Node ids are the non-negative integers found in the input and are kept
verbatim through every reduction.  Dense matrix indices are assigned only
when a matrix is built and never appear in results.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import EmptyGraphError, GraphParseError, ValidationError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable directed graph with strictly positive edge weights.

    `edges` holds exactly one entry per (src, dst) pair; duplicate input
    rows must be merged before construction (`from_edges` does this by
    summing weights in input order).  `node_weight` carries the optional
    per-node weights; nodes missing from it default to 1.0.
    """

    nodes: tuple[int, ...]
    edges: tuple[Edge, ...]
    node_weight: Mapping[int, float] | None = None

    def __post_init__(self):
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            raise ValidationError("duplicate node ids")
        seen_pairs = set()
        for src, dst, w in self.edges:
            if src not in node_set or dst not in node_set:
                raise ValidationError(f"edge ({src},{dst}) endpoint not in node set")
            if (src, dst) in seen_pairs:
                raise ValidationError(f"duplicate edge ({src},{dst}); merge before construction")
            seen_pairs.add((src, dst))
            if not w > 0:
                raise ValidationError(f"edge ({src},{dst}) weight {w} is not positive")
        if any(n < 0 for n in node_set):
            raise ValidationError("node ids must be non-negative")
        if self.node_weight is not None:
            for n, a in self.node_weight.items():
                if n not in node_set:
                    raise ValidationError(f"node weight for unknown node {n}")
                if a < 0:
                    raise ValidationError(f"negative node weight for node {n}")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int] | Edge],
        extra_nodes: Iterable[int] = (),
        node_weight: Mapping[int, float] | None = None,
    ) -> "DirectedGraph":
        """Build a graph from raw edge rows, merging duplicates by weight sum."""
        merged: dict[tuple[int, int], float] = {}
        nodes = set(extra_nodes)
        for row in edges:
            src, dst = int(row[0]), int(row[1])
            w = float(row[2]) if len(row) > 2 else 1.0
            nodes.add(src)
            nodes.add(dst)
            key = (src, dst)
            # in-order summation so a merged weight is exactly the sum of its rows
            merged[key] = merged.get(key, 0.0) + w
        edge_list = tuple((s, d, merged[(s, d)]) for s, d in sorted(merged))
        return cls(nodes=tuple(sorted(nodes)), edges=edge_list, node_weight=node_weight)

    def alpha(self, node: int) -> float:
        """Node weight, defaulting to 1.0."""
        if self.node_weight is None:
            return 1.0
        return float(self.node_weight.get(node, 1.0))

    def sum_alpha(self) -> float:
        return sum(self.alpha(n) for n in self.nodes)


@dataclass(frozen=True)
class GraphStats:
    node_count: int
    edge_count: int
    average_degree: float
    source_count: int
    sink_count: int
    disconnected_count: int


def graph_stats(g: DirectedGraph) -> GraphStats:
    """Node/edge counts and degree-based node classes.

    A source has out-edges and no in-edges, a sink has in-edges and no
    out-edges, a disconnected node has neither.  A self-loop counts as both
    an in-edge and an out-edge, so a self-looped node is none of the three.
    """
    out_deg = {n: 0 for n in g.nodes}
    in_deg = {n: 0 for n in g.nodes}
    for src, dst, _ in g.edges:
        out_deg[src] += 1
        in_deg[dst] += 1
    sources = sum(1 for n in g.nodes if out_deg[n] > 0 and in_deg[n] == 0)
    sinks = sum(1 for n in g.nodes if in_deg[n] > 0 and out_deg[n] == 0)
    disconnected = sum(1 for n in g.nodes if in_deg[n] == 0 and out_deg[n] == 0)
    n = len(g.nodes)
    avg = len(g.edges) / n if n else 0.0
    return GraphStats(
        node_count=n,
        edge_count=len(g.edges),
        average_degree=avg,
        source_count=sources,
        sink_count=sinks,
        disconnected_count=disconnected,
    )


def induced_subgraph(g: DirectedGraph, nodes: Iterable[int]) -> DirectedGraph:
    """Subgraph on `nodes` with every edge whose endpoints both survive."""
    keep = set(nodes)
    unknown = keep - set(g.nodes)
    if unknown:
        raise ValidationError(f"subgraph nodes not in graph: {sorted(unknown)[:5]}")
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    weights = None
    if g.node_weight is not None:
        weights = {n: w for n, w in g.node_weight.items() if n in keep}
    return DirectedGraph(nodes=tuple(sorted(keep)), edges=edges, node_weight=weights)


# ---- parsing ----


def _iter_lines(stream) -> Iterator[str]:
    if isinstance(stream, str):
        return iter(stream.splitlines())
    return iter(stream)


def parse_snap_edge_list(stream) -> DirectedGraph:
    """Parse SNAP-style edge lists: '#' comments, 'src dst' integer pairs.

    Every edge gets weight 1.0; duplicate pairs collapse to a single edge
    (weights summed, so repeated rows are visible in the merged weight).
    Whitespace-only lines are skipped.
    """
    rows = []
    for line_no, line in enumerate(_iter_lines(stream), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {text!r}", line_no)
        try:
            src, dst = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {text!r}", line_no) from None
        if src < 0 or dst < 0:
            raise GraphParseError(f"negative node id in {text!r}", line_no)
        rows.append((src, dst, 1.0))
    if not rows:
        raise EmptyGraphError("no edges found in input")
    return DirectedGraph.from_edges(rows)


def _looks_like_header(fields: list[str]) -> bool:
    try:
        int(fields[0])
        return False
    except ValueError:
        return True


def parse_weighted_csv(stream) -> DirectedGraph:
    """Parse 'src,dst,weight' rows; an optional header row is detected by a
    non-numeric first field.  Duplicate pairs merge by summing weights."""
    rows = []
    reader = csv.reader(_iter_lines(stream))
    for line_no, fields in enumerate(reader, start=1):
        if not fields or (len(fields) == 1 and not fields[0].strip()):
            continue
        if line_no == 1 and _looks_like_header(fields):
            continue
        if len(fields) != 3:
            raise GraphParseError(f"expected src,dst,weight, got {fields!r}", line_no)
        try:
            src, dst = int(fields[0]), int(fields[1])
            w = float(fields[2])
        except ValueError:
            raise GraphParseError(f"could not parse row {fields!r}", line_no) from None
        if src < 0 or dst < 0:
            raise GraphParseError(f"negative node id in row {fields!r}", line_no)
        if not w > 0:
            raise ValidationError(f"line {line_no}: non-positive weight {w}")
        rows.append((src, dst, w))
    if not rows:
        raise EmptyGraphError("no edges found in input")
    return DirectedGraph.from_edges(rows)


def parse_node_weights(stream) -> dict[int, float]:
    """Parse a 'node,alpha' CSV into a node-weight map (alpha must be >= 0)."""
    weights: dict[int, float] = {}
    reader = csv.reader(_iter_lines(stream))
    for line_no, fields in enumerate(reader, start=1):
        if not fields or (len(fields) == 1 and not fields[0].strip()):
            continue
        if line_no == 1 and _looks_like_header(fields):
            continue
        if len(fields) != 2:
            raise GraphParseError(f"expected node,alpha, got {fields!r}", line_no)
        try:
            node = int(fields[0])
            alpha = float(fields[1])
        except ValueError:
            raise GraphParseError(f"could not parse row {fields!r}", line_no) from None
        if alpha < 0:
            raise ValidationError(f"line {line_no}: negative node weight {alpha}")
        weights[node] = alpha
    return weights


# ---- serialization (round-trip partners of the parsers) ----


def write_snap_edge_list(g: DirectedGraph) -> str:
    lines = [f"{src}\t{dst}" for src, dst, _ in g.edges]
    return "\n".join(lines) + "\n"


def write_weighted_csv(g: DirectedGraph) -> str:
    lines = ["src,dst,weight"]
    lines.extend(f"{src},{dst},{w!r}" for src, dst, w in g.edges)
    return "\n".join(lines) + "\n"
