"""Graph reduction: iterated source removal, recurrence matrix, SCCs.

The reduction keeps deleting every node that has no in-edges but still has
out-edges (a source), together with its out-edges, until no such node is
left.  Disconnected nodes are not sources and are kept.  The surviving
graph is then row-normalized into a stochastic matrix, with an identity row
for every node that has no out-edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ValidationError
from .graphs import DirectedGraph, Edge


@dataclass(frozen=True)
class ReducedGraph:
    """Result of iterated source removal.

    `kept` is ordered ascending by node id; the position of a node in it is
    its row index in the recurrence matrix.  `removed_edges` lists deleted
    edges in removal order and carries the weights that enter the total
    complexity as the beta sum.
    """

    kept: tuple[int, ...]
    removed_sources: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    edges: tuple[Edge, ...]
    sink_selfloops_added: frozenset[int]
    disconnected: frozenset[int]

    @property
    def sinks(self) -> frozenset[int]:
        """Kept nodes with in-edges but no out-edges (self-loop rows that
        are not disconnected)."""
        return self.sink_selfloops_added - self.disconnected

    def sum_beta(self) -> float:
        return sum(w for _, _, w in self.removed_edges)

    def to_json_dict(self) -> dict:
        return {
            "kept": list(self.kept),
            "removed_sources": list(self.removed_sources),
            "removed_edges": [[s, d, w] for s, d, w in self.removed_edges],
            "sink_selfloops_added": sorted(self.sink_selfloops_added),
            "disconnected": sorted(self.disconnected),
        }


def strip_sources(g: DirectedGraph) -> ReducedGraph:
    """Repeatedly delete sources (zero in-degree, positive out-degree).

    Removal runs in sweeps; within a sweep nodes are removed in ascending
    id order so the removed-edge listing is reproducible.  The final kept
    set does not depend on the order.
    """
    in_deg = {n: 0 for n in g.nodes}
    out_adj: dict[int, list[Edge]] = {n: [] for n in g.nodes}
    for e in g.edges:
        out_adj[e[0]].append(e)
        in_deg[e[1]] += 1
    for n in out_adj:
        out_adj[n].sort(key=lambda e: e[1])

    alive = set(g.nodes)
    removed_sources: list[int] = []
    removed_edges: list[Edge] = []
    while True:
        sweep = sorted(n for n in alive if in_deg[n] == 0 and out_adj[n])
        if not sweep:
            break
        for n in sweep:
            for e in out_adj[n]:
                in_deg[e[1]] -= 1
                removed_edges.append(e)
            out_adj[n] = []
            alive.remove(n)
            removed_sources.append(n)

    kept = tuple(sorted(alive))
    kept_edges = tuple(e for e in g.edges if e[0] in alive)
    out_deg = {n: 0 for n in kept}
    kept_in = {n: 0 for n in kept}
    for src, dst, _ in kept_edges:
        out_deg[src] += 1
        kept_in[dst] += 1
    no_out = frozenset(n for n in kept if out_deg[n] == 0)
    disconnected = frozenset(n for n in no_out if kept_in[n] == 0)
    return ReducedGraph(
        kept=kept,
        removed_sources=tuple(removed_sources),
        removed_edges=tuple(removed_edges),
        edges=kept_edges,
        sink_selfloops_added=no_out,
        disconnected=disconnected,
    )


@dataclass(frozen=True)
class RecurrenceMatrix:
    """Dense row-stochastic matrix over the kept nodes of a reduction."""

    dim: int
    entries: np.ndarray
    node_ids: tuple[int, ...]

    def __post_init__(self):
        if self.entries.shape != (self.dim, self.dim):
            raise ValidationError("entries shape does not match dim")
        if self.dim:
            sums = self.entries.sum(axis=1)
            if not np.allclose(sums, 1.0, rtol=0.0, atol=1e-12):
                raise ValidationError("rows must sum to 1 within 1e-12")
            if self.entries.min() < 0.0 or self.entries.max() > 1.0 + 1e-12:
                raise ValidationError("entries must lie in [0,1]")

    def index_of(self, node: int) -> int:
        return self.node_ids.index(node)


def build_recurrence_matrix(rg: ReducedGraph) -> RecurrenceMatrix:
    """Row-normalize the reduced graph; empty rows get 1 on the diagonal."""
    ids = rg.kept
    index = {n: i for i, n in enumerate(ids)}
    k = len(ids)
    m = np.zeros((k, k), dtype=float)
    for src, dst, w in rg.edges:
        m[index[src], index[dst]] += w
    row_sums = m.sum(axis=1)
    for i in range(k):
        if row_sums[i] > 0.0:
            m[i] /= row_sums[i]
        else:
            m[i, i] = 1.0
    return RecurrenceMatrix(dim=k, entries=m, node_ids=ids)


@dataclass(frozen=True)
class SccDecomposition:
    components: tuple[tuple[int, ...], ...]
    component_of: dict[int, int]

    def largest(self) -> tuple[int, ...]:
        return self.components[0]


def scc(g: DirectedGraph) -> SccDecomposition:
    """Strongly connected components via iterative Tarjan.

    Components are listed largest first (ties by smallest contained id) and
    each component's ids are sorted ascending.
    """
    adj: dict[int, list[int]] = {n: [] for n in g.nodes}
    for src, dst, _ in g.edges:
        if src != dst:
            adj[src].append(dst)

    index_counter = 0
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []

    for root in g.nodes:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            node, edge_i = work[-1]
            if edge_i == 0:
                index[node] = index_counter
                lowlink[node] = index_counter
                index_counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            neighbors = adj[node]
            while edge_i < len(neighbors):
                nxt = neighbors[edge_i]
                edge_i += 1
                if nxt not in index:
                    work[-1] = (node, edge_i)
                    work.append((nxt, 0))
                    advanced = True
                    break
                if nxt in on_stack:
                    lowlink[node] = min(lowlink[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if lowlink[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.remove(w)
                    comp.append(w)
                    if w == node:
                        break
                components.append(sorted(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])

    components.sort(key=lambda c: (-len(c), c[0]))
    comp_of = {}
    for ci, comp in enumerate(components):
        for n in comp:
            comp_of[n] = ci
    return SccDecomposition(
        components=tuple(tuple(c) for c in components),
        component_of=comp_of,
    )
