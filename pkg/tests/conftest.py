"""Shared builders and dataset discovery.

The two published-network suites need the SNAP edge lists on disk; point
CYCLOSPECT_DATA at a directory holding wiki-Vote.txt / p2p-Gnutella08.txt
(scripts/fetch_datasets.py downloads them), or drop them in ./data.
Without the files those tests skip.
"""

import functools
import os
from pathlib import Path

import pytest

from cyclospect import (
    DirectedGraph,
    build_recurrence_matrix,
    eig,
    induced_subgraph,
    parse_snap_edge_list,
    polar_classify,
    scc,
    strip_sources,
)


def graph(*pairs, nodes=(), weights=None):
    """Unit-weight digraph from (src, dst) pairs, plus isolated nodes."""
    edges = [(u, v, 1.0) for u, v in pairs]
    return DirectedGraph.from_edges(edges, extra_nodes=nodes, node_weight=weights)


def cycle(d, offset=0):
    return graph(*[((offset + i), (offset + (i + 1) % d)) for i in range(d)])


def weighted(*triples, nodes=()):
    return DirectedGraph.from_edges(list(triples), extra_nodes=nodes)


@pytest.fixture
def three_cycle():
    return cycle(3)


def _data_dir() -> Path | None:
    env = os.environ.get("CYCLOSPECT_DATA")
    candidates = [Path(env)] if env else []
    candidates.append(Path(__file__).resolve().parent.parent / "data")
    for c in candidates:
        if c.is_dir():
            return c
    return None


def dataset_path(name: str) -> Path:
    d = _data_dir()
    if d is None or not (d / name).is_file():
        pytest.skip(
            f"dataset {name} not present; run scripts/fetch_datasets.py "
            "or set CYCLOSPECT_DATA"
        )
    return d / name


@functools.lru_cache(maxsize=4)
def dataset_graph(name: str) -> DirectedGraph:
    return parse_snap_edge_list(dataset_path(name).read_text())


@functools.lru_cache(maxsize=4)
def dataset_pipeline(name: str, want_vectors: bool = False):
    """Parse, strip, decompose one of the published networks.

    Cached per session: the dense eigendecompositions dominate the suite's
    runtime and several criteria share them.
    """
    g = dataset_graph(name)
    rg = strip_sources(g)
    s = eig(build_recurrence_matrix(rg), want_vectors=want_vectors)
    return g, rg, s, polar_classify(s)


@functools.lru_cache(maxsize=4)
def dataset_scc_graph(name: str) -> DirectedGraph:
    g = dataset_graph(name)
    return induced_subgraph(g, scc(g).largest())


@functools.lru_cache(maxsize=4)
def dataset_scc_pipeline(name: str):
    """Same decomposition restricted to the largest strongly connected component."""
    g = dataset_scc_graph(name)
    rg = strip_sources(g)
    s = eig(build_recurrence_matrix(rg), want_vectors=True)
    return g, rg, s, polar_classify(s)
