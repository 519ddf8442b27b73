"""Fiedler-vector bipartition of the symmetrized graph, as a baseline.

The directed graph is flattened to a 0/1 adjacency without self-loops,
symmetrized by elementwise logical OR with its transpose, and the Laplacian
L = D - M is eigendecomposed.  The eigenvector of the second-smallest
eigenvalue splits the nodes by component sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, NoCutFoundError, ValidationError
from .graphs import DirectedGraph

ZERO_COMPONENT_TOL = 1e-12


@dataclass(frozen=True)
class FiedlerResult:
    cluster_pos: frozenset[int]
    cluster_neg: frozenset[int]
    fiedler_value: float
    fiedler_vector: tuple[float, ...]
    node_ids: tuple[int, ...]

    def labels(self) -> dict[int, int]:
        """Cluster labeling (positive side 0, negative side 1) for ratio tables."""
        out = {n: 0 for n in self.cluster_pos}
        out.update({n: 1 for n in self.cluster_neg})
        return out


def _split_by_sign(v: np.ndarray, node_ids, zero_tol: float = ZERO_COMPONENT_TOL):
    """Orient the vector so its largest-magnitude component is positive,
    then split by sign; components within zero_tol of 0 join the positive
    side.  A single-signed vector means there is no cut."""
    k = int(np.argmax(np.abs(v)))
    if v[k] < 0.0:
        v = -v
    pos = []
    neg = []
    for nid, x in zip(node_ids, v):
        if x < -zero_tol:
            neg.append(nid)
        else:
            pos.append(nid)
    if not pos or not neg:
        raise NoCutFoundError("no cut found: Fiedler vector is single-signed")
    return frozenset(pos), frozenset(neg), v


def fiedler_partition(g: DirectedGraph, zero_tol: float = ZERO_COMPONENT_TOL) -> FiedlerResult:
    """Bipartition by the eigenvector of the second-smallest Laplacian
    eigenvalue of the OR-symmetrized graph.

    Raises DisconnectedGraphError when the symmetrized graph is not
    connected (run on the largest SCC instead).
    """
    ids = g.nodes
    n = len(ids)
    if n < 2:
        raise ValidationError("Fiedler partition needs at least 2 nodes")
    index = {nid: i for i, nid in enumerate(ids)}
    m = np.zeros((n, n), dtype=float)
    for src, dst, _ in g.edges:
        if src == dst:
            continue
        m[index[src], index[dst]] = 1.0
    m = ((m + m.T) > 0.0).astype(float)
    lap = np.diag(m.sum(axis=1)) - m
    vals, vecs = np.linalg.eigh(lap)
    scale = max(1.0, float(abs(vals[-1])))
    if vals[1] <= 1e-9 * scale:
        raise DisconnectedGraphError(
            "graph is disconnected after symmetrization; "
            "rerun with largest-SCC scope"
        )
    vector = vecs[:, 1]
    pos, neg, oriented = _split_by_sign(vector, ids, zero_tol)
    return FiedlerResult(
        cluster_pos=pos,
        cluster_neg=neg,
        fiedler_value=float(vals[1]),
        fiedler_vector=tuple(float(x) for x in oriented),
        node_ids=tuple(ids),
    )
