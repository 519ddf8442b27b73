"""Almost-cyclic clustering from the recurrence-matrix eigenspectrum.

Pipeline: pick the dominant cycle order K_min by matching nonzero
eigenvalues to K-th roots of unity sector by sector, select the generating
eigenvalue (closest to exp(2*pi*i/K_min) inside the angular band
[pi/K_min, 3*pi/K_min]), then split the unit circle into K_min sectors
centered on the roots of unity and assign every node by the angle of its
generating-eigenvector component.  Sinks and disconnected nodes carry no
cycle information and go to their own clusters.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DegenerateEigenvectorError,
    DegenerateSpectrumError,
    NoCycleError,
    ValidationError,
)
from .graphs import DirectedGraph
from .reduction import ReducedGraph
from .spectra import DEFAULT_TOL, Spectrum, ToleranceConfig, _angles

DEFAULT_K_CAP = 50
DEFAULT_COMPONENT_ZERO_TOL = 1e-8

SORT_MAGNITUDE_DESC = "magnitude_desc"
SORT_REAL_ASC = "real_asc"


@dataclass(frozen=True)
class KminSearchResult:
    k_min: int
    objective: dict[int, float]
    n_candidates: int


def find_kmin(
    s: Spectrum,
    tol: ToleranceConfig = DEFAULT_TOL,
    k_cap: int = DEFAULT_K_CAP,
    tie_tol: float = 1e-9,
) -> KminSearchResult:
    """Search the cycle order K whose roots of unity best match the nonzero
    eigenvalues.

    For each K and each sector t = 2..K the candidate set S holds the
    nonzero eigenvalues whose argument lies in
    [(2*pi/K)(t-1.5), (2*pi/K)(t-0.5)]; the sector contributes the distance
    from exp(2*pi*i*(t-1)/K) to the nearest member, 1 when S is empty, and
    never more than 1 (an in-sector eigenvalue farther than the empty-sector
    penalty is no better than no eigenvalue).  The objective is the mean
    over sectors.

    Candidates within tie_tol of the minimum count as tied and the largest
    tied K wins: for a pure d-cycle every divisor of d also scores ~0, and
    the dominant cycle is d itself, not its shortest sub-period.
    """
    vals = s.eigenvalues
    mask = np.abs(vals) >= tol.zero_mod_tol
    lam = vals[mask]
    n = int(mask.sum())
    if n < 2:
        raise NoCycleError(f"only {n} nonzero eigenvalue(s); need at least 2")
    alpha = _angles(lam)
    k_hi = min(n, k_cap)
    objective: dict[int, float] = {}
    for k in range(2, k_hi + 1):
        width = 2.0 * math.pi / k
        total = 0.0
        for t in range(2, k + 1):
            lo = width * (t - 1.5)
            hi = width * (t - 0.5)
            sel = (alpha >= lo) & (alpha <= hi)
            if not sel.any():
                total += 1.0
                continue
            root = complex(math.cos(width * (t - 1)), math.sin(width * (t - 1)))
            d = float(np.min(np.abs(lam[sel] - root)))
            total += min(1.0, d)
        objective[k] = total / (k - 1)
    best_val = min(objective.values())
    best_k = max(k for k, v in objective.items() if v <= best_val + tie_tol)
    return KminSearchResult(k_min=best_k, objective=objective, n_candidates=n)


@dataclass(frozen=True)
class GeneratingSet:
    """The generating eigenvalue(s) and eigenvector(s) for a cycle order.

    `primary_index` indexes into the originating Spectrum.  Column j of
    `generating_eigenvectors` belongs to `generating_eigenvalues[j]`; the
    primary pair always sits at column 0.
    """

    primary_index: int
    generating_eigenvalues: tuple[complex, ...]
    generating_eigenvectors: np.ndarray

    @property
    def primary_value(self) -> complex:
        return self.generating_eigenvalues[0]

    @property
    def primary_vector(self) -> np.ndarray:
        return self.generating_eigenvectors[:, 0]


def select_generators(
    s: Spectrum,
    k_min: int,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> GeneratingSet:
    """Pick the eigenvalue closest to exp(2*pi*i/k_min) within the angular
    band [pi/k_min, 3*pi/k_min], plus any others within generator_match_tol
    of it."""
    if k_min < 2:
        raise ValidationError("k_min must be >= 2")
    if s.right_eigenvectors is None:
        raise ValidationError("spectrum was computed without eigenvectors")
    vals = s.eigenvalues
    alpha = _angles(vals)
    lo = math.pi / k_min
    hi = 3.0 * math.pi / k_min
    band = (np.abs(vals) >= tol.zero_mod_tol) & (alpha >= lo) & (alpha <= hi)
    if not band.any():
        raise DegenerateSpectrumError(
            f"no nonzero eigenvalue with argument in [{lo:.4f}, {hi:.4f}]"
        )
    target = complex(math.cos(2.0 * math.pi / k_min), math.sin(2.0 * math.pi / k_min))
    cand_idx = np.nonzero(band)[0]
    primary = int(cand_idx[int(np.argmin(np.abs(vals[cand_idx] - target)))])
    close = cand_idx[np.abs(vals[cand_idx] - vals[primary]) <= tol.generator_match_tol]
    members = [primary] + [int(i) for i in close if int(i) != primary]
    return GeneratingSet(
        primary_index=primary,
        generating_eigenvalues=tuple(complex(vals[i]) for i in members),
        generating_eigenvectors=s.right_eigenvectors[:, members],
    )


@dataclass(frozen=True)
class Clustering:
    """Node partition: sector clusters 0..n_clusters-1 plus the sink and
    disconnected clusters.  `labels` covers exactly the sector-clustered
    nodes; `phi` their component angles.  `zero_component_nodes` lists
    non-sink nodes whose eigenvector component was numerically zero; their
    placement is a policy choice (see assign_clusters), so they are flagged.
    """

    n_clusters: int
    labels: dict[int, int]
    sink_cluster: frozenset[int]
    disconnected_cluster: frozenset[int]
    phi: dict[int, float]
    zero_component_nodes: tuple[int, ...]

    def members(self, cluster: int) -> list[int]:
        return sorted(n for n, c in self.labels.items() if c == cluster)

    def cluster_sizes(self) -> list[int]:
        sizes = [0] * self.n_clusters
        for c in self.labels.values():
            sizes[c] += 1
        return sizes


def _sector_of(phi: float, k: int) -> int:
    """Sector index for an angle, sectors centered on the k-th roots of
    unity; exact boundary hits go to the lower sector index."""
    width = 2.0 * math.pi / k
    x = (phi + 0.5 * width) % (2.0 * math.pi)
    q = x / width
    c = math.floor(q)
    if q == c:
        c -= 1
    return c % k


def assign_clusters(
    gen: GeneratingSet,
    rg: ReducedGraph,
    k_min: int,
    tol: ToleranceConfig = DEFAULT_TOL,
    component_zero_tol: float = DEFAULT_COMPONENT_ZERO_TOL,
    zero_components_to_sectors: bool = False,
) -> Clustering:
    """Assign every kept node by its generating-eigenvector component angle.

    Sinks (structurally: no out-edges before self-loop insertion) go to the
    sink cluster and disconnected nodes to theirs.  A node's angle comes
    from the first generating eigenvector with a usable component there:
    when the generating eigenvalue is degenerate (disjoint cycles), the
    solver localizes each eigenvector on one piece, and the later columns
    cover the nodes the primary is exactly zero on.  Non-sink nodes that no
    generator covers carry no usable angle; by default they join the sink
    cluster (they drain into it dynamically) and are reported in
    `zero_component_nodes`.  Set `zero_components_to_sectors` to place them
    by their raw primary angle instead.
    """
    vecs = gen.generating_eigenvectors
    if vecs.shape[0] != len(rg.kept):
        raise ValidationError("eigenvector length does not match reduced graph")
    sinks = rg.sinks
    disconnected = rg.disconnected
    labels: dict[int, int] = {}
    phi: dict[int, float] = {}
    flagged: list[int] = []
    moduli = np.abs(vecs)
    plain = [
        i for i, nid in enumerate(rg.kept) if nid not in sinks and nid not in disconnected
    ]
    if plain and float(moduli[[*plain], 0].max()) <= component_zero_tol:
        raise DegenerateEigenvectorError("all eigenvector components are numerically zero")
    two_pi = 2.0 * math.pi
    for i, nid in enumerate(rg.kept):
        if nid in disconnected:
            continue
        if nid in sinks:
            continue
        cols = np.nonzero(moduli[i] > component_zero_tol)[0]
        j = int(cols[0]) if len(cols) else 0
        angle = math.atan2(vecs[i, j].imag, vecs[i, j].real)
        if angle < 0.0:
            angle += two_pi
        if not len(cols):
            flagged.append(nid)
            if not zero_components_to_sectors:
                continue
        labels[nid] = _sector_of(angle, k_min)
        phi[nid] = angle
    return Clustering(
        n_clusters=k_min,
        labels=labels,
        sink_cluster=frozenset(sinks) | (frozenset() if zero_components_to_sectors else frozenset(flagged)),
        disconnected_cluster=frozenset(disconnected),
        phi=phi,
        zero_component_nodes=tuple(flagged),
    )


@dataclass(frozen=True)
class RatioTable:
    mode: str
    cells: np.ndarray
    edge_counts: np.ndarray
    cluster_sizes: tuple[int, ...]


RATIO_EDGES_PER_NODE = "edges_per_node"
RATIO_EDGES_PER_INTERNAL_EDGE = "edges_per_internal_edge"


def _labels_of(clustering) -> tuple[Mapping[int, int], int]:
    if isinstance(clustering, Clustering):
        return clustering.labels, clustering.n_clusters
    if isinstance(clustering, Mapping):
        if not clustering:
            raise ValidationError("empty cluster labeling")
        return clustering, max(clustering.values()) + 1
    raise ValidationError(f"unsupported clustering argument {type(clustering)!r}")


def ratio_table(
    g: DirectedGraph,
    clustering,
    mode: str = RATIO_EDGES_PER_NODE,
) -> RatioTable:
    """Edge-count ratios between clusters.

    Cell (X,Y) counts edges of `g` from X to Y, divided by |X| in
    edges_per_node mode or by max(1, internal edge count of X) in
    edges_per_internal_edge mode.  Only edges with both endpoints in sector
    clusters are counted.
    """
    if mode not in (RATIO_EDGES_PER_NODE, RATIO_EDGES_PER_INTERNAL_EDGE):
        raise ValidationError(f"unknown ratio mode {mode!r}")
    labels, k = _labels_of(clustering)
    sizes = [0] * k
    for c in labels.values():
        sizes[c] += 1
    counts = np.zeros((k, k), dtype=int)
    for src, dst, _ in g.edges:
        cs = labels.get(src)
        cd = labels.get(dst)
        if cs is None or cd is None:
            continue
        counts[cs, cd] += 1
    cells = np.zeros((k, k), dtype=float)
    for x in range(k):
        if sizes[x] == 0:
            warnings.warn(f"cluster {x} is empty; its ratio row is zero", stacklevel=2)
            continue
        if mode == RATIO_EDGES_PER_NODE:
            denom = float(sizes[x])
        else:
            denom = float(max(1, counts[x, x]))
        cells[x] = counts[x] / denom
    return RatioTable(mode=mode, cells=cells, edge_counts=counts, cluster_sizes=tuple(sizes))


def cyclic_pairs(k: int) -> list[tuple[int, int]]:
    """Cluster pairs along the cycle direction; both cross pairs for k=2."""
    if k == 2:
        return [(0, 1), (1, 0)]
    return [(x, (x + 1) % k) for x in range(k)]


@dataclass(frozen=True)
class TrimResult:
    fraction: float
    effective_fraction: float
    trimmed_clusters: tuple[tuple[int, ...], ...]
    objective_curve: tuple[tuple[float, float], ...]
    dropped_disjoint: frozenset[int]


def trim_clusters(
    g: DirectedGraph,
    clustering: Clustering,
    gen: GeneratingSet,
    grid_step: float = 0.001,
    sort_key: str = SORT_MAGNITUDE_DESC,
) -> TrimResult:
    """Shrink all clusters to their strongest members and maximize the
    cyclic cross-edge ratio.

    For each fraction rho on the grid, every cluster keeps its
    ceil(rho * size) nodes of largest generating-eigenvector component
    magnitude (or of smallest real part with sort_key=real_asc).  The
    objective is the sum over cyclic pairs (X, next X) of
    |edges X->Y| / max(1, |edges inside X|) inside the trimmed subgraph.
    Ties in the objective break toward the larger fraction, so an
    all-equal curve returns rho = 1.  Kept nodes with no edge inside the
    trimmed subgraph are reported as dropped_disjoint and excluded from
    the effective fraction.
    """
    if not 0.0 < grid_step <= 1.0:
        raise ValidationError("grid_step must lie in (0, 1]")
    if sort_key not in (SORT_MAGNITUDE_DESC, SORT_REAL_ASC):
        raise ValidationError(f"unknown sort key {sort_key!r}")
    k = clustering.n_clusters
    labels = clustering.labels
    if not labels:
        raise ValidationError("clustering has no sector-clustered nodes")
    v = gen.primary_vector
    comp = {nid: v[i] for i, nid in enumerate(_kept_order(gen, clustering))}

    ordered: list[list[int]] = []
    for c in range(k):
        members = clustering.members(c)
        if sort_key == SORT_MAGNITUDE_DESC:
            members.sort(key=lambda nid: (-abs(comp[nid]), nid))
        else:
            members.sort(key=lambda nid: (comp[nid].real, nid))
        ordered.append(members)
    sizes = [len(m) for m in ordered]
    rank = {nid: r for members in ordered for r, nid in enumerate(members)}

    # activation threshold: an edge is present once rho exceeds both
    # endpoint ranks divided by their cluster sizes
    thresholds: dict[tuple[int, int], list[float]] = {}
    for src, dst, _ in g.edges:
        cs = labels.get(src)
        cd = labels.get(dst)
        if cs is None or cd is None:
            continue
        t = max(rank[src] / sizes[cs], rank[dst] / sizes[cd])
        thresholds.setdefault((cs, cd), []).append(t)
    sorted_thresholds = {key: np.sort(np.array(ts)) for key, ts in thresholds.items()}

    grid = _fraction_grid(grid_step)

    def cell_counts(pair: tuple[int, int]) -> np.ndarray:
        ts = sorted_thresholds.get(pair)
        if ts is None:
            return np.zeros(len(grid), dtype=int)
        return np.searchsorted(ts, grid, side="left")

    pairs = cyclic_pairs(k)
    objective = np.zeros(len(grid))
    for x, y in pairs:
        cross = cell_counts((x, y)).astype(float)
        internal = np.maximum(1, cell_counts((x, x))).astype(float)
        objective += cross / internal

    best = 0
    for i in range(1, len(grid)):
        if objective[i] >= objective[best]:
            best = i
    rho = float(grid[best])

    trimmed = []
    kept_nodes = set()
    for c in range(k):
        # ceil(rho * size) members in exact arithmetic; phrased as the same
        # rank/size < rho comparison the edge thresholds use, so the trimmed
        # sets and the objective curve can never disagree by a rounding ulp
        keep = sum(1 for r in range(sizes[c]) if r / sizes[c] < rho)
        chosen = tuple(ordered[c][:keep])
        trimmed.append(chosen)
        kept_nodes.update(chosen)
    touched = set()
    for src, dst, _ in g.edges:
        if src in kept_nodes and dst in kept_nodes:
            touched.add(src)
            touched.add(dst)
    dropped = frozenset(kept_nodes - touched)
    total = sum(sizes)
    effective = (len(kept_nodes) - len(dropped)) / total if total else 0.0
    return TrimResult(
        fraction=rho,
        effective_fraction=effective,
        trimmed_clusters=tuple(trimmed),
        objective_curve=tuple((float(r), float(o)) for r, o in zip(grid, objective)),
        dropped_disjoint=dropped,
    )


def _fraction_grid(step: float) -> np.ndarray:
    m = int(round(1.0 / step))
    if abs(m * step - 1.0) < 1e-9:
        return np.arange(1, m + 1) / m
    m = int(math.floor(1.0 / step))
    grid = np.arange(1, m + 1) * step
    if grid[-1] < 1.0:
        grid = np.append(grid, 1.0)
    return grid


def _kept_order(gen: GeneratingSet, clustering: Clustering):
    # the eigenvector is indexed by reduced position; reconstruct that order
    # from the clustering's node universe
    ids = sorted(
        set(clustering.labels)
        | set(clustering.sink_cluster)
        | set(clustering.disconnected_cluster)
        | set(clustering.zero_component_nodes)
    )
    if len(ids) != len(gen.primary_vector):
        raise ValidationError("clustering does not cover the eigenvector's node set")
    return ids
