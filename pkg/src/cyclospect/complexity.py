"""Spectral complexity, total complexity, graph energy, random baselines.

The central quantity is

    F = (1/K) * sum_i [ (1 - r_i) + 1{theta_i != 0} ]

over a selected set of K eigenvalues in polar form.  Two selection policies
exist: exclude_zeros drops eigenvalues of tiny modulus from the sum (and
from K), include_zeros keeps them and counts each as a full (1-0)+1 = 2
contribution.  Both are needed: the first matches the large-network numbers,
the second the closed-form worst case 2(K-1)/K for constant matrices.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EigensolverError, EmptySpectrumError, ValidationError
from .graphs import DirectedGraph, Edge
from .reduction import build_recurrence_matrix, strip_sources
from .spectra import (
    CLASS_ONE,
    CLASS_THETA_NONZERO,
    CLASS_ZERO,
    DEFAULT_TOL,
    Spectrum,
    ToleranceConfig,
    eig,
    polar_classify,
)

EXCLUDE_ZEROS = "exclude_zeros"
INCLUDE_ZEROS = "include_zeros"

INFINITE_W = math.inf


@dataclass(frozen=True)
class ComplexityReport:
    F: float
    radial_term: float
    angular_term: float
    K: int
    policy: str
    tolerances: ToleranceConfig


def spectral_complexity(
    s: Spectrum,
    tol: ToleranceConfig = DEFAULT_TOL,
    policy: str = EXCLUDE_ZEROS,
) -> ComplexityReport:
    """Spectral complexity of a spectrum under the given zero policy.

    The radial term is the mean of (1 - r_i), the angular term the fraction
    of selected eigenvalues with nonzero argument; F is their sum.
    Eigenvalues classified as one contribute exactly 0 to both terms, and
    under include_zeros a zero-class eigenvalue contributes exactly 1 to
    each term.
    """
    if policy not in (EXCLUDE_ZEROS, INCLUDE_ZEROS):
        raise ValidationError(f"unknown zero-eigenvalue policy {policy!r}")
    cls = polar_classify(s, tol)
    radial_sum = 0.0
    angular_count = 0
    k = 0
    for i, label in enumerate(cls.labels):
        if label == CLASS_ZERO:
            if policy == EXCLUDE_ZEROS:
                continue
            radial_sum += 1.0
            angular_count += 1
        elif label == CLASS_ONE:
            pass
        else:
            radial_sum += 1.0 - float(cls.r[i])
            if label == CLASS_THETA_NONZERO:
                angular_count += 1
        k += 1
    if k == 0:
        raise EmptySpectrumError("no eigenvalues selected by policy")
    radial = radial_sum / k
    angular = angular_count / k
    return ComplexityReport(
        F=radial + angular,
        radial_term=radial,
        angular_term=angular,
        K=k,
        policy=policy,
        tolerances=tol,
    )


@dataclass(frozen=True)
class TotalComplexityReport:
    C: float
    W: float
    gamma: float
    sum_alpha: float
    sum_beta: float
    F: float


def total_complexity(
    F: float,
    node_weights: Iterable[float],
    removed_edges: Iterable[Edge],
    gamma: float,
    W: float,
) -> TotalComplexityReport:
    """Blend of structural weight and spectral complexity.

    C = (gamma*(sum_alpha + sum_beta) + W*F) / (1 + W) for finite W; the
    W = inf sentinel gives the pure spectral limit C = F.  `node_weights`
    must cover ALL original nodes (including stripped sources); the beta sum
    runs over the removed edges only.
    """
    if not gamma > 0:
        raise ValidationError("gamma must be positive")
    if not (W >= 0 or math.isinf(W)):
        raise ValidationError("W must be nonnegative or infinite")
    sum_alpha = 0.0
    for a in node_weights:
        if a < 0:
            raise ValidationError(f"negative node weight {a}")
        sum_alpha += a
    sum_beta = sum(w for _, _, w in removed_edges)
    if math.isinf(W):
        c = F
    else:
        c = (gamma * (sum_alpha + sum_beta) + W * F) / (1.0 + W)
    return TotalComplexityReport(C=c, W=W, gamma=gamma, sum_alpha=sum_alpha, sum_beta=sum_beta, F=F)


def gamma_from_samples(fs: Sequence[float], sums: Sequence[float], mode: str = "expectation") -> float:
    """Scaling factor from per-graph (F, sum_alpha + sum_beta) samples."""
    if mode not in ("expectation", "max"):
        raise ValidationError(f"unknown gamma mode {mode!r}")
    if not fs or len(fs) != len(sums):
        raise ValidationError("need matching nonempty F and weight-sum samples")
    if mode == "expectation":
        num = sum(fs) / len(fs)
        den = sum(sums) / len(sums)
    else:
        num = max(fs)
        den = max(sums)
    if den == 0:
        raise ValidationError("all node and removed-edge weights are zero")
    return num / den


def estimate_gamma(
    graphs: Iterable[DirectedGraph],
    mode: str = "expectation",
    tol: ToleranceConfig = DEFAULT_TOL,
    policy: str = EXCLUDE_ZEROS,
) -> float:
    """Estimate gamma over a graph collection by running the full pipeline
    on each graph and relating spectral complexity to structural weight."""
    fs: list[float] = []
    sums: list[float] = []
    for g in graphs:
        rg = strip_sources(g)
        spectrum = eig(build_recurrence_matrix(rg), want_vectors=False)
        fs.append(spectral_complexity(spectrum, tol, policy).F)
        sums.append(g.sum_alpha() + rg.sum_beta())
    if not fs:
        raise ValidationError("empty graph collection")
    return gamma_from_samples(fs, sums, mode)


@dataclass(frozen=True)
class EnergyReport:
    energy: float
    singular_value_sum: float
    mean_edge_weight: float
    symmetrized: bool


def graph_energy(g: DirectedGraph, symmetrize: bool = False) -> EnergyReport:
    """Mean edge weight times the nuclear norm of the 0/1 adjacency matrix.

    Self-loops are excluded from the energy calculation entirely (neither in
    the matrix nor in the mean).  With `symmetrize` the matrix is replaced
    by its elementwise logical OR with its transpose before the SVD; the
    mean edge weight still comes from the original edge multiset.
    """
    ids = g.nodes
    index = {n: i for i, n in enumerate(ids)}
    n = len(ids)
    m = np.zeros((n, n), dtype=float)
    weights = []
    for src, dst, w in g.edges:
        if src == dst:
            continue
        m[index[src], index[dst]] = 1.0
        weights.append(w)
    if not weights:
        warnings.warn("graph has no off-diagonal edges; energy is 0", stacklevel=2)
        return EnergyReport(energy=0.0, singular_value_sum=0.0, mean_edge_weight=0.0, symmetrized=symmetrize)
    if symmetrize:
        m = ((m + m.T) > 0.0).astype(float)
    sv = np.linalg.svd(m, compute_uv=False)
    sv_sum = float(sv.sum())
    mean_w = float(sum(weights) / len(weights))
    return EnergyReport(
        energy=mean_w * sv_sum,
        singular_value_sum=sv_sum,
        mean_edge_weight=mean_w,
        symmetrized=symmetrize,
    )


# ---- random-graph baselines ----


def random_digraph(n: int, avg_degree: float, rng_seed) -> DirectedGraph:
    """Erdos-Renyi style digraph: each ordered pair (i,j), i != j, gets an
    edge with probability avg_degree/n, weight 1.  Deterministic per seed."""
    if n < 1:
        raise ValidationError("n must be positive")
    if not 0 < avg_degree <= n:
        raise ValidationError("avg_degree must satisfy 0 < avg_degree <= n")
    p = avg_degree / n
    rng = np.random.default_rng(rng_seed)
    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    block = 1024
    # row blocks consume the bit stream in the same order as one big draw
    for start in range(0, n, block):
        stop = min(start + block, n)
        mask = rng.random((stop - start, n)) < p
        for local in range(stop - start):
            mask[local, start + local] = False
        r, c = np.nonzero(mask)
        rows.append(r + start)
        cols.append(c)
    src = np.concatenate(rows) if rows else np.array([], dtype=int)
    dst = np.concatenate(cols) if cols else np.array([], dtype=int)
    edges = tuple((int(s), int(d), 1.0) for s, d in zip(src, dst))
    return DirectedGraph(nodes=tuple(range(n)), edges=edges)


@dataclass(frozen=True)
class BaselineResult:
    """Mean and stddev of spectral complexity over random-graph realizations."""

    n: int
    avg_degree: float
    realizations: int
    mean_f: float
    std_f: float
    mean_radial: float
    std_radial: float
    mean_angular: float
    std_angular: float
    samples: tuple[tuple[float, float, float], ...]


def _as_seed_tuple(seed) -> tuple[int, ...]:
    if isinstance(seed, (list, tuple)):
        return tuple(int(s) for s in seed)
    return (int(seed),)


def random_baseline(
    n: int,
    avg_degree: float,
    realizations: int,
    seed,
    tol: ToleranceConfig = DEFAULT_TOL,
    policy: str = EXCLUDE_ZEROS,
) -> BaselineResult:
    """Full pipeline (strip, recurrence matrix, eig, F) per realization.

    Per-realization RNG streams derive from (seed, realization index), so
    results do not depend on evaluation order.
    """
    if realizations < 1:
        raise ValidationError("realizations must be >= 1")
    samples = []
    base = _as_seed_tuple(seed)
    for k in range(realizations):
        g = random_digraph(n, avg_degree, rng_seed=base + (k,))
        rg = strip_sources(g)
        try:
            spectrum = eig(build_recurrence_matrix(rg), want_vectors=False)
        except EigensolverError as exc:
            raise EigensolverError(f"realization {k}: {exc}") from exc
        rep = spectral_complexity(spectrum, tol, policy)
        samples.append((rep.F, rep.radial_term, rep.angular_term))
    arr = np.array(samples)
    ddof = 1 if realizations > 1 else 0
    std = arr.std(axis=0, ddof=ddof) if realizations > 1 else np.zeros(3)
    mean = arr.mean(axis=0)
    return BaselineResult(
        n=n,
        avg_degree=avg_degree,
        realizations=realizations,
        mean_f=float(mean[0]),
        std_f=float(std[0]),
        mean_radial=float(mean[1]),
        std_radial=float(std[1]),
        mean_angular=float(mean[2]),
        std_angular=float(std[2]),
        samples=tuple(tuple(s) for s in samples),
    )


def baseline_sweep(
    n: int,
    degrees: Sequence[float],
    realizations: int,
    seed,
    tol: ToleranceConfig = DEFAULT_TOL,
    policy: str = EXCLUDE_ZEROS,
) -> list[BaselineResult]:
    """random_baseline across an average-degree grid with independent
    deterministic streams per grid point."""
    if not degrees:
        raise ValidationError("empty degree grid")
    base = _as_seed_tuple(seed)
    results = []
    for di, d in enumerate(degrees):
        results.append(random_baseline(n, d, realizations, base + (di,), tol, policy))
    return results
