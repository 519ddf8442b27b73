"""End-to-end analysis runs shared by the CLI: load, reduce, decompose,
report.  Each run_* function returns the report document (a plain dict) and
writes its artifacts under the configured output directory.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import plots, reports
from .clustering import (
    DEFAULT_COMPONENT_ZERO_TOL,
    DEFAULT_K_CAP,
    RATIO_EDGES_PER_INTERNAL_EDGE,
    RATIO_EDGES_PER_NODE,
    SORT_MAGNITUDE_DESC,
    assign_clusters,
    cyclic_pairs,
    find_kmin,
    ratio_table,
    select_generators,
    trim_clusters,
)
from .complexity import (
    EXCLUDE_ZEROS,
    INCLUDE_ZEROS,
    baseline_sweep,
    gamma_from_samples,
    graph_energy,
    spectral_complexity,
    total_complexity,
)
from .errors import AnalysisError, ValidationError
from .fiedler import fiedler_partition
from .graphs import (
    DirectedGraph,
    graph_stats,
    induced_subgraph,
    parse_node_weights,
    parse_snap_edge_list,
    parse_weighted_csv,
)
from .reduction import ReducedGraph, build_recurrence_matrix, scc, strip_sources
from .spectra import Spectrum, ToleranceConfig, eig, polar_classify, spectrum_csv_rows

SCOPE_FULL = "full"
SCOPE_LARGEST_SCC = "largest_scc"


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything one CLI invocation needs; echoed into the report."""

    input_path: str | None = None
    input_format: str = "snap"
    node_weight_path: str | None = None
    scope: str = SCOPE_FULL
    zero_policy: str = EXCLUDE_ZEROS
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    W: float = math.inf
    gamma_mode: str = "fixed"
    gamma: float = 1.0
    trim_step: float = 0.001
    k_cap: int = DEFAULT_K_CAP
    component_zero_tol: float = DEFAULT_COMPONENT_ZERO_TOL
    zero_components_to_sectors: bool = False
    trim_sort_key: str = SORT_MAGNITUDE_DESC
    beta_all_edges: bool = False
    symmetrize: bool = False
    with_fiedler: bool = True
    seed: int = 0
    out_dir: str = "cyclospect_out"
    sweep_n: int = 1000
    sweep_degrees: tuple[float, ...] = tuple(range(1, 21))
    sweep_realizations: int = 10

    def __post_init__(self):
        if self.scope not in (SCOPE_FULL, SCOPE_LARGEST_SCC):
            raise ValidationError(f"unknown scope {self.scope!r}")
        if self.zero_policy not in (EXCLUDE_ZEROS, INCLUDE_ZEROS):
            raise ValidationError(f"unknown zero policy {self.zero_policy!r}")
        if not (self.W >= 0 or math.isinf(self.W)):
            raise ValidationError("W must be nonnegative or inf")
        if self.gamma_mode not in ("fixed", "estimate"):
            raise ValidationError(f"unknown gamma mode {self.gamma_mode!r}")
        if not self.gamma > 0:
            raise ValidationError("gamma must be positive")
        if not self.component_zero_tol > 0:
            raise ValidationError("component_zero_tol must be positive")

    def echo(self) -> dict:
        doc = dataclasses.asdict(self)
        doc["tolerances"] = dataclasses.asdict(self.tolerances)
        doc["sweep_degrees"] = list(self.sweep_degrees)
        return doc


def load_graph(cfg: AnalysisConfig) -> DirectedGraph:
    if cfg.input_path is None:
        raise ValidationError("no input path configured")
    text = Path(cfg.input_path).read_text()
    if cfg.input_format == "snap":
        g = parse_snap_edge_list(text)
    elif cfg.input_format == "csv":
        g = parse_weighted_csv(text)
    else:
        raise ValidationError(f"unknown input format {cfg.input_format!r}")
    if cfg.node_weight_path:
        weights = parse_node_weights(Path(cfg.node_weight_path).read_text())
        g = DirectedGraph(nodes=g.nodes, edges=g.edges, node_weight=weights)
    return g


def apply_scope(g: DirectedGraph, cfg: AnalysisConfig) -> DirectedGraph:
    if cfg.scope == SCOPE_LARGEST_SCC:
        return induced_subgraph(g, scc(g).largest())
    return g


def _out_dir(cfg: AnalysisConfig) -> Path:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _front_matter(command: str, cfg: AnalysisConfig, g: DirectedGraph) -> dict:
    stats = graph_stats(g)
    return {
        "command": command,
        "config": cfg.echo(),
        "graph": dataclasses.asdict(stats),
    }


def _reduction_summary(rg: ReducedGraph) -> dict:
    return {
        "kept_count": len(rg.kept),
        "removed_source_count": len(rg.removed_sources),
        "removed_edge_count": len(rg.removed_edges),
        "sum_beta": rg.sum_beta(),
        "sink_count": len(rg.sinks),
        "disconnected_count": len(rg.disconnected),
    }


def _spectrum_summary(s: Spectrum, cls) -> dict:
    moduli = np.abs(s.eigenvalues)
    nonzero = moduli[moduli >= cls.tolerances.zero_mod_tol]
    return {
        "dim": s.dim,
        "n_zero": cls.n_zero,
        "n_one": cls.n_one,
        "n_theta_nonzero": cls.n_theta_nonzero,
        "max_modulus": float(moduli.max()) if s.dim else 0.0,
        "min_nonzero_modulus": float(nonzero.min()) if len(nonzero) else 0.0,
    }


def _complexity_sections(cfg: AnalysisConfig, g: DirectedGraph, rg: ReducedGraph, s: Spectrum) -> dict:
    comp = spectral_complexity(s, cfg.tolerances, cfg.zero_policy)
    weight_sum = g.sum_alpha() + (
        sum(w for _, _, w in g.edges) if cfg.beta_all_edges else rg.sum_beta()
    )
    if cfg.gamma_mode == "estimate":
        gamma = gamma_from_samples([comp.F], [weight_sum])
    else:
        gamma = cfg.gamma
    beta_edges = g.edges if cfg.beta_all_edges else rg.removed_edges
    total = total_complexity(
        comp.F,
        [g.alpha(n) for n in g.nodes],
        beta_edges,
        gamma=gamma,
        W=cfg.W,
    )
    return {
        "complexity": {
            "F": comp.F,
            "radial_term": comp.radial_term,
            "angular_term": comp.angular_term,
            "K": comp.K,
            "policy": comp.policy,
        },
        "total_complexity": {
            "C": total.C,
            "W": total.W,
            "gamma": total.gamma,
            "sum_alpha": total.sum_alpha,
            "sum_beta": total.sum_beta,
        },
    }


def run_complexity(cfg: AnalysisConfig) -> dict:
    g = apply_scope(load_graph(cfg), cfg)
    rg = strip_sources(g)
    s = eig(build_recurrence_matrix(rg), want_vectors=False)
    cls = polar_classify(s, cfg.tolerances)
    doc = _front_matter("complexity", cfg, g)
    doc["reduction"] = _reduction_summary(rg)
    doc["spectrum"] = _spectrum_summary(s, cls)
    doc.update(_complexity_sections(cfg, g, rg, s))
    out = _out_dir(cfg)
    (out / "report.json").write_text(reports.report_json(doc))
    (out / "eigenvalues.csv").write_text(reports.eigenvalues_csv(spectrum_csv_rows(s, cls)))
    plots.save_spectrum_svg(s, cls, str(out / "spectrum.svg"))
    return doc


def _ratio_dict(table) -> dict:
    return {
        "mode": table.mode,
        "cluster_sizes": list(table.cluster_sizes),
        "edge_counts": [[int(x) for x in row] for row in table.edge_counts],
        "cells": [[float(x) for x in row] for row in table.cells],
    }


def _fiedler_section(g_clustered: DirectedGraph) -> dict:
    try:
        fr = fiedler_partition(g_clustered)
    except (AnalysisError, ValidationError) as exc:
        return {"error": str(exc)}
    table = ratio_table(g_clustered, fr.labels(), RATIO_EDGES_PER_NODE)
    return {
        "cluster_sizes": [len(fr.cluster_pos), len(fr.cluster_neg)],
        "fiedler_value": fr.fiedler_value,
        "ratio_table": _ratio_dict(table),
    }


def run_cluster(cfg: AnalysisConfig) -> dict:
    g = apply_scope(load_graph(cfg), cfg)
    rg = strip_sources(g)
    s = eig(build_recurrence_matrix(rg), want_vectors=True)
    cls = polar_classify(s, cfg.tolerances)
    kres = find_kmin(s, cfg.tolerances, cfg.k_cap)
    gen = select_generators(s, kres.k_min, cfg.tolerances)
    clustering = assign_clusters(
        gen,
        rg,
        kres.k_min,
        cfg.tolerances,
        component_zero_tol=cfg.component_zero_tol,
        zero_components_to_sectors=cfg.zero_components_to_sectors,
    )
    table_nodes = ratio_table(g, clustering, RATIO_EDGES_PER_NODE)
    table_edges = ratio_table(g, clustering, RATIO_EDGES_PER_INTERNAL_EDGE)
    trim = trim_clusters(g, clustering, gen, cfg.trim_step, cfg.trim_sort_key)

    doc = _front_matter("cluster", cfg, g)
    doc["reduction"] = _reduction_summary(rg)
    doc["spectrum"] = _spectrum_summary(s, cls)
    doc.update(_complexity_sections(cfg, g, rg, s))
    primary = gen.primary_value
    doc["clustering"] = {
        "k_min": kres.k_min,
        "kmin_objective": kres.objective[kres.k_min],
        "n_candidates": kres.n_candidates,
        "generating_eigenvalue": {"re": primary.real, "im": primary.imag},
        "generator_count": len(gen.generating_eigenvalues),
        "cluster_sizes": clustering.cluster_sizes(),
        "sink_cluster_size": len(clustering.sink_cluster),
        "disconnected_cluster_size": len(clustering.disconnected_cluster),
        "zero_component_count": len(clustering.zero_component_nodes),
        "cyclic_pairs": cyclic_pairs(kres.k_min),
        "ratio_tables": [_ratio_dict(table_nodes), _ratio_dict(table_edges)],
        "trim": {
            "fraction": trim.fraction,
            "effective_fraction": trim.effective_fraction,
            "objective": max(v for _, v in trim.objective_curve),
            "trimmed_sizes": [len(c) for c in trim.trimmed_clusters],
            "dropped_disjoint_count": len(trim.dropped_disjoint),
        },
    }
    if cfg.with_fiedler and clustering.labels:
        doc["fiedler"] = _fiedler_section(induced_subgraph(g, clustering.labels.keys()))

    out = _out_dir(cfg)
    (out / "report.json").write_text(reports.report_json(doc))
    (out / "eigenvalues.csv").write_text(reports.eigenvalues_csv(spectrum_csv_rows(s, cls)))
    extras = {
        "k_min": kres.k_min,
        "generating_eigenvalue_re": primary.real,
        "generating_eigenvalue_im": primary.imag,
        "trimmed_clusters": [list(c) for c in trim.trimmed_clusters],
    }
    (out / "clusters.json").write_text(
        reports.report_json(reports.clusters_json_dict(clustering, extras))
    )
    (out / "clusters.dot").write_text(reports.clusters_dot(g, clustering))
    (out / "ratios.csv").write_text(reports.ratios_csv([table_nodes, table_edges]))
    (out / "curve.csv").write_text(reports.trim_curve_csv(trim))
    plots.save_spectrum_svg(s, cls, str(out / "spectrum.svg"))
    plots.save_trim_curve_svg(trim.objective_curve, trim.fraction, str(out / "curve.svg"))
    return doc


def run_energy(cfg: AnalysisConfig) -> dict:
    g = apply_scope(load_graph(cfg), cfg)
    rep = graph_energy(g, symmetrize=cfg.symmetrize)
    doc = _front_matter("energy", cfg, g)
    doc["energy"] = {
        "energy": rep.energy,
        "singular_value_sum": rep.singular_value_sum,
        "mean_edge_weight": rep.mean_edge_weight,
        "symmetrized": rep.symmetrized,
    }
    out = _out_dir(cfg)
    (out / "report.json").write_text(reports.report_json(doc))
    return doc


def run_fiedler(cfg: AnalysisConfig) -> dict:
    g = apply_scope(load_graph(cfg), cfg)
    fr = fiedler_partition(g)
    labels = fr.labels()
    table = ratio_table(g, labels, RATIO_EDGES_PER_NODE)
    doc = _front_matter("fiedler", cfg, g)
    doc["fiedler"] = {
        "cluster_sizes": [len(fr.cluster_pos), len(fr.cluster_neg)],
        "fiedler_value": fr.fiedler_value,
        "ratio_table": _ratio_dict(table),
    }
    out = _out_dir(cfg)
    (out / "report.json").write_text(reports.report_json(doc))
    (out / "clusters.json").write_text(
        reports.report_json(
            {
                "n_clusters": 2,
                "clusters": [sorted(fr.cluster_pos), sorted(fr.cluster_neg)],
                "fiedler_value": fr.fiedler_value,
            }
        )
    )
    (out / "ratios.csv").write_text(reports.ratios_csv([table]))
    return doc


def run_baseline_sweep(cfg: AnalysisConfig) -> dict:
    results = baseline_sweep(
        cfg.sweep_n,
        cfg.sweep_degrees,
        cfg.sweep_realizations,
        seed=cfg.seed,
        tol=cfg.tolerances,
        policy=cfg.zero_policy,
    )
    rows = [
        {
            "degree": degree,
            "mean_f": res.mean_f,
            "std_f": res.std_f,
            "mean_radial": res.mean_radial,
            "std_radial": res.std_radial,
            "mean_angular": res.mean_angular,
            "std_angular": res.std_angular,
        }
        for degree, res in zip(cfg.sweep_degrees, results)
    ]
    doc = {
        "command": "baseline-sweep",
        "config": cfg.echo(),
        "baseline": {
            "n": cfg.sweep_n,
            "realizations": cfg.sweep_realizations,
            "rows": rows,
        },
    }
    out = _out_dir(cfg)
    (out / "report.json").write_text(reports.report_json(doc))
    (out / "curve.csv").write_text(reports.sweep_csv(rows))
    plots.save_sweep_svg(rows, str(out / "curve.svg"))
    return doc
