"""Command line interface.

Exit codes:
  0  success
  1  unexpected internal error
  2  invalid arguments or configuration
  3  input could not be parsed (or was empty)
  4  analysis degenerate for this graph (no cycles, no cut, ...)
  5  eigensolver failure
  6  file system error
"""

from __future__ import annotations

import argparse
import math
import sys

from .analysis import (
    SCOPE_FULL,
    SCOPE_LARGEST_SCC,
    AnalysisConfig,
    run_baseline_sweep,
    run_cluster,
    run_complexity,
    run_energy,
    run_fiedler,
)
from .clustering import SORT_MAGNITUDE_DESC, SORT_REAL_ASC
from .complexity import EXCLUDE_ZEROS, INCLUDE_ZEROS
from .errors import CyclospectError
from .spectra import ToleranceConfig


def _parse_w(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid W {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("W must be nonnegative or inf")
    return value


def _parse_degrees(text: str) -> tuple[float, ...]:
    text = text.strip()
    if ":" in text:
        lo_s, _, hi_s = text.partition(":")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid degree range {text!r}")
        if hi < lo:
            raise argparse.ArgumentTypeError("degree range is empty")
        return tuple(float(d) for d in range(lo, hi + 1))
    try:
        degrees = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid degree list {text!r}")
    if not degrees:
        raise argparse.ArgumentTypeError("empty degree list")
    return degrees


def _add_io_options(p: argparse.ArgumentParser, need_input: bool = True):
    if need_input:
        p.add_argument("--input", required=True, help="path to the edge list file")
        p.add_argument(
            "--format",
            choices=("snap", "csv"),
            default="snap",
            help="input format: whitespace-delimited id pairs, or src,dst,weight csv",
        )
        p.add_argument(
            "--node-weights",
            default=None,
            help="optional node,alpha csv overriding the default node weight of 1",
        )
    p.add_argument("--out-dir", default="cyclospect_out", help="artifact output directory")


def _add_spectral_options(p: argparse.ArgumentParser, default_scope: str = SCOPE_FULL):
    p.add_argument(
        "--scope",
        choices=(SCOPE_FULL, SCOPE_LARGEST_SCC),
        default=default_scope,
        help="analyze the whole graph or its largest strongly connected component",
    )
    p.add_argument(
        "--zero-policy",
        choices=(EXCLUDE_ZEROS, INCLUDE_ZEROS),
        default=EXCLUDE_ZEROS,
        help="how near-zero eigenvalues enter the complexity normalization",
    )
    p.add_argument("--zero-tol", type=float, default=1e-6, help="modulus below which an eigenvalue counts as zero")
    p.add_argument("--one-tol", type=float, default=1e-6, help="distance to 1 below which an eigenvalue counts as one")
    p.add_argument("--real-axis-tol", type=float, default=1e-9, help="imaginary part treated as zero phase")
    p.add_argument("--generator-tol", type=float, default=1e-4, help="tie distance for extra generating eigenvalues")


def _add_weighting_options(p: argparse.ArgumentParser):
    p.add_argument("--W", type=_parse_w, default=math.inf, help='structural weight, "inf" for pure spectral complexity')
    p.add_argument("--gamma", type=float, default=1.0, help="scale factor applied to the weight sums")
    p.add_argument(
        "--gamma-mode",
        choices=("fixed", "estimate"),
        default="fixed",
        help="use --gamma as-is, or estimate it from this graph so both terms are commensurate",
    )
    p.add_argument(
        "--beta-all-edges",
        action="store_true",
        help="sum edge weights over every edge instead of only the stripped ones",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclospect",
        description="Spectral complexity and almost-cyclic cluster analysis of directed graphs.",
        epilog="Exit codes:" + __doc__.split("Exit codes:")[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cx = sub.add_parser("complexity", help="eigenvalue classification and complexity scores")
    _add_io_options(p_cx)
    _add_spectral_options(p_cx)
    _add_weighting_options(p_cx)

    p_cl = sub.add_parser("cluster", help="almost-cyclic decomposition, ratio tables, trim curve")
    _add_io_options(p_cl)
    _add_spectral_options(p_cl)
    _add_weighting_options(p_cl)
    p_cl.add_argument("--kmax", type=int, default=50, help="largest cluster count tried in the cyclicity search")
    p_cl.add_argument(
        "--component-tol",
        type=float,
        default=1e-8,
        help="eigenvector magnitude below which a node is treated as transient",
    )
    p_cl.add_argument(
        "--zero-components-to-sectors",
        action="store_true",
        help="assign near-zero eigenvector components to phase sectors instead of the sink bucket",
    )
    p_cl.add_argument("--trim-step", type=float, default=0.001, help="grid step for the trim fraction search")
    p_cl.add_argument(
        "--trim-sort",
        choices=(SORT_MAGNITUDE_DESC, SORT_REAL_ASC),
        default=SORT_MAGNITUDE_DESC,
        help="per-cluster node ranking used by the trim search",
    )
    p_cl.add_argument(
        "--no-fiedler",
        action="store_true",
        help="skip the undirected bipartition comparison section",
    )

    p_en = sub.add_parser("energy", help="graph energy (singular value sum scaled by mean edge weight)")
    _add_io_options(p_en)
    p_en.add_argument("--scope", choices=(SCOPE_FULL, SCOPE_LARGEST_SCC), default=SCOPE_FULL)
    p_en.add_argument(
        "--symmetrize",
        action="store_true",
        help="symmetrize the adjacency pattern before the singular value sum",
    )

    p_fi = sub.add_parser("fiedler", help="undirected spectral bipartition baseline")
    _add_io_options(p_fi)
    p_fi.add_argument(
        "--scope",
        choices=(SCOPE_FULL, SCOPE_LARGEST_SCC),
        default=SCOPE_LARGEST_SCC,
        help="bipartition needs a connected graph, so the default restricts to the largest component",
    )

    p_sw = sub.add_parser("baseline-sweep", help="mean complexity of random digraphs across average degrees")
    _add_io_options(p_sw, need_input=False)
    p_sw.add_argument("--n", type=int, default=1000, help="nodes per random graph")
    p_sw.add_argument("--degrees", type=_parse_degrees, default=_parse_degrees("1:20"), help='grid, e.g. "1:20" or "2,5,10"')
    p_sw.add_argument("--realizations", type=int, default=10, help="independent graphs per grid point")
    p_sw.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p_sw.add_argument(
        "--zero-policy",
        choices=(EXCLUDE_ZEROS, INCLUDE_ZEROS),
        default=EXCLUDE_ZEROS,
    )
    p_sw.add_argument("--zero-tol", type=float, default=1e-6)
    p_sw.add_argument("--one-tol", type=float, default=1e-6)

    return parser


def _tolerances(args: argparse.Namespace) -> ToleranceConfig:
    return ToleranceConfig(
        zero_mod_tol=args.zero_tol,
        one_tol=args.one_tol,
        real_axis_tol=getattr(args, "real_axis_tol", 1e-9),
        generator_match_tol=getattr(args, "generator_tol", 1e-4),
    )


def _config_from_args(args: argparse.Namespace) -> AnalysisConfig:
    common = dict(out_dir=args.out_dir)
    if args.command == "baseline-sweep":
        return AnalysisConfig(
            zero_policy=args.zero_policy,
            tolerances=_tolerances(args),
            seed=args.seed,
            sweep_n=args.n,
            sweep_degrees=args.degrees,
            sweep_realizations=args.realizations,
            **common,
        )
    common.update(
        input_path=args.input,
        input_format=args.format,
        node_weight_path=args.node_weights,
        scope=args.scope,
    )
    if args.command == "energy":
        return AnalysisConfig(symmetrize=args.symmetrize, **common)
    if args.command == "fiedler":
        return AnalysisConfig(**common)
    common.update(
        zero_policy=args.zero_policy,
        tolerances=_tolerances(args),
        W=args.W,
        gamma=args.gamma,
        gamma_mode=args.gamma_mode,
        beta_all_edges=args.beta_all_edges,
    )
    if args.command == "complexity":
        return AnalysisConfig(**common)
    return AnalysisConfig(
        k_cap=args.kmax,
        component_zero_tol=args.component_tol,
        zero_components_to_sectors=args.zero_components_to_sectors,
        trim_step=args.trim_step,
        trim_sort_key=args.trim_sort,
        with_fiedler=not args.no_fiedler,
        **common,
    )


def _print_summary(doc: dict):
    cmd = doc["command"]
    if cmd in ("complexity", "cluster"):
        c = doc["complexity"]
        print(
            f"F = {c['F']:.7g}  (radial {c['radial_term']:.7g}, "
            f"angular {c['angular_term']:.7g}, K = {c['K']})"
        )
        t = doc["total_complexity"]
        print(f"C = {t['C']:.7g}  (W = {t['W']}, gamma = {t['gamma']:.7g})")
    if cmd == "cluster":
        cl = doc["clustering"]
        ge = cl["generating_eigenvalue"]
        print(
            f"k_min = {cl['k_min']}, generating eigenvalue "
            f"{ge['re']:.7g}{ge['im']:+.7g}i"
        )
        print(
            f"cluster sizes {cl['cluster_sizes']}, sinks {cl['sink_cluster_size']}, "
            f"disconnected {cl['disconnected_cluster_size']}"
        )
        print(f"trim fraction {cl['trim']['fraction']:.7g}, objective {cl['trim']['objective']:.7g}")
    if cmd == "energy":
        e = doc["energy"]
        print(f"energy = {e['energy']:.7g}  (sigma sum {e['singular_value_sum']:.7g})")
    if cmd == "fiedler":
        f = doc["fiedler"]
        print(f"partition sizes {f['cluster_sizes']}, fiedler value {f['fiedler_value']:.7g}")
    if cmd == "baseline-sweep":
        rows = doc["baseline"]["rows"]
        print(f"{len(rows)} degree points, final mean F = {rows[-1]['mean_f']:.7g}")
    print(f"artifacts in {doc['config']['out_dir']}/")


_RUNNERS = {
    "complexity": run_complexity,
    "cluster": run_cluster,
    "energy": run_energy,
    "fiedler": run_fiedler,
    "baseline-sweep": run_baseline_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _RUNNERS[args.command](_config_from_args(args))
    except CyclospectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    _print_summary(doc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
