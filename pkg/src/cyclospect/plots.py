"""Matplotlib figure rendering for reports (headless, deterministic SVG)."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .spectra import (
    CLASS_ONE,
    CLASS_THETA_NONZERO,
    CLASS_THETA_ZERO,
    CLASS_ZERO,
    PolarClassification,
    Spectrum,
)

# fixed salt so SVG ids do not vary between runs
matplotlib.rcParams["svg.hashsalt"] = "cyclospect"

_CLASS_STYLE = {
    CLASS_ONE: ("tab:green", "eigenvalue 1"),
    CLASS_ZERO: ("tab:gray", "zero"),
    CLASS_THETA_ZERO: ("tab:orange", "positive real"),
    CLASS_THETA_NONZERO: ("tab:blue", "complex / negative"),
}


def _save(fig, path: str) -> None:
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)


def save_spectrum_svg(s: Spectrum, cls: PolarClassification, path: str) -> None:
    """Unit-disk scatter of the eigenvalues, colored by class."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    circle = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 361))
    ax.plot(circle.real, circle.imag, color="black", linewidth=0.8)
    vals = s.eigenvalues
    labels = np.array(cls.labels)
    for label, (color, name) in _CLASS_STYLE.items():
        sel = labels == label
        if not sel.any():
            continue
        ax.scatter(vals[sel].real, vals[sel].imag, s=12, color=color, label=name, zorder=3)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    _save(fig, path)


def save_sweep_svg(rows: list[dict], path: str) -> None:
    """Average degree vs mean F (with both terms) for baseline sweeps."""
    deg = [row["degree"] for row in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.errorbar(
        deg,
        [row["mean_f"] for row in rows],
        yerr=[row["std_f"] for row in rows],
        label="F",
        marker="o",
        markersize=3,
    )
    ax.plot(deg, [row["mean_radial"] for row in rows], label="radial term", linestyle="--")
    ax.plot(deg, [row["mean_angular"] for row in rows], label="angular term", linestyle=":")
    ax.set_xlabel("average degree")
    ax.set_ylabel("spectral complexity")
    ax.legend()
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    _save(fig, path)


def save_trim_curve_svg(curve, fraction: float, path: str) -> None:
    """Trim objective as a function of the kept fraction."""
    xs = [p[0] for p in curve]
    ys = [p[1] for p in curve]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(xs, ys, linewidth=1.0)
    ax.axvline(fraction, color="tab:red", linewidth=0.8, linestyle="--")
    ax.set_xlabel("fraction of nodes kept")
    ax.set_ylabel("sum of cyclic cross ratios")
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    _save(fig, path)
