"""Dense eigendecomposition of recurrence matrices and polar classification.

Everything downstream (complexity, cycle clustering) consumes the Spectrum
produced here.  Eigenvalues are sorted by descending modulus, then ascending
argument, so output order is reproducible across runs and platforms.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError, ValidationError
from .reduction import RecurrenceMatrix

CLASS_ZERO = "zero"
CLASS_ONE = "one"
CLASS_THETA_ZERO = "theta_zero"
CLASS_THETA_NONZERO = "theta_nonzero"


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances for eigenvalue classification and matching.

    zero_mod_tol: |lambda| below this is classified zero.
    one_tol: |lambda - 1| below this is classified one.
    real_axis_tol: |Im lambda| at or below this with Re lambda > 0 means the
        argument is treated as zero.
    generator_match_tol: eigenvalues within this distance of the primary
        generating eigenvalue join the generating set.
    """

    zero_mod_tol: float = 1e-6
    one_tol: float = 1e-6
    real_axis_tol: float = 1e-9
    generator_match_tol: float = 1e-4

    def __post_init__(self):
        for name in ("zero_mod_tol", "one_tol", "real_axis_tol", "generator_match_tol"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be strictly positive")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of one matrix, optionally with right eigenvectors.

    `right_eigenvectors` column j belongs to `eigenvalues[j]`; each column
    has unit Euclidean norm and its largest-modulus component is real and
    positive (a fixed global phase, so angles are reproducible).
    """

    eigenvalues: np.ndarray
    right_eigenvectors: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class PolarEigen:
    r: float
    theta: float
    theta_is_zero: bool
    label: str


@dataclass(frozen=True)
class PolarClassification:
    """Polar forms plus per-eigenvalue class tags under one ToleranceConfig."""

    r: np.ndarray
    theta: np.ndarray
    theta_is_zero: np.ndarray
    labels: tuple[str, ...]
    n_zero: int
    n_one: int
    n_theta_nonzero: int
    tolerances: ToleranceConfig

    def eigens(self) -> tuple[PolarEigen, ...]:
        return tuple(
            PolarEigen(float(r), float(t), bool(z), lab)
            for r, t, z, lab in zip(self.r, self.theta, self.theta_is_zero, self.labels)
        )


def _phase_normalize(vectors: np.ndarray) -> np.ndarray:
    """Unit 2-norm per column, largest-modulus component made real positive."""
    out = np.array(vectors, dtype=complex, copy=True)
    for j in range(out.shape[1]):
        col = out[:, j]
        norm = np.linalg.norm(col)
        if norm == 0.0:
            continue
        col /= norm
        k = int(np.argmax(np.abs(col)))
        pivot = col[k]
        if abs(pivot) > 0.0:
            col *= np.conj(pivot) / abs(pivot)
        # the pivot is now real up to roundoff; keep the array as computed
        out[:, j] = col
    return out


def eig(R: RecurrenceMatrix | np.ndarray, want_vectors: bool = True) -> Spectrum:
    """Full dense nonsymmetric eigendecomposition of a recurrence matrix.

    Also accepts a bare square array, for matrix families that have no
    positive-weight graph realization (boundary cases of closed forms).
    """
    a = R.entries if isinstance(R, RecurrenceMatrix) else np.asarray(R, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"matrix must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix contains NaN or Inf entries")
    try:
        if want_vectors:
            vals, vecs = np.linalg.eig(a)
        else:
            vals = np.linalg.eigvals(a)
            vecs = None
    except np.linalg.LinAlgError as exc:
        digest = hashlib.sha256(np.ascontiguousarray(a).tobytes()).hexdigest()[:16]
        raise EigensolverError(f"eigensolver failed ({exc}); matrix sha256 {digest}") from exc

    order = np.lexsort((_angles(vals), -np.abs(vals)))
    vals = vals[order]
    if vecs is not None:
        vecs = _phase_normalize(vecs[:, order])
    return Spectrum(eigenvalues=vals, right_eigenvectors=vecs)


def _angles(vals: np.ndarray) -> np.ndarray:
    """Arguments mapped into [0, 2*pi)."""
    theta = np.angle(vals)
    theta = np.where(theta < 0.0, theta + 2.0 * np.pi, theta)
    # roundoff in the branch above can land exactly on 2*pi
    theta = np.where(theta >= 2.0 * np.pi, 0.0, theta)
    return theta


def polar_classify(s: Spectrum, tol: ToleranceConfig = DEFAULT_TOL) -> PolarClassification:
    """Polar coordinates and the class tag of every eigenvalue.

    Classes, in precedence order: zero (tiny modulus), one (near 1),
    theta_zero (positive real axis), theta_nonzero (everything else).
    Zero-class eigenvalues always report theta_is_zero False; whether they
    enter the complexity sum is the complexity module's policy decision.
    """
    vals = s.eigenvalues
    r = np.abs(vals)
    theta = _angles(vals)
    is_zero = r < tol.zero_mod_tol
    is_one = (~is_zero) & (np.abs(vals - 1.0) < tol.one_tol)
    on_axis = (np.abs(vals.imag) <= tol.real_axis_tol) & (vals.real > 0.0)
    theta_is_zero = on_axis & ~is_zero
    labels = []
    n_theta_nonzero = 0
    for i in range(len(vals)):
        if is_zero[i]:
            labels.append(CLASS_ZERO)
        elif is_one[i]:
            labels.append(CLASS_ONE)
        elif theta_is_zero[i]:
            labels.append(CLASS_THETA_ZERO)
        else:
            labels.append(CLASS_THETA_NONZERO)
            n_theta_nonzero += 1
    return PolarClassification(
        r=r,
        theta=theta,
        theta_is_zero=theta_is_zero,
        labels=tuple(labels),
        n_zero=int(is_zero.sum()),
        n_one=int(is_one.sum()),
        n_theta_nonzero=n_theta_nonzero,
        tolerances=tol,
    )


def spectrum_csv_rows(s: Spectrum, cls: PolarClassification) -> list[tuple]:
    """Rows (re, im, r, theta, class) for the eigenvalue CSV export."""
    vals = s.eigenvalues
    return [
        (float(vals[i].real), float(vals[i].imag), float(cls.r[i]), float(cls.theta[i]), cls.labels[i])
        for i in range(len(vals))
    ]
