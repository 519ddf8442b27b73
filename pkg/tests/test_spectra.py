import numpy as np
import pytest

from cyclospect import (
    EigensolverError,
    Spectrum,
    ToleranceConfig,
    ValidationError,
    build_recurrence_matrix,
    eig,
    polar_classify,
    random_digraph,
    strip_sources,
)
from cyclospect.spectra import (
    CLASS_ONE,
    CLASS_THETA_NONZERO,
    CLASS_THETA_ZERO,
    CLASS_ZERO,
    spectrum_csv_rows,
)

from conftest import cycle, graph


def _matrix(g):
    return build_recurrence_matrix(strip_sources(g))


def test_identity_matrix_all_ones():
    g = graph((0, 0), (1, 1), (2, 2))
    s = eig(_matrix(g))
    np.testing.assert_allclose(s.eigenvalues, np.ones(3), atol=1e-12)
    cls = polar_classify(s)
    assert cls.n_one == 3 and cls.n_zero == 0 and cls.n_theta_nonzero == 0


@pytest.mark.parametrize("d", range(2, 13))
def test_pure_cycle_gives_roots_of_unity(d):
    s = eig(_matrix(cycle(d)))
    expected = np.exp(2j * np.pi * np.arange(d) / d)
    # both sides sorted by phase for comparison
    got = np.sort_complex(s.eigenvalues)
    np.testing.assert_allclose(got, np.sort_complex(expected), atol=1e-9)


def test_two_graph_eigenvalue_is_2p_minus_1():
    for p in (0.1, 0.3, 0.5, 0.9):
        m = np.array([[p, 1 - p], [1 - p, p]])
        s = eig(m, want_vectors=False)
        vals = sorted(s.eigenvalues, key=lambda z: z.real)
        assert vals[1] == pytest.approx(1.0, abs=1e-12)
        assert vals[0] == pytest.approx(2 * p - 1, abs=1e-12)


def test_eig_rejects_nonsquare_and_nonfinite():
    with pytest.raises(ValidationError):
        eig(np.ones((2, 3)))
    with pytest.raises(ValidationError):
        eig(np.array([[np.nan, 1.0], [1.0, 0.0]]))


def test_sort_order_modulus_then_angle():
    for k in range(20):
        g = random_digraph(18, 2.2, rng_seed=(21, k))
        s = eig(_matrix(g), want_vectors=False)
        vals = s.eigenvalues
        ang = np.angle(vals) % (2 * np.pi)
        ang[ang > 2 * np.pi - 1e-15] = 0.0
        # output must be a fixed point of its own ordering key
        order = np.lexsort((ang, -np.abs(vals)))
        assert np.array_equal(order, np.arange(len(vals)))


def test_conjugate_pairs_and_positive_imag_first():
    for k in range(30):
        g = random_digraph(15, 2.0, rng_seed=(42, k))
        s = eig(_matrix(g), want_vectors=False)
        vals = s.eigenvalues
        complex_mask = np.abs(vals.imag) > 1e-9
        # spectrum of a real matrix is closed under conjugation
        for v in vals[complex_mask]:
            dist = np.min(np.abs(vals - np.conj(v)))
            assert dist < 1e-9
        # within each conjugate pair the positive-imaginary member sorts first
        seen = []
        for v in vals[complex_mask]:
            match = [u for u in seen if abs(u - np.conj(v)) < 1e-9]
            if not match:
                assert v.imag > 0, f"conjugate order violated for {v}"
                seen.append(v)
            else:
                seen.remove(match[0])


def test_spectrum_reconstruction_small_matrices():
    for k in range(40):
        n = int(np.random.default_rng((7, k)).integers(2, 13))
        g = random_digraph(n, 1.8, rng_seed=(8, k))
        m = _matrix(g)
        if m.dim == 0:
            continue
        s = eig(m, want_vectors=True)
        for j in range(s.dim):
            v = s.right_eigenvectors[:, j]
            lam = s.eigenvalues[j]
            assert np.linalg.norm(m.entries @ v - lam * v) <= 1e-8


def test_stochastic_spectrum_inside_unit_disk():
    for k in range(100):
        g = random_digraph(25, 2.5, rng_seed=(11, k))
        s = eig(_matrix(g), want_vectors=False)
        assert np.abs(s.eigenvalues).max() <= 1.0 + 1e-9


def test_trace_matches_eigenvalue_sum():
    for k in range(20):
        g = random_digraph(12, 2.0, rng_seed=(13, k))
        m = _matrix(g)
        if m.dim == 0:
            continue
        s = eig(m, want_vectors=False)
        assert s.eigenvalues.sum() == pytest.approx(np.trace(m.entries), abs=1e-9)


def test_phase_normalization_is_deterministic():
    g = random_digraph(20, 2.0, rng_seed=3)
    m = _matrix(g)
    s1 = eig(m)
    s2 = eig(m)
    np.testing.assert_array_equal(s1.eigenvalues, s2.eigenvalues)
    np.testing.assert_array_equal(s1.right_eigenvectors, s2.right_eigenvectors)
    # largest-modulus component of each vector is real nonnegative
    for j in range(s1.dim):
        col = s1.right_eigenvectors[:, j]
        pivot = col[int(np.argmax(np.abs(col)))]
        assert abs(pivot.imag) <= 1e-12
        assert pivot.real >= 0
        assert np.linalg.norm(col) == pytest.approx(1.0, abs=1e-12)


def test_polar_classify_precedence_and_counts():
    vals = np.array(
        [
            1.0 + 0.0j,          # one
            1e-9 + 0.0j,         # zero (modulus below tolerance)
            -1e-9 + 0.0j,        # zero even though angle is pi
            0.5 + 0.0j,          # theta_zero
            0.5 + 1e-12j,        # theta_zero (imag within axis tolerance)
            -0.5 + 0.0j,         # theta_nonzero (angle pi)
            0.3 + 0.3j,          # theta_nonzero
        ]
    )
    cls = polar_classify(Spectrum(eigenvalues=vals))
    assert list(cls.labels) == [
        CLASS_ONE,
        CLASS_ZERO,
        CLASS_ZERO,
        CLASS_THETA_ZERO,
        CLASS_THETA_ZERO,
        CLASS_THETA_NONZERO,
        CLASS_THETA_NONZERO,
    ]
    assert cls.n_zero == 2 and cls.n_one == 1 and cls.n_theta_nonzero == 2


def test_polar_classify_respects_tolerances():
    vals = np.array([0.99 + 0.0j])
    loose = ToleranceConfig(one_tol=0.05)
    assert polar_classify(Spectrum(eigenvalues=vals), loose).labels[0] == CLASS_ONE
    assert polar_classify(Spectrum(eigenvalues=vals)).labels[0] == CLASS_THETA_ZERO


def test_csv_rows_cover_all_eigenvalues():
    s = eig(_matrix(cycle(3)))
    rows = spectrum_csv_rows(s, polar_classify(s))
    assert len(rows) == 3
    labels = {r[-1] for r in rows}
    assert labels == {CLASS_ONE, CLASS_THETA_NONZERO}
