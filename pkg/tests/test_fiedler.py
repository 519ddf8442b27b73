import numpy as np
import pytest

from cyclospect import (
    DisconnectedGraphError,
    NoCutFoundError,
    ValidationError,
    fiedler_partition,
)
from cyclospect.fiedler import _split_by_sign

from conftest import cycle, graph


def test_path_of_two_splits_into_singletons():
    # single directed edge symmetrizes to one undirected edge; L eigenvalues
    # are {0, 2} and the Fiedler vector has opposite signs
    res = fiedler_partition(graph((0, 1)))
    assert res.fiedler_value == pytest.approx(2.0, abs=1e-12)
    assert {res.cluster_pos, res.cluster_neg} == {frozenset({0}), frozenset({1})}


def test_path_of_three_cuts_at_middle():
    res = fiedler_partition(graph((0, 1), (1, 2)))
    # path Laplacian eigenvalues: 0, 1, 3
    assert res.fiedler_value == pytest.approx(1.0, abs=1e-12)
    assert {len(res.cluster_pos), len(res.cluster_neg)} == {1, 2}


def test_barbell_cut_separates_the_cliques():
    # two triangles joined by one edge: the canonical spectral cut
    tri1 = [(0, 1), (1, 2), (2, 0)]
    tri2 = [(3, 4), (4, 5), (5, 3)]
    res = fiedler_partition(graph(*tri1, *tri2, (2, 3)))
    sides = sorted([sorted(res.cluster_pos), sorted(res.cluster_neg)])
    assert sides == [[0, 1, 2], [3, 4, 5]]
    assert 0.0 < res.fiedler_value < 1.0


def test_direction_of_edges_is_ignored():
    a = fiedler_partition(graph((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)))
    b = fiedler_partition(graph((1, 0), (2, 1), (0, 2), (3, 2), (4, 3), (2, 4)))
    assert {a.cluster_pos, a.cluster_neg} == {b.cluster_pos, b.cluster_neg}
    assert a.fiedler_value == pytest.approx(b.fiedler_value, abs=1e-12)


def test_orientation_is_deterministic():
    g = cycle(5)
    r1 = fiedler_partition(g)
    r2 = fiedler_partition(g)
    assert r1.cluster_pos == r2.cluster_pos
    assert r1.fiedler_vector == r2.fiedler_vector
    # split respects component signs of the oriented vector
    v = dict(zip(r1.node_ids, r1.fiedler_vector))
    assert all(v[n] >= -1e-12 for n in r1.cluster_pos)
    assert all(v[n] < 0 for n in r1.cluster_neg)


def test_disconnected_graph_is_an_error():
    g = graph((0, 1), (1, 0), (2, 3), (3, 2))
    with pytest.raises(DisconnectedGraphError, match="SCC"):
        fiedler_partition(g)


def test_single_node_and_selfloops_rejected():
    with pytest.raises(ValidationError):
        fiedler_partition(graph((0, 0)))
    # self-loops contribute nothing: 2-cycle plus loop behaves like 2-cycle
    res = fiedler_partition(graph((0, 1), (1, 0), (1, 1)))
    assert res.fiedler_value == pytest.approx(2.0, abs=1e-12)


def test_split_by_sign_flip_invariance():
    ids = (10, 20, 30)
    pos, neg, _ = _split_by_sign(np.array([0.8, -0.5, 0.1]), ids)
    pos2, neg2, _ = _split_by_sign(np.array([-0.8, 0.5, -0.1]), ids)
    assert pos == pos2 == frozenset({10, 30})
    assert neg == neg2 == frozenset({20})


def test_split_by_sign_zero_components_go_positive():
    ids = (1, 2, 3)
    pos, neg, _ = _split_by_sign(np.array([0.9, -0.4, 1e-14]), ids)
    assert 3 in pos


def test_split_by_sign_single_signed_is_no_cut():
    with pytest.raises(NoCutFoundError):
        _split_by_sign(np.array([0.5, 0.5, 0.1]), (1, 2, 3))
