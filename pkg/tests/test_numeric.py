import math

import numpy as np
import pytest

from treespectra import (
    classify_vertices,
    cluster_multiplicity,
    eigen_symmetric,
    free_trees,
    from_edge_list,
    laplacian,
    numeric_rank,
    residual_norm,
)
from treespectra.errors import EmptyInput, NonSymmetric, ZeroVector


def path(n):
    return from_edge_list([(i, i + 1) for i in range(1, n)])


def star(k):
    return from_edge_list([(1, i) for i in range(2, k + 2)])


class TestEigenSymmetric:
    def test_p2(self):
        spec = eigen_symmetric(laplacian(path(2)))
        assert np.allclose(spec.eigenvalues, [0.0, 2.0], atol=1e-12)

    def test_p3(self):
        spec = eigen_symmetric(laplacian(path(3)))
        assert np.allclose(spec.eigenvalues, [0.0, 1.0, 3.0], atol=1e-12)

    def test_star_clusters(self):
        spec = eigen_symmetric(laplacian(star(3)))
        assert [m for _, m in spec.clusters] == [1, 2, 1]
        reps = [rep for rep, _ in spec.clusters]
        assert np.allclose(reps, [0.0, 1.0, 4.0], atol=1e-9)

    def test_single_vertex_matrix(self):
        spec = eigen_symmetric(((0,),))
        assert spec.eigenvalues == (0.0,)
        assert spec.clusters == ((0.0, 1),)

    def test_rejects_non_symmetric(self):
        with pytest.raises(NonSymmetric):
            eigen_symmetric(((0, 1), (2, 0)))
        with pytest.raises(NonSymmetric):
            eigen_symmetric(((0, 1, 0),))

    def test_vectors_are_orthonormal_eigenvectors(self):
        t = from_edge_list([(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)])
        spec = eigen_symmetric(laplacian(t), want_vectors=True)
        L = np.array(laplacian(t), float)
        V = spec.vectors
        assert np.allclose(V.T @ V, np.eye(t.n), atol=1e-10)
        for i, lam in enumerate(spec.eigenvalues):
            assert np.max(np.abs(L @ V[:, i] - lam * V[:, i])) < 1e-9

    def test_matches_path_closed_form(self):
        n = 17
        spec = eigen_symmetric(laplacian(path(n)))
        expected = sorted(2 * (1 - math.cos(math.pi * j / n)) for j in range(n))
        assert np.allclose(spec.eigenvalues, expected, atol=1e-9)


class TestClusters:
    def test_cluster_multiplicity_lookup(self):
        spec = eigen_symmetric(laplacian(star(5)))
        assert cluster_multiplicity(spec, 1.0) == 4
        assert cluster_multiplicity(spec, 2.5) == 0

    def test_pendant_bound_on_cluster_size(self):
        # no cluster can exceed p-1 for trees on >= 3 vertices
        for n in range(3, 10):
            for tree in free_trees(n):
                p = len(classify_vertices(tree).pendants)
                spec = eigen_symmetric(laplacian(tree))
                assert max(m for _, m in spec.clusters) <= p - 1


class TestResidualNorm:
    def test_exact_eigenvector(self):
        t = star(3)
        x = np.array([0.0, 1.0, -1.0, 0.0])
        assert residual_norm(t, 1.0, x) < 1e-15

    def test_scales_with_vector(self):
        t = star(3)
        x = np.array([0.0, 1.0, -1.0, 0.0])
        assert residual_norm(t, 1.0, 1e6 * x) == residual_norm(t, 1.0, x)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            residual_norm(star(3), 1.0, np.zeros(4))


class TestNumericRank:
    def test_dependent_vectors(self):
        assert numeric_rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2

    def test_noise_below_tolerance_ignored(self):
        assert numeric_rank([[1, 0, 0], [1, 1e-12, 0]], tol=1e-10) == 1
        assert numeric_rank([[1, 0, 0], [1, 1e-6, 0]], tol=1e-10) == 2

    def test_empty(self):
        with pytest.raises(EmptyInput):
            numeric_rank([])

    def test_all_zero(self):
        assert numeric_rank([[0.0, 0.0], [0.0, 0.0]]) == 0


class TestSignlessSimilarity:
    def test_spectra_agree_on_trees(self):
        # trees are bipartite, so both Laplacian signs are similar
        for n in range(2, 9):
            for tree in free_trees(n):
                plain = eigen_symmetric(laplacian(tree)).eigenvalues
                signless = eigen_symmetric(laplacian(tree, signless=True)).eigenvalues
                assert np.allclose(plain, signless, atol=1e-8)
