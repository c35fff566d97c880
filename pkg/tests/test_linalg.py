"""Complex linear algebra: determinants, nullspaces, eigensolver, subspace arithmetic."""

import numpy as np
import pytest

from bcspec import (
    ConvergenceError,
    CSubspace,
    NonSquareError,
    determinant,
    eigen_decompose,
    eigenvalues,
    is_singular_matrix,
    nullspace,
    column_space,
    subspace_intersection,
    subspace_sum,
)
from bcspec.linalg import cluster_points, cluster_tolerance, frobenius


def _cofactor_det(a: np.ndarray) -> complex:
    """Cofactor-expansion determinant; test oracle, exponential cost."""
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    if n == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * a[0, j] * _cofactor_det(minor)
    return total


def _companion(roots) -> np.ndarray:
    """Companion matrix of the monic polynomial with the given roots."""
    coeffs = np.poly(np.asarray(roots, dtype=complex))
    n = len(coeffs) - 1
    c = np.zeros((n, n), dtype=complex)
    c[1:, :-1] = np.eye(n - 1)
    c[:, -1] = -coeffs[1:][::-1]
    return c


def _complex_gauss(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


class TestDeterminant:
    def test_identity(self):
        assert determinant(np.eye(3)) == pytest.approx(1.0)

    def test_projection_is_singular(self):
        assert determinant(np.array([[1, 0], [0, 0]])) == pytest.approx(0.0)

    def test_matches_cofactor_oracle(self):
        rng = np.random.default_rng(1234)
        for _ in range(10):
            a = _complex_gauss(rng, (4, 4))
            got = determinant(a)
            want = _cofactor_det(a)
            assert abs(got - want) <= 1e-10 * max(abs(want), 1.0)

    def test_non_square_rejected(self):
        with pytest.raises(NonSquareError):
            determinant(np.zeros((2, 3)))


class TestNullspace:
    def test_zero_matrix_full(self):
        space = nullspace(np.zeros((2, 2)))
        assert space.dim == 2
        assert space.gram_defect() <= 1e-10

    def test_projection(self):
        space = nullspace(np.array([[1, 0], [0, 0]], dtype=complex))
        assert space.dim == 1
        assert space.contains([0, 1])
        assert not space.contains([1, 0])

    @pytest.mark.parametrize("n,r", [(4, 1), (4, 3), (6, 2), (5, 0), (3, 2)])
    def test_planted_rank(self, n, r):
        rng = np.random.default_rng(100 * n + r)
        if r == 0:
            a = np.zeros((n, n), dtype=complex)
        else:
            a = _complex_gauss(rng, (n, r)) @ _complex_gauss(rng, (r, n))
        space = nullspace(a)
        assert space.dim == n - r
        assert space.gram_defect() <= 1e-10
        for v in space.vectors():
            assert np.linalg.norm(a @ v) <= 1e-10 * max(frobenius(a), 1.0)

    def test_rectangular(self):
        rng = np.random.default_rng(7)
        a = _complex_gauss(rng, (2, 5))
        space = nullspace(a)
        assert space.dim == 3
        a2 = _complex_gauss(rng, (5, 2))
        assert nullspace(a2).dim == 0

    def test_column_space_rank_nullity(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            n = int(rng.integers(1, 7))
            r = int(rng.integers(0, n + 1))
            a = (
                _complex_gauss(rng, (n, r)) @ _complex_gauss(rng, (r, n))
                if r
                else np.zeros((n, n), dtype=complex)
            )
            assert column_space(a).dim + nullspace(a).dim == n


class TestEigenDecompose:
    def test_projection_eigenpairs(self):
        es, spaces = eigen_decompose(np.array([[1, 0], [0, 0]], dtype=complex))
        assert [(v, m) for v, m in es.values] == [(0.0, 1), (1.0, 1)]
        by_value = dict(zip(es.value_list(), spaces))
        assert by_value[0.0].contains([0, 1])
        assert by_value[1.0].contains([1, 0])

    def test_identity(self):
        es, spaces = eigen_decompose(np.eye(4, dtype=complex))
        assert es.values == ((1.0 + 0.0j, 4),)
        assert spaces[0].dim == 4

    def test_companion_roots(self):
        roots = [2.0, 3.0, 5.0]
        es, _ = eigen_decompose(_companion(roots))
        got = sorted(es.multiset(), key=lambda z: z.real)
        assert all(abs(g - r) <= 1e-8 for g, r in zip(got, roots))

    def test_multiplicities_sum_to_n(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            n = int(rng.integers(1, 7))
            a = _complex_gauss(rng, (n, n))
            assert eigenvalues(a).total_multiplicity == n

    def test_eigenpair_residuals(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            n = int(rng.integers(1, 7))
            a = _complex_gauss(rng, (n, n))
            es, spaces = eigen_decompose(a)
            bound = 1e-8 * (1.0 + frobenius(a))
            for (lam, _), space in zip(es.values, spaces):
                assert space.dim >= 1
                for v in space.vectors():
                    assert np.linalg.norm(a @ v - lam * v) <= bound

    def test_geometric_at_most_algebraic(self):
        # an upper triangular block with equal diagonal is defective
        a = np.array([[2, 0.01, 0], [0, 2, 0], [0, 0, 5]], dtype=complex)
        es, spaces = eigen_decompose(a)
        by_value = {round(v.real): (m, s.dim) for (v, m), s in zip(es.values, spaces)}
        assert by_value[2] == (2, 1)
        assert by_value[5] == (1, 1)

    def test_empty_spectrum_impossible(self):
        # complex matrices always carry at least one eigenvalue
        for n in range(1, 5):
            assert len(eigenvalues(np.zeros((n, n))).values) >= 1


class TestSingularityAgreement:
    def test_determinant_iff_nullspace(self):
        rng = np.random.default_rng(23)
        for _ in range(10_000):
            n = int(rng.integers(1, 7))
            if rng.integers(2):
                r = int(rng.integers(0, n))
                a = (
                    _complex_gauss(rng, (n, r)) @ _complex_gauss(rng, (r, n))
                    if r
                    else np.zeros((n, n), dtype=complex)
                )
                expect = True
            else:
                a = _complex_gauss(rng, (n, n))
                expect = False
            assert is_singular_matrix(a) == expect
            assert (nullspace(a).dim > 0) == expect

    def test_tiny_but_square_is_singular(self):
        # floor-at-1 convention: a near-zero matrix counts as singular
        assert is_singular_matrix(np.array([[1e-16]]))
        assert nullspace(np.array([[1e-16]])).dim == 1

    def test_small_scaled_identity_is_not(self):
        assert not is_singular_matrix(0.01 * np.eye(6))
        assert nullspace(0.01 * np.eye(6)).dim == 0


class TestClustering:
    def test_merges_close_points(self):
        merged = cluster_points([1.0, 1.0 + 1e-12, 5.0], tol_abs=1e-8)
        assert [(round(v.real), m) for v, m in merged] == [(1, 2), (5, 1)]

    def test_representatives_separated(self):
        rng = np.random.default_rng(5)
        pts = list(rng.standard_normal(12) + 1j * rng.standard_normal(12))
        pts += [pts[0] + 1e-12, pts[3] + 2e-12]
        merged = cluster_points(pts, tol_abs=1e-8)
        reps = [v for v, _ in merged]
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                assert abs(reps[i] - reps[j]) > 1e-8
        assert sum(m for _, m in merged) == len(pts)

    def test_cluster_tolerance_scale(self):
        a = np.eye(3) * 100
        assert cluster_tolerance(a, 1e-8) == pytest.approx(1e-8 * (1 + frobenius(a)))


class TestSubspaceArithmetic:
    def test_sum_and_intersection_of_planes(self):
        e = np.eye(3, dtype=complex)
        u = CSubspace(3, e[:, :2])    # span{e0, e1}
        w = CSubspace(3, e[:, 1:])    # span{e1, e2}
        assert subspace_sum(u, w).dim == 3
        inter = subspace_intersection(u, w)
        assert inter.dim == 1
        assert inter.contains(e[:, 1])

    def test_zero_cases(self):
        z = CSubspace.zero(4)
        f = CSubspace.full(4)
        assert subspace_sum(z, f).dim == 4
        assert subspace_intersection(z, f).dim == 0
        assert subspace_sum(z, z).dim == 0

    def test_dimension_formula(self):
        rng = np.random.default_rng(31)
        for _ in range(25):
            n = int(rng.integers(2, 7))
            ku = int(rng.integers(0, n + 1))
            kw = int(rng.integers(0, n + 1))
            u = column_space(_complex_gauss(rng, (n, ku))) if ku else CSubspace.zero(n)
            w = column_space(_complex_gauss(rng, (n, kw))) if kw else CSubspace.zero(n)
            s = subspace_sum(u, w).dim
            i = subspace_intersection(u, w).dim
            assert u.dim + w.dim == s + i

    def test_intersection_of_same_space(self):
        rng = np.random.default_rng(41)
        u = column_space(_complex_gauss(rng, (5, 2)))
        inter = subspace_intersection(u, u)
        assert inter.dim == u.dim
        for v in u.vectors():
            assert inter.contains(v)


def test_convergence_error_type_exists():
    assert issubclass(ConvergenceError, Exception)
