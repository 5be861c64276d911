import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, dense_laplacian, k2, path, ref_eigs, triangle
from gainspec import gen
from gainspec.core import (
    GainGraph,
    HermitianMatrix,
    SwitchingFunction,
    a_theta,
    adjacency_matrix,
    cycle_gain,
    find_unbalanced_cycle,
    gain_stats,
    is_balanced,
    laplacian,
    quadratic_form,
    switch,
)
from gainspec.eig import eigenvalues
from gainspec.errors import (
    DimensionError,
    EmptyGraphError,
    InvalidCycleError,
    InvalidGraphError,
    NotHermitianError,
)


class TestGainGraph:
    def test_reverse_orientation_is_conjugated(self):
        g = GainGraph(2, [(1, 0, 1j)])
        assert g.edges == ((0, 1, -1j),)
        assert g.gain(1, 0) == 1j
        assert g.gain(0, 1) == -1j

    def test_near_unit_gain_is_normalized(self):
        g = GainGraph(2, [(0, 1, 1.0 + 1e-8)])
        assert abs(g.edges[0][2]) == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("gain", [0.5, 2.0, 0.0, complex("nan")])
    def test_non_unit_gain_rejected(self, gain):
        with pytest.raises(InvalidGraphError):
            GainGraph(2, [(0, 1, gain)])

    def test_self_loop_rejected(self):
        with pytest.raises(InvalidGraphError):
            GainGraph(2, [(1, 1, 1.0)])

    def test_duplicate_rejected_in_either_orientation(self):
        with pytest.raises(InvalidGraphError):
            GainGraph(3, [(0, 1, 1.0), (1, 0, 1.0)])

    def test_out_of_range(self):
        with pytest.raises(InvalidGraphError):
            GainGraph(2, [(0, 2, 1.0)])

    def test_degrees_and_components(self):
        g = GainGraph(5, [(0, 1), (1, 2), (3, 4)])
        assert list(g.degrees) == [1, 2, 1, 1, 1]
        assert g.components() == [[0, 1, 2], [3, 4]]
        assert not g.is_connected()


class TestHermitianMatrix:
    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            HermitianMatrix([[0, 1], [2, 0]])

    def test_rejects_non_square(self):
        with pytest.raises(DimensionError):
            HermitianMatrix(np.zeros((2, 3)))

    def test_entries_read_only(self):
        h = HermitianMatrix([[1, 1j], [-1j, 1]])
        with pytest.raises(ValueError):
            h.entries[0, 0] = 3


class TestAdjacencyLaplacian:
    def test_k2_positive(self):
        assert np.array_equal(np.asarray(adjacency_matrix(k2())), [[0, 1], [1, 0]])
        assert np.array_equal(np.asarray(laplacian(k2())), [[1, -1], [-1, 1]])

    def test_k2_imaginary_gain(self):
        a = np.asarray(adjacency_matrix(k2(1j)))
        assert a[0, 1] == 1j and a[1, 0] == -1j
        assert np.all(np.diag(a) == 0)

    def test_k5_15_block_structure(self):
        g = gen.signed_k5_15()
        a = np.asarray(adjacency_matrix(g)).real
        assert np.all(a[:5, :5] == 0) and np.all(a[5:, 5:] == 0)
        assert np.array_equal(a[:5, 5:], a[5:, :5].T)
        first_row = [1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 1]
        assert list(a[0, 5:]) == first_row
        assert int((a[:5, 5:] < 0).sum()) == 23

    def test_unbalanced_triangle_spectrum(self, unbalanced_triangle):
        # char. poly of 2I - A where eig(A) = {-2, 1, 1}
        lap = np.asarray(laplacian(unbalanced_triangle))
        assert np.allclose(lap, 2 * np.eye(3) - np.asarray(adjacency_matrix(unbalanced_triangle)))
        roots = np.sort(np.roots(np.poly(lap)).real)
        assert np.allclose(roots, [1, 1, 4])

    def test_k3_minus_same_spectrum(self, k3_minus):
        assert np.allclose(eigenvalues(laplacian(k3_minus)).values, [1, 1, 4], atol=1e-12)

    def test_laplacian_matches_independent_assembly(self):
        g = gen.random_gain_graph(11)
        assert np.allclose(np.asarray(laplacian(g)), dense_laplacian(g))


class TestQuadraticForm:
    def test_constant_vector_on_balanced_k2(self):
        assert quadratic_form(k2(), [1, 1]) == 0.0

    def test_switched_vector_on_imaginary_k2(self):
        assert quadratic_form(k2(1j), [1, -1j]) == pytest.approx(0.0, abs=1e-15)

    def test_unbalanced_triangle_all_ones(self, unbalanced_triangle):
        assert quadratic_form(unbalanced_triangle, [1, 1, 1]) == pytest.approx(4.0)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            quadratic_form(k2(), [1, 1, 1])

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(1, 10**6), xseed=st.integers(0, 2**32 - 1))
    def test_equals_hermitian_form(self, seed, xseed):
        g = gen.random_gain_graph(seed)
        rng = np.random.default_rng(xseed)
        x = rng.normal(size=g.n) + 1j * rng.normal(size=g.n)
        ref = np.real(np.conj(x) @ dense_laplacian(g) @ x)
        assert quadratic_form(g, x) == pytest.approx(ref, rel=1e-10, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(1, 10**6), xseed=st.integers(0, 2**32 - 1))
    def test_rayleigh_quotient_within_spectrum(self, seed, xseed):
        g = gen.random_gain_graph(seed)
        rng = np.random.default_rng(xseed)
        x = rng.normal(size=g.n) + 1j * rng.normal(size=g.n)
        q = quadratic_form(g, x) / np.vdot(x, x).real
        spec = eigenvalues(laplacian(g))
        assert spec.lambda1 - 1e-10 <= q <= spec.lambda_n + 1e-10


class TestSwitching:
    def test_identity(self):
        g = gen.random_gain_graph(3)
        assert switch(g, [1.0] * g.n) == g

    def test_triangle_example_from_all_ones(self):
        g2 = switch(complete(3), SwitchingFunction([1, 1, -1]))
        assert [e[2] for e in g2.edges] == [1, -1, -1]
        assert gain_stats(complete(3)).a == 0.0
        assert gain_stats(g2).a == pytest.approx(4 / 3)

    def test_any_switch_on_k2_is_balanced(self):
        g = switch(k2(cmath.exp(0.3j)), [cmath.exp(1.1j), cmath.exp(-2.0j)])
        assert is_balanced(g)[0]
        assert eigenvalues(laplacian(g)).lambda1 == pytest.approx(0.0, abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            switch(k2(), [1.0])

    def test_non_unit_switching_rejected(self):
        with pytest.raises(InvalidGraphError):
            SwitchingFunction([1.0, 0.5])

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(1, 10**6), zseed=st.integers(0, 2**32 - 1))
    def test_spectrum_invariant(self, seed, zseed):
        g = gen.random_gain_graph(seed)
        rng = np.random.default_rng(zseed)
        zeta = np.exp(2j * np.pi * rng.random(g.n))
        before = eigenvalues(laplacian(g)).values
        after = eigenvalues(laplacian(switch(g, zeta))).values
        assert np.allclose(before, after, atol=1e-9, rtol=0)

    def test_matches_diagonal_similarity(self):
        g = gen.random_gain_graph(5)
        zeta = np.exp(1j * np.arange(g.n))
        d = np.diag(zeta)
        expected = np.linalg.inv(d) @ np.asarray(adjacency_matrix(g)) @ d
        assert np.allclose(np.asarray(adjacency_matrix(switch(g, zeta))), expected)


class TestCycleGain:
    def test_unbalanced_triangle(self, unbalanced_triangle):
        assert cycle_gain(unbalanced_triangle, [0, 1, 2, 0]) == -1

    def test_balanced_triangle(self):
        assert cycle_gain(complete(3), [0, 1, 2, 0]) == 1

    def test_reversal_conjugates(self):
        g = triangle(cmath.exp(0.4j), cmath.exp(1.3j), cmath.exp(-0.2j))
        fwd = cycle_gain(g, [0, 1, 2])
        back = cycle_gain(g, [0, 2, 1])
        assert back == pytest.approx(fwd.conjugate())
        assert fwd.real == pytest.approx(back.real, abs=1e-15)
        assert abs(fwd) == pytest.approx(1.0)

    def test_non_edge(self):
        with pytest.raises(InvalidCycleError):
            cycle_gain(path(3), [0, 1, 2, 0])


class TestBalance:
    def test_tree(self):
        g = GainGraph(4, [(0, 1, 1j), (1, 2, -1), (1, 3, cmath.exp(0.7j))])
        ok, zeta = is_balanced(g)
        assert ok
        switched = switch(g, zeta)
        assert all(abs(e[2] - 1) < 1e-12 for e in switched.edges)

    def test_unbalanced_triangle(self, unbalanced_triangle):
        assert is_balanced(unbalanced_triangle) == (False, None)
        cyc = find_unbalanced_cycle(unbalanced_triangle)
        assert abs(cycle_gain(unbalanced_triangle, cyc) - 1) > 1e-9

    def test_k5_15_unbalanced(self):
        g = gen.signed_k5_15()
        assert not is_balanced(g)[0]
        assert eigenvalues(laplacian(g)).lambda1 == pytest.approx(3.597, abs=5e-4)

    def test_disconnected_checked_per_component(self):
        g = GainGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4, -1), (4, 5), (3, 5)])
        assert not is_balanced(g)[0]
        assert is_balanced(g.without_edges([3]))[0]

    @pytest.mark.parametrize("seed", range(1, 41))
    def test_balanced_iff_lambda1_zero(self, seed):
        g = gen.random_gain_graph(seed)
        if not g.is_connected():
            pytest.skip("one balanced component already forces lambda1 = 0")
        # a potential-derived gain assignment is balanced
        rng = gen.SplitMix64(seed)
        pot = [cmath.exp(2j * math.pi * rng.uniform()) for _ in range(g.n)]
        bal = g.with_gains([pot[u] * pot[v].conjugate() for u, v, _ in g.edges])
        for h in (g, bal):
            flag = is_balanced(h)[0]
            lam1 = ref_eigs(h)[0]
            assert flag == (lam1 <= 1e-9)
        assert is_balanced(bal)[0]

    def test_found_cycle_is_unbalanced(self):
        for seed in range(1, 30):
            g = gen.random_gain_graph(seed)
            cyc = find_unbalanced_cycle(g)
            if cyc is None:
                assert is_balanced(g)[0]
            else:
                assert abs(cycle_gain(g, cyc) - 1) > 1e-9


class TestGainStats:
    def test_k5_15(self):
        st_ = gain_stats(gen.signed_k5_15())
        assert st_.a == pytest.approx(46 / 75, abs=1e-15)
        assert st_.b == 1.0

    def test_single_edge(self):
        g = k2(cmath.exp(1j * math.pi / 3))
        assert a_theta(g, 0.0) == pytest.approx(0.5)
        assert gain_stats(g).a == pytest.approx(0.5)

    def test_all_ones(self):
        st_ = gain_stats(complete(5))
        assert (st_.a, st_.b, st_.m) == (0.0, 1.0, 10)

    def test_b_is_a_theta_at_minus_half_pi(self):
        g = gen.random_gain_graph(9)
        assert a_theta(g, -math.pi / 2) == pytest.approx(gain_stats(g).b, abs=1e-14)

    def test_empty(self):
        with pytest.raises(EmptyGraphError):
            gain_stats(GainGraph(3))
        with pytest.raises(EmptyGraphError):
            a_theta(GainGraph(3), 0.0)

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(1, 10**6), theta=st.floats(-10, 10))
    def test_rotation_identity(self, seed, theta):
        g = gen.random_gain_graph(seed)
        if g.m == 0:
            return
        s = gain_stats(g)
        lhs = a_theta(g, theta) - 1.0
        rhs = math.cos(theta) * (s.a - 1.0) - math.sin(theta) * (s.b - 1.0)
        assert abs(lhs - rhs) <= 1e-12
        assert 0.0 <= a_theta(g, theta) <= 2.0
        assert s.a_theta(theta) == pytest.approx(a_theta(g, theta), abs=1e-12)
