import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorframes import linalg
from tensorframes.errors import NotAFrame, NotInvertible, ShapeMismatch, SizeCapExceeded
from tensorframes.frames import (
    Frame,
    canonical_dual,
    frame_bounds,
    frame_operator,
    mercedes_frame,
    random_frame,
    random_tight_frame,
    standard_basis,
)
from tensorframes.hs import HSElement, adjoint, apply, random_hs_element, simple_tensor
from tensorframes.tensor import (
    OperatorFrame,
    adjoint_frame,
    factored_frame_operator,
    kron_frame_operator,
    matrix_units,
    op_canonical_dual,
    op_frame_bounds,
    op_frame_operator,
    op_frame_operator_apply,
    random_operator_frame,
    random_tight_operator_frame,
    sandwich_frame,
    slice_left,
    slice_right,
    tensor_frame,
    tensor_operator_frame,
    transform,
    transform_envelope,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
E1E2E2 = Frame([[1, 0], [0, 1], [0, 1]])
e1, e2 = np.eye(2)


def within(b, lo, hi, slack=1e-9):
    return b.lower >= lo * (1 - slack) - slack * hi and b.upper <= hi * (1 + slack)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestOperatorFrameType:
    def test_from_elements(self):
        of = OperatorFrame([simple_tensor(e1, e2), simple_tensor(e2, e1)])
        assert (of.count, of.dim_h, of.dim_k) == (2, 2, 2)
        np.testing.assert_array_equal(of[0].m, [[0, 1], [0, 0]])

    def test_flatten_is_row_major_and_isometric(self):
        of = random_operator_frame(2, 3, 4, 0)
        flat = of.flatten()
        for n, t in enumerate(of):
            np.testing.assert_array_equal(flat[n], t.m.reshape(-1))
            assert np.linalg.norm(flat[n]) == pytest.approx(np.linalg.norm(t.m), rel=1e-15)
        back = OperatorFrame.unflatten(flat, 2, 3)
        np.testing.assert_array_equal(back.elements, of.elements)

    def test_rejects_mixed_shapes(self):
        with pytest.raises((ShapeMismatch, ValueError)):
            OperatorFrame([np.eye(2), np.eye(3)])

    def test_label_length(self):
        with pytest.raises(ShapeMismatch):
            OperatorFrame(np.zeros((2, 2, 2)), [(0, 0)])

    def test_unflatten_dim_check(self):
        with pytest.raises(ShapeMismatch):
            OperatorFrame.unflatten(standard_basis(4), 3, 2)


class TestTensorFrame:
    def test_e1e2e2_squared(self):
        f = tensor_frame(E1E2E2, E1E2E2)
        assert (f.count, f.dim) == (9, 4)
        b = frame_bounds(f)
        assert (b.lower, b.upper) == pytest.approx((1, 4), abs=1e-12)

    def test_orthonormal_bases(self):
        b = frame_bounds(tensor_frame(standard_basis(2), standard_basis(3)))
        assert b.is_normalized_tight
        assert (b.lower, b.upper) == pytest.approx((1, 1), abs=1e-14)

    def test_mercedes_squared(self):
        b = frame_bounds(tensor_frame(mercedes_frame(), mercedes_frame()))
        assert (b.lower, b.upper) == pytest.approx((2.25, 2.25), rel=1e-12)
        assert b.is_tight

    def test_lexicographic_order(self):
        f1, f2, f3 = random_frame(2, 2, 0), random_frame(2, 3, 1), random_frame(3, 2, 2)
        f = tensor_frame(f1, f2, f3)
        assert f.count == 12 and f.dim == 12
        k = 0
        for a in f1:
            for b in f2:
                for c in f3:
                    np.testing.assert_allclose(f[k], np.kron(np.kron(a, b), c), rtol=1e-15, atol=1e-16)
                    k += 1

    @settings(max_examples=20, deadline=None)
    @given(seed=seeds, n=st.sampled_from([2, 3]))
    def test_product_bounds(self, seed, n):
        rng = np.random.default_rng(seed)
        frames = []
        for _ in range(n):
            d = int(rng.integers(2, 4))
            frames.append(random_frame(d, d + int(rng.integers(0, 2)), rng))
        parts = [frame_bounds(f) for f in frames]
        b = frame_bounds(tensor_frame(*frames))
        assert rel(b.lower, math.prod(p.lower for p in parts)) <= 1e-9
        assert rel(b.upper, math.prod(p.upper for p in parts)) <= 1e-9

    @pytest.mark.parametrize("seed", range(5))
    def test_normalized_tight_closure(self, seed):
        rng = np.random.default_rng(seed)
        f = tensor_frame(random_tight_frame(2, 3, rng), random_tight_frame(2, 4, rng), random_tight_frame(3, 3, rng))
        b = frame_bounds(f)
        assert abs(b.lower - 1) <= 1e-10 and abs(b.upper - 1) <= 1e-10

    def test_single_factor(self):
        f = mercedes_frame()
        np.testing.assert_array_equal(tensor_frame(f).vectors, f.vectors)

    def test_size_cap(self):
        f = standard_basis(8)
        with pytest.raises(SizeCapExceeded):
            tensor_frame(f, f, f, cap=1000)
        assert tensor_frame(f, f, cap=4096).count == 64


class TestTensorOperatorFrame:
    def test_matrix_units(self):
        of = tensor_operator_frame(standard_basis(2), standard_basis(2))
        np.testing.assert_array_equal(of.elements, matrix_units(2, 2).elements)
        assert of.index_labels == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_flatten_matches_tensor_frame(self):
        f1, f2 = random_frame(2, 3, 0), random_frame(3, 4, 1)
        np.testing.assert_array_equal(tensor_operator_frame(f1, f2).flatten().vectors, tensor_frame(f1, f2).vectors)

    def test_elements_are_simple_tensors(self):
        f1, f2 = random_frame(2, 3, 0), random_frame(3, 2, 1)
        of = tensor_operator_frame(f1, f2)
        for t, (n, m) in zip(of, of.index_labels):
            np.testing.assert_allclose(t.m, simple_tensor(f1[n], f2[m]).m, rtol=1e-15, atol=1e-16)

    def test_singletons(self):
        x, y = np.array([1, 2j]), np.array([3, 0, -1])
        of = tensor_operator_frame(Frame([x]), Frame([y]))
        assert of.count == 1
        np.testing.assert_array_equal(of[0].m, np.outer(x, y))


class TestOpFrameBounds:
    @pytest.mark.parametrize("seed", range(5))
    def test_product_estimate(self, seed):
        rng = np.random.default_rng(seed)
        f1, f2 = random_frame(2, 4, rng), random_frame(3, 4, rng)
        b1, b2 = frame_bounds(f1), frame_bounds(f2)
        b = op_frame_bounds(tensor_operator_frame(f1, f2))
        assert rel(b.lower, b1.lower * b2.lower) <= 1e-9
        assert rel(b.upper, b1.upper * b2.upper) <= 1e-9

    def test_matrix_units(self):
        b = op_frame_bounds(matrix_units(2, 2))
        assert (b.lower, b.upper) == pytest.approx((1, 1), abs=1e-14)

    def test_zero_element(self):
        assert not op_frame_bounds(OperatorFrame(np.zeros((1, 2, 2)))).is_frame

    def test_frame_operator_is_kron(self):
        f1, f2 = random_frame(2, 3, 0), random_frame(2, 3, 1)
        S = op_frame_operator(tensor_operator_frame(f1, f2))
        np.testing.assert_allclose(S, np.kron(frame_operator(f1), frame_operator(f2)), atol=1e-12)


class TestSlices:
    def test_matrix_units_diagonal_vector(self):
        y0 = np.array([1, 1]) / math.sqrt(2)
        s = slice_left(matrix_units(2, 2), y0)
        expected = np.array([e1, e1, e2, e2]) / math.sqrt(2)
        np.testing.assert_allclose(s.vectors, expected, atol=1e-15)
        b = frame_bounds(s)
        assert (b.lower, b.upper) == pytest.approx((1, 1), abs=1e-14)

    def test_matrix_units_basis_vector(self):
        s = slice_left(matrix_units(2, 2), e1)
        np.testing.assert_array_equal(s.vectors, [e1, [0, 0], e2, [0, 0]])
        b = frame_bounds(s)
        assert (b.lower, b.upper) == pytest.approx((1, 1), abs=1e-14)

    def test_right_slice_of_matrix_units(self):
        s = slice_right(matrix_units(2, 2), e1)
        np.testing.assert_array_equal(s.vectors, [e1, e2, [0, 0], [0, 0]])

    def test_zero_vector(self):
        assert not frame_bounds(slice_left(matrix_units(2, 2), [0, 0])).is_frame
        assert not frame_bounds(slice_right(matrix_units(2, 2), [0, 0])).is_frame

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeMismatch):
            slice_left(matrix_units(2, 3), [1, 0])
        with pytest.raises(ShapeMismatch):
            slice_right(matrix_units(2, 3), [1, 0, 0])

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds, dh=st.integers(2, 3), dk=st.integers(2, 3))
    def test_bounds_inside_envelope(self, seed, dh, dk):
        rng = np.random.default_rng(seed)
        of = random_operator_frame(dh, dk, dh * dk + 1, rng)
        A = op_frame_bounds(of)
        y0 = linalg.random_gaussian_matrix(1, dk, rng)[0]
        x0 = linalg.random_gaussian_matrix(1, dh, rng)[0]
        ny, nx = np.linalg.norm(y0) ** 2, np.linalg.norm(x0) ** 2
        assert within(frame_bounds(slice_left(of, y0)), A.lower * ny, A.upper * ny)
        assert within(frame_bounds(slice_right(of, x0)), A.lower * nx, A.upper * nx)

    @pytest.mark.parametrize("seed", range(5))
    def test_tight_slices(self, seed):
        rng = np.random.default_rng(seed)
        of = random_tight_operator_frame(2, 3, 8, rng)
        y0 = linalg.random_gaussian_matrix(1, 3, rng)[0]
        x0 = linalg.random_gaussian_matrix(1, 2, rng)[0]
        left, right = frame_bounds(slice_left(of, y0)), frame_bounds(slice_right(of, x0))
        assert left.is_tight and right.is_tight
        assert rel(left.lower, np.linalg.norm(y0) ** 2) <= 1e-10
        assert rel(right.lower, np.linalg.norm(x0) ** 2) <= 1e-10


def composition_oracle(tn, tm, y0, x0, y):
    """Evaluate y -> T_n((y0 (x) x0)(T_m y)) step by step."""
    z = apply(tm, y)
    w = linalg.inner(x0, z) * y0
    return apply(tn, w)


class TestSandwich:
    def test_matrix_units(self):
        sw = sandwich_frame(matrix_units(2, 2), e1, e1)
        assert sw.count == 16
        nonzero = [t.m for t in sw if np.any(t.m)]
        assert len(nonzero) == 4
        np.testing.assert_array_equal(np.array(nonzero), matrix_units(2, 2).elements)
        assert op_frame_bounds(sw).is_frame
        assert sw.index_labels[5] == (1, 1)

    def test_zero_vector(self):
        sw = sandwich_frame(matrix_units(2, 2), [0, 0], e1)
        assert not np.any(sw.elements)
        assert not op_frame_bounds(sw).is_frame

    @settings(max_examples=20, deadline=None)
    @given(seed=seeds, dh=st.integers(2, 3), dk=st.integers(2, 3))
    def test_against_composition(self, seed, dh, dk):
        rng = np.random.default_rng(seed)
        of = random_operator_frame(dh, dk, dh * dk, rng)
        y0 = linalg.random_gaussian_matrix(1, dk, rng)[0]
        x0 = linalg.random_gaussian_matrix(1, dh, rng)[0]
        sw = sandwich_frame(of, y0, x0)
        assert op_frame_bounds(sw).is_frame
        for t, (n, m) in zip(sw, sw.index_labels):
            for u in np.eye(dk):
                expected = composition_oracle(of[n], of[m], y0, x0, u)
                assert np.max(np.abs(apply(t, u) - expected)) <= 1e-12


class TestTransform:
    def test_scalar(self):
        of = random_operator_frame(2, 2, 5, 0)
        b, bt = op_frame_bounds(of), op_frame_bounds(transform(of, q=2 * np.eye(2)))
        assert bt.lower == pytest.approx(4 * b.lower, rel=1e-12)
        assert bt.upper == pytest.approx(4 * b.upper, rel=1e-12)

    @pytest.mark.parametrize("seed", range(5))
    def test_unitary(self, seed):
        rng = np.random.default_rng(seed)
        of = random_operator_frame(2, 3, 7, rng)
        q = linalg.orthonormal_columns(linalg.random_gaussian_matrix(2, 2, rng))
        r = linalg.orthonormal_columns(linalg.random_gaussian_matrix(3, 3, rng))
        b, bt = op_frame_bounds(of), op_frame_bounds(transform(of, q, r))
        assert rel(bt.lower, b.lower) <= 1e-9 and rel(bt.upper, b.upper) <= 1e-9

    def test_identity(self):
        of = random_operator_frame(2, 3, 7, 0)
        np.testing.assert_array_equal(transform(of, np.eye(2), np.eye(3)).elements, of.elements)
        np.testing.assert_array_equal(transform(of).elements, of.elements)

    def test_singular(self):
        of = random_operator_frame(2, 2, 5, 0)
        with pytest.raises(NotInvertible):
            transform(of, q=[[1, 1], [1, 1]])
        with pytest.raises(NotInvertible):
            transform(of, r=np.zeros((2, 2)))

    def test_wrong_shape(self):
        with pytest.raises(ShapeMismatch):
            transform(random_operator_frame(2, 3, 7, 0), q=np.eye(3))

    def test_pointwise_composition(self):
        rng = np.random.default_rng(3)
        of = random_operator_frame(2, 3, 6, rng)
        q = linalg.random_gaussian_matrix(2, 2, rng)
        r = linalg.random_gaussian_matrix(3, 3, rng)
        out = transform(of, q, r)
        y = linalg.random_gaussian_matrix(1, 3, rng)[0]
        for tn, sn in zip(of, out):
            np.testing.assert_allclose(apply(sn, y), q @ apply(tn, r @ y), atol=1e-12)

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds)
    def test_envelope(self, seed):
        rng = np.random.default_rng(seed)
        of = random_operator_frame(2, 3, 7, rng)
        q = linalg.random_gaussian_matrix(2, 2, rng)
        r = linalg.random_gaussian_matrix(3, 3, rng)
        for qq, rr in ((q, None), (None, r), (q, r)):
            bt = op_frame_bounds(transform(of, qq, rr))
            lo, hi = transform_envelope(op_frame_bounds(of), qq, rr)
            assert bt.is_frame
            assert within(bt, lo, hi)


class TestAdjointFrame:
    def test_matrix_units(self):
        adj = adjoint_frame(matrix_units(2, 3))
        assert (adj.dim_h, adj.dim_k) == (3, 2)
        for t, (i, j) in zip(adj, adj.index_labels):
            np.testing.assert_array_equal(t.m, simple_tensor(np.eye(3)[j], np.eye(2)[i]).m)
        b = op_frame_bounds(adj)
        assert (b.lower, b.upper) == pytest.approx((1, 1), abs=1e-14)

    @pytest.mark.parametrize("seed", range(10))
    def test_bounds_and_involution(self, seed):
        of = random_operator_frame(2, 3, 7, seed)
        adj = adjoint_frame(of)
        b, ba = op_frame_bounds(of), op_frame_bounds(adj)
        assert rel(ba.lower, b.lower) <= 1e-10 and rel(ba.upper, b.upper) <= 1e-10
        np.testing.assert_array_equal(adjoint_frame(adj).elements, of.elements)

    def test_elements_are_adjoints(self):
        of = random_operator_frame(2, 2, 5, 1)
        for t, ta in zip(of, adjoint_frame(of)):
            np.testing.assert_array_equal(ta.m, adjoint(t).m)


class TestFrameOperatorFactorization:
    def test_orthonormal_bases(self):
        f1, f2 = standard_basis(2), standard_basis(3)
        t = random_hs_element(2, 3, 0)
        of = tensor_operator_frame(f1, f2)
        np.testing.assert_allclose(op_frame_operator_apply(of, t).m, t.m, atol=1e-15)
        np.testing.assert_allclose(factored_frame_operator(f1, f2, t).m, t.m, atol=1e-15)

    def test_e1e2e2(self):
        t = HSElement(np.ones((2, 2)))
        of = tensor_operator_frame(E1E2E2, E1E2E2)
        np.testing.assert_allclose(op_frame_operator_apply(of, t).m, [[1, 2], [2, 4]], atol=1e-15)
        np.testing.assert_allclose(factored_frame_operator(E1E2E2, E1E2E2, t).m, [[1, 2], [2, 4]], atol=1e-15)

    def test_zero(self):
        f = mercedes_frame()
        zero = HSElement.zero(2, 2)
        assert not np.any(op_frame_operator_apply(tensor_operator_frame(f, f), zero).m)
        assert not np.any(factored_frame_operator(f, f, zero).m)

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds, d1=st.integers(2, 3), d2=st.integers(2, 3))
    def test_three_routes_agree(self, seed, d1, d2):
        rng = np.random.default_rng(seed)
        f1, f2 = random_frame(d1, d1 + 1, rng), random_frame(d2, d2 + 2, rng)
        t = random_hs_element(d1, d2, rng)
        brute = op_frame_operator_apply(tensor_operator_frame(f1, f2), t).m
        factored = factored_frame_operator(f1, f2, t).m
        via_kron = kron_frame_operator(f1, f2, t).m
        scale = np.linalg.norm(brute)
        assert np.linalg.norm(factored - brute) <= 1e-10 * scale
        assert np.linalg.norm(via_kron - brute) <= 1e-10 * scale

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            factored_frame_operator(mercedes_frame(), standard_basis(3), HSElement.zero(2, 2))
        with pytest.raises(ShapeMismatch):
            op_frame_operator_apply(matrix_units(2, 2), HSElement.zero(2, 3))


class TestOpCanonicalDual:
    def test_matrix_units_self_dual(self):
        np.testing.assert_allclose(op_canonical_dual(matrix_units(2, 2)).elements, matrix_units(2, 2).elements, atol=1e-15)

    def test_e1e2e2_times_basis(self):
        dual = op_canonical_dual(tensor_operator_frame(E1E2E2, standard_basis(2)))
        expected = tensor_operator_frame(Frame([[1, 0], [0, 0.5], [0, 0.5]]), standard_basis(2))
        np.testing.assert_allclose(dual.elements, expected.elements, atol=1e-15)
        assert dual.index_labels == expected.index_labels

    @pytest.mark.parametrize("seed", range(10))
    def test_product_of_duals(self, seed):
        rng = np.random.default_rng(seed)
        f1, f2 = random_frame(2, 3, rng), random_frame(3, 4, rng)
        lhs = op_canonical_dual(tensor_operator_frame(f1, f2)).elements
        rhs = tensor_operator_frame(canonical_dual(f1), canonical_dual(f2)).elements
        assert np.max(np.abs(lhs - rhs)) <= 1e-9 * np.max(np.abs(rhs))

    @pytest.mark.parametrize("seed", range(10))
    def test_commutes_with_adjoint(self, seed):
        of = random_operator_frame(2, 3, 8, seed)
        lhs = op_canonical_dual(adjoint_frame(of)).elements
        rhs = adjoint_frame(op_canonical_dual(of)).elements
        assert np.max(np.abs(lhs - rhs)) <= 1e-9 * np.max(np.abs(rhs))

    def test_not_a_frame(self):
        with pytest.raises(NotAFrame):
            op_canonical_dual(OperatorFrame(np.zeros((3, 2, 2))))
