"""Frames in H (x) K: products, slices, sandwiches, transforms, adjoints and duals.

Operator frames are reduced to ordinary frames in C^(dim_h * dim_k) by
row-major flattening ``m -> m.reshape(-1)``.  Under this convention
``vec(x y^T) = kron(x, y)`` and ``vec(Q m R^T) = kron(Q, R) @ vec(m)``, and
flattening is an isometry from the Hilbert-Schmidt inner product to the
Euclidean one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import linalg
from .errors import NotInvertible, ShapeMismatch, SizeCapExceeded
from .frames import (
    Frame,
    FrameBounds,
    canonical_dual,
    frame_bounds,
    frame_operator,
    random_tight_frame,
)
from .hs import HSElement, adjoint, apply, hs_inner, simple_tensor

INVERTIBLE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OperatorFrame:
    """Ordered family of HS elements of common shape, stored as a ``(count, dim_h, dim_k)`` array.

    ``index_labels`` records the ``(n, m)`` pair of each element for product
    and sandwich families.
    """

    elements: np.ndarray
    index_labels: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        e = self.elements
        if isinstance(e, (list, tuple)) and e and isinstance(e[0], HSElement):
            e = np.stack([t.m for t in e])
        e = np.array(e, dtype=np.complex128)
        if e.ndim != 3 or 0 in e.shape:
            raise ShapeMismatch(f"operator frame needs a nonempty (count, dim_h, dim_k) array, got {e.shape}")
        if not np.all(np.isfinite(e)):
            raise ValueError("operator frame elements must be finite")
        e.setflags(write=False)
        object.__setattr__(self, "elements", e)
        if self.index_labels is not None:
            labels = tuple((int(n), int(m)) for n, m in self.index_labels)
            if len(labels) != e.shape[0]:
                raise ShapeMismatch(f"{len(labels)} index labels for {e.shape[0]} elements")
            object.__setattr__(self, "index_labels", labels)

    @property
    def dim_h(self) -> int:
        return self.elements.shape[1]

    @property
    def dim_k(self) -> int:
        return self.elements.shape[2]

    @property
    def count(self) -> int:
        return self.elements.shape[0]

    def __len__(self) -> int:
        return self.count

    def __getitem__(self, n) -> HSElement:
        return HSElement(self.elements[n])

    def __iter__(self):
        return (HSElement(m) for m in self.elements)

    def flatten(self) -> Frame:
        return Frame(self.elements.reshape(self.count, -1))

    @classmethod
    def unflatten(cls, f: Frame, dim_h: int, dim_k: int, index_labels=None) -> "OperatorFrame":
        if f.dim != dim_h * dim_k:
            raise ShapeMismatch(f"frame of dim {f.dim} cannot hold {dim_h}x{dim_k} elements")
        return cls(f.vectors.reshape(f.count, dim_h, dim_k), index_labels)

    def __repr__(self) -> str:
        return f"OperatorFrame(dim_h={self.dim_h}, dim_k={self.dim_k}, count={self.count})"


def _tensor_pair(f1: Frame, f2: Frame, cap: int) -> Frame:
    size = f1.count * f2.count * f1.dim * f2.dim
    if size > cap:
        raise SizeCapExceeded(f"tensor frame with {size} entries exceeds cap {cap}")
    # lexicographic order: index of f1 varies slowest
    v = np.einsum("ni,mj->nmij", f1.vectors, f2.vectors)
    return Frame(v.reshape(f1.count * f2.count, f1.dim * f2.dim))


def tensor_frame(*frames: Frame, cap: int = linalg.KRON_SIZE_CAP) -> Frame:
    """Flattened product family ``{kron(y_1, ..., y_n)}`` in lexicographic index order.

    Optimal bounds are the products of the factors' optimal bounds.
    """
    if not frames:
        raise ValueError("tensor_frame needs at least one frame")
    return reduce(lambda a, b: _tensor_pair(a, b, cap), frames)


def tensor_operator_frame(f1: Frame, f2: Frame, cap: int = linalg.KRON_SIZE_CAP) -> OperatorFrame:
    """``{x_n (x) y_m}`` as HS elements, ordered lexicographically in ``(n, m)``."""
    flat = _tensor_pair(f1, f2, cap)
    labels = [(n, m) for n in range(f1.count) for m in range(f2.count)]
    return OperatorFrame.unflatten(flat, f1.dim, f2.dim, labels)


def op_frame_bounds(of: OperatorFrame) -> FrameBounds:
    return frame_bounds(of.flatten())


def op_frame_operator(of: OperatorFrame) -> np.ndarray:
    """Frame operator of ``of`` as a matrix on row-major flattened elements."""
    return frame_operator(of.flatten())


def slice_left(of: OperatorFrame, y0) -> Frame:
    """``{T_n y0}``, a family in H."""
    return Frame(np.stack([apply(t, y0) for t in of]))


def slice_right(of: OperatorFrame, x0) -> Frame:
    """``{T_n* x0}``, a family in K."""
    return Frame(np.stack([apply(adjoint(t), x0) for t in of]))


def sandwich_frame(of: OperatorFrame, y0, x0) -> OperatorFrame:
    """``{T_n (y0 (x) x0) T_m}`` for all pairs ``(n, m)``.

    Element ``(n, m)`` is built as ``T_n y0 (x) T_m* x0``.
    """
    left = slice_left(of, y0)
    right = slice_right(of, x0)
    elements = [simple_tensor(a, b).m for a in left for b in right]
    labels = [(n, m) for n in range(of.count) for m in range(of.count)]
    return OperatorFrame(np.stack(elements), labels)


def _check_invertible(q, dim: int, name: str) -> np.ndarray:
    q = linalg.as_cmatrix(q, name)
    if q.shape != (dim, dim):
        raise ShapeMismatch(f"{name} must be {dim}x{dim}, got {q.shape}")
    if linalg.smallest_singular_value(q) <= INVERTIBLE_TOL * linalg.operator_norm_2(q):
        raise NotInvertible(f"{name} is singular to working precision")
    return q


def transform(of: OperatorFrame, q=None, r=None) -> OperatorFrame:
    """``{Q T_n R}`` for invertible ``Q`` on H and ``R`` on K (either may be omitted).

    ``T_n`` is antilinear, so ``(T_n R)(y) = m_n conj(R y) = m_n conj(R) conj(y)``
    and right composition multiplies the matrix by ``conj(R)``.
    """
    e = of.elements
    if q is not None:
        q = _check_invertible(q, of.dim_h, "q")
        e = np.einsum("ij,njk->nik", q, e)
    if r is not None:
        r = _check_invertible(r, of.dim_k, "r")
        e = np.einsum("nij,jk->nik", e, np.conj(r))
    return OperatorFrame(e, of.index_labels)


def transform_envelope(bounds: FrameBounds, q=None, r=None) -> tuple[float, float]:
    """Admissible bounds ``(A ||Q^-1||^-2 ||R^-1||^-2, B ||Q||^2 ||R||^2)`` for :func:`transform`."""
    lo, hi = bounds.lower, bounds.upper
    for op in (q, r):
        if op is not None:
            # ||op^{-1}||^{-1} is the smallest singular value
            lo *= linalg.smallest_singular_value(op) ** 2
            hi *= linalg.operator_norm_2(op) ** 2
    return lo, hi


def adjoint_frame(of: OperatorFrame) -> OperatorFrame:
    """``{T_n*}`` in K (x) H; same optimal bounds as ``of``."""
    return OperatorFrame(np.transpose(of.elements, (0, 2, 1)), of.index_labels)


def op_frame_operator_apply(of: OperatorFrame, t: HSElement) -> HSElement:
    """``S(T) = sum_n <T, T_n> T_n``, summed in index order."""
    if t.shape != (of.dim_h, of.dim_k):
        raise ShapeMismatch(f"element of shape {t.shape} for a frame of shape {(of.dim_h, of.dim_k)}")
    total = np.zeros(t.shape, dtype=np.complex128)
    for tn in of:
        total += hs_inner(t, tn) * tn.m
    return HSElement(total)


def factored_frame_operator(f1: Frame, f2: Frame, t: HSElement) -> HSElement:
    """``(S_1 (x) S_2)(T)``, i.e. ``S_1 m S_2^T``, the frame operator of ``{x_n (x) y_m}``."""
    if t.shape != (f1.dim, f2.dim):
        raise ShapeMismatch(f"element of shape {t.shape} for factors of dims {(f1.dim, f2.dim)}")
    return HSElement(frame_operator(f1) @ t.m @ frame_operator(f2).T)


def kron_frame_operator(f1: Frame, f2: Frame, t: HSElement) -> HSElement:
    """``kron(S_1, S_2)`` acting on the flattened element, reshaped back."""
    S = linalg.kron(frame_operator(f1), frame_operator(f2))
    return HSElement((S @ t.m.reshape(-1)).reshape(t.shape))


def op_canonical_dual(of: OperatorFrame) -> OperatorFrame:
    """Canonical dual in H (x) K, via flatten -> dual -> unflatten."""
    dual = canonical_dual(of.flatten())
    return OperatorFrame.unflatten(dual, of.dim_h, of.dim_k, of.index_labels)


def random_operator_frame(dim_h: int, dim_k: int, count: int, seed) -> OperatorFrame:
    """Gaussian family of ``count`` HS elements (a frame with probability one if ``count >= dim_h * dim_k``)."""
    g = linalg.random_gaussian_matrix(count, dim_h * dim_k, seed)
    return OperatorFrame(g.reshape(count, dim_h, dim_k))


def random_tight_operator_frame(dim_h: int, dim_k: int, count: int, seed) -> OperatorFrame:
    return OperatorFrame.unflatten(random_tight_frame(dim_h * dim_k, count, seed), dim_h, dim_k)


def matrix_units(dim_h: int, dim_k: int) -> OperatorFrame:
    """``{e_i u_j^T}`` in lexicographic order; an orthonormal basis of H (x) K."""
    e = np.eye(dim_h * dim_k).reshape(dim_h * dim_k, dim_h, dim_k)
    labels = [(i, j) for i in range(dim_h) for j in range(dim_k)]
    return OperatorFrame(e, labels)
