"""The tensor product H (x) K realized as antilinear maps K -> H.

An element is stored as a ``dim_h x dim_k`` matrix ``m`` acting by
``T(y) = m @ conj(y)``.  With the inner product linear in its first
argument, this encoding fixes the rest:

* ``x (x) y`` maps ``y'`` to ``<y, y'> x = x * (y^T conj(y'))``, so its
  matrix is the unconjugated outer product ``x y^T``.
* The adjoint, defined by ``<T* x, y> = <T y, x>``, has matrix ``m^T``
  (plain transpose): both sides equal ``sum_ij m_ij conj(x_i) conj(y_j)``.
* The Hilbert-Schmidt inner product ``sum_j <Q u_j, T u_j>`` over the
  standard basis is the Frobenius form ``sum_ij q_ij conj(t_ij)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotNormalizedTight, ShapeMismatch
from .frames import Frame, frame_bounds


@dataclass(frozen=True, eq=False)
class HSElement:
    """Hilbert-Schmidt antilinear map ``y -> m @ conj(y)`` from C^dim_k to C^dim_h."""

    m: np.ndarray

    def __post_init__(self):
        m = linalg.as_cmatrix(self.m, "m")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @property
    def dim_h(self) -> int:
        return self.m.shape[0]

    @property
    def dim_k(self) -> int:
        return self.m.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.m.shape

    @classmethod
    def zero(cls, dim_h: int, dim_k: int) -> "HSElement":
        return cls(np.zeros((dim_h, dim_k)))

    def __call__(self, y) -> np.ndarray:
        return apply(self, y)

    def __repr__(self) -> str:
        return f"HSElement(dim_h={self.dim_h}, dim_k={self.dim_k})"


def _same_shape(q: HSElement, t: HSElement) -> None:
    if q.shape != t.shape:
        raise ShapeMismatch(f"HS elements of shapes {q.shape} and {t.shape}")


def simple_tensor(x, y) -> HSElement:
    """``x (x) y : y' -> <y, y'> x``; matrix ``x y^T``."""
    x = linalg.as_cvector(x, "x")
    y = linalg.as_cvector(y, "y")
    return HSElement(np.outer(x, y))


def apply(t: HSElement, y) -> np.ndarray:
    y = linalg.as_cvector(y, "y")
    if y.shape[0] != t.dim_k:
        raise ShapeMismatch(f"vector of dim {y.shape[0]} for a map on C^{t.dim_k}")
    return t.m @ np.conj(y)


def adjoint(t: HSElement) -> HSElement:
    return HSElement(t.m.T)


def hs_inner(q: HSElement, t: HSElement) -> complex:
    _same_shape(q, t)
    return linalg.frobenius_inner(q.m, t.m)


def hs_norm(t: HSElement) -> float:
    return linalg.frobenius_norm(t.m)


def basis_energies(t: HSElement) -> tuple[float, float]:
    """``(sum_j ||T u_j||^2, sum_i ||T* e_i||^2)`` over the standard bases.

    Both equal ``hs_norm(t)**2``; the first is the column energy of ``m``,
    the second the column energy of ``m^T``.
    """
    ta = adjoint(t)
    by_k = sum(float(np.linalg.norm(apply(t, u)) ** 2) for u in np.eye(t.dim_k))
    by_h = sum(float(np.linalg.norm(apply(ta, e)) ** 2) for e in np.eye(t.dim_h))
    return by_k, by_h


def _sum_tensors(pairs, shape) -> np.ndarray:
    total = np.zeros(shape, dtype=np.complex128)
    for x, y in pairs:
        total += simple_tensor(x, y).m
    return total


def expand_basis(t: HSElement) -> tuple[HSElement, HSElement]:
    """``sum_i e_i (x) T* e_i`` and ``sum_j T u_j (x) u_j`` over standard bases."""
    ta = adjoint(t)
    over_h = _sum_tensors(((e, apply(ta, e)) for e in np.eye(t.dim_h)), t.shape)
    over_k = _sum_tensors(((apply(t, u), u) for u in np.eye(t.dim_k)), t.shape)
    return HSElement(over_h), HSElement(over_k)


def require_normalized_tight(f: Frame, dim: int, name: str) -> None:
    if f.dim != dim:
        raise ShapeMismatch(f"{name} lives in C^{f.dim}, expected C^{dim}")
    if not frame_bounds(f).is_normalized_tight:
        raise NotNormalizedTight(f"{name} is not a normalized tight frame")


def expand_tight(t: HSElement, fh: Frame, fk: Frame) -> tuple[HSElement, HSElement]:
    """``sum_n x_n (x) T* x_n`` and ``sum_m T y_m (x) y_m`` for normalized tight frames."""
    require_normalized_tight(fh, t.dim_h, "fh")
    require_normalized_tight(fk, t.dim_k, "fk")
    ta = adjoint(t)
    over_h = _sum_tensors(((x, apply(ta, x)) for x in fh), t.shape)
    over_k = _sum_tensors(((apply(t, y), y) for y in fk), t.shape)
    return HSElement(over_h), HSElement(over_k)


def tight_inner(q: HSElement, t: HSElement, fk: Frame) -> complex:
    """``sum_m <Q y_m, T y_m>``; equals :func:`hs_inner` for normalized tight ``fk``."""
    _same_shape(q, t)
    require_normalized_tight(fk, t.dim_k, "fk")
    return complex(sum(linalg.inner(apply(q, y), apply(t, y)) for y in fk))


def tight_energy(t: HSElement, fk: Frame) -> float:
    """``sum_m ||T y_m||^2``, the same for every normalized tight frame of K."""
    require_normalized_tight(fk, t.dim_k, "fk")
    return float(sum(np.linalg.norm(apply(t, y)) ** 2 for y in fk))


def random_hs_element(dim_h: int, dim_k: int, seed) -> HSElement:
    return HSElement(linalg.random_gaussian_matrix(dim_h, dim_k, seed))
