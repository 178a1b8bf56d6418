"""Finite frames in a single space C^d.

A :class:`Frame` stores its vectors as the rows of a ``(count, dim)``
complex array.  Whether the family actually *is* a frame is decided by
:func:`frame_bounds`, so degenerate families (e.g. ones that do not span)
are representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotAFrame, RankDeficient, ShapeMismatch, ZeroScalar

FRAME_EPS = 1e-10
TIGHT_EPS = 1e-10
NORMALIZED_EPS = 1e-10


def format_bound(x: float) -> str:
    """Human-readable bound: 12 significant digits, so roundoff like 1.4999999999999998 reads as 1.5."""
    return repr(float(f"{x:.12g}"))


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered family of vectors ``x_0, ..., x_{N-1}`` in C^dim.

    Duplicates are allowed; the family is a sequence, not a set.
    """

    vectors: np.ndarray

    def __post_init__(self):
        v = np.array(self.vectors, dtype=np.complex128)
        if v.ndim == 1:
            v = v[None, :]
        if v.ndim != 2 or v.shape[0] == 0 or v.shape[1] == 0:
            raise ShapeMismatch(f"a frame needs a nonempty (count, dim) array, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("frame vectors must be finite")
        object.__setattr__(self, "vectors", _frozen(v))

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    def __len__(self) -> int:
        return self.count

    def __getitem__(self, n) -> np.ndarray:
        return self.vectors[n]

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self) -> str:
        return f"Frame(dim={self.dim}, count={self.count})"


@dataclass(frozen=True)
class FrameBounds:
    """Optimal frame bounds ``lower = lambda_min(S)``, ``upper = lambda_max(S)``."""

    lower: float
    upper: float
    is_frame: bool
    is_tight: bool
    is_normalized_tight: bool

    @classmethod
    def from_extremes(cls, lower: float, upper: float) -> "FrameBounds":
        # S is PSD; negative eigenvalues are roundoff
        lower = max(float(lower), 0.0)
        upper = max(float(upper), lower)
        is_frame = upper > 0.0 and lower > FRAME_EPS * upper
        is_tight = is_frame and (upper - lower) <= TIGHT_EPS * upper
        is_normalized = is_tight and abs(upper - 1.0) <= NORMALIZED_EPS
        return cls(lower, upper, is_frame, is_tight, is_normalized)

    def describe(self) -> str:
        if not self.is_frame:
            return f"not a frame (lower bound {format_bound(self.lower)})"
        kind = "normalized tight" if self.is_normalized_tight else "tight" if self.is_tight else "not tight"
        return f"bounds {format_bound(self.lower)} {format_bound(self.upper)}, frame, {kind}"


def frame_operator(f: Frame) -> np.ndarray:
    """``S = sum_n x_n x_n^H``, so that ``S x = sum_n <x, x_n> x_n``."""
    X = f.vectors
    S = X.T @ X.conj()
    return 0.5 * (S + S.conj().T)


def frame_bounds(f: Frame) -> FrameBounds:
    w = linalg.eigvalsh(frame_operator(f))
    return FrameBounds.from_extremes(w[0], w[-1])


def analysis(f: Frame, x) -> np.ndarray:
    """Coefficients ``(<x, x_n>)_n``."""
    x = linalg.as_cvector(x, "x")
    if x.shape[0] != f.dim:
        raise ShapeMismatch(f"vector of dim {x.shape[0]} against frame of dim {f.dim}")
    return f.vectors.conj() @ x


def synthesis(f: Frame, c) -> np.ndarray:
    """``sum_n c_n x_n``."""
    c = linalg.as_cvector(c, "coefficients")
    if c.shape[0] != f.count:
        raise ShapeMismatch(f"{c.shape[0]} coefficients for a frame of {f.count} vectors")
    return f.vectors.T @ c


def frame_energy(f: Frame, x) -> float:
    """``sum_n |<x, x_n>|^2``."""
    return float(np.sum(np.abs(analysis(f, x)) ** 2))


def require_frame(f: Frame) -> FrameBounds:
    b = frame_bounds(f)
    if not b.is_frame:
        raise NotAFrame(f"family is not a frame (lower bound {b.lower:.3e}, upper {b.upper:.3e})")
    return b


def canonical_dual(f: Frame) -> Frame:
    """Canonical dual ``{S^{-1} x_n}``.

    Its bounds are ``(1/B, 1/A)`` and dualizing twice returns ``f``.
    """
    require_frame(f)
    S_inv = linalg.hpd_inverse(frame_operator(f))
    # row n is S^{-1} x_n
    return Frame(f.vectors @ S_inv.T)


def reconstruct(f: Frame, x) -> tuple[np.ndarray, float]:
    """Rebuild ``x`` through the canonical dual in both orders.

    Returns ``sum_n <x, x'_n> x_n`` and the larger of the two relative
    residuals (the other order being ``sum_n <x, x_n> x'_n``).
    """
    x = linalg.as_cvector(x, "x")
    dual = canonical_dual(f)
    via_dual_coeffs = synthesis(f, analysis(dual, x))
    via_dual_vectors = synthesis(dual, analysis(f, x))
    scale = max(float(np.linalg.norm(x)), linalg.NORM_FLOOR)
    residual = max(
        float(np.linalg.norm(via_dual_coeffs - x)),
        float(np.linalg.norm(via_dual_vectors - x)),
    ) / scale
    return via_dual_coeffs, residual


def scale_frame(f: Frame, lam: complex) -> Frame:
    lam = complex(lam)
    if lam == 0:
        raise ZeroScalar("cannot scale a frame by zero")
    return Frame(lam * f.vectors)


def standard_basis(dim: int) -> Frame:
    return Frame(np.eye(dim))


def mercedes_frame() -> Frame:
    """Three equiangular unit vectors in C^2; tight with bound 3/2."""
    h = math.sqrt(3.0) / 2.0
    return Frame([[1.0, 0.0], [-0.5, h], [-0.5, -h]])


def random_frame(dim: int, count: int, seed) -> Frame:
    """Gaussian family; a frame with probability one when ``count >= dim``."""
    return Frame(linalg.random_gaussian_matrix(count, dim, seed))


def random_tight_frame(dim: int, count: int, seed) -> Frame:
    """Normalized tight frame: the rows of a ``count x dim`` matrix with orthonormal columns."""
    if count < dim:
        raise ShapeMismatch(f"a tight frame in C^{dim} needs at least {dim} vectors, got {count}")
    rng = linalg.as_generator(seed)
    for _ in range(8):
        try:
            q = linalg.orthonormal_columns(linalg.random_gaussian_matrix(count, dim, rng))
        except RankDeficient:
            continue
        # rows of q: sum_n q_n q_n^H = (q^H q)^T = I
        return Frame(q)
    raise RankDeficient("could not draw a full-rank Gaussian matrix")
