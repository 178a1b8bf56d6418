"""Dense complex linear algebra for small matrices.

Everything here works on plain ``numpy`` arrays of dtype ``complex128``.
The Hermitian eigensolver (cyclic Jacobi) and the Cholesky solver are
written out explicitly; numpy is used for storage and BLAS-level products
only.

Conventions
-----------
* Inner products are linear in the first argument:
  ``inner(x, y) = sum(x * conj(y))``.
* Tolerances are relative to the Frobenius norm of the operand, with an
  absolute floor of ``NORM_FLOOR`` for near-zero operands.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    NoConvergence,
    NotHermitian,
    NotHPD,
    NotSquare,
    RankDeficient,
    ShapeMismatch,
    SizeCapExceeded,
)

HERM_TOL = 1e-12
EIG_TOL = 1e-10
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 60
PD_TOL = 1e-13
ORTHO_TOL = 1e-12
NORM_FLOOR = 1e-14
KRON_SIZE_CAP = 2**20


def _scale(norm: float) -> float:
    return max(norm, NORM_FLOOR)


def as_cvector(x, name: str = "vector") -> np.ndarray:
    """Validate ``x`` as a finite, nonempty 1-D complex vector and return a copy."""
    v = np.array(x, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ShapeMismatch(f"{name} must be a nonempty 1-D array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    return v


def as_cmatrix(a, name: str = "matrix") -> np.ndarray:
    """Validate ``a`` as a finite, nonempty 2-D complex matrix and return a copy."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise ShapeMismatch(f"{name} must be a nonempty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


def inner(x, y) -> complex:
    """``<x, y> = sum_i x_i * conj(y_i)`` (linear in ``x``)."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise ShapeMismatch(f"shape mismatch {x.shape} vs {y.shape}")
    return complex(np.sum(x * np.conj(y)))


def frobenius_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``sum_ij a[i,j] * conj(b[i,j])``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(b, a))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a).ravel()))


def hermitian_residual(a) -> float:
    """Relative asymmetry ``||a - a^H||_F / ||a||_F``."""
    a = np.asarray(a)
    return frobenius_norm(a - a.conj().T) / _scale(frobenius_norm(a))


class HermitianEig(NamedTuple):
    """Eigenvalues in ascending order and the unitary matrix of eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def _offdiag_norm(a: np.ndarray) -> float:
    # summed directly: total minus diagonal cancels catastrophically
    return float(np.linalg.norm(a[~np.eye(a.shape[0], dtype=bool)]))


def hermitian_eig(a) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input is symmetrized as ``(a + a^H) / 2`` after checking that its
    asymmetry is within ``HERM_TOL`` relative.  Sweeps stop once the
    off-diagonal Frobenius mass drops below ``JACOBI_OFF_TOL * ||a||_F``.

    Raises
    ------
    NotSquare, NotHermitian, NoConvergence
    """
    a = as_cmatrix(a)
    n, m = a.shape
    if n != m:
        raise NotSquare(f"expected a square matrix, got {a.shape}")
    if hermitian_residual(a) > HERM_TOL:
        raise NotHermitian(f"asymmetry {hermitian_residual(a):.3e} exceeds {HERM_TOL:g}")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_OFF_TOL * _scale(frobenius_norm(a))

    for _ in range(JACOBI_MAX_SWEEPS + 1):
        if _offdiag_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = np.conj(apq / r)
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if theta == 0.0:
                    t = 1.0
                else:
                    # guard theta**2 overflow for nearly-decoupled pairs
                    t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
                    t = math.copysign(t, theta)
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # g = diag(1, e^{-i arg apq}) @ [[c, s], [-s, c]]; a <- g^H a g
                g10 = -s * phase
                g11 = c * phase
                cp, cq = a[:, p].copy(), a[:, q]
                a[:, p] = c * cp + g10 * cq
                a[:, q] = s * cp + g11 * cq
                rp, rq = a[p, :].copy(), a[q, :]
                a[p, :] = c * rp + np.conj(g10) * rq
                a[q, :] = s * rp + np.conj(g11) * rq
                vp, vq = v[:, p].copy(), v[:, q]
                v[:, p] = c * vp + g10 * vq
                v[:, q] = s * vp + g11 * vq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    w = np.diagonal(a).real.copy()
    order = np.argsort(w, kind="stable")
    return HermitianEig(w[order], v[:, order])


def eigvalsh(a) -> np.ndarray:
    return hermitian_eig(a).eigenvalues


def cholesky(a) -> np.ndarray:
    """Lower-triangular ``L`` with ``a = L @ L^H``.

    A pivot at or below ``PD_TOL * ||a||_F`` raises :class:`NotHPD`.
    """
    a = as_cmatrix(a)
    n, m = a.shape
    if n != m:
        raise ShapeMismatch(f"expected a square matrix, got {a.shape}")
    if hermitian_residual(a) > HERM_TOL:
        raise NotHPD("matrix is not Hermitian")
    floor = PD_TOL * _scale(frobenius_norm(a))
    L = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j].real - float(np.sum(np.abs(L[j, :j]) ** 2))
        if not pivot > floor:
            raise NotHPD(f"nonpositive pivot {pivot:.3e} at index {j}")
        L[j, j] = math.sqrt(pivot)
        if j + 1 < n:
            L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ L[j, :j].conj()) / L[j, j]
    return L


def _forward(L: np.ndarray, b: np.ndarray) -> np.ndarray:
    y = np.zeros_like(b)
    for i in range(L.shape[0]):
        y[i] = (b[i] - L[i, :i] @ y[:i]) / L[i, i]
    return y


def _backward(U: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = U.shape[0]
    x = np.zeros_like(y)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - U[i, i + 1:] @ x[i + 1:]) / U[i, i]
    return x


def hpd_solve(a, b) -> np.ndarray:
    """Solve ``a @ x = b`` for Hermitian positive definite ``a`` via Cholesky.

    ``b`` may be a vector or a matrix with ``a.shape[0]`` rows.
    """
    L = cholesky(a)
    b = np.array(b, dtype=np.complex128)
    if b.ndim not in (1, 2) or b.shape[0] != L.shape[0]:
        raise ShapeMismatch(f"right-hand side of shape {b.shape} does not match {L.shape}")
    return _backward(L.conj().T, _forward(L, b))


def hpd_inverse(a) -> np.ndarray:
    a = np.asarray(a)
    return hpd_solve(a, np.eye(a.shape[0], dtype=np.complex128))


def kron(a, b, cap: int = KRON_SIZE_CAP) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``.

    Works on vectors as well as matrices.  Raises :class:`SizeCapExceeded`
    when the result would hold more than ``cap`` entries.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.size * b.size > cap:
        raise SizeCapExceeded(f"kron result of {a.size * b.size} entries exceeds cap {cap}")
    return np.kron(a, b)


def operator_norm_2(a) -> float:
    """Spectral norm ``sqrt(lambda_max(a^H a))``."""
    a = as_cmatrix(a)
    lam = hermitian_eig(a.conj().T @ a).eigenvalues[-1]
    return math.sqrt(max(lam, 0.0))


def smallest_singular_value(a) -> float:
    a = as_cmatrix(a)
    lam = hermitian_eig(a.conj().T @ a).eigenvalues[0]
    return math.sqrt(max(lam, 0.0))


def as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_gaussian_matrix(rows: int, cols: int, seed) -> np.ndarray:
    """Standard complex Gaussian matrix (``E|z|^2 = 1``).

    ``seed`` is an integer or an explicit ``numpy.random.Generator``.
    """
    rng = as_generator(seed)
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / math.sqrt(2.0)


def random_hermitian(dim: int, seed) -> np.ndarray:
    g = random_gaussian_matrix(dim, dim, seed)
    return 0.5 * (g + g.conj().T)


def random_hpd(dim: int, seed, shift: float = 0.5) -> np.ndarray:
    g = random_gaussian_matrix(dim, dim, seed)
    return g @ g.conj().T + shift * np.eye(dim)


def orthonormal_columns(a) -> np.ndarray:
    """Orthonormalize the columns of ``a`` (rows >= cols).

    Modified Gram-Schmidt with one reorthogonalization pass.
    """
    q = as_cmatrix(a)
    rows, cols = q.shape
    if rows < cols:
        raise ShapeMismatch(f"need rows >= cols, got {q.shape}")
    for j in range(cols):
        original = np.linalg.norm(q[:, j])
        for _ in range(2):
            for k in range(j):
                q[:, j] -= np.vdot(q[:, k], q[:, j]) * q[:, k]
        nrm = np.linalg.norm(q[:, j])
        if nrm < ORTHO_TOL * max(original, 1.0):
            raise RankDeficient(f"column {j} is (numerically) dependent on earlier columns")
        q[:, j] /= nrm
    return q
