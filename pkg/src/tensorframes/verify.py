"""Numerical verification suite.

Every invariant of the library is a named check that maps one problem
instance to a nonnegative residual; a check passes when the residual is at
most its tolerance.  Instances are either drawn from a seeded generator or
built around user-supplied frames.  Each (check, instance) pair gets its own
generator derived from ``(seed, instance index, check index)``, so reports
do not depend on evaluation order.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import linalg
from .frames import (
    Frame,
    analysis,
    canonical_dual,
    frame_bounds,
    frame_energy,
    frame_operator,
    random_frame,
    random_tight_frame,
    reconstruct,
    scale_frame,
    synthesis,
)
from .hs import (
    HSElement,
    adjoint,
    apply,
    basis_energies,
    expand_basis,
    expand_tight,
    hs_inner,
    hs_norm,
    random_hs_element,
    simple_tensor,
    tight_energy,
    tight_inner,
)
from .tensor import (
    OperatorFrame,
    adjoint_frame,
    factored_frame_operator,
    kron_frame_operator,
    op_canonical_dual,
    op_frame_bounds,
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

MAX_CONDITION = 1e4
DEFAULT_TRIALS = 50
SCALARS = (2.0, 2.0j, -1.0 + 1.0j)


# -- instances ---------------------------------------------------------------


@dataclass
class Instance:
    label: str
    f1: Frame
    f2: Frame
    f3: Frame
    tight_h: Frame
    tight_k: Frame
    tight_k2: Frame
    of: OperatorFrame
    tight_of: OperatorFrame


def well_conditioned_frame(dim: int, count: int, rng, max_condition: float = MAX_CONDITION) -> Frame:
    """Gaussian frame redrawn until ``upper / lower <= max_condition``."""
    while True:
        f = random_frame(dim, count, rng)
        b = frame_bounds(f)
        if b.is_frame and b.upper <= max_condition * b.lower:
            return f


def well_conditioned_operator_frame(dim_h, dim_k, count, rng, max_condition=MAX_CONDITION) -> OperatorFrame:
    while True:
        of = random_operator_frame(dim_h, dim_k, count, rng)
        b = op_frame_bounds(of)
        if b.is_frame and b.upper <= max_condition * b.lower:
            return of


def random_instance(rng: np.random.Generator, label: str) -> Instance:
    d1, d2 = (int(d) for d in rng.integers(2, 4, size=2))
    f1 = well_conditioned_frame(d1, d1 + int(rng.integers(1, 3)), rng)
    f2 = well_conditioned_frame(d2, d2 + int(rng.integers(1, 3)), rng)
    f3 = well_conditioned_frame(2, int(rng.integers(2, 5)), rng)
    tight_h = random_tight_frame(d1, d1 + int(rng.integers(0, 3)), rng)
    tight_k = random_tight_frame(d2, d2 + int(rng.integers(0, 3)), rng)
    tight_k2 = random_tight_frame(d2, d2 + int(rng.integers(1, 4)), rng)
    dh, dk = 2, int(rng.integers(2, 4))
    of = well_conditioned_operator_frame(dh, dk, dh * dk + int(rng.integers(0, 3)), rng)
    tight_of = random_tight_operator_frame(dh, dk, dh * dk + int(rng.integers(0, 3)), rng)
    return Instance(label, f1, f2, f3, tight_h, tight_k, tight_k2, of, tight_of)


def instance_from_frame(f: Frame, rng: np.random.Generator, label: str) -> Instance:
    base = random_instance(rng, label)
    base.f1 = f
    base.tight_h = random_tight_frame(f.dim, f.dim + 1, rng)
    return base


def instance_from_operator_frame(of: OperatorFrame, rng: np.random.Generator, label: str) -> Instance:
    base = random_instance(rng, label)
    base.of = of
    base.tight_of = random_tight_operator_frame(of.dim_h, of.dim_k, of.dim_h * of.dim_k + 1, rng)
    return base


# -- helpers -----------------------------------------------------------------


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), linalg.NORM_FLOOR)


def _excess(value: float, lo: float, hi: float, scale: float) -> float:
    """How far ``value`` lies outside ``[lo, hi]``, relative to ``scale``."""
    return max(lo - value, value - hi, 0.0) / max(scale, linalg.NORM_FLOOR)


def _matrix_rel(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return linalg.frobenius_norm(a - b) / max(linalg.frobenius_norm(b), linalg.NORM_FLOOR)


def _vec(rng, dim) -> np.ndarray:
    return linalg.random_gaussian_matrix(1, dim, rng)[0]


def _unitary(rng, dim) -> np.ndarray:
    return linalg.orthonormal_columns(linalg.random_gaussian_matrix(dim, dim, rng))


def _invertible(rng, dim) -> np.ndarray:
    while True:
        g = linalg.random_gaussian_matrix(dim, dim, rng)
        if linalg.smallest_singular_value(g) > 0.1 * linalg.operator_norm_2(g):
            return g


def _bounds_pair_rel(b, lower, upper) -> float:
    return max(_rel(b.lower, lower), _rel(b.upper, upper))


# -- checks ------------------------------------------------------------------


def check_frame_inequality(inst, rng):
    b = frame_bounds(inst.f1)
    worst = 0.0
    for _ in range(100):
        x = _vec(rng, inst.f1.dim)
        nx = float(np.linalg.norm(x)) ** 2
        worst = max(worst, _excess(frame_energy(inst.f1, x), b.lower * nx, b.upper * nx, b.upper * nx))
    return worst


def check_tight_reconstruction(inst, rng):
    f = inst.tight_h
    x = _vec(rng, f.dim)
    return float(np.linalg.norm(synthesis(f, analysis(f, x)) - x) / np.linalg.norm(x))


def check_dual_bounds(inst, rng):
    b = frame_bounds(inst.f1)
    return _bounds_pair_rel(frame_bounds(canonical_dual(inst.f1)), 1.0 / b.upper, 1.0 / b.lower)


def check_dual_energy(inst, rng):
    S_inv = linalg.hpd_inverse(frame_operator(inst.f1))
    x = _vec(rng, inst.f1.dim)
    lhs = linalg.inner(x, S_inv @ x).real
    return _rel(frame_energy(inst.f1, S_inv @ x), lhs)


def check_dual_involution(inst, rng):
    return _matrix_rel(canonical_dual(canonical_dual(inst.f1)).vectors, inst.f1.vectors)


def check_reconstruction(inst, rng):
    return reconstruct(inst.f1, _vec(rng, inst.f1.dim))[1]


def check_scaled_dual(inst, rng):
    dual = canonical_dual(inst.f1)
    return max(
        _matrix_rel(
            canonical_dual(scale_frame(inst.f1, lam)).vectors,
            scale_frame(dual, 1.0 / np.conj(lam)).vectors,
        )
        for lam in SCALARS
    )


def check_product_bounds(inst, rng):
    b1, b2 = frame_bounds(inst.f1), frame_bounds(inst.f2)
    b = frame_bounds(tensor_frame(inst.f1, inst.f2))
    return _bounds_pair_rel(b, b1.lower * b2.lower, b1.upper * b2.upper)


def check_product_bounds_three(inst, rng):
    bs = [frame_bounds(f) for f in (inst.f1, inst.f2, inst.f3)]
    b = frame_bounds(tensor_frame(inst.f1, inst.f2, inst.f3))
    return _bounds_pair_rel(b, math.prod(x.lower for x in bs), math.prod(x.upper for x in bs))


def check_product_normalized_tight(inst, rng):
    b = frame_bounds(tensor_frame(inst.tight_h, inst.tight_k))
    residual = max(abs(b.lower - 1.0), abs(b.upper - 1.0))
    return residual if b.is_normalized_tight else max(residual, 1.0)


def check_operator_frame_layout(inst, rng):
    of = tensor_operator_frame(inst.f1, inst.f2)
    flat = tensor_frame(inst.f1, inst.f2)
    return float(np.max(np.abs(of.flatten().vectors - flat.vectors)))


def check_estimate_over_first_factor(inst, rng):
    # A sum_m ||T y_m||^2 <= sum_{n,m} |<T, x_n (x) y_m>|^2 <= B sum_m ||T y_m||^2
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    b = frame_bounds(inst.f1)
    of = tensor_operator_frame(inst.f1, inst.f2)
    total = sum(abs(hs_inner(t, tn)) ** 2 for tn in of)
    inner = sum(float(np.linalg.norm(apply(t, y)) ** 2) for y in inst.f2)
    return _excess(total, b.lower * inner, b.upper * inner, b.upper * inner)


def check_estimate_over_second_factor(inst, rng):
    # C ||T||^2 <= sum_m ||T y_m||^2 <= D ||T||^2
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    b = frame_bounds(inst.f2)
    inner = sum(float(np.linalg.norm(apply(t, y)) ** 2) for y in inst.f2)
    n2 = hs_norm(t) ** 2
    return _excess(inner, b.lower * n2, b.upper * n2, b.upper * n2)


def _slice_containment(of, slicer, dim, rng):
    b = op_frame_bounds(of)
    v = _vec(rng, dim)
    nv = float(np.linalg.norm(v)) ** 2
    s = frame_bounds(slicer(of, v))
    lo, hi = b.lower * nv, b.upper * nv
    return max(_excess(s.lower, lo, hi, hi), _excess(s.upper, lo, hi, hi))


def check_slice_left(inst, rng):
    return _slice_containment(inst.of, slice_left, inst.of.dim_k, rng)


def check_slice_right(inst, rng):
    return _slice_containment(inst.of, slice_right, inst.of.dim_h, rng)


def check_tight_slices(inst, rng):
    of = inst.tight_of
    a = op_frame_bounds(of).lower
    y0, x0 = _vec(rng, of.dim_k), _vec(rng, of.dim_h)
    worst = 0.0
    for fam, v in ((slice_left(of, y0), y0), (slice_right(of, x0), x0)):
        const = a * float(np.linalg.norm(v)) ** 2
        b = frame_bounds(fam)
        worst = max(worst, _bounds_pair_rel(b, const, const))
        if not b.is_tight:
            worst = max(worst, 1.0)
    return worst


def check_sandwich_is_frame(inst, rng):
    sw = sandwich_frame(inst.of, _vec(rng, inst.of.dim_k), _vec(rng, inst.of.dim_h))
    return 0.0 if op_frame_bounds(sw).is_frame else 1.0


def sandwich_composition_oracle(of: OperatorFrame, y0, x0, n: int, m: int) -> np.ndarray:
    """Matrix of ``y -> T_n((y0 (x) x0)(T_m y))``, read off column by column on the standard basis."""
    mid = simple_tensor(y0, x0)
    cols = [apply(of[n], apply(mid, apply(of[m], u))) for u in np.eye(of.dim_k)]
    return np.stack(cols, axis=1)


def check_sandwich_composition(inst, rng):
    of = inst.of
    y0, x0 = _vec(rng, of.dim_k), _vec(rng, of.dim_h)
    sw = sandwich_frame(of, y0, x0)
    scale = 1.0 + max(hs_norm(t) for t in of) ** 2 * float(np.linalg.norm(y0) * np.linalg.norm(x0))
    worst = 0.0
    for k, (n, m) in enumerate(sw.index_labels):
        oracle = sandwich_composition_oracle(of, y0, x0, n, m)
        worst = max(worst, float(np.max(np.abs(sw.elements[k] - oracle))) / scale)
    return worst


def _transform_containment(of, q, r):
    b = op_frame_bounds(of)
    lo, hi = transform_envelope(b, q, r)
    t = op_frame_bounds(transform(of, q, r))
    residual = max(_excess(t.lower, lo, hi, hi), _excess(t.upper, lo, hi, hi))
    return residual if t.is_frame else max(residual, 1.0)


def check_transform_left(inst, rng):
    return _transform_containment(inst.of, _invertible(rng, inst.of.dim_h), None)


def check_transform_right(inst, rng):
    return _transform_containment(inst.of, None, _invertible(rng, inst.of.dim_k))


def check_transform_both(inst, rng):
    of = inst.of
    return _transform_containment(of, _invertible(rng, of.dim_h), _invertible(rng, of.dim_k))


def check_unitary_invariance(inst, rng):
    of = inst.of
    b = op_frame_bounds(of)
    t = op_frame_bounds(transform(of, _unitary(rng, of.dim_h), _unitary(rng, of.dim_k)))
    return _bounds_pair_rel(t, b.lower, b.upper)


def check_adjoint_bounds(inst, rng):
    b = op_frame_bounds(inst.of)
    return _bounds_pair_rel(op_frame_bounds(adjoint_frame(inst.of)), b.lower, b.upper)


def check_adjoint_involution(inst, rng):
    back = adjoint_frame(adjoint_frame(inst.of))
    return 0.0 if np.array_equal(back.elements, inst.of.elements) else 1.0


def check_tight_inner(inst, rng):
    q = random_hs_element(inst.tight_h.dim, inst.tight_k.dim, rng)
    t = random_hs_element(inst.tight_h.dim, inst.tight_k.dim, rng)
    ref = hs_inner(q, t)
    scale = hs_norm(q) * hs_norm(t)
    return max(abs(tight_inner(q, t, fk) - ref) / scale for fk in (inst.tight_k, inst.tight_k2))


def check_tight_energy(inst, rng):
    t = random_hs_element(inst.tight_h.dim, inst.tight_k.dim, rng)
    e1 = tight_energy(t, inst.tight_k)
    e2 = tight_energy(t, inst.tight_k2)
    ref = hs_norm(t) ** 2
    return max(_rel(e1, ref), _rel(e2, ref), _rel(e1, e2))


def check_basis_expansion(inst, rng):
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    return max(_matrix_rel(e.m, t.m) for e in expand_basis(t))


def check_tight_expansion(inst, rng):
    t = random_hs_element(inst.tight_h.dim, inst.tight_k.dim, rng)
    return max(_matrix_rel(e.m, t.m) for e in expand_tight(t, inst.tight_h, inst.tight_k))


def check_frame_operator_factorization(inst, rng):
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    brute = op_frame_operator_apply(tensor_operator_frame(inst.f1, inst.f2), t).m
    factored = factored_frame_operator(inst.f1, inst.f2, t).m
    via_kron = kron_frame_operator(inst.f1, inst.f2, t).m
    return max(_matrix_rel(factored, brute), _matrix_rel(via_kron, brute), _matrix_rel(via_kron, factored))


def check_product_dual(inst, rng):
    lhs = op_canonical_dual(tensor_operator_frame(inst.f1, inst.f2))
    rhs = tensor_operator_frame(canonical_dual(inst.f1), canonical_dual(inst.f2))
    return _matrix_rel(lhs.elements, rhs.elements)


def check_adjoint_dual(inst, rng):
    lhs = op_canonical_dual(adjoint_frame(inst.of))
    rhs = adjoint_frame(op_canonical_dual(inst.of))
    return _matrix_rel(lhs.elements, rhs.elements)


def check_adjoint_identity(inst, rng):
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    ta = adjoint(t)
    worst = 0.0
    for _ in range(20):
        x, y = _vec(rng, t.dim_h), _vec(rng, t.dim_k)
        diff = abs(linalg.inner(apply(ta, x), y) - linalg.inner(apply(t, y), x))
        worst = max(worst, diff / ((1.0 + hs_norm(t)) * np.linalg.norm(x) * np.linalg.norm(y)))
    return float(worst)


def check_parseval_independence(inst, rng):
    t = random_hs_element(inst.f1.dim, inst.f2.dim, rng)
    by_k, by_h = basis_energies(t)
    return _rel(by_k, by_h)


def check_simple_tensor_norm(inst, rng):
    x, y = _vec(rng, inst.f1.dim), _vec(rng, inst.f2.dim)
    return _rel(hs_norm(simple_tensor(x, y)), float(np.linalg.norm(x) * np.linalg.norm(y)))


def check_simple_tensor_inner(inst, rng):
    x, x2 = _vec(rng, inst.f1.dim), _vec(rng, inst.f1.dim)
    y, y2 = _vec(rng, inst.f2.dim), _vec(rng, inst.f2.dim)
    lhs = hs_inner(simple_tensor(x, y), simple_tensor(x2, y2))
    rhs = linalg.inner(x, x2) * linalg.inner(y, y2)
    scale = float(np.linalg.norm(x) * np.linalg.norm(x2) * np.linalg.norm(y) * np.linalg.norm(y2))
    return abs(lhs - rhs) / scale


def check_eig_reconstruction(inst, rng):
    a = linalg.random_hermitian(int(rng.integers(2, 9)), rng)
    w, v = linalg.hermitian_eig(a)
    return _matrix_rel(v @ np.diag(w) @ v.conj().T, a)


def check_kron_spectrum(inst, rng):
    a = linalg.random_hpd(inst.f1.dim, rng)
    b = linalg.random_hpd(inst.f2.dim, rng)
    w = linalg.eigvalsh(linalg.kron(a, b))
    expected = np.sort(np.multiply.outer(linalg.eigvalsh(a), linalg.eigvalsh(b)).ravel())
    return float(np.max(np.abs(w - expected) / expected))


def check_kron_norm(inst, rng):
    a = linalg.random_gaussian_matrix(inst.f1.dim, inst.f1.dim, rng)
    b = linalg.random_gaussian_matrix(inst.f2.dim, inst.f2.dim, rng)
    return _rel(linalg.operator_norm_2(linalg.kron(a, b)), linalg.operator_norm_2(a) * linalg.operator_norm_2(b))


def check_hpd_roundtrip(inst, rng):
    dim = inst.f1.dim
    a = linalg.random_hpd(dim, rng)
    b = linalg.random_gaussian_matrix(dim, 2, rng)
    x = linalg.hpd_solve(a, b)
    return linalg.frobenius_norm(a @ x - b) / (linalg.frobenius_norm(a) * linalg.frobenius_norm(b))


@dataclass(frozen=True)
class Check:
    name: str
    tolerance: float
    run: Callable[[Instance, np.random.Generator], float]


CHECKS: tuple[Check, ...] = tuple(
    sorted(
        (
            Check("adjoint_bounds_equal", 1e-10, check_adjoint_bounds),
            Check("adjoint_defining_identity", 1e-12, check_adjoint_identity),
            Check("adjoint_dual_commute", 1e-9, check_adjoint_dual),
            Check("adjoint_involution", 0.0, check_adjoint_involution),
            Check("basis_expansion", 1e-10, check_basis_expansion),
            Check("core_eig_reconstruction", 1e-10, check_eig_reconstruction),
            Check("core_hpd_roundtrip", 1e-10, check_hpd_roundtrip),
            Check("core_kron_norm", 1e-9, check_kron_norm),
            Check("core_kron_spectrum", 1e-9, check_kron_spectrum),
            Check("dual_bounds", 1e-9, check_dual_bounds),
            Check("dual_energy", 1e-9, check_dual_energy),
            Check("dual_involution", 1e-9, check_dual_involution),
            Check("frame_inequality", 1e-9, check_frame_inequality),
            Check("frame_operator_factorization", 1e-10, check_frame_operator_factorization),
            Check("operator_frame_layout", 0.0, check_operator_frame_layout),
            Check("parseval_independence", 1e-12, check_parseval_independence),
            Check("product_bounds", 1e-9, check_product_bounds),
            Check("product_bounds_three_factors", 1e-9, check_product_bounds_three),
            Check("product_dual", 1e-9, check_product_dual),
            Check("product_estimate_first_factor", 1e-9, check_estimate_over_first_factor),
            Check("product_estimate_second_factor", 1e-9, check_estimate_over_second_factor),
            Check("product_normalized_tight", 1e-10, check_product_normalized_tight),
            Check("reconstruction", 1e-9, check_reconstruction),
            Check("sandwich_composition", 1e-12, check_sandwich_composition),
            Check("sandwich_is_frame", 0.0, check_sandwich_is_frame),
            Check("scaled_dual", 1e-10, check_scaled_dual),
            Check("simple_tensor_inner", 1e-12, check_simple_tensor_inner),
            Check("simple_tensor_norm", 1e-12, check_simple_tensor_norm),
            Check("slice_left_bounds", 1e-9, check_slice_left),
            Check("slice_right_bounds", 1e-9, check_slice_right),
            Check("tight_energy_invariance", 1e-10, check_tight_energy),
            Check("tight_expansion", 1e-10, check_tight_expansion),
            Check("tight_inner_product", 1e-10, check_tight_inner),
            Check("tight_reconstruction", 1e-10, check_tight_reconstruction),
            Check("tight_slices", 1e-9, check_tight_slices),
            Check("transform_both_sides", 1e-9, check_transform_both),
            Check("transform_left", 1e-9, check_transform_left),
            Check("transform_right", 1e-9, check_transform_right),
            Check("transform_unitary_invariance", 1e-9, check_unitary_invariance),
        ),
        key=lambda c: c.name,
    )
)


# -- report ------------------------------------------------------------------


@dataclass
class CheckRecord:
    check: str
    instance_index: int
    instance: str
    residual: float
    tolerance: float
    passed: bool
    error: str | None = None


@dataclass
class VerifyReport:
    seed: int
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def failed(self) -> int:
        return sum(not r.passed for r in self.records)

    @property
    def passed(self) -> int:
        return self.total - self.failed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def worst_by_check(self) -> dict[str, CheckRecord]:
        worst: dict[str, CheckRecord] = {}
        for r in self.records:
            cur = worst.get(r.check)
            if cur is None or (cur.passed and not r.passed) or (cur.passed == r.passed and r.residual > cur.residual):
                worst[r.check] = r
        return worst

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "summary": {"total": self.total, "passed": self.passed, "failed": self.failed},
            "records": [
                {**asdict(r), "residual": r.residual if math.isfinite(r.residual) else None}
                for r in self.records
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def to_text(self) -> str:
        """One row per check with the worst residual over all instances."""
        rows = [f"{'check':<32} {'runs':>5} {'worst residual':>15} {'tolerance':>10}  status"]
        counts: dict[str, int] = {}
        for r in self.records:
            counts[r.check] = counts.get(r.check, 0) + 1
        for name, r in sorted(self.worst_by_check().items()):
            status = "pass" if r.passed else f"FAIL ({r.instance})"
            if r.error:
                status += f": {r.error}"
            rows.append(f"{name:<32} {counts[name]:>5} {r.residual:>15.3e} {r.tolerance:>10.0e}  {status}")
        rows.append(f"{self.passed}/{self.total} passed, {self.failed} failed (seed {self.seed})")
        return "\n".join(rows) + "\n"


def run_checks(instances: list[Instance], seed: int, checks=CHECKS) -> VerifyReport:
    report = VerifyReport(seed)
    for ci, check in enumerate(checks):
        for ii, inst in enumerate(instances):
            rng = np.random.default_rng([seed, ii, ci, 1])
            try:
                residual = float(check.run(inst, rng))
                error = None
            except Exception as exc:  # reported, never raised
                residual, error = math.inf, f"{type(exc).__name__}: {exc}"
            passed = error is None and residual <= check.tolerance
            report.records.append(CheckRecord(check.name, ii, inst.label, residual, check.tolerance, passed, error))
    return report


def build_instances(seed: int, trials: int, frames=()) -> list[Instance]:
    """User-supplied frames first (in order), then ``trials`` random instances."""
    out = []
    for i, (label, obj) in enumerate(frames):
        rng = np.random.default_rng([seed, i, 0])
        if isinstance(obj, OperatorFrame):
            out.append(instance_from_operator_frame(obj, rng, label))
        else:
            out.append(instance_from_frame(obj, rng, label))
    for t in range(trials):
        rng = np.random.default_rng([seed, len(frames) + t, 0])
        out.append(random_instance(rng, f"random#{t}"))
    return out


def verify(seed: int = 1, trials: int = DEFAULT_TRIALS, frames=()) -> VerifyReport:
    """Run every check on ``trials`` random instances plus any ``(label, frame)`` pairs given."""
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    instances = build_instances(seed, trials, frames)
    if not instances:
        raise ValueError("no instances to verify (trials is 0 and no frames were given)")
    return run_checks(instances, seed)
