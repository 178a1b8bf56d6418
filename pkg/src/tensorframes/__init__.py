"""Finite frames, operator frames and their tensor products, with numerical verification.

Modules
-------
linalg   dense complex linear algebra (Jacobi eigensolver, Cholesky, Kronecker)
frames   frames in C^d: frame operator, bounds, canonical dual
hs       H (x) K as antilinear Hilbert-Schmidt maps
tensor   operator frames: products, slices, sandwiches, transforms, duals
fileio   JSON frame files
verify   the numerical verification suite
cli      command-line entry point
"""

from .errors import (
    FrameError,
    NotAFrame,
    NotHermitian,
    NotHPD,
    NotInvertible,
    NotNormalizedTight,
    NotSquare,
    NoConvergence,
    ParseError,
    RankDeficient,
    ShapeMismatch,
    SizeCapExceeded,
    ZeroScalar,
)
from .frames import (
    Frame,
    FrameBounds,
    analysis,
    canonical_dual,
    frame_bounds,
    frame_operator,
    mercedes_frame,
    random_frame,
    random_tight_frame,
    reconstruct,
    scale_frame,
    standard_basis,
    synthesis,
)
from .hs import (
    HSElement,
    adjoint,
    apply,
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
    matrix_units,
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

__version__ = "0.1.0"
