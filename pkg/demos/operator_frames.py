"""
Frames of operators: slices, sandwiches, transforms and adjoints
================================================================

Elements of H (x) K are stored as dim_h x dim_k matrices acting
antilinearly on K.  Every construction below produces a new frame whose
bounds can be read off from the original ones.
"""

import numpy as np

from tensorframes import (
    adjoint_frame,
    frame_bounds,
    matrix_units,
    op_frame_bounds,
    random_operator_frame,
    sandwich_frame,
    slice_left,
    slice_right,
    transform,
    transform_envelope,
)
from tensorframes.linalg import random_gaussian_matrix

rng = np.random.default_rng(2)
of = random_operator_frame(2, 3, 8, rng)
b = op_frame_bounds(of)
print("operator frame:", b.describe())

# slicing at a vector gives a frame whose bounds sit inside [A|y|^2, B|y|^2]
y0 = random_gaussian_matrix(1, 3, rng)[0]
x0 = random_gaussian_matrix(1, 2, rng)[0]
ny = np.linalg.norm(y0) ** 2
print("left slice:", frame_bounds(slice_left(of, y0)).describe())
print("  envelope", b.lower * ny, b.upper * ny)
print("right slice:", frame_bounds(slice_right(of, x0)).describe())

# matrix units sliced at e1 keep only the first column of each element
print(slice_left(matrix_units(2, 2), [1, 0]).vectors.real)

sw = sandwich_frame(of, y0, x0)
print("sandwich family of", sw.count, "elements:", op_frame_bounds(sw).is_frame)

# composing with invertible operators on either side
q = random_gaussian_matrix(2, 2, rng)
r = random_gaussian_matrix(3, 3, rng)
moved = op_frame_bounds(transform(of, q, r))
print("transformed:", moved.describe())
print("  envelope", transform_envelope(b, q, r))

# adjoints live in K (x) H and keep the same bounds
print("adjoint:", op_frame_bounds(adjoint_frame(of)).describe())
