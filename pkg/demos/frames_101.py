"""
Frames in C^d: bounds, duals and reconstruction
===============================================

A frame is a spanning family of vectors, possibly redundant.  This walks
through the basic objects on two small examples.
"""

import numpy as np

from tensorframes import Frame, canonical_dual, frame_bounds, frame_operator, mercedes_frame, reconstruct

# three vectors in C^2: e1 and e2 twice
f = Frame([[1, 0], [0, 1], [0, 1]])
print(frame_operator(f).real)

# the optimal bounds are the extreme eigenvalues of the frame operator
b = frame_bounds(f)
print(b.describe())

# the canonical dual undoes the redundancy: e2 now counts half each time
dual = canonical_dual(f)
print(dual.vectors.real)

x = np.array([1.0, 1j])
x_hat, residual = reconstruct(f, x)
print("reconstructed", x_hat, "residual", residual)

# the Mercedes frame is tight: both bounds equal 3/2
m = mercedes_frame()
print(frame_bounds(m).describe())

# a family that misses a direction is not a frame
print(frame_bounds(Frame([[1, 0], [2, 0]])).describe())
