"""
Tensor products of frames
=========================

Tensoring frames multiplies their optimal bounds.  The product family is
stored flattened, with Kronecker products of the factors in lexicographic
order.
"""

import numpy as np

from tensorframes import Frame, frame_bounds, mercedes_frame, random_frame, random_tight_frame, tensor_frame

f = Frame([[1, 0], [0, 1], [0, 1]])
ff = tensor_frame(f, f)
print(ff.count, "vectors in C^%d" % ff.dim)
print(frame_bounds(ff).describe())  # bounds 1 and 4

m = mercedes_frame()
print(frame_bounds(tensor_frame(m, m)).describe())  # tight, 2.25

# random factors: compare against the products of the factor bounds
rng = np.random.default_rng(0)
factors = [random_frame(2, 3, rng), random_frame(3, 4, rng), random_frame(2, 2, rng)]
parts = [frame_bounds(g) for g in factors]
prod = frame_bounds(tensor_frame(*factors))
print("lower", prod.lower, "vs", np.prod([p.lower for p in parts]))
print("upper", prod.upper, "vs", np.prod([p.upper for p in parts]))

# normalized tight factors give a normalized tight product
t = tensor_frame(random_tight_frame(2, 3, rng), random_tight_frame(3, 5, rng))
print(frame_bounds(t).describe())
