"""
The frame operator of a product family, and its dual
====================================================

For a product family the frame operator splits into the two factor
operators, and so does the canonical dual.
"""

import numpy as np

from tensorframes import (
    Frame,
    HSElement,
    adjoint_frame,
    canonical_dual,
    factored_frame_operator,
    kron_frame_operator,
    op_canonical_dual,
    op_frame_operator_apply,
    random_frame,
    random_hs_element,
    random_operator_frame,
    tensor_operator_frame,
)

f = Frame([[1, 0], [0, 1], [0, 1]])
ones = HSElement(np.ones((2, 2)))
print(op_frame_operator_apply(tensor_operator_frame(f, f), ones).m.real)  # [[1, 2], [2, 4]]

rng = np.random.default_rng(8)
f1, f2 = random_frame(2, 3, rng), random_frame(3, 4, rng)
t = random_hs_element(2, 3, rng)
brute = op_frame_operator_apply(tensor_operator_frame(f1, f2), t).m
print("factored vs brute", np.abs(factored_frame_operator(f1, f2, t).m - brute).max())
print("kron vs brute    ", np.abs(kron_frame_operator(f1, f2, t).m - brute).max())

# dual of the product against the product of the duals
lhs = op_canonical_dual(tensor_operator_frame(f1, f2)).elements
rhs = tensor_operator_frame(canonical_dual(f1), canonical_dual(f2)).elements
print("product dual", np.abs(lhs - rhs).max())

# taking adjoints commutes with taking duals
of = random_operator_frame(2, 3, 8, rng)
diff = op_canonical_dual(adjoint_frame(of)).elements - adjoint_frame(op_canonical_dual(of)).elements
print("adjoint dual", np.abs(diff).max())
