"""
Expansions through normalized tight frames
==========================================

With normalized tight frames in place of orthonormal bases, the
Hilbert-Schmidt inner product and the usual rank-one expansions still come
out exactly.
"""

import numpy as np

from tensorframes import (
    expand_basis,
    expand_tight,
    hs_inner,
    hs_norm,
    random_hs_element,
    random_tight_frame,
    tight_energy,
    tight_inner,
)

rng = np.random.default_rng(5)
q = random_hs_element(2, 3, rng)
t = random_hs_element(2, 3, rng)

fk = random_tight_frame(3, 5, rng)
fk2 = random_tight_frame(3, 7, rng)
print("hs_inner   ", hs_inner(q, t))
print("tight_inner", tight_inner(q, t, fk))
print("tight_inner", tight_inner(q, t, fk2))

# the energy does not depend on which tight frame is used
print(hs_norm(t) ** 2, tight_energy(t, fk), tight_energy(t, fk2))

fh = random_tight_frame(2, 4, rng)
for name, e in zip(("basis of K", "basis of H"), expand_basis(t)):
    print(name, np.abs(e.m - t.m).max())
for name, e in zip(("tight frame of K", "tight frame of H"), expand_tight(t, fh, fk)):
    print(name, np.abs(e.m - t.m).max())
