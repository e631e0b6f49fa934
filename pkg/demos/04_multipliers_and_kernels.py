#!/usr/bin/env python3
"""Frame multipliers, prescribed images, and integral kernels.

Three ways an operator can be *built* from frame data rather than analyzed:
diagonal coefficient matrices induce frame multipliers; a list of image
vectors induces a bounded operator through the dual's coefficients; and a
representation matrix expands into a rank-one sum that reassembles the
operator's kernel (its standard-basis matrix).
"""

import numpy as np

from framerep import (
    Frame,
    LinearOperator,
    frame_multiplier,
    hs_norm,
    kernel_of_representation,
    matrix_of_operator,
    operator_from_images,
    operator_norm,
    rank_one,
)

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(11)

psi = Frame([[1, 0], [0, 1], [1, 1]])
dual = psi.canonical_dual()

# Unit weights over (frame, dual) reproduce the frame expansion: identity.
print("multiplier with unit weights over (psi, dual):")
print(frame_multiplier(np.ones(3), psi, dual).matrix.real)
print()

# General weights damp or boost the contribution of each frame direction.
weights = np.array([1.0, 0.5, 0.0])
mult = frame_multiplier(weights, psi, dual)
print("weights (1, 0.5, 0):")
print(mult.matrix.real)
print()

# Prescribing images: on a Riesz basis the induced operator interpolates
# exactly; on a redundant frame it generally cannot, and the diagnostic
# reports whether the image assignment was even consistent.
basis = Frame([[1, 0], [1, 1]])
interp, ok = operator_from_images(basis, [[0, 1], [1, 0]], diagnose=True)
print("Riesz basis interpolation consistent:", ok)
print("V(1,0) =", interp([1, 0]).real, "  V(1,1) =", interp([1, 1]).real)

_, ok = operator_from_images(psi, [[0, 1], [1, 0], [0, 0]], diagnose=True)
print("redundant frame, incompatible images -> consistent:", ok)
print()

# Rank-one operators are the atoms: f (x) conj(g) sends h to <h, g> f, and
# its Hilbert-Schmidt norm is |f| |g| (equal to its operator norm).
f = rng.standard_normal(2) + 1j * rng.standard_normal(2)
g = rng.standard_normal(2) + 1j * rng.standard_normal(2)
atom = rank_one(f, g)
print("rank-one: hs_norm =", round(hs_norm(atom), 6),
      " operator norm =", round(operator_norm(atom.matrix), 6),
      " |f||g| =", round(float(np.linalg.norm(f) * np.linalg.norm(g)), 6))
print()

# Kernel assembly: represent an operator over the dual pair, then expand the
# representation against rank-one kernels.  The sum lands exactly back on
# the operator's standard-basis matrix.
op = LinearOperator(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
rep = matrix_of_operator(op, dual, dual)
kernel = kernel_of_representation(rep.matrix, psi, psi)
print("kernel reassembly deviation:", np.linalg.norm(kernel - op.matrix))
