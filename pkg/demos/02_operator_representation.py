#!/usr/bin/env python3
"""Representing operators as matrices in frame coordinates.

With an orthonormal basis, an operator's matrix is  M[j,k] = <O e_k, e_j>.
The same construction works with frames: pick a synthesis frame in the
domain and an analysis frame in the codomain.  The map is injective, carries
norms up to sqrt(B_psi * B_phi), composes multiplicatively through a
(frame, dual) sandwich, and inverts exactly on Riesz bases.
"""

import numpy as np

from framerep import (
    Frame,
    LinearOperator,
    frobenius_norm,
    gram,
    identity_operator,
    matrix_of_operator,
    operator_of_matrix,
    roundtrip_reconstruct,
)

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(1)

psi = Frame([[1, 0], [0, 1], [1, 1]])
dual = psi.canonical_dual()

# Representing the identity gives the cross Gram matrix; over (frame, dual)
# that is the projection onto the analysis range, not the K x K identity --
# redundancy leaves its footprint in coefficient space.
rep_id = matrix_of_operator(identity_operator(2), psi, dual)
print("representation of Id over (psi, dual):")
print(rep_id.matrix.real)
print("equals gram(psi, dual):", np.allclose(rep_id.matrix, gram(psi, dual)))
print()

# Round trip: represent over the dual pair, induce back over the frame pair.
op = LinearOperator([[1, 2], [3, 4]])
back = roundtrip_reconstruct(op, psi, psi)
print("roundtrip of [[1,2],[3,4]]:")
print(back.matrix.real)
print()

# Multiplicativity needs the dual sandwich: the synthesis frame of the left
# factor and the analysis frame of the right factor must be a (frame, dual)
# pair.  Representation objects enforce that on composition.
xi = Frame((rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))))
phi = Frame((rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))))
o = LinearOperator(rng.standard_normal((2, 3)))
p = LinearOperator(rng.standard_normal((3, 2)))
left = matrix_of_operator(o, phi, xi)
right = matrix_of_operator(p, xi.canonical_dual(), psi)
product = left @ right
direct = matrix_of_operator(o @ p, phi, psi)
print("sandwich product deviation:",
      frobenius_norm(product.matrix - direct.matrix) / frobenius_norm(direct.matrix))
print()

# On Riesz bases the two directions are mutually inverse and the identity
# maps to the identity.
basis = Frame([[1, 0], [1, 1]])
m0 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
induced = operator_of_matrix(m0, basis.canonical_dual(), basis.canonical_dual())
back_m = matrix_of_operator(induced, basis, basis).matrix
print("Riesz basis: matrix -> operator -> matrix deviation:",
      np.linalg.norm(back_m - m0))
rep_eye = matrix_of_operator(identity_operator(2), basis, basis.canonical_dual())
print("Riesz basis: Id maps to Id_K:", np.allclose(rep_eye.matrix, np.eye(2)))
