#!/usr/bin/env python3
"""Frames, bounds, classification, and canonical duals.

A frame generalizes a basis: K >= n vectors that span C^n, with redundancy
allowed.  The frame operator S measures how evenly the vectors cover the
space; its extreme eigenvalues are the optimal frame bounds (A, B), and the
canonical dual frame (S^-1 psi_k) restores perfect reconstruction despite
the redundancy.
"""

import numpy as np

from framerep import Frame, biorthogonal, gram

np.set_printoptions(precision=4, suppress=True)

# Three vectors in C^2: the standard basis plus their sum.  Redundant, so
# expansion coefficients are not unique, but every vector is recoverable.
psi = Frame([[1, 0], [0, 1], [1, 1]])
print("frame vectors (rows):")
print(psi.vectors)
print()

print("frame operator S = sum of outer products:")
print(psi.frame_operator)
print("bounds (A, B) =", tuple(round(x, 12) for x in psi.bounds))
print("classification:", psi.classification.value)
print()

# The canonical dual applies S^-1 to each vector.  Analysis with the dual
# followed by synthesis with the frame (or vice versa) is the identity.
dual = psi.canonical_dual()
print("canonical dual vectors:")
print(dual.vectors)
print("dual bounds ~ (1/B, 1/A):", tuple(round(x, 12) for x in dual.bounds))

f = np.array([0.3 - 1j, 2.5])
rebuilt = psi.synthesize(dual.analyze(f))
print("reconstruction error:", np.linalg.norm(rebuilt - f))
print()

# The Mercedes frame: three unit vectors at 120 degrees.  It is tight
# (A == B), so reconstruction needs only a global rescale.
s3 = np.sqrt(3) / 2
mercedes = Frame([[0, 1], [-s3, -0.5], [s3, -0.5]])
print("Mercedes frame classification:", mercedes.classification.value)
print("Mercedes frame operator:")
print(mercedes.frame_operator)
print()

# Gram matrices record all pairwise inner products; for a frame and its
# canonical dual the Gram matrix is the orthogonal projection onto the
# analysis range.
g = gram(psi, dual)
print("gram(psi, dual) is idempotent:", np.allclose(g @ g, g))
print()

# A Riesz basis (K == n, independent) is biorthogonal to its dual;
# a redundant frame never is.
riesz = Frame([[1, 0], [1, 1]])
print("Riesz basis biorthogonal to its dual:", biorthogonal(riesz, riesz.canonical_dual()))
print("redundant frame biorthogonal to its dual:", biorthogonal(psi, dual))
