"""Frame-discretized least-squares solver for operator equations ``O f = g``.

The equation is pushed to coefficient space over a frame ``Phi``: with
``M = C_Phi @ O @ D_dual(Phi)`` and ``d = C_Phi g``, solving ``O f = g`` is
equivalent to solving ``M c = d`` on the analysis range and synthesizing the
solution coefficients with the dual frame.  Optionally the right-hand side is
first projected onto the analysis range and the system truncated to its
top-left N x N section before the (SVD pseudoinverse) least-squares solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, NotAFrame, SectionTooLarge
from .frames import CONDITION_WARN_RATIO, RANK_RTOL, Frame, gram
from .linalg import as_matrix, as_vector, pseudoinverse
from .represent import LinearOperator, matrix_of_operator


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for :func:`solve`.

    section_size
        Truncate the discretized system to its leading N x N block
        (default: the full K x K system).
    pseudoinverse_rel_tol
        Relative singular-value cutoff for the least-squares solve
        (default: ``max(dims) * machine epsilon``).
    project_rhs
        Project the discretized right-hand side onto the analysis range
        before solving (default on; a no-op when the data is consistent).
    """

    section_size: int | None = None
    pseudoinverse_rel_tol: float | None = None
    project_rhs: bool = True

    def __post_init__(self):
        if self.section_size is not None and self.section_size < 1:
            raise ValueError(f"section_size must be positive, got {self.section_size}")
        if self.pseudoinverse_rel_tol is not None and self.pseudoinverse_rel_tol < 0:
            raise ValueError(
                f"pseudoinverse_rel_tol must be nonnegative, got {self.pseudoinverse_rel_tol}"
            )


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Solution vector plus diagnostics for one solve.

    ``residual_operator`` is ``|O f - g| / (1 + |g|)`` in the original space;
    ``residual_matrix`` is ``|M c - d| / (1 + |d|)`` for the full discretized
    system (so a truncated solve shows its truncation error here).
    """

    solution: np.ndarray
    coefficients: np.ndarray
    residual_operator: float
    residual_matrix: float
    section_used: int
    conditioning_warning: bool


def _require_frame(frame: Frame, what: str) -> None:
    if not frame.is_frame:
        a, b = frame.bounds
        raise NotAFrame(
            f"{what} requires a frame: lower bound {a:.3e} is below "
            f"{RANK_RTOL:g} * upper bound {b:.3e}"
        )


def discretize(op: LinearOperator, frame: Frame):
    """Coefficient-space matrix of ``op`` and the matching right-hand-side map.

    Returns ``(M, rhs_map)`` with ``M = C_frame @ op @ D_dual(frame)`` and
    ``rhs_map(g) = C_frame g``, so that ``O f = g`` iff ``M (C f) = C g``.
    The operator must act on the frame's space.
    """
    _require_frame(frame, "discretization")
    n = frame.space_dim
    if op.dim_in != n or op.dim_out != n:
        raise DimensionMismatch(
            f"discretization over a single frame needs an operator on C^{n}, "
            f"got C^{op.dim_in} -> C^{op.dim_out}"
        )
    m = matrix_of_operator(op, frame, frame.canonical_dual()).matrix
    return m, frame.analyze


def project_onto_analysis_range(frame: Frame, c) -> np.ndarray:
    """Orthogonal projection of coefficients onto the frame's analysis range.

    Applies ``gram(frame, dual(frame))``; idempotent, self-adjoint, and the
    identity on any vector of the form ``C f``.
    """
    _require_frame(frame, "analysis-range projection")
    c = as_vector(c, "coefficient vector")
    if c.shape != (frame.count,):
        raise DimensionMismatch(
            f"expected {frame.count} coefficients, got {c.shape[0]}"
        )
    return gram(frame, frame.canonical_dual()) @ c


def finite_section(matrix, n: int) -> np.ndarray:
    """Top-left ``n x n`` submatrix, entries copied bit-identically."""
    m = as_matrix(matrix)
    if n < 1:
        raise ValueError(f"section size must be positive, got {n}")
    if n > min(m.shape):
        raise SectionTooLarge(
            f"section {n} exceeds matrix dimensions {m.shape[0]}x{m.shape[1]}"
        )
    return m[:n, :n].copy()


def solve(op: LinearOperator, g, frame: Frame,
          options: SolveOptions | None = None) -> SolveReport:
    """Solve ``op @ f = g`` by frame discretization and least squares.

    Builds the coefficient system, optionally projects the right-hand side
    onto the analysis range, truncates to the requested finite section
    (solution coefficients are zero-padded back to full length), solves with
    the SVD pseudoinverse, and synthesizes the solution with the dual frame.

    Inconsistent systems are reported through a large residual, not an error.
    """
    if options is None:
        options = SolveOptions()
    g = as_vector(g, "right-hand side")
    if g.shape != (frame.space_dim,):
        raise DimensionMismatch(
            f"right-hand side must live in C^{frame.space_dim}, got dim {g.shape[0]}"
        )
    m, rhs_map = discretize(op, frame)
    d = rhs_map(g)
    if options.project_rhs:
        d = project_onto_analysis_range(frame, d)

    k = frame.count
    n_section = options.section_size if options.section_size is not None else k
    m_section = finite_section(m, n_section)
    c = np.zeros(k, dtype=np.complex128)
    c[:n_section] = pseudoinverse(m_section, options.pseudoinverse_rel_tol) @ d[:n_section]

    f_hat = frame.canonical_dual().synthesize(c)
    residual_matrix = float(np.linalg.norm(m @ c - d) / (1.0 + np.linalg.norm(d)))
    residual_operator = float(np.linalg.norm(op(f_hat) - g) / (1.0 + np.linalg.norm(g)))
    return SolveReport(
        solution=f_hat,
        coefficients=c,
        residual_operator=residual_operator,
        residual_matrix=residual_matrix,
        section_used=n_section,
        conditioning_warning=frame.condition > CONDITION_WARN_RATIO,
    )
