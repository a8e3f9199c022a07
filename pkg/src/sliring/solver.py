"""Linear equations ``A (.) X + B = C`` over an SLI basis.

If the core of ``A`` is non-zero the map ``X -> A (.) X + B`` is a bijection
and the equation has exactly one solution. If the core of ``A`` is zero,
``A (.) X`` equals ``x * A`` where ``x`` is the core of ``X``; the equation is
then solvable only when ``C - B`` is a real multiple of ``A``, and every ``X``
with that core is a solution.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .fuzzy import LevelGrid, resample
from .ring import (
    ZERO_CORE_TOL,
    _same_basis,
    add_psi,
    cross_psi,
    inv_psi,
    sub_psi,
)
from .sli import SVector, crisp_vector, psi_realize

RESIDUAL_TOL = 1e-9


class SolutionKind(str, enum.Enum):
    UNIQUE = "unique"
    FAMILY = "family"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class LinearEquation:
    A: SVector
    B: SVector
    C: SVector

    def __post_init__(self):
        _same_basis(self.A, self.B, self.C)

    @property
    def basis(self):
        return self.A.basis

    @property
    def rhs(self) -> SVector:
        """``C - B``: the right-hand side of the equivalent ``A (.) X = C - B``."""
        return sub_psi(self.C, self.B)


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve`.

    ``family_core`` is the core shared by all solutions in the degenerate
    case; it is ``None`` when ``A`` is the zero element and ``C == B``, where
    every element solves the equation.
    """

    kind: SolutionKind
    residual: float
    value: Optional[SVector] = None
    family_core: Optional[float] = None
    basis: object = None

    @property
    def representative(self) -> Optional[SVector]:
        """The unique solution, or the crisp member of the solution family."""
        if self.kind is SolutionKind.UNIQUE:
            return self.value
        if self.kind is SolutionKind.FAMILY:
            return crisp_vector(self.basis, 0.0 if self.family_core is None else self.family_core)
        return None

    def free_directions(self) -> np.ndarray:
        """Rows span the coordinate directions that leave the core unchanged.

        Adding any combination of them to the representative gives another
        solution. Empty for a unique solution.
        """
        if self.kind is not SolutionKind.FAMILY:
            return np.zeros((0, 0 if self.basis is None else self.basis.size))
        n = self.basis.size
        if self.family_core is None:
            return np.eye(n)
        dirs = np.zeros((n - 1, n))
        dirs[:, 1:] = np.eye(n - 1)
        dirs[:, 0] = -self.basis.cores[1:]
        return dirs


def apply_linear(A: SVector, B: SVector, X: SVector) -> SVector:
    return add_psi(cross_psi(A, X), B)


def apply_inverse(A: SVector, B: SVector, Y: SVector) -> SVector:
    """Preimage of ``Y``: ``A^-1 (.) Y - A^-1 (.) B``. Needs a non-zero core of ``A``."""
    _same_basis(A, B, Y)
    A_inv = inv_psi(A)
    return sub_psi(cross_psi(A_inv, Y), cross_psi(A_inv, B))


def solve(eq: LinearEquation, tol: float = RESIDUAL_TOL) -> Solution:
    A, B, C = eq.A, eq.B, eq.C
    basis = eq.basis
    a_core = A.core_value
    if abs(a_core) > ZERO_CORE_TOL:
        X = cross_psi(inv_psi(A), eq.rhs)
        residual = float(np.max(np.abs(apply_linear(A, B, X).coords - C.coords)))
        return Solution(SolutionKind.UNIQUE, residual, value=X, basis=basis)

    rhs = eq.rhs.coords
    a = A.coords
    aa = float(a @ a)
    if aa == 0.0:
        residual = float(np.max(np.abs(rhs)))
        if residual <= tol:
            return Solution(SolutionKind.FAMILY, residual, family_core=None, basis=basis)
        return Solution(SolutionKind.INCONSISTENT, residual, basis=basis)
    x = float(a @ rhs) / aa
    residual = float(np.max(np.abs(rhs - x * a)))
    if residual <= tol:
        return Solution(SolutionKind.FAMILY, residual, family_core=x, basis=basis)
    return Solution(SolutionKind.INCONSISTENT, residual, basis=basis)


@dataclass(frozen=True)
class LevelwiseReport:
    """Per-level comparison of ``sum_i (x a_i + a x_i) [A_i] - a x`` with ``[Bbar]``."""

    alphas: np.ndarray
    lhs_lower: np.ndarray
    lhs_upper: np.ndarray
    rhs_lower: np.ndarray
    rhs_upper: np.ndarray

    @property
    def lower_dev(self) -> np.ndarray:
        return np.abs(self.lhs_lower - self.rhs_lower)

    @property
    def upper_dev(self) -> np.ndarray:
        return np.abs(self.lhs_upper - self.rhs_upper)

    @property
    def per_level(self) -> np.ndarray:
        return np.maximum(self.lower_dev, self.upper_dev)

    @property
    def max_residual(self) -> float:
        return float(np.max(self.per_level))


def levelwise_system(
    A: SVector, X: SVector, Bbar: SVector, grid: Optional[LevelGrid] = None
) -> LevelwiseReport:
    """Evaluate ``A (.) X = Bbar`` cut by cut with real-coefficient interval sums."""
    basis = _same_basis(A, X, Bbar)
    grid = basis.grid if grid is None else grid
    if grid == basis.grid:
        lowers, uppers = basis.lowers, basis.uppers
    else:
        moved = [resample(e, grid) for e in basis.elements]
        lowers = np.ascontiguousarray(np.stack([e.lower for e in moved]))
        uppers = np.ascontiguousarray(np.stack([e.upper for e in moved]))
    a_bar = A.core_value
    x_bar = X.core_value
    coeffs = np.ascontiguousarray(x_bar * A.coords + a_bar * X.coords)
    lo, hi = _kernels.combine_cuts(coeffs, lowers, uppers)
    lo = lo - a_bar * x_bar
    hi = hi - a_bar * x_bar
    target = resample(psi_realize(Bbar), grid)
    return LevelwiseReport(grid.levels, lo, hi, target.lower, target.upper)

