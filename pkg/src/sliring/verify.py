"""Cross-checks for a solved (or claimed) equation.

Each check returns a measured value and the tolerance it is held to. The
Zadeh oracle check is independent of the ring code: it evaluates the
linearized product at the corners of the input cuts instead of going through
scalar multiples and Minkowski sums.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .fuzzy import (
    FuzzyNumber,
    LevelGrid,
    Trapezoid,
    core_point,
    cross_product,
    hausdorff,
    make_trapezoid,
    minkowski_add,
)
from .ring import ZERO_CORE_TOL, add_psi, crisp_element, cross_psi, inv_psi, scalar_psi
from .sli import SliBasis, SVector, psi_realize
from .solver import LinearEquation, SolutionKind, levelwise_system, solve
from .zadeh import extend_fuzzy, linearized_product_sum

SEED_ENV = "SLI_RING_SEED"
CHECK_TOL = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    value: Optional[float]
    tol: float
    detail: str = ""

    @property
    def skipped(self) -> bool:
        return self.value is None

    @property
    def passed(self) -> bool:
        return self.value is None or self.value <= self.tol

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def random_singleton_trapezoid(rng: np.random.Generator, grid: LevelGrid, scale: float = 5.0) -> FuzzyNumber:
    center = rng.uniform(-scale, scale)
    left, right = rng.uniform(0.0, scale, size=2)
    return make_trapezoid(Trapezoid(center - left, center, center, center + right), grid)


def oracle_gap(X: FuzzyNumber, A: FuzzyNumber, B: FuzzyNumber) -> float:
    """Distance between ``A (.) X + B`` and the vertex Zadeh extension of its linearization."""
    x_bar = core_point(X)
    a_bar = core_point(A)
    direct = minkowski_add(cross_product(A, X), B)
    oracle = extend_fuzzy(linearized_product_sum(x_bar, a_bar), [X, A, B], mode="vertex")
    return hausdorff(direct, oracle)


def random_element(rng: np.random.Generator, basis: SliBasis, low: float = -10.0, high: float = 10.0) -> SVector:
    return SVector(basis, rng.uniform(low, high, size=basis.size))


def ring_axiom_gap(A: SVector, B: SVector, C: SVector) -> float:
    """Largest coordinate deviation across the commutative-ring identities."""
    basis = A.basis
    zero = crisp_element(basis, 0.0)
    one = crisp_element(basis, 1.0)
    pairs = [
        (add_psi(add_psi(A, B), C), add_psi(A, add_psi(B, C))),
        (add_psi(A, B), add_psi(B, A)),
        (add_psi(A, zero), A),
        (add_psi(A, scalar_psi(-1.0, A)), zero),
        (cross_psi(cross_psi(A, B), C), cross_psi(A, cross_psi(B, C))),
        (cross_psi(A, B), cross_psi(B, A)),
        (cross_psi(A, one), A),
        (cross_psi(A, add_psi(B, C)), add_psi(cross_psi(A, B), cross_psi(A, C))),
    ]
    return max(float(np.max(np.abs(u.coords - v.coords))) for u, v in pairs)


def inverse_gap(C: SVector) -> float:
    e1 = crisp_element(C.basis, 1.0)
    return float(np.max(np.abs(cross_psi(C, inv_psi(C)).coords - e1.coords)))


def run_checks(
    eq: LinearEquation,
    claimed: Optional[tuple[str, Optional[Sequence[float]]]] = None,
    seed: int = 0,
    samples: int = 50,
) -> list[Check]:
    """Run the verification battery.

    ``claimed`` is ``(kind, coords)`` from a solution file; when omitted the
    equation is solved here and its own answer is checked.
    """
    rng = np.random.default_rng(seed)
    basis = eq.basis
    A, B, C = eq.A, eq.B, eq.C
    sol = solve(eq)
    checks: list[Check] = []

    if claimed is None:
        kind = sol.kind
        X = sol.representative
    else:
        kind = SolutionKind(claimed[0])
        X = None if claimed[1] is None else SVector(basis, claimed[1])
        checks.append(
            Check(
                "solution_kind",
                0.0 if kind is sol.kind else 1.0,
                0.0,
                f"claimed {kind.value}, solver says {sol.kind.value}",
            )
        )

    # linearization oracle: the problem's own operands, then random triples
    gaps = []
    if X is not None:
        gaps.append(oracle_gap(psi_realize(X), psi_realize(A), psi_realize(B)))
    for _ in range(samples):
        t = [random_singleton_trapezoid(rng, basis.grid) for _ in range(3)]
        gaps.append(oracle_gap(*t))
    checks.append(Check("zadeh_linearization_oracle", max(gaps), CHECK_TOL, f"{len(gaps)} triples"))

    inv_gaps = []
    if abs(A.core_value) > ZERO_CORE_TOL:
        inv_gaps.append(inverse_gap(A))
    while len(inv_gaps) < samples:
        R = random_element(rng, basis)
        if abs(R.core_value) >= 0.1:
            inv_gaps.append(inverse_gap(R))
    checks.append(Check("inverse_law", max(inv_gaps), CHECK_TOL, f"{len(inv_gaps)} elements"))

    ring_gap = max(
        ring_axiom_gap(random_element(rng, basis), random_element(rng, basis), random_element(rng, basis))
        for _ in range(samples)
    )
    checks.append(Check("ring_axioms", ring_gap, CHECK_TOL, f"{samples} triples"))

    rhs = eq.rhs
    if kind is SolutionKind.INCONSISTENT:
        if abs(A.core_value) > ZERO_CORE_TOL:
            checks.append(Check("solve_residual", 1.0, 0.0, "core of A is non-zero, a unique solution exists"))
        else:
            checks.append(
                Check("solve_residual", None, CHECK_TOL, f"no solution; best-fit residual {sol.residual:.3e}")
            )
        checks.append(Check("levelwise_system", None, CHECK_TOL, "no solution to evaluate"))
        return checks

    if X is None:
        checks.append(Check("solve_residual", 1.0, 0.0, "solution coordinates missing"))
        return checks
    lhs = cross_psi(A, X)
    residual = float(np.max(np.abs(lhs.coords - rhs.coords)))
    checks.append(Check("solve_residual", residual, CHECK_TOL, "max |A (.) X - (C - B)| over coordinates"))
    report = levelwise_system(A, X, rhs)
    checks.append(
        Check("levelwise_system", report.max_residual, CHECK_TOL, f"{report.alphas.size} levels")
    )
    return checks
