"""Strongly linearly independent bases and the coordinate isomorphism.

A linear combination ``sum q_i A_i`` (usual fuzzy arithmetic) has cut
midpoints ``sum q_i m_i(alpha)`` for *any* sign pattern of ``q``, and it is
symmetric about 0 exactly when that midpoint function vanishes. So on a level
grid, strong linear independence is the same as full column rank of the
midpoint matrix ``M[k, i] = m_i(alpha_k)``. The certificate we store is the
smallest singular value of ``M`` and the threshold it was compared against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import BasisMismatchError, ConstructionError, DomainError, SliError
from .fuzzy import (
    SINGLETON_TOL,
    FuzzyNumber,
    LevelGrid,
    Trapezoid,
    align,
    core_point,
    hausdorff,
    is_symmetric,
    make_trapezoid,
    power_hedge,
    resample,
)

DEFAULT_THRESHOLD = 1e-8


@dataclass(frozen=True)
class SliCertificate:
    sigma_min: float
    threshold: float
    relative_threshold: float

    @property
    def accepted(self) -> bool:
        return self.sigma_min > self.threshold

    @property
    def margin(self) -> float:
        return self.sigma_min - self.threshold


def _stack(elements: Sequence[FuzzyNumber]) -> tuple[np.ndarray, np.ndarray]:
    lowers = np.ascontiguousarray(np.stack([e.lower for e in elements]))
    uppers = np.ascontiguousarray(np.stack([e.upper for e in elements]))
    return lowers, uppers


def verify_sli(elements: Sequence[FuzzyNumber], threshold: float = DEFAULT_THRESHOLD) -> SliCertificate:
    """Smallest singular value of the midpoint matrix against ``threshold``.

    ``threshold`` is relative: the absolute cut-off is ``threshold`` times the
    largest absolute entry of the midpoint matrix.
    """
    if len(elements) == 0:
        raise DomainError("cannot certify an empty set")
    elements = align(*elements)
    lowers, uppers = _stack(elements)
    M = _kernels.midpoint_matrix(lowers, uppers)
    sigma = np.linalg.svd(M, compute_uv=False)
    sigma_min = float(sigma[-1]) if M.shape[0] >= M.shape[1] else 0.0
    scale = float(np.max(np.abs(M)))
    return SliCertificate(sigma_min, threshold * scale, threshold)


@dataclass(frozen=True, eq=False)
class SliBasis:
    """Ordered SLI basis ``{1, A_2, ..., A_n}`` with singleton cores.

    Use :meth:`from_elements` or :func:`build_power_basis`; both certify.
    """

    elements: tuple[FuzzyNumber, ...]
    certificate: SliCertificate
    generator: Optional[Trapezoid] = None
    cores: np.ndarray = field(init=False, repr=False)
    lowers: np.ndarray = field(init=False, repr=False)
    uppers: np.ndarray = field(init=False, repr=False)
    midpoint_matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        lowers, uppers = _stack(self.elements)
        cores = np.array([core_point(e) for e in self.elements])
        mids = _kernels.midpoint_matrix(lowers, uppers)
        for name, arr in (("lowers", lowers), ("uppers", uppers), ("cores", cores), ("midpoint_matrix", mids)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_elements(
        cls,
        elements: Sequence[FuzzyNumber],
        threshold: float = DEFAULT_THRESHOLD,
        generator: Optional[Trapezoid] = None,
    ) -> SliBasis:
        if len(elements) == 0:
            raise DomainError("a basis needs at least one element")
        elements = tuple(align(*elements))
        first = elements[0]
        if np.any(first.lower != 1.0) or np.any(first.upper != 1.0):
            raise ConstructionError("the first basis element must be crisp 1")
        for i, e in enumerate(elements):
            if e.upper[-1] - e.lower[-1] > SINGLETON_TOL:
                raise ConstructionError(f"basis element {i} does not have a singleton core")
        cert = verify_sli(elements, threshold)
        if not cert.accepted:
            raise SliError(
                f"elements are not SLI on this grid: sigma_min={cert.sigma_min:.3e} "
                f"<= threshold={cert.threshold:.3e}"
            )
        return cls(elements, cert, generator)

    @property
    def grid(self) -> LevelGrid:
        return self.elements[0].grid

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SliBasis):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.lowers.shape == other.lowers.shape
            and bool(np.all(self.lowers == other.lowers))
            and bool(np.all(self.uppers == other.uppers))
        )

    def __hash__(self) -> int:
        return hash((self.lowers.tobytes(), self.uppers.tobytes()))

    def __repr__(self) -> str:
        return f"SliBasis(n={self.size}, levels={len(self.grid)}, sigma_min={self.certificate.sigma_min:.3e})"


def build_power_basis(
    generator: Trapezoid,
    n: int,
    grid: Optional[LevelGrid] = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> SliBasis:
    """Basis ``{1, A, A^2, ..., A^(n-1)}`` of power hedges of a trapezoid ``A``."""
    if not isinstance(generator, Trapezoid):
        generator = Trapezoid(*map(float, generator))
    if n < 2:
        raise DomainError(f"basis size must be at least 2, got {n}")
    if not generator.has_singleton_core:
        raise ConstructionError("generator must have a singleton core (b == c)")
    A = make_trapezoid(generator, grid)
    if is_symmetric(A):
        raise SliError(f"generator {generator.as_tuple()} is symmetric; its hedges cannot be SLI")
    one = FuzzyNumber(A.grid, np.ones(len(A.grid)), np.ones(len(A.grid)))
    elements = [one] + [power_hedge(A, i) for i in range(1, n)]
    return SliBasis.from_elements(elements, threshold, generator)


@dataclass(frozen=True, eq=False)
class SVector:
    """Element of the span of a basis, stored as its coordinate vector."""

    basis: SliBasis
    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=np.float64).reshape(-1)
        if coords.size != self.basis.size:
            raise BasisMismatchError(
                f"{coords.size} coordinates given for a basis of size {self.basis.size}"
            )
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @property
    def core_value(self) -> float:
        return float(self.coords[0] + self.coords[1:] @ self.basis.cores[1:])

    def __repr__(self) -> str:
        return f"SVector({self.coords.tolist()}, core={self.core_value:g})"


def crisp_vector(basis: SliBasis, value: float) -> SVector:
    coords = np.zeros(basis.size)
    coords[0] = value
    return SVector(basis, coords)


def realize_coords(basis: SliBasis, coords: np.ndarray) -> FuzzyNumber:
    lo, hi = _kernels.combine_cuts(np.ascontiguousarray(coords, dtype=np.float64), basis.lowers, basis.uppers)
    return FuzzyNumber(basis.grid, lo, hi)


def psi_realize(v: SVector) -> FuzzyNumber:
    """The fuzzy number ``q_1 A_1 + ... + q_n A_n`` in usual interval arithmetic."""
    return realize_coords(v.basis, v.coords)


def psi_recover(basis: SliBasis, F: FuzzyNumber, tol: float = 1e-9) -> Optional[np.ndarray]:
    """Coordinates of ``F`` in ``basis``, or ``None`` if ``F`` is not in the span.

    Midpoints are linear in the coordinates whatever their signs, so they are
    fitted by least squares; the candidate is accepted only if realizing it
    reproduces ``F`` within Hausdorff distance ``tol``.
    """
    F = resample(F, basis.grid)
    q, _, rank, _ = np.linalg.lstsq(basis.midpoint_matrix, F.midpoints, rcond=None)
    if rank < basis.size:
        raise RuntimeError("midpoint matrix of a certified basis is rank deficient")
    if hausdorff(realize_coords(basis, q), F) > tol:
        return None
    return q
