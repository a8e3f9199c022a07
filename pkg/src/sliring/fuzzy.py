"""Fuzzy numbers stored as sampled alpha-cuts, and the classical operations on them.

A :class:`FuzzyNumber` is a nested family of closed intervals, one per level of
a :class:`LevelGrid`. Between grid levels the endpoints are interpolated
linearly, which is exact for trapezoids and their scalar combinations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import ConstructionError, DomainError

DEFAULT_LEVELS = 101
SINGLETON_TOL = 1e-9
# slack for monotonicity / ordering checks, relative to endpoint magnitude
_ORDER_RTOL = 1e-12


def _frozen(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr is values:
        arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LevelGrid:
    """Strictly increasing membership levels starting at 0 and ending at 1."""

    levels: np.ndarray

    def __post_init__(self):
        levels = np.asarray(self.levels, dtype=np.float64)
        if levels.ndim != 1 or levels.size < 3:
            raise ConstructionError("a level grid needs at least 3 levels (M >= 2)")
        if levels[0] != 0.0 or levels[-1] != 1.0:
            raise ConstructionError("a level grid must start at 0 and end at 1")
        if not np.all(np.diff(levels) > 0):
            raise ConstructionError("levels must be strictly increasing")
        object.__setattr__(self, "levels", _frozen(levels))

    @classmethod
    def uniform(cls, count: int = DEFAULT_LEVELS) -> LevelGrid:
        """``count`` equally spaced levels, ``count >= 3``."""
        if count < 3:
            raise ConstructionError(f"need at least 3 levels, got {count}")
        levels = np.linspace(0.0, 1.0, int(count))
        return cls(levels)

    def __len__(self) -> int:
        return self.levels.size

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, LevelGrid):
            return NotImplemented
        return self.levels.shape == other.levels.shape and bool(np.all(self.levels == other.levels))

    def __hash__(self) -> int:
        return hash(self.levels.tobytes())

    def union(self, other: LevelGrid) -> LevelGrid:
        if self == other:
            return self
        return LevelGrid(np.union1d(self.levels, other.levels))


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ConstructionError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, other: Interval, tol: float = 0.0) -> bool:
        return self.lo - tol <= other.lo and other.hi <= self.hi + tol


@dataclass(frozen=True)
class Trapezoid:
    """Trapezoidal fuzzy number: 0 outside [a, d], 1 on [b, c], linear in between."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not (self.a <= self.b <= self.c <= self.d):
            raise ConstructionError(
                f"trapezoid requires a <= b <= c <= d, got ({self.a}, {self.b}, {self.c}, {self.d})"
            )

    @property
    def has_singleton_core(self) -> bool:
        return self.b == self.c

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    """Endpoint sequences ``lower[k] <= upper[k]`` over ``grid.levels[k]``.

    ``lower`` must be non-decreasing and ``upper`` non-increasing in ``k``
    (nested cuts). Tiny floating-point violations up to a relative 1e-12 are
    tolerated; anything larger raises :class:`ConstructionError`.
    """

    grid: LevelGrid
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64)
        upper = np.asarray(self.upper, dtype=np.float64)
        m = len(self.grid)
        if lower.shape != (m,) or upper.shape != (m,):
            raise ConstructionError(
                f"endpoint arrays must have shape ({m},), got {lower.shape} and {upper.shape}"
            )
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ConstructionError("endpoints must be finite")
        slack = _ORDER_RTOL * (1.0 + max(np.max(np.abs(lower)), np.max(np.abs(upper))))
        if np.any(lower - upper > slack):
            raise ConstructionError("empty alpha-cut: lower endpoint exceeds upper endpoint")
        if np.any(np.diff(lower) < -slack) or np.any(np.diff(upper) > slack):
            raise ConstructionError("alpha-cuts are not nested")
        object.__setattr__(self, "lower", _frozen(lower))
        object.__setattr__(self, "upper", _frozen(upper))

    @property
    def levels(self) -> np.ndarray:
        return self.grid.levels

    @property
    def midpoints(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)

    def cut(self, alpha: float) -> Interval:
        return alpha_cut(self, alpha)

    def __repr__(self) -> str:
        return (
            f"FuzzyNumber(levels={len(self.grid)}, support=[{self.lower[0]:g}, {self.upper[0]:g}], "
            f"core=[{self.lower[-1]:g}, {self.upper[-1]:g}])"
        )


def _default_grid(grid: LevelGrid | None) -> LevelGrid:
    return grid if grid is not None else LevelGrid.uniform()


def make_trapezoid(t: Trapezoid | Sequence[float], grid: LevelGrid | None = None) -> FuzzyNumber:
    """Sample a trapezoid on ``grid`` (default: 101 uniform levels)."""
    if not isinstance(t, Trapezoid):
        t = Trapezoid(*map(float, t))
    grid = _default_grid(grid)
    alpha = grid.levels
    # convex-combination form is exact at both ends of the grid
    lower = (1.0 - alpha) * t.a + alpha * t.b
    upper = (1.0 - alpha) * t.d + alpha * t.c
    return FuzzyNumber(grid, lower, upper)


def crisp(value: float, grid: LevelGrid | None = None) -> FuzzyNumber:
    grid = _default_grid(grid)
    v = np.full(len(grid), float(value))
    return FuzzyNumber(grid, v, v)


def alpha_cut(F: FuzzyNumber, alpha: float) -> Interval:
    """Cut at level ``alpha``; exact on grid levels, linear in between."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    lv = F.grid.levels
    k = int(np.searchsorted(lv, alpha))
    if k < lv.size and lv[k] == alpha:
        return Interval(float(F.lower[k]), float(F.upper[k]))
    lo = float(np.interp(alpha, lv, F.lower))
    hi = float(np.interp(alpha, lv, F.upper))
    return Interval(lo, max(lo, hi))


def core(F: FuzzyNumber) -> Interval:
    return Interval(float(F.lower[-1]), float(F.upper[-1]))


def has_singleton_core(F: FuzzyNumber, tol: float = SINGLETON_TOL) -> bool:
    return core(F).width <= tol


def core_point(F: FuzzyNumber, tol: float = SINGLETON_TOL) -> float:
    """The unique core element; raises :class:`DomainError` for a wide core."""
    c = core(F)
    if c.width > tol:
        raise DomainError(f"core [{c.lo}, {c.hi}] is not a singleton")
    return c.midpoint


def diam(F: FuzzyNumber) -> float:
    return float(F.upper[0] - F.lower[0])


def resample(F: FuzzyNumber, grid: LevelGrid) -> FuzzyNumber:
    """Re-express ``F`` on another grid by linear interpolation of its endpoints."""
    if F.grid == grid:
        return F
    lo, hi = _kernels.resample(F.grid.levels, F.lower, F.upper, grid.levels)
    return FuzzyNumber(grid, lo, hi)


def align(*numbers: FuzzyNumber) -> list[FuzzyNumber]:
    """Put all arguments on a common grid (the union of their level sets)."""
    grid = numbers[0].grid
    for G in numbers[1:]:
        grid = grid.union(G.grid)
    return [resample(G, grid) for G in numbers]


def minkowski_add(F: FuzzyNumber, G: FuzzyNumber) -> FuzzyNumber:
    F, G = align(F, G)
    return FuzzyNumber(F.grid, F.lower + G.lower, F.upper + G.upper)


def scalar_mul(lam: float, F: FuzzyNumber) -> FuzzyNumber:
    lam = float(lam)
    if lam >= 0.0:
        return FuzzyNumber(F.grid, lam * F.lower, lam * F.upper)
    return FuzzyNumber(F.grid, lam * F.upper, lam * F.lower)


def shift(F: FuzzyNumber, value: float) -> FuzzyNumber:
    """``F + value`` for a crisp ``value``."""
    return FuzzyNumber(F.grid, F.lower + value, F.upper + value)


def is_symmetric_about(F: FuzzyNumber, x: float, tol: float = 1e-12) -> bool:
    """True iff every cut has its midpoint within ``tol`` of ``x``."""
    if tol < 0:
        raise DomainError("tol must be non-negative")
    return bool(np.all(np.abs(F.midpoints - x) <= tol))


def is_symmetric(F: FuzzyNumber, tol: float = 1e-12) -> bool:
    """Symmetric about *some* point, namely the midpoint of the core."""
    return is_symmetric_about(F, float(F.midpoints[-1]), tol)


def hausdorff(F: FuzzyNumber, G: FuzzyNumber) -> float:
    """Sup over levels of the larger endpoint deviation."""
    F, G = align(F, G)
    return float(_kernels.sup_distance(F.lower, F.upper, G.lower, G.upper))


def power_hedge(F: FuzzyNumber, i: int) -> FuzzyNumber:
    """Membership raised to the ``i``-th power: cut at ``alpha`` is ``F``'s cut at ``alpha**(1/i)``."""
    if int(i) != i or i < 1:
        raise DomainError(f"hedge exponent must be a positive integer, got {i}")
    if i == 1:
        return F
    query = F.grid.levels ** (1.0 / i)
    lo, hi = _kernels.resample(F.grid.levels, F.lower, F.upper, query)
    return FuzzyNumber(F.grid, lo, hi)


def cross_product(B: FuzzyNumber, C: FuzzyNumber) -> FuzzyNumber:
    """Linearized product ``cB + bC - bc`` around the singleton cores ``b``, ``c``."""
    b = core_point(B)
    c = core_point(C)
    return shift(minkowski_add(scalar_mul(c, B), scalar_mul(b, C)), -b * c)
