"""Zadeh extension of continuous real functions, computed level by level.

For continuous ``f`` the cut of the extension at level ``alpha`` is the image of
the box of input cuts. Two ways to get that image are offered:

* ``vertex`` -- exact when ``f`` is affine in each coordinate separately: the
  extrema sit on the ``2**arity`` corners of the box.
* ``grid`` -- a regular sample of the box. This is an *inner* approximation of
  the image; use it for containment checks, never for equality assertions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError
from .fuzzy import FuzzyNumber, Interval, align


@dataclass(frozen=True)
class BoxFunction:
    """A real function of ``arity`` real variables.

    ``evaluate`` receives one argument per coordinate. With ``vectorized=True``
    (the default) it must accept numpy arrays and broadcast elementwise, which
    any expression built from ``+ - * /`` does.
    """

    arity: int
    evaluate: Callable[..., float]
    vectorized: bool = True
    monotonicity_hint: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.arity < 1:
            raise DomainError("arity must be positive")
        if self.monotonicity_hint is not None and len(self.monotonicity_hint) != self.arity:
            raise DomainError("monotonicity hint must have one sign per coordinate")

    def __call__(self, *args):
        return self.evaluate(*args)

    def _eval_arrays(self, cols: Sequence[np.ndarray]) -> np.ndarray:
        if self.vectorized:
            out = np.asarray(self.evaluate(*cols), dtype=np.float64)
            return np.broadcast_to(out, cols[0].shape) if cols else out
        return np.vectorize(self.evaluate, otypes=[np.float64])(*cols)


def linearized_product_sum(x0: float, y0: float) -> BoxFunction:
    """Linearization of ``x*y + z`` around ``(x0, y0, .)``: ``y0*x + x0*y - x0*y0 + z``."""
    return BoxFunction(3, lambda x, y, z: y0 * x + x0 * y - x0 * y0 + z)


def _check_arity(f: BoxFunction, k: int):
    if f.arity != k:
        raise DomainError(f"function of arity {f.arity} applied to {k} arguments")


def extend_vertex(f: BoxFunction, cuts: Sequence[Interval]) -> Interval:
    """Image of the box under a multiaffine ``f``: min/max over its corners."""
    _check_arity(f, len(cuts))
    corners = np.array(list(itertools.product(*[(c.lo, c.hi) for c in cuts])), dtype=np.float64)
    values = f._eval_arrays([corners[:, j] for j in range(f.arity)])
    return Interval(float(values.min()), float(values.max()))


def extend_grid(f: BoxFunction, cuts: Sequence[Interval], density: int) -> Interval:
    """Min/max of ``f`` over a regular ``density**arity`` sample of the box."""
    _check_arity(f, len(cuts))
    if density < 2:
        raise DomainError("density must be at least 2")
    axes = [np.linspace(c.lo, c.hi, density) for c in cuts]
    mesh = np.meshgrid(*axes, indexing="ij")
    values = f._eval_arrays([m.ravel() for m in mesh])
    return Interval(float(values.min()), float(values.max()))


def _corner_masks(k: int) -> np.ndarray:
    # row v, column j: does corner v take the upper endpoint of coordinate j
    return np.array(list(itertools.product((False, True), repeat=k)), dtype=bool)


def extend_fuzzy(
    f: BoxFunction,
    args: Sequence[FuzzyNumber],
    mode: str = "vertex",
    density: int = 11,
) -> FuzzyNumber:
    """Apply ``f`` to fuzzy arguments through their cuts, all levels at once."""
    _check_arity(f, len(args))
    args = align(*args)
    grid = args[0].grid
    m = len(grid)
    if mode == "vertex":
        masks = _corner_masks(f.arity)
        cols = [
            np.where(masks[None, :, j], args[j].upper[:, None], args[j].lower[:, None])
            for j in range(f.arity)
        ]
        values = np.ascontiguousarray(f._eval_arrays(cols).reshape(m, -1))
        lo, hi = _kernels.row_extrema(values)
    elif mode == "grid":
        if density < 2:
            raise DomainError("density must be at least 2")
        lo = np.empty(m)
        hi = np.empty(m)
        for k in range(m):
            cut = extend_grid(
                f,
                [Interval(float(a.lower[k]), float(a.upper[k])) for a in args],
                density,
            )
            lo[k], hi[k] = cut.lo, cut.hi
        # points sampled in a higher-level box also lie in every lower-level box
        lo = np.minimum.accumulate(lo[::-1])[::-1]
        hi = np.maximum.accumulate(hi[::-1])[::-1]
    else:
        raise DomainError(f"unknown extension mode {mode!r}")
    return FuzzyNumber(grid, lo, hi)
