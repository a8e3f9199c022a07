"""Coordinate arithmetic in the commutative ring of basis-correlated fuzzy numbers.

Every operation acts on coordinate vectors only; realize a result with
:func:`sliring.sli.psi_realize` when its alpha-cuts are needed. The constant
``r`` is the vector ``(r, 0, ..., 0)`` because the first basis element is 1.
"""
from __future__ import annotations

import numpy as np

from .errors import BasisMismatchError, NoInverseError
from .sli import SliBasis, SVector, crisp_vector

RingElement = SVector

ZERO_CORE_TOL = 1e-9


def _same_basis(*elems: SVector) -> SliBasis:
    basis = elems[0].basis
    for e in elems[1:]:
        if e.basis is not basis and e.basis != basis:
            raise BasisMismatchError("operands belong to different bases")
    return basis


def core_value(B: SVector) -> float:
    return B.core_value


def crisp_element(basis: SliBasis, value: float) -> SVector:
    return crisp_vector(basis, value)


def add_psi(B: SVector, C: SVector) -> SVector:
    basis = _same_basis(B, C)
    return SVector(basis, B.coords + C.coords)


def sub_psi(B: SVector, C: SVector) -> SVector:
    basis = _same_basis(B, C)
    return SVector(basis, B.coords - C.coords)


def neg_psi(B: SVector) -> SVector:
    return SVector(B.basis, -B.coords)


def scalar_psi(lam: float, B: SVector) -> SVector:
    return SVector(B.basis, float(lam) * B.coords)


def cross_psi(B: SVector, C: SVector) -> SVector:
    """``c*B + b*C - b*c`` with ``b``, ``c`` the cores of ``B`` and ``C``."""
    basis = _same_basis(B, C)
    b = B.core_value
    c = C.core_value
    coords = c * B.coords + b * C.coords
    coords[0] -= b * c
    return SVector(basis, coords)


def inv_psi(C: SVector) -> SVector:
    """Multiplicative inverse; only elements with non-zero core have one."""
    c = C.core_value
    if abs(c) <= ZERO_CORE_TOL:
        raise NoInverseError(f"core {c:g} is zero; element has no inverse")
    p = C.coords
    coords = -p / (c * c)
    coords[0] = 2.0 / c - p[0] / (c * c)
    return SVector(C.basis, coords)


def div_psi(B: SVector, C: SVector) -> SVector:
    return cross_psi(B, inv_psi(C))


def max_norm(B: SVector, C: SVector) -> float:
    """Coordinate max-norm of ``B - C``."""
    _same_basis(B, C)
    return float(np.max(np.abs(B.coords - C.coords)))
