"""Arithmetic in the commutative ring spanned by an SLI basis of fuzzy numbers."""
from ._kernels import BACKEND
from .errors import (
    BasisMismatchError,
    ConstructionError,
    DomainError,
    NoInverseError,
    ParseError,
    SliError,
    SliRingError,
)
from .fuzzy import (
    FuzzyNumber,
    Interval,
    LevelGrid,
    Trapezoid,
    alpha_cut,
    core,
    crisp,
    cross_product,
    diam,
    hausdorff,
    is_symmetric_about,
    make_trapezoid,
    minkowski_add,
    power_hedge,
    scalar_mul,
)
from .ring import add_psi, cross_psi, div_psi, inv_psi, scalar_psi, sub_psi
from .sli import SliBasis, SliCertificate, SVector, build_power_basis, psi_realize, psi_recover, verify_sli
from .solver import (
    LinearEquation,
    Solution,
    SolutionKind,
    apply_inverse,
    apply_linear,
    levelwise_system,
    solve,
)
from .zadeh import BoxFunction, extend_fuzzy, extend_grid, extend_vertex

__version__ = "0.1.0"
