import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sliring import (
    BasisMismatchError,
    NoInverseError,
    SVector,
    Trapezoid,
    add_psi,
    build_power_basis,
    cross_product,
    cross_psi,
    div_psi,
    hausdorff,
    inv_psi,
    psi_realize,
    scalar_mul,
    scalar_psi,
    sub_psi,
)
from sliring.ring import crisp_element, max_norm

BASIS4 = build_power_basis(Trapezoid(0, 1, 1, 3), 4)
BASIS2 = build_power_basis(Trapezoid(0, 1, 1, 3), 2)


def V(*q, basis=BASIS2):
    return SVector(basis, q)


def coords(v):
    return v.coords.tolist()


# -- worked examples ---------------------------------------------------------

def test_add_sub_examples():
    assert coords(add_psi(V(2, 3), V(1, 1))) == [3, 4]
    assert coords(sub_psi(V(2, 3), V(2, 3))) == [0, 0]
    assert coords(add_psi(V(2, 3), V(0, 0))) == [2, 3]


def test_scalar_examples():
    assert coords(scalar_psi(0, V(2, 3))) == [0, 0]
    assert coords(scalar_psi(-1, V(2, 3))) == [-2, -3]
    # 2 * realize(1, 1) at alpha 0: realize(1,1)_0 = 1 + [0, 3] = [1, 4]
    R = psi_realize(scalar_psi(2, V(1, 1)))
    assert (R.lower[0], R.upper[0]) == (2.0, 8.0)
    S = scalar_mul(2, psi_realize(V(1, 1)))
    assert hausdorff(R, S) == 0.0


def test_cross_examples():
    assert coords(cross_psi(crisp_element(BASIS2, 2), crisp_element(BASIS2, 3))) == [6, 0]
    # cores 5 and 2: 2*(2,3) + 5*(1,1) - 10*e1 = (-1, 11)
    P = cross_psi(V(2, 3), V(1, 1))
    assert coords(P) == [-1, 11]
    assert P.core_value == 10 == V(2, 3).core_value * V(1, 1).core_value
    assert coords(cross_psi(V(2, 3), crisp_element(BASIS2, 1))) == [2, 3]


def test_inverse_examples():
    for c in (2.0, -0.5, 3.0, 7.25):
        inv = inv_psi(crisp_element(BASIS2, c))
        assert inv.coords[1] == 0
        assert abs(inv.coords[0] - 1 / c) <= 2 * abs(np.spacing(1 / c))
    I = inv_psi(V(1, 1))
    # (2/2 - 1/4, -1/4)
    assert coords(I) == [0.75, -0.25]
    assert I.core_value == 0.5
    assert coords(cross_psi(V(1, 1), I)) == [1, 0]


def test_inverse_of_zero_core():
    with pytest.raises(NoInverseError):
        inv_psi(V(-1, 1))
    with pytest.raises(NoInverseError):
        div_psi(V(2, 3), V(0, 0))


def test_division_examples():
    B = V(2, 3)
    np.testing.assert_allclose(div_psi(B, B).coords, [1, 0], atol=1e-12)
    assert coords(div_psi(crisp_element(BASIS2, 6), crisp_element(BASIS2, 2))) == [3, 0]
    assert coords(div_psi(B, crisp_element(BASIS2, 1))) == [2, 3]
    assert div_psi(B, V(1, 1)).core_value == pytest.approx(5 / 2)


def test_basis_mismatch():
    with pytest.raises(BasisMismatchError):
        add_psi(V(1, 2), SVector(BASIS4, [1, 2, 3, 4]))
    other = build_power_basis(Trapezoid(0, 1, 1, 4), 2)
    with pytest.raises(BasisMismatchError):
        cross_psi(V(1, 2), SVector(other, [1, 2]))
    # an equal-content basis built separately is accepted
    twin = build_power_basis(Trapezoid(0, 1, 1, 3), 2)
    assert coords(add_psi(V(1, 2), SVector(twin, [1, 1]))) == [2, 3]


# -- ring axioms -------------------------------------------------------------

vec4 = st.lists(st.floats(-10, 10), min_size=4, max_size=4).map(lambda q: SVector(BASIS4, q))
TOL = 1e-9


@given(vec4, vec4, vec4)
def test_additive_group(A, B, C):
    zero = crisp_element(BASIS4, 0)
    assert max_norm(add_psi(add_psi(A, B), C), add_psi(A, add_psi(B, C))) <= TOL
    assert max_norm(add_psi(A, B), add_psi(B, A)) == 0
    assert max_norm(add_psi(A, zero), A) == 0
    assert max_norm(add_psi(A, scalar_psi(-1, A)), zero) == 0


@given(vec4, vec4, vec4)
def test_multiplicative_monoid_and_distributivity(A, B, C):
    one = crisp_element(BASIS4, 1)
    assert max_norm(cross_psi(cross_psi(A, B), C), cross_psi(A, cross_psi(B, C))) <= TOL
    assert max_norm(cross_psi(A, B), cross_psi(B, A)) <= TOL
    assert max_norm(cross_psi(A, one), A) <= TOL
    assert max_norm(cross_psi(A, add_psi(B, C)), add_psi(cross_psi(A, B), cross_psi(A, C))) <= TOL


@given(vec4, vec4)
def test_core_is_a_homomorphism(B, C):
    b, c = B.core_value, C.core_value
    assert add_psi(B, C).core_value == pytest.approx(b + c, abs=1e-12)
    assert cross_psi(B, C).core_value == pytest.approx(b * c, abs=1e-12 * (1 + abs(b * c)))


@given(vec4)
def test_inverse_law(C):
    assume(abs(C.core_value) >= 0.1)
    assert max_norm(cross_psi(C, inv_psi(C)), crisp_element(BASIS4, 1)) <= TOL


@given(st.floats(-50, 50), st.floats(-50, 50))
def test_crisp_elements_reproduce_real_arithmetic(x, y):
    X, Y = crisp_element(BASIS4, x), crisp_element(BASIS4, y)
    assert coords(add_psi(X, Y)) == [x + y, 0, 0, 0]
    assert coords(sub_psi(X, Y)) == [x - y, 0, 0, 0]
    prod = cross_psi(X, Y).coords
    assert prod[0] == pytest.approx(x * y, abs=1e-12 * (1 + abs(x * y)))
    assert not prod[1:].any()
    if abs(y) > 1e-3:
        q = div_psi(X, Y).coords
        assert q[0] == pytest.approx(x / y, rel=1e-12, abs=1e-12)


@given(vec4, vec4, vec4)
def test_scalar_realization_commutes(B, _C, _D):
    for lam in (-2.5, 0.0, 3.0):
        lhs = psi_realize(scalar_psi(lam, B))
        rhs = scalar_mul(lam, psi_realize(B))
        assert hausdorff(lhs, rhs) <= 1e-12 * (1 + np.max(np.abs(rhs.upper)) + np.max(np.abs(rhs.lower)))


@given(vec4, vec4)
def test_product_realization_matches_cross_product_when_signs_agree(B, C):
    b, c = B.core_value, C.core_value
    cq, bp = c * B.coords[1:], b * C.coords[1:]
    assume(np.all(cq * bp >= 0))
    lhs = psi_realize(cross_psi(B, C))
    rhs = cross_product(psi_realize(B), psi_realize(C))
    assert hausdorff(lhs, rhs) <= 1e-9
