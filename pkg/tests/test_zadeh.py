import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sliring import (
    BoxFunction,
    DomainError,
    Interval,
    LevelGrid,
    cross_product,
    extend_fuzzy,
    extend_grid,
    extend_vertex,
    hausdorff,
    make_trapezoid,
    minkowski_add,
)
from sliring.zadeh import linearized_product_sum

G = LevelGrid.uniform(101)
ident = BoxFunction(1, lambda x: x)


def test_extend_vertex_examples():
    assert extend_vertex(ident, [Interval(2, 5)]) == Interval(2, 5)
    # P with a=2, x=1, b=0 on [0,3] x [0,3] x [0,0]; corners by hand:
    # 2x + y - 2 + z ranges over {-2, 1, 4, 7}
    P = BoxFunction(3, lambda x, y, z: 2 * x + 1 * y - 2 + z)
    assert extend_vertex(P, [Interval(0, 3), Interval(0, 3), Interval(0, 0)]) == Interval(-2, 7)
    const = BoxFunction(2, lambda x, y: 0 * x + 4.5)
    assert extend_vertex(const, [Interval(-1, 1), Interval(3, 9)]) == Interval(4.5, 4.5)


def test_arity_mismatch():
    with pytest.raises(DomainError):
        extend_vertex(ident, [Interval(0, 1), Interval(0, 1)])
    with pytest.raises(DomainError):
        extend_grid(ident, [], 3)
    with pytest.raises(DomainError):
        extend_grid(ident, [Interval(0, 1)], 1)


def test_extend_grid_examples():
    sq = BoxFunction(1, lambda x: x * x)
    got = extend_grid(sq, [Interval(-1, 2)], 301)
    assert got.lo == pytest.approx(0.0, abs=1e-2)
    assert got.hi == pytest.approx(4.0, abs=1e-2)
    assert extend_grid(ident, [Interval(2, 5)], 2) == Interval(2, 5)
    add = BoxFunction(2, lambda x, y: x + y)
    assert extend_grid(add, [Interval(0, 1), Interval(0, 1)], 7) == Interval(0, 2)


def test_non_vectorized_callable():
    import math

    f = BoxFunction(1, lambda x: math.sin(x), vectorized=False)
    got = extend_grid(f, [Interval(0, math.pi)], 201)
    assert got.lo == pytest.approx(0.0, abs=1e-12)
    assert got.hi == pytest.approx(1.0, abs=1e-12)


def test_extend_fuzzy_identity_and_sum():
    F = make_trapezoid((0, 1, 1, 3), G)
    H = make_trapezoid((-2, -1, 0, 4), G)
    assert hausdorff(extend_fuzzy(ident, [F]), F) == 0.0
    S = extend_fuzzy(BoxFunction(2, lambda x, y: x + y), [F, H])
    assert hausdorff(S, minkowski_add(F, H)) <= 1e-12


def test_extend_fuzzy_linearization_equals_cross_product_plus_b():
    X = make_trapezoid((-1, 2, 2, 3), G)
    A = make_trapezoid((0, 1, 1, 3), G)
    B = make_trapezoid((4, 5, 5, 9), G)
    oracle = extend_fuzzy(linearized_product_sum(2.0, 1.0), [X, A, B])
    assert hausdorff(oracle, minkowski_add(cross_product(A, X), B)) <= 1e-12


def test_grid_mode_is_inner_approximation_and_nested():
    sq = BoxFunction(1, lambda x: x * x)
    F = make_trapezoid((-1, 0.3, 0.3, 2), G)
    inner = extend_fuzzy(sq, [F], mode="grid", density=7)
    # analytic image of x^2 on [l, u] containing 0 is [0, max(l^2, u^2)]
    lo_true = np.where((F.lower <= 0) & (F.upper >= 0), 0.0, np.minimum(F.lower**2, F.upper**2))
    hi_true = np.maximum(F.lower**2, F.upper**2)
    assert np.all(inner.lower >= lo_true - 1e-12)
    assert np.all(inner.upper <= hi_true + 1e-12)
    assert np.all(np.diff(inner.lower) >= 0) and np.all(np.diff(inner.upper) <= 0)


def test_unknown_mode():
    with pytest.raises(DomainError):
        extend_fuzzy(ident, [make_trapezoid((0, 1, 1, 2), G)], mode="exact")


bounds = st.tuples(st.floats(-10, 10), st.floats(0, 5), st.floats(0, 5))


def _nested_boxes(dims):
    outer, inner = [], []
    for c, w, shrink in dims:
        outer.append(Interval(c - w, c + w))
        s = min(shrink, w)
        inner.append(Interval(c - w + s / 2, c + w - s / 2))
    return outer, inner


@given(st.lists(bounds, min_size=3, max_size=3), st.floats(-3, 3), st.floats(-3, 3))
def test_inclusion_monotone(dims, a, b):
    outer, inner = _nested_boxes(dims)
    f = BoxFunction(3, lambda x, y, z: a * x * y + b * z - x)
    assert extend_vertex(f, outer).contains(extend_vertex(f, inner), tol=1e-9)


@given(st.lists(bounds, min_size=2, max_size=2), st.floats(-3, 3), st.integers(2, 9))
def test_grid_agrees_with_vertex_for_multiaffine(dims, a, density):
    boxes, _ = _nested_boxes(dims)
    f = BoxFunction(2, lambda x, y: a * x * y + x - 2 * y)
    v = extend_vertex(f, boxes)
    g = extend_grid(f, boxes, density)
    # every sample includes the corners, and a multiaffine image is attained at corners
    assert g.lo == pytest.approx(v.lo, abs=1e-9)
    assert g.hi == pytest.approx(v.hi, abs=1e-9)
