import json

import numpy as np
import pytest

from sliring import LevelGrid, ParseError, SliError, Trapezoid, build_power_basis, crisp, make_trapezoid
from sliring import serialize as ser


def test_fmt_float_round_trips():
    for x in (0.1, 1 / 3, -2.5e-300, 1e17, 2.25, 6.0):
        assert float(ser.fmt_float(x)) == x
    assert ser.fmt_float(0.0) == "0"
    assert ser.fmt_float(-0.0) == "0"


def test_dumps_is_valid_json_and_stable():
    doc = {"b": [1.0, 0.1, np.float64(2.25)], "a": {"k": True, "v": None}, "s": "x"}
    text = ser.dumps(doc)
    assert json.loads(text) == {"b": [1.0, 0.1, 2.25], "a": {"k": True, "v": None}, "s": "x"}
    assert ser.dumps(doc) == text


def test_loads_rejects_garbage():
    with pytest.raises(ParseError):
        ser.loads("{not json")


def test_fuzzy_round_trip_and_shorthand():
    F = make_trapezoid((0, 1, 1, 3), LevelGrid.uniform(11))
    back = ser.fuzzy_from_dict(ser.loads(ser.dumps(ser.fuzzy_to_dict(F))))
    np.testing.assert_array_equal(back.lower, F.lower)
    np.testing.assert_array_equal(back.upper, F.upper)
    short = ser.fuzzy_from_dict({"trapezoid": [0, 1, 1, 3]}, levels=11)
    np.testing.assert_array_equal(short.lower, F.lower)


@pytest.mark.parametrize(
    "doc",
    [
        [1, 2],
        {"trapezoid": [0, 1]},
        {"trapezoid": [3, 2, 1, 0]},
        {"levels": [0, 1], "lower": [0, 1]},
        {"levels": [0, 1], "lower": [0, "x"], "upper": [2, 1]},
        {"levels": [0, 1], "lower": [0, 2], "upper": [1, 1]},
    ],
)
def test_fuzzy_from_dict_errors(doc):
    with pytest.raises(ParseError):
        ser.fuzzy_from_dict(doc)


def test_csv_rows_ascend_and_match_level_count():
    text = ser.to_csv(crisp(2.0, LevelGrid.uniform(7)))
    lines = text.strip().split("\n")
    assert lines[0] == "alpha,lower,upper"
    alphas = [float(r.split(",")[0]) for r in lines[1:]]
    assert len(alphas) == 7
    assert all(a < b for a, b in zip(alphas, alphas[1:]))


def test_basis_round_trip():
    basis = build_power_basis(Trapezoid(0, 1, 1, 3), 3, LevelGrid.uniform(21))
    doc = ser.basis_to_dict(basis)
    assert doc["n"] == 3 and doc["levels"] == 21 and doc["certificate"]["accepted"] is True
    assert ser.basis_from_dict(doc) == basis


def test_explicit_elements_basis():
    g = LevelGrid.uniform(11)
    doc = {"elements": [ser.fuzzy_to_dict(crisp(1, g)), {"trapezoid": [0, 1, 1, 3]}]}
    basis = ser.basis_from_dict(doc, levels=11)
    assert basis.size == 2
    assert ser.basis_from_dict(ser.basis_to_dict(basis)) == basis


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"generator": [0, 1, 1, 3], "n": 2, "elements": []},
        {"generator": [0, 1, 2, 3], "n": 2},
        {"generator": [0, 1, 1, 3], "n": 1},
        {"generator": [0, 1, 1, 3], "n": "two"},
        {"generator": [0, 1, 1, 3], "n": 2.5},
    ],
)
def test_basis_schema_errors(doc):
    with pytest.raises(ParseError):
        ser.basis_from_dict(doc)


def test_uncertifiable_basis_is_not_a_parse_error():
    with pytest.raises(SliError):
        ser.basis_from_dict({"generator": [-1, 0, 0, 1], "n": 2})


def test_problem_requires_all_coefficients():
    doc = {"basis": {"generator": [0, 1, 1, 3], "n": 2}, "equation": {"A": {"coords": [1, 1]}, "B": {"coords": [0, 0]}}}
    with pytest.raises(ParseError):
        ser.problem_from_dict(doc)
