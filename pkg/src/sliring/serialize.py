"""JSON and CSV formats for fuzzy numbers, bases, coordinate vectors and solutions.

Floats are written with 17 significant digits so every double survives a
round trip and equal inputs give byte-identical files.
"""
from __future__ import annotations

import io
import json
import math
from typing import Any, Optional

import numpy as np

from .errors import ConstructionError, DomainError, ParseError
from .fuzzy import DEFAULT_LEVELS, FuzzyNumber, LevelGrid, Trapezoid, make_trapezoid
from .sli import DEFAULT_THRESHOLD, SliBasis, SVector, build_power_basis, psi_realize
from .solver import LinearEquation, Solution, SolutionKind


def fmt_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    if x == 0.0:
        return "0"  # also folds -0.0
    return format(x, ".17g")


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """``json.dumps`` with fixed 17-digit floats and stable key order."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, (bool, type(None), str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


# -- field helpers -----------------------------------------------------------

def _require(doc: Any, key: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    return doc[key]


def _floats(value: Any, where: str) -> list[float]:
    if not isinstance(value, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        raise ParseError(f"{where}: expected a list of numbers")
    return [float(v) for v in value]


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number")
    return float(value)


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer")
    return value


# -- fuzzy numbers -----------------------------------------------------------

def fuzzy_to_dict(F: FuzzyNumber) -> dict:
    return {"levels": F.grid.levels.tolist(), "lower": F.lower.tolist(), "upper": F.upper.tolist()}


def fuzzy_from_dict(doc: Any, levels: int = DEFAULT_LEVELS) -> FuzzyNumber:
    """Explicit ``{"levels", "lower", "upper"}`` or shorthand ``{"trapezoid": [a, b, c, d]}``.

    ``levels`` is the grid size used for the shorthand form.
    """
    if not isinstance(doc, dict):
        raise ParseError("fuzzy number: expected an object")
    try:
        if "trapezoid" in doc:
            t = _floats(doc["trapezoid"], "trapezoid")
            if len(t) != 4:
                raise ParseError("trapezoid: expected 4 numbers")
            return make_trapezoid(Trapezoid(*t), LevelGrid.uniform(levels))
        grid = LevelGrid(_floats(_require(doc, "levels", "fuzzy number"), "levels"))
        return FuzzyNumber(
            grid,
            _floats(_require(doc, "lower", "fuzzy number"), "lower"),
            _floats(_require(doc, "upper", "fuzzy number"), "upper"),
        )
    except ConstructionError as exc:
        raise ParseError(f"invalid fuzzy number: {exc}") from exc


def cut_rows(F: FuzzyNumber) -> list[dict]:
    return [
        {"alpha": float(a), "lower": float(lo), "upper": float(hi)}
        for a, lo, hi in zip(F.grid.levels, F.lower, F.upper)
    ]


def to_csv(F: FuzzyNumber) -> str:
    buf = io.StringIO()
    buf.write("alpha,lower,upper\n")
    for a, lo, hi in zip(F.grid.levels, F.lower, F.upper):
        buf.write(f"{fmt_float(a)},{fmt_float(lo)},{fmt_float(hi)}\n")
    return buf.getvalue()


# -- bases and vectors -------------------------------------------------------

def basis_to_dict(basis: SliBasis, with_certificate: bool = True) -> dict:
    cert = basis.certificate
    if basis.generator is not None:
        doc: dict = {
            "generator": list(basis.generator.as_tuple()),
            "n": basis.size,
            "levels": len(basis.grid),
            "threshold": cert.relative_threshold,
        }
    else:
        doc = {
            "elements": [fuzzy_to_dict(e) for e in basis.elements],
            "threshold": cert.relative_threshold,
        }
    if with_certificate:
        doc["certificate"] = {
            "sigma_min": cert.sigma_min,
            "threshold": cert.threshold,
            "accepted": cert.accepted,
        }
    return doc


def basis_from_dict(
    doc: Any, levels: Optional[int] = None, threshold: Optional[float] = None
) -> SliBasis:
    """Build and certify a basis. Explicit ``levels``/``threshold`` override the document."""
    if not isinstance(doc, dict):
        raise ParseError("basis: expected an object")
    has_gen = "generator" in doc
    has_elems = "elements" in doc
    if has_gen == has_elems:
        raise ParseError("basis: give exactly one of 'generator' or 'elements'")
    if threshold is None:
        threshold = _number(doc.get("threshold", DEFAULT_THRESHOLD), "basis.threshold")
    try:
        if has_gen:
            gen = _floats(doc["generator"], "basis.generator")
            if len(gen) != 4:
                raise ParseError("basis.generator: expected 4 numbers")
            n = _int(_require(doc, "n", "basis"), "basis.n")
            if levels is None:
                levels = _int(doc.get("levels", DEFAULT_LEVELS), "basis.levels")
            return build_power_basis(Trapezoid(*gen), n, LevelGrid.uniform(levels), threshold)
        elems = doc["elements"]
        if not isinstance(elems, list) or not elems:
            raise ParseError("basis.elements: expected a non-empty list")
        fuzzy = [fuzzy_from_dict(e, levels or DEFAULT_LEVELS) for e in elems]
        return SliBasis.from_elements(fuzzy, threshold)
    except (ConstructionError, DomainError) as exc:
        raise ParseError(f"invalid basis: {exc}") from exc


def svector_to_dict(v: SVector) -> dict:
    return {"coords": v.coords, "core": v.core_value}


def svector_from_dict(doc: Any, basis: SliBasis, where: str = "vector") -> SVector:
    return SVector(basis, _floats(_require(doc, "coords", where), f"{where}.coords"))


# -- problems and solutions --------------------------------------------------

def problem_from_dict(
    doc: Any, levels: Optional[int] = None, threshold: Optional[float] = None
) -> LinearEquation:
    basis = basis_from_dict(_require(doc, "basis", "problem"), levels, threshold)
    eq = _require(doc, "equation", "problem")
    A, B, C = (svector_from_dict(_require(eq, k, "equation"), basis, k) for k in ("A", "B", "C"))
    return LinearEquation(A, B, C)


def solution_to_dict(sol: Solution, with_levels: bool = True) -> dict:
    rep = sol.representative
    doc: dict = {
        "kind": sol.kind.value,
        "coords": None if rep is None else rep.coords,
        "core": None if rep is None else (rep.core_value if sol.kind is SolutionKind.UNIQUE else sol.family_core),
        "residual": sol.residual,
    }
    if sol.kind is SolutionKind.FAMILY:
        doc["free_directions"] = sol.free_directions()
    doc["levels"] = cut_rows(psi_realize(rep)) if (with_levels and rep is not None) else []
    return doc


def solution_coords_from_dict(doc: Any) -> tuple[str, Optional[list[float]]]:
    kind = _require(doc, "kind", "solution")
    if kind not in {k.value for k in SolutionKind}:
        raise ParseError(f"solution: unknown kind {kind!r}")
    coords = _require(doc, "coords", "solution")
    return kind, (None if coords is None else _floats(coords, "solution.coords"))
