"""JSON formats for matrices, modules, towers and decomposition results.

Matrix:   {"rows": r, "cols": c, "data": [[...], ...]}
Module:   {"field": "zp:5" | "rational" | "real", "dims": [...], "maps": [Matrix, ...]}
Result:   {"pairs": [{"birth": b, "death": d}, ...], "generators": [...]}
Towers:   {"steps": [[simplex, ...], ...]}                       (cumulative union)
          {"simplices": [{"v": [0, 1], "t": 0.5}, ...]}
          {"degrees": K, "steps": [{"boundaries": [d_0..d_K]}], "maps": [{"f": [f_0..f_K]}]}
"""

from __future__ import annotations

import json
import sys
from typing import Any

import numpy as np

from .errors import ParseError
from .field import Field, parse_field
from .pmodule import PersistenceModule
from .simplicial import ChainTower, FilteredComplex


def load(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _require(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing key {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"key {key!r} has the wrong type")
    return value


def matrix_to_json(m: np.ndarray, field: Field) -> dict:
    rows, cols = m.shape
    return {"rows": rows, "cols": cols, "data": [[field.to_json(x) for x in row] for row in m]}


def matrix_from_json(obj, field: Field) -> np.ndarray:
    rows = _require(obj, "rows", int)
    cols = _require(obj, "cols", int)
    data = _require(obj, "data", list)
    if rows < 0 or cols < 0:
        raise ParseError("matrix dimensions must be nonnegative")
    if len(data) != rows or any(not isinstance(r, list) or len(r) != cols for r in data):
        raise ParseError(f"matrix data does not match its declared shape {rows}x{cols}")
    out = np.empty((rows, cols), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            out[i, j] = field.from_json(x)
    return field.asarray(out) if out.size else field.zeros((rows, cols))


def vector_to_json(v: np.ndarray, field: Field) -> list:
    return [field.to_json(x) for x in v]


def module_to_json(module: PersistenceModule) -> dict:
    return {
        "field": str(module.field),
        "dims": list(module.dims),
        "maps": [matrix_to_json(m, module.field) for m in module.maps],
    }


def module_from_json(obj, field: Field | None = None) -> PersistenceModule:
    if field is None:
        field = parse_field(str(_require(obj, "field", str)))
    dims = _require(obj, "dims", list)
    if not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise ParseError("dims must be integers")
    maps = [matrix_from_json(m, field) for m in _require(obj, "maps", list)]
    return PersistenceModule(field, dims, maps)


def death_to_json(death: int, n: int, essential_as_infinite: bool):
    if essential_as_infinite and death == n + 1:
        return "inf"
    return int(death)


def pairs_to_json(pairs, n: int, essential_as_infinite: bool = False) -> list[dict]:
    return [{"birth": int(p.birth), "death": death_to_json(p.death, n, essential_as_infinite)} for p in pairs]


def decomposition_to_json(basis, pairs, essential_as_infinite: bool = False, chains=None) -> dict:
    """``chains``, when given, maps each generator to a chain vector (one per element)."""
    module = basis.module
    gens = []
    for idx, e in enumerate(basis.elements):
        entry = {
            "birth": e.birth,
            "death": death_to_json(e.death, module.n, essential_as_infinite),
            "vector": vector_to_json(e.vector, module.field),
        }
        if chains is not None:
            entry["chain"] = chains[idx]
        gens.append(entry)
    return {"pairs": pairs_to_json(pairs, module.n, essential_as_infinite), "generators": gens}


def tower_from_json(obj, field: Field, max_degree: int | None = None):
    """Returns ``(tower, filtration)``; ``filtration`` is ``None`` for explicit towers."""
    if not isinstance(obj, dict):
        raise ParseError("tower input must be a JSON object")
    try:
        if "degrees" in obj:
            degrees = _require(obj, "degrees", int)
            steps = _require(obj, "steps", list)
            boundaries = []
            for step in steps:
                mats = _require(step, "boundaries", list)
                if len(mats) != degrees + 1:
                    raise ParseError(f"each step needs {degrees + 1} boundary matrices")
                boundaries.append([matrix_from_json(m, field) for m in mats])
            maps = [[matrix_from_json(m, field) for m in _require(a, "f", list)] for a in obj.get("maps", [])]
            return ChainTower(field, boundaries, maps), None
        if "simplices" in obj:
            entries = []
            for item in _require(obj, "simplices", list):
                entries.append((_require(item, "v", list), float(_require(item, "t", (int, float)))))
            filt = FilteredComplex.from_simplexwise(entries)
        else:
            steps = _require(obj, "steps", list)
            filt = FilteredComplex.from_increments(steps)
    except (TypeError, KeyError) as exc:
        raise ParseError(f"invalid tower input: {exc}") from exc
    return filt.tower(field, max_degree), filt
