"""Instance files: the JSON document format and TSP distance matrices.

JSON layout::

    {
      "variables": ["x1", ...],
      "values": ["a", ...],
      "bounds": {"a": [l, u], ...},
      "domains": {"x1": [{"value": "a", "cost": 3}, ...], ...},
      "H": 11
    }

Distance matrices become assignment instances: every city is a variable
whose domain holds the other cities, priced by distance, and every city is
a value with bounds [1, 1].
"""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .instance import CostGccInstance, validate


def instance_to_dict(instance: CostGccInstance) -> dict:
    return {
        "variables": list(instance.variables),
        "values": list(instance.values),
        "bounds": {
            v: [instance.lower[i], instance.upper[i]] for i, v in enumerate(instance.values)
        },
        "domains": {
            var: [
                {"value": instance.values[a], "cost": instance.cost[(x, a)]}
                for a in instance.domains[x]
            ]
            for x, var in enumerate(instance.variables)
        },
        "H": instance.H,
    }


def dumps_instance(instance: CostGccInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def save_instance(instance: CostGccInstance, path) -> None:
    Path(path).write_text(dumps_instance(instance))


def _int(obj, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(None, f"{what} must be an integer, got {obj!r}")
    return obj


def instance_from_dict(doc) -> CostGccInstance:
    if not isinstance(doc, dict):
        raise ParseError(None, "top level must be an object")
    for key in ("variables", "values", "bounds", "domains", "H"):
        if key not in doc:
            raise ParseError(None, f"missing field {key!r}")
    variables = doc["variables"]
    values = doc["values"]
    if not isinstance(variables, list) or not isinstance(values, list):
        raise ParseError(None, "'variables' and 'values' must be lists of names")
    if len(set(variables)) != len(variables) or len(set(values)) != len(values):
        raise ParseError(None, "duplicate variable or value name")
    bounds = {}
    for v in values:
        pair = doc["bounds"].get(v)
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(None, f"bounds of value {v!r} must be [l, u]")
        bounds[v] = (_int(pair[0], f"lower bound of {v!r}"), _int(pair[1], f"upper bound of {v!r}"))
    table: dict[str, dict[str, int]] = {}
    for var in variables:
        entries = doc["domains"].get(var, [])
        row: dict[str, int] = {}
        for entry in entries:
            if not isinstance(entry, dict) or "value" not in entry or "cost" not in entry:
                raise ParseError(None, f"domain entry of {var!r} needs 'value' and 'cost'")
            if entry["value"] in row:
                raise ParseError(None, f"value {entry['value']!r} listed twice for {var!r}")
            row[entry["value"]] = _int(entry["cost"], f"cost of ({var!r}, {entry['value']!r})")
        table[var] = row
    unknown = set(doc["domains"]) - set(variables)
    if unknown:
        raise ParseError(None, f"domains given for unknown variables {sorted(unknown)}")
    instance = CostGccInstance.from_table(
        table, bounds, _int(doc["H"], "H"), variables=variables, values=values
    )
    validate(instance)
    return instance


def loads_instance(text: str) -> CostGccInstance:
    if not text.strip():
        raise ParseError(1, "empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    return instance_from_dict(doc)


def load_instance(path) -> CostGccInstance:
    path = Path(path)
    if path.suffix in (".tsp", ".matrix", ".txt"):
        raise ParseError(None, f"{path.name}: distance matrices need an explicit H (use load_tsp)")
    return loads_instance(path.read_text())


def workers_example() -> CostGccInstance:
    """The 7-worker, 5-task example bundled with the package (H = 11)."""
    return loads_instance(resources.files("costgcc.data").joinpath("workers.json").read_text())


# --- distance matrices -----------------------------------------------------


def matrix_instance(matrix, H: int, names=None) -> CostGccInstance:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ParseError(None, "distance matrix must be square")
    for i in range(size):
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise ParseError(None, f"matrix is not symmetric at ({i}, {j})")
    names = list(names) if names is not None else [str(i + 1) for i in range(size)]
    table = {names[i]: {names[j]: int(matrix[i][j]) for j in range(size) if j != i} for i in range(size)}
    bounds = {name: (1, 1) for name in names}
    instance = CostGccInstance.from_table(table, bounds, H, variables=names, values=names)
    validate(instance)
    return instance


def _nint(x: float) -> int:
    return int(math.floor(x + 0.5))


def parse_tsp(text: str) -> list[list[int]]:
    """Distance matrix from a TSPLIB file (EUC_2D or EXPLICIT FULL_MATRIX) or a bare matrix."""
    lines = text.splitlines()
    header: dict[str, str] = {}
    body_start = None
    for i, line in enumerate(lines):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped in ("NODE_COORD_SECTION", "EDGE_WEIGHT_SECTION"):
            header["SECTION"] = stripped
            body_start = i + 1
            break
        if ":" in stripped:
            key, _, val = stripped.partition(":")
            header[key.strip().upper()] = val.strip()
            continue
        if not header:
            return _bare_matrix(lines)
        raise ParseError(i + 1, f"unexpected line {stripped!r}")
    if body_start is None:
        raise ParseError(None, "no NODE_COORD_SECTION or EDGE_WEIGHT_SECTION")
    try:
        dim = int(header["DIMENSION"])
    except (KeyError, ValueError):
        raise ParseError(None, "missing or invalid DIMENSION") from None
    kind = header.get("EDGE_WEIGHT_TYPE", "")
    tokens = []
    for j, line in enumerate(lines[body_start:], start=body_start + 1):
        stripped = line.strip()
        if stripped == "EOF" or stripped.endswith("_SECTION"):
            break
        if stripped:
            tokens.append((j, stripped.split()))
    if header["SECTION"] == "NODE_COORD_SECTION":
        if kind != "EUC_2D":
            raise ParseError(None, f"unsupported EDGE_WEIGHT_TYPE {kind!r}")
        coords = []
        for j, parts in tokens[:dim]:
            if len(parts) != 3:
                raise ParseError(j, "coordinate line needs 'id x y'")
            try:
                coords.append((float(parts[1]), float(parts[2])))
            except ValueError:
                raise ParseError(j, "non-numeric coordinate") from None
        if len(coords) != dim:
            raise ParseError(None, f"expected {dim} coordinates, got {len(coords)}")
        return [
            [_nint(math.hypot(px - qx, py - qy)) for qx, qy in coords] for px, py in coords
        ]
    if kind != "EXPLICIT" or header.get("EDGE_WEIGHT_FORMAT") != "FULL_MATRIX":
        raise ParseError(None, "only EXPLICIT FULL_MATRIX weights are supported")
    flat = []
    for j, parts in tokens:
        try:
            flat.extend(int(p) for p in parts)
        except ValueError:
            raise ParseError(j, "non-integer weight") from None
    if len(flat) < dim * dim:
        raise ParseError(None, f"expected {dim * dim} weights, got {len(flat)}")
    return [flat[r * dim : (r + 1) * dim] for r in range(dim)]


def _bare_matrix(lines) -> list[list[int]]:
    rows = []
    for i, line in enumerate(lines, start=1):
        if line.strip():
            try:
                rows.append([int(t) for t in line.split()])
            except ValueError:
                raise ParseError(i, "non-integer matrix entry") from None
    return rows


def load_tsp(path, H: int) -> CostGccInstance:
    return matrix_instance(parse_tsp(Path(path).read_text()), H)
