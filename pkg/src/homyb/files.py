"""JSON serialization: structure files, operator files, report files.

All scalar data travels as expression strings in the scalar mini-language, so
files stay exact.  Shape problems raise StructureError with the offending key
in the message; expression problems carry the key path and the parser's
position.  Output is deterministic: fixed key order, no timestamps (elapsed_ms
is the one explicitly-labeled timing field, meant to be excluded from golden
comparisons).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .constructions import SolutionOperator
from .errors import ParseError, StructureError
from .scalar import ParamSet, Scalar, format_scalar, parse_scalar
from .structures import HomAlgebra, HomCoalgebra, HomLieAlgebra, HomStructure
from .tensor import Matrix
from .verify import VerificationReport

FORMAT_VERSION = 1
STRUCTURE_KINDS = ("hom-algebra", "hom-coalgebra", "hom-lie")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise StructureError(message)


def _get_list(doc: dict, key: str, length: int | None = None) -> list:
    _require(key in doc, f"{key}: missing")
    value = doc[key]
    _require(isinstance(value, list), f"{key}: expected an array")
    if length is not None:
        _require(len(value) == length, f"{key}: expected {length} entries, got {len(value)}")
    return value


def _parse_at(expr: Any, params: ParamSet, where: str) -> Scalar:
    _require(isinstance(expr, str), f"{where}: expected an expression string")
    try:
        return parse_scalar(expr, params)
    except ParseError as exc:
        raise StructureError(f"{where}: {exc}") from None


def _string_vector(doc: dict, key: str, dim: int, params: ParamSet) -> list[Scalar]:
    raw = _get_list(doc, key, dim)
    return [_parse_at(expr, params, f"{key}[{i}]") for i, expr in enumerate(raw)]


def _string_matrix(doc: dict, key: str, rows: int, cols: int, params: ParamSet) -> Matrix:
    raw = _get_list(doc, key, rows)
    data: list[list[Scalar]] = []
    for i, row in enumerate(raw):
        _require(isinstance(row, list) and len(row) == cols, f"{key}: expected {rows}×{cols}")
        data.append([_parse_at(expr, params, f"{key}[{i}][{j}]") for j, expr in enumerate(row)])
    return Matrix.from_rows(params, data)


def _coord_table(doc: dict, key: str, dim: int, params: ParamSet) -> list[list[list[Scalar]]]:
    raw = _get_list(doc, key, dim)
    table = []
    for i, row in enumerate(raw):
        _require(isinstance(row, list) and len(row) == dim, f"{key}: expected {dim}×{dim}")
        cells = []
        for j, cell in enumerate(row):
            _require(
                isinstance(cell, list) and len(cell) == dim,
                f"{key}[{i}][{j}]: expected a length-{dim} coordinate vector",
            )
            cells.append(
                [_parse_at(expr, params, f"{key}[{i}][{j}][{k}]") for k, expr in enumerate(cell)]
            )
        table.append(cells)
    return table


def structure_from_dict(doc: dict) -> HomStructure:
    _require(isinstance(doc, dict), "structure file: expected a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    _require(version == FORMAT_VERSION, f"format_version: unsupported value {version!r}")
    kind = doc.get("kind")
    _require(kind in STRUCTURE_KINDS, f"kind: expected one of {STRUCTURE_KINDS}, got {kind!r}")
    name = doc.get("name", "")
    _require(isinstance(name, str), "name: expected a string")
    dim = doc.get("dim")
    _require(isinstance(dim, int) and dim > 0, "dim: expected a positive integer")

    basis_raw = _get_list(doc, "basis", dim)
    _require(all(isinstance(b, str) for b in basis_raw), "basis: expected strings")
    _require(len(set(basis_raw)) == dim, "basis: names must be distinct")

    params_raw = _get_list(doc, "parameters")
    _require(all(isinstance(p, str) for p in params_raw), "parameters: expected strings")
    try:
        params = ParamSet(params_raw)
    except ValueError as exc:
        raise StructureError(f"parameters: {exc}") from None

    alpha = _string_matrix(doc, "alpha", dim, dim, params)

    if kind == "hom-algebra":
        unit = _string_vector(doc, "unit", dim, params)
        mult = _coord_table(doc, "mult", dim, params)
        return HomAlgebra(
            name=name,
            basis=tuple(basis_raw),
            params=params,
            alpha=alpha,
            unit=tuple(unit),
            mult=tuple(tuple(tuple(cell) for cell in row) for row in mult),
        )
    if kind == "hom-coalgebra":
        counit = _string_vector(doc, "counit", dim, params)
        raw = _get_list(doc, "comult", dim)
        comult = []
        for i, triples in enumerate(raw):
            _require(isinstance(triples, list), f"comult[{i}]: expected an array of triples")
            out = []
            for t, triple in enumerate(triples):
                _require(
                    isinstance(triple, list) and len(triple) == 3,
                    f"comult[{i}][{t}]: expected [j, k, expr]",
                )
                j, k, expr = triple
                _require(
                    isinstance(j, int) and isinstance(k, int) and 0 <= j < dim and 0 <= k < dim,
                    f"comult[{i}][{t}]: indices out of range",
                )
                out.append((j, k, _parse_at(expr, params, f"comult[{i}][{t}]")))
            comult.append(tuple(out))
        return HomCoalgebra(
            name=name,
            basis=tuple(basis_raw),
            params=params,
            alpha=alpha,
            counit=tuple(counit),
            comult=tuple(comult),
        )
    bracket = _coord_table(doc, "bracket", dim, params)
    return HomLieAlgebra(
        name=name,
        basis=tuple(basis_raw),
        params=params,
        alpha=alpha,
        bracket_table=tuple(tuple(tuple(cell) for cell in row) for row in bracket),
    )


def load_structure(path: str | Path) -> HomStructure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StructureError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: invalid JSON: {exc}") from None
    return structure_from_dict(doc)


def structure_to_dict(structure: HomStructure) -> dict:
    base = {
        "format_version": FORMAT_VERSION,
        "kind": {
            HomAlgebra: "hom-algebra",
            HomCoalgebra: "hom-coalgebra",
            HomLieAlgebra: "hom-lie",
        }[type(structure)],
        "name": structure.name,
        "dim": structure.dim,
        "basis": list(structure.basis),
        "parameters": list(structure.params.names),
        "alpha": _matrix_strings(structure.alpha),
    }
    if isinstance(structure, HomAlgebra):
        base["unit"] = [format_scalar(s) for s in structure.unit]
        base["mult"] = [
            [[format_scalar(s) for s in cell] for cell in row] for row in structure.mult
        ]
    elif isinstance(structure, HomCoalgebra):
        base["counit"] = [format_scalar(s) for s in structure.counit]
        base["comult"] = [
            [[j, k, format_scalar(c)] for j, k, c in triples] for triples in structure.comult
        ]
    else:
        base["bracket"] = [
            [[format_scalar(s) for s in cell] for cell in row]
            for row in structure.bracket_table
        ]
    return base


def _matrix_strings(matrix: Matrix) -> list[list[str]]:
    return [
        [format_scalar(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)
    ]


def operator_to_dict(op: SolutionOperator) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "operator",
        "construction": op.construction.value,
        "structure": op.source.name,
        "dim": op.dim,
        "parameters": list(op.matrix.params.names),
        "lambda": format_scalar(op.lam),
        "nu": format_scalar(op.nu),
        "matrix": _matrix_strings(op.matrix),
    }


def system_to_dict(triple: Sequence[SolutionOperator]) -> dict:
    w, z, x = triple
    return {
        "format_version": FORMAT_VERSION,
        "kind": "operator-system",
        "construction": w.construction.value.rsplit("-", 1)[0],
        "structure": w.source.name,
        "dim": w.dim,
        "parameters": list(w.matrix.params.names),
        "lambda": format_scalar(w.lam),
        "nu": format_scalar(w.nu),
        "W": _matrix_strings(w.matrix),
        "Z": _matrix_strings(z.matrix),
        "X": _matrix_strings(x.matrix),
    }


def load_operator(path: str | Path) -> tuple[Matrix, dict]:
    """Read an operator file back as (matrix, metadata)."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise StructureError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: invalid JSON: {exc}") from None
    _require(isinstance(doc, dict), "operator file: expected a JSON object")
    _require(doc.get("kind") == "operator", "kind: expected 'operator'")
    params_raw = _get_list(doc, "parameters")
    try:
        params = ParamSet(params_raw)
    except ValueError as exc:
        raise StructureError(f"parameters: {exc}") from None
    dim = doc.get("dim")
    _require(isinstance(dim, int) and dim > 0, "dim: expected a positive integer")
    size = dim * dim
    matrix = _string_matrix(doc, "matrix", size, size, params)
    return matrix, doc


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "check": report.check_name,
        "holds": report.holds,
        "witnesses": [
            {
                "row": w.row,
                "col": w.col,
                "residual": format_scalar(w.residual),
                "label": w.label,
            }
            for w in report.witnesses
        ],
        "metadata": dict(report.metadata),
        "subreports": [report_to_dict(sub) for sub in report.subreports],
        "elapsed_ms": round(report.elapsed_ms, 3),
    }


def dump_json(obj: dict | list, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
