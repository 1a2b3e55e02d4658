"""Canonical JSON document format and named complex generators.

A document is a JSON object

    {
      "format_version": "1",
      "top_dim": <int>,
      "cells": {"<dim>": [label, ...], ...},
      "faces": [{"dim": n, "i": i, "alpha": a, "cell": c, "value": v}, ...]
    }

with labels sorted within each dimension and face records sorted by
(dim, cell, i, alpha).  Serialization always emits this sorted form with
sorted keys, two-space indentation and a trailing newline, so
serialize(parse(serialize(K))) is byte-identical to serialize(K).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import PrecubicalSet, standard_cube, boundary_cube, tensor, validate

FORMAT_VERSION = "1"


class FormatError(ValueError):
    """A document that cannot be accepted; carries validation violations if any."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


@dataclass(frozen=True)
class Document:
    """The document tree in canonical order, convertible in both directions."""

    format_version: str
    top_dim: int
    cells: dict
    faces: tuple

    @classmethod
    def from_precubical(cls, K: PrecubicalSet) -> "Document":
        cells = {d: K.cells(d) for d in range(K.top_dim + 1) if K.cells(d)}
        faces = tuple(
            sorted(
                (dim, label, i, alpha, value)
                for (dim, i, alpha, label), value in K.face_map.items()
            )
        )
        return cls(FORMAT_VERSION, K.top_dim, cells, faces)

    def to_precubical(self) -> PrecubicalSet:
        faces = {
            (dim, i, alpha, cell): value
            for dim, cell, i, alpha, value in self.faces
        }
        try:
            return PrecubicalSet(self.cells, faces)
        except ValueError as exc:
            raise FormatError(f"malformed document: {exc}") from exc

    def to_json(self) -> str:
        tree = {
            "format_version": self.format_version,
            "top_dim": self.top_dim,
            "cells": {str(d): list(labels) for d, labels in sorted(self.cells.items())},
            "faces": [
                {"dim": dim, "i": i, "alpha": alpha, "cell": cell, "value": value}
                for dim, cell, i, alpha, value in self.faces
            ],
        }
        return json.dumps(tree, indent=2, sort_keys=True) + "\n"


def serialize(K: PrecubicalSet) -> str:
    """Canonical document text for K (UTF-8 friendly, newline-terminated)."""
    return Document.from_precubical(K).to_json()


def _require(condition: bool, message: str):
    if not condition:
        raise FormatError(message)


def parse(data, check: bool = True) -> PrecubicalSet:
    """Read a document back into a precubical set.

    With check=True (the default) the result must validate; violations are
    rejected with a FormatError listing them.  check=False returns the raw
    structure so callers can report violations themselves.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        tree = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error at position {exc.pos}: {exc.msg}") from exc

    _require(isinstance(tree, dict), "document must be a JSON object")
    version = tree.get("format_version")
    _require(
        version == FORMAT_VERSION,
        f"unknown format version: {version!r} (expected {FORMAT_VERSION!r})",
    )
    for key in ("top_dim", "cells", "faces"):
        _require(key in tree, f"document is missing the {key!r} key")
    _require(isinstance(tree["cells"], dict), "'cells' must be an object")
    _require(isinstance(tree["faces"], list), "'faces' must be an array")

    cells = {}
    for dim_key, labels in tree["cells"].items():
        try:
            dim = int(dim_key)
        except ValueError:
            raise FormatError(f"cell dimension key is not an integer: {dim_key!r}")
        _require(isinstance(labels, list), f"cells[{dim_key!r}] must be an array")
        for label in labels:
            _require(isinstance(label, str), f"cell label is not a string: {label!r}")
        cells[dim] = labels

    face_keys = {"dim", "i", "alpha", "cell", "value"}
    faces = {}
    for record in tree["faces"]:
        _require(isinstance(record, dict), f"face record must be an object: {record!r}")
        _require(
            set(record) == face_keys,
            f"face record must have exactly the keys dim, i, alpha, cell, value: {record!r}",
        )
        for field in ("dim", "i", "alpha"):
            _require(
                isinstance(record[field], int) and not isinstance(record[field], bool),
                f"face field {field!r} must be an integer: {record!r}",
            )
        for field in ("cell", "value"):
            _require(
                isinstance(record[field], str),
                f"face field {field!r} must be a string: {record!r}",
            )
        faces[(record["dim"], record["i"], record["alpha"], record["cell"])] = record["value"]
    _require(
        len(faces) == len(tree["faces"]),
        "duplicate face records for the same (dim, i, alpha, cell)",
    )

    try:
        K = PrecubicalSet(cells, faces)
    except ValueError as exc:
        raise FormatError(f"malformed document: {exc}") from exc
    _require(
        tree["top_dim"] == K.top_dim,
        f"declared top_dim {tree['top_dim']} does not match cells (top dimension {K.top_dim})",
    )
    if check:
        violations = validate(K)
        if violations:
            summary = "; ".join(str(v) for v in violations[:5])
            more = "" if len(violations) <= 5 else f" (and {len(violations) - 5} more)"
            raise FormatError(
                f"document violates the precubical axioms: {summary}{more}",
                violations=violations,
            )
    return K


def circle() -> PrecubicalSet:
    """The directed circle: one vertex, one loop edge."""
    return PrecubicalSet(
        {0: ["v"], 1: ["loop"]},
        {(1, 1, 0, "loop"): "v", (1, 1, 1, "loop"): "v"},
    )


def torus(d: int) -> PrecubicalSet:
    """The d-fold tensor power of the directed circle (a point for d = 0)."""
    if d < 0:
        raise ValueError("torus dimension must be non-negative")
    if d == 0:
        return standard_cube(0)
    K = circle()
    for _ in range(d - 1):
        K = tensor(K, circle())
    return K


def cylinder() -> PrecubicalSet:
    """The directed circle crossed with one edge."""
    return tensor(circle(), standard_cube(1))


def interval(k: int) -> PrecubicalSet:
    """The directed path with k edges and k + 1 vertices."""
    if k < 0:
        raise ValueError("interval length must be non-negative")
    cells = {0: [str(i) for i in range(k + 1)]}
    faces = {}
    if k > 0:
        cells[1] = [f"{i}-{i + 1}" for i in range(k)]
        for i in range(k):
            faces[(1, 1, 0, f"{i}-{i + 1}")] = str(i)
            faces[(1, 1, 1, f"{i}-{i + 1}")] = str(i + 1)
    return PrecubicalSet(cells, faces)


_FAMILIES = {
    "cube": (standard_cube, True),
    "boundary": (boundary_cube, True),
    "circle": (circle, False),
    "torus": (torus, True),
    "cylinder": (cylinder, False),
    "interval": (interval, True),
}


def generate(family: str, param: int | None = None) -> PrecubicalSet:
    """Build a named complex: cube n, boundary n, circle, torus d, cylinder,
    interval k."""
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r} (known: {known})")
    builder, needs_param = _FAMILIES[family]
    if needs_param:
        if param is None:
            raise ValueError(f"family {family!r} needs an integer parameter")
        return builder(param)
    if param is not None:
        raise ValueError(f"family {family!r} takes no parameter")
    return builder()
