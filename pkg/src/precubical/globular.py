"""The small globular cell ledger of a precubical set.

The realized flow of K carries a globular decomposition with exactly one
cell per cube of dimension n + 1 >= 1: a globe of dimension n attached
between the cube's all-zeros and all-ones corner vertices.  Cells are
grouped by skeletal stage, stage n holding the cells of the n-cubes, so
the boundary data of a stage only involves earlier stages.

Attaching maps are deliberately absent from the ledger: they are not
canonical, while the cube, the globe dimension and the two endpoint
vertices are invariant under every admissible choice.  Only those four
fields are exported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CellId, PrecubicalSet
from .flow import corner


@dataclass(frozen=True)
class GlobularCell:
    """One attached globe: the cube it comes from, the globe dimension
    (cube dimension minus one) and the endpoint vertices."""

    cube: CellId
    globe_dim: int
    source: str
    target: str

    def as_dict(self) -> dict:
        return {
            "cube": self.cube.label,
            "dim": self.cube.dim,
            "globe_dim": self.globe_dim,
            "source": self.source,
            "target": self.target,
        }


@dataclass(frozen=True)
class GlobularDecomposition:
    """Vertex set plus globular cells grouped by skeletal stage.

    stages maps the cube dimension n >= 1 to the cells of the n-cubes;
    there is exactly one cell per positive-dimensional cube of K.
    """

    vertices: tuple[str, ...]
    stages: dict

    def cells(self) -> tuple[GlobularCell, ...]:
        """All cells flattened in skeletal order."""
        out = []
        for dim in sorted(self.stages):
            out.extend(self.stages[dim])
        return tuple(out)

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "cells": [cell.as_dict() for cell in self.cells()],
        }


def globular_decomposition(K: PrecubicalSet) -> GlobularDecomposition:
    """One globular cell per positive-dimensional cube, endpoints its corners."""
    stages = {}
    for dim in range(1, K.top_dim + 1):
        cells = tuple(
            GlobularCell(
                CellId(dim, label),
                dim - 1,
                corner(K, CellId(dim, label), 0),
                corner(K, CellId(dim, label), 1),
            )
            for label in K.cells(dim)
        )
        if cells:
            stages[dim] = cells
    return GlobularDecomposition(K.cells(0), stages)


def decomposition_report(K: PrecubicalSet) -> dict:
    """Census of the decomposition: vertex count, per-stage cell counts,
    total cell count and the maximum globe dimension (-1 when there are
    no cells, matching the empty-complex dimension convention)."""
    decomposition = globular_decomposition(K)
    stages = {dim: len(cells) for dim, cells in decomposition.stages.items()}
    return {
        "vertices": len(decomposition.vertices),
        "stages": stages,
        "cells_total": sum(stages.values()),
        "max_globe_dim": max(stages, default=0) - 1,
    }
