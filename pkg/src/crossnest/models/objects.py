# src/crossnest/models/objects.py
from __future__ import annotations

from typing import List, Literal

from pydantic import BaseModel, Field

from ..engine.setpart import ArcDiagram, SetPartition, format_partition
from ..engine.walks import TableauWalk
from ..engine.young import StandardTableau


class TableauDoc(BaseModel):
    rows: List[List[int]] = Field(default_factory=list)
    shape: List[int] = Field(default_factory=list)

    @classmethod
    def of(cls, t: StandardTableau) -> "TableauDoc":
        return cls(rows=[list(r) for r in t.rows], shape=list(t.shape.parts))


class PartitionDoc(BaseModel):
    n: int
    blocks: List[List[int]]
    text: str

    @classmethod
    def of(cls, p: SetPartition) -> "PartitionDoc":
        return cls(n=p.n, blocks=[list(b) for b in p.blocks], text=format_partition(p))


class ArcDiagramDoc(BaseModel):
    n: int
    arcs: List[List[int]]
    enhanced: bool

    @classmethod
    def of(cls, d: ArcDiagram) -> "ArcDiagramDoc":
        return cls(n=d.n, arcs=[[i, j] for i, j in d.arcs], enhanced=d.enhanced)


class WalkDoc(BaseModel):
    kind: Literal["vacillating", "hesitating", "oscillating"]
    shapes: List[List[int]]
    text: str
    max_rows: int
    max_cols: int

    @classmethod
    def of(cls, w: TableauWalk) -> "WalkDoc":
        return cls(
            kind=w.kind.value,
            shapes=[list(s.parts) for s in w.shapes],
            text=str(w),
            max_rows=w.max_rows,
            max_cols=w.max_cols,
        )
