# src/crossnest/models/results.py
from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from ..counting.series import ExactPoly, ExactSeries
from ..counting.tables import DistributionTable
from ..counting.transfer import EigenReport, RankReport
from ..engine.stats import StatRecord
from .objects import ArcDiagramDoc, PartitionDoc, TableauDoc, WalkDoc


class BijectionDoc(BaseModel):
    direction: Literal["phi", "psi", "phibar", "psibar", "oscillate"]
    partition: PartitionDoc
    walk: WalkDoc
    tableau: Optional[TableauDoc] = None   # psi of an open walk leaves a non-empty T
    trace: List[TableauDoc] = Field(default_factory=list)


class BlockStatsDoc(BaseModel):
    klazar: int
    arc_crossing: int
    noncrossing: bool
    nonnesting: bool


class StatsDoc(BaseModel):
    partition: PartitionDoc
    arcs: Optional[ArcDiagramDoc] = None
    enhanced_arcs: Optional[ArcDiagramDoc] = None
    cr: int
    ne: int
    enhanced_cr: Optional[int] = None
    enhanced_ne: Optional[int] = None
    oracle_agrees: Optional[bool] = None
    r: Optional[int] = None
    ne_r: Optional[int] = None
    blocks: Optional[BlockStatsDoc] = None

    @classmethod
    def of(cls, p: PartitionDoc, rec: StatRecord, enhanced: bool) -> "StatsDoc":
        return cls(
            partition=p,
            cr=rec.cr,
            ne=rec.ne,
            enhanced_cr=rec.enhanced_cr if enhanced else None,
            enhanced_ne=rec.enhanced_ne if enhanced else None,
        )


class TableFilterDoc(BaseModel):
    S: List[int]
    T: List[int]
    bar: bool = False


class TableCellDoc(BaseModel):
    cr: int
    ne: int
    count: str


class TableDoc(BaseModel):
    object: Literal["partitions", "matchings"]
    n: int
    filter: Optional[TableFilterDoc] = None
    enhanced: bool = False
    cells: List[TableCellDoc] = Field(default_factory=list)
    total: str = "0"

    @classmethod
    def of(cls, t: DistributionTable) -> "TableDoc":
        flt = None
        if t.filter is not None:
            flt = TableFilterDoc(S=sorted(t.filter.S), T=sorted(t.filter.T), bar=t.filter.bar)
        return cls(
            object=t.object_kind.value,
            n=t.n,
            filter=flt,
            enhanced=t.enhanced,
            cells=[TableCellDoc(cr=i, ne=j, count=str(c)) for i, j, c in t.sorted_cells()],
            total=str(t.total),
        )


class PolyDoc(BaseModel):
    """Coefficients constant term first, decimal strings."""

    coeffs: List[str]
    text: str
    degree: int

    @classmethod
    def of(cls, p: ExactPoly) -> "PolyDoc":
        return cls(coeffs=p.to_strings(), text=str(p), degree=p.degree)


class CharPolyDoc(BaseModel):
    k: int
    j: int
    dim: int
    det_poly: PolyDoc   # det(I - tA)
    p: PolyDoc          # p_{k,j}(x)


class SeriesDoc(BaseModel):
    order: int
    coeffs: List[str]

    @classmethod
    def of(cls, s: ExactSeries) -> "SeriesDoc":
        return cls(order=s.order, coeffs=s.to_strings())


class RankDoc(BaseModel):
    k: int
    j: int
    dim: int
    rank: int
    corank: int
    twice_degree: Optional[int] = None
    consistent: Optional[bool] = None
    invertible: bool

    @classmethod
    def of(cls, r: RankReport) -> "RankDoc":
        return cls(
            k=r.k,
            j=r.j,
            dim=r.dim,
            rank=r.rank,
            corank=r.corank,
            twice_degree=r.twice_degree,
            consistent=r.consistent,
            invertible=r.invertible,
        )


class EigenMatchDoc(BaseModel):
    eigenvalue: float
    theta: float
    witness: List[int]


class EigenDoc(BaseModel):
    k: int
    j: int
    modulus: int
    tolerance: float
    ok: bool
    matches: List[EigenMatchDoc]

    @classmethod
    def of(cls, r: EigenReport) -> "EigenDoc":
        return cls(
            k=r.k,
            j=r.j,
            modulus=r.modulus,
            tolerance=r.tolerance,
            ok=r.ok,
            matches=[
                EigenMatchDoc(eigenvalue=m.eigenvalue, theta=m.theta, witness=list(m.witness))
                for m in r.matches
            ],
        )


class CountDoc(BaseModel):
    query: str
    value: str
    sequence: List[str] = Field(default_factory=list)


class PathDoc(BaseModel):
    steps: str
    heights: List[int]


class PathsDoc(BaseModel):
    mode: Literal["motzkin", "dyck2", "dyck3"]
    partition: Optional[PartitionDoc] = None
    paths: List[PathDoc] = Field(default_factory=list)
    nonempty: Optional[bool] = None
    noncrossing: Optional[PartitionDoc] = None
    nonnesting: Optional[PartitionDoc] = None


class CheckDoc(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class SuiteDoc(BaseModel):
    suite: str
    ok: bool
    elapsed_s: Optional[float] = None
    checks: List[CheckDoc] = Field(default_factory=list)
