# src/crossnest/models/params.py
from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


def _int_list(v: object) -> object:
    """Accept ``"1,3,4"``, ``"{1,3,4}"``, ``""`` or a list."""
    if v is None or isinstance(v, list):
        return v
    text = str(v).strip().strip("{}[]")
    return [int(x) for x in text.replace(" ", "").split(",") if x]


class TableParams(BaseModel):
    object: Literal["partitions", "matchings"] = "partitions"
    n: int = Field(..., ge=0, description="ground set size")
    min_set: Optional[List[int]] = Field(None, description="S, the block minima")
    max_set: Optional[List[int]] = Field(None, description="T, the block maxima")
    bar: bool = False
    shards: int = Field(1, ge=1)

    @field_validator("min_set", "max_set", mode="before")
    @classmethod
    def _parse_sets(cls, v: object) -> object:
        return _int_list(v)

    @model_validator(mode="after")
    def _both_or_neither(self) -> "TableParams":
        if (self.min_set is None) != (self.max_set is None):
            raise ValueError("--min and --max go together")
        if self.object == "matchings" and self.bar:
            raise ValueError("--bar applies to partitions only")
        return self


class BoxParams(BaseModel):
    k: int = Field(..., ge=1)
    j: int = Field(..., ge=1)


class GkjParams(BoxParams):
    m: int = Field(..., ge=0)


class FkParams(BaseModel):
    k: int = Field(..., ge=1)
    order: int = Field(..., ge=0, description="largest matching size m to report")


class WalkCountParams(BaseModel):
    kind: Literal["vacillating", "hesitating", "oscillating"]
    shape: str = ""
    length: int = Field(..., ge=0)

    @field_validator("shape", mode="before")
    @classmethod
    def _strip_shape(cls, v: Optional[str]) -> str:
        return (v or "").strip()

    @model_validator(mode="after")
    def _parity(self) -> "WalkCountParams":
        if self.kind != "oscillating" and self.length % 2:
            raise ValueError(f"{self.kind} walks have even length")
        return self


class ChamberParams(BaseModel):
    k: int = Field(..., ge=1, description="chamber dimension plus one")
    length: int = Field(..., ge=0)
    stepping: Literal["vacillating", "free"] = "free"

    @model_validator(mode="after")
    def _parity(self) -> "ChamberParams":
        if self.stepping == "free" and self.length % 2:
            raise ValueError("free chamber walks return to the origin only at even length")
        return self


class StripParams(BaseModel):
    k: int = Field(..., ge=1, description="strip height")
    m: int = Field(..., ge=0)


class NcnParams(BaseModel):
    k: Optional[int] = Field(None, ge=1, description="cr < k; None for no bound")
    l: Optional[int] = Field(None, ge=1, description="ne < l; None for no bound")
    n: int = Field(..., ge=0)
