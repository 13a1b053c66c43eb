# src/crossnest/utils/render.py
from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Iterable, Sequence

import orjson
from pydantic import BaseModel

from ..counting.tables import DistributionTable
from ..engine.young import StandardTableau

_JSON_OPTS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def dump_json(doc: BaseModel | dict[str, Any], timestamp: bool = False) -> str:
    payload = doc.model_dump(mode="json") if isinstance(doc, BaseModel) else dict(doc)
    if timestamp:
        payload["generated_at"] = utc_now()
    return orjson.dumps(payload, option=_JSON_OPTS).decode()


def utc_now() -> str:
    return datetime.now(tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def render_tableau(t: StandardTableau) -> str:
    """Rows on separate lines, entries space-separated; ∅ for the empty tableau."""
    if not t.rows:
        return "∅"
    width = max(len(str(v)) for row in t.rows for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in t.rows)


def render_table(table: DistributionTable) -> str:
    """cr down the side, ne across the top; empty cells print as 0."""
    if not table.cells:
        return "(empty)"
    top_cr = max(i for i, _ in table.cells)
    top_ne = max(j for _, j in table.cells)
    grid = [[str(table.count(i, j)) for j in range(top_ne + 1)] for i in range(top_cr + 1)]
    width = max(len(c) for row in grid for c in row)
    width = max(width, len(str(top_ne)), len(str(top_cr)), 2)
    labels = " ".join(str(j).rjust(width) for j in range(top_ne + 1))
    head = "cr\\ne".rjust(width + 1) + " " + labels
    lines = [head]
    for i, row in enumerate(grid):
        lines.append(str(i).rjust(width + 1) + " " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def render_sequence(values: Iterable[int], start: int = 0) -> str:
    return "\n".join(f"{i}\t{v}" for i, v in enumerate(values, start=start))


def render_set(xs: Sequence[int] | frozenset[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(xs)) + "}"
