# src/crossnest/tools/table.py
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

import click

from ..counting.tables import TableFilter, distribution
from ..models.params import TableParams
from ..models.results import TableDoc
from ..utils.render import render_set, render_table

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.table")


def register_table(cli: click.Group) -> None:
    @cli.command(name="table")
    @click.option("--object", "object_kind", type=click.Choice(["partitions", "matchings"]),
                  default="partitions", show_default=True)
    @click.option("--n", "n", type=int, required=True, help="Ground set size ([n], or [2m]).")
    @click.option("--min", "min_set", default=None, help="S, e.g. 1,2,4.")
    @click.option("--max", "max_set", default=None, help="T, e.g. 4,5,6.")
    @click.option(
        "--bar", is_flag=True, help="Enhanced statistics; --min/--max mean min\\max, max\\min."
    )
    @click.option("--shards", type=int, default=1, show_default=True,
                  help="Split the enumeration over worker processes (also lifts the size bound).")
    @click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
    @click.pass_obj
    def table(
        state: "AppState",
        object_kind: str,
        n: int,
        min_set: str | None,
        max_set: str | None,
        bar: bool,
        shards: int,
        fmt: str,
    ) -> None:
        """Joint distribution of (cr, ne), checked for symmetry."""
        params = TableParams(
            object=object_kind,  # type: ignore[arg-type]
            n=n,
            min_set=min_set,  # type: ignore[arg-type]
            max_set=max_set,  # type: ignore[arg-type]
            bar=bar,
            shards=shards,
        )
        t0 = time.perf_counter()
        flt = None
        if params.min_set is not None and params.max_set is not None:
            flt = TableFilter(frozenset(params.min_set), frozenset(params.max_set), params.bar)
        result = distribution(
            params.object, params.n, flt, enhanced=params.bar, shards=params.shards
        )

        header = f"{params.object} n={params.n}"
        if flt is not None:
            header += f" S={render_set(flt.S)} T={render_set(flt.T)}"
        if result.enhanced:
            header += " (enhanced)"
        text = "\n".join([header, render_table(result), f"total={result.total}"])
        state.emit(fmt, TableDoc.of(result), text, csv=result.to_csv())
        log.info(
            "tool.response",
            extra={"tool": "table", "took_ms": int((time.perf_counter() - t0) * 1000)},
        )
