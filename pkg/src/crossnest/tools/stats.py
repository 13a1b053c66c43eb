# src/crossnest/tools/stats.py
from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import click

from ..engine.setpart import enhanced_rep, max_set, min_set, parse_partition, standard_rep
from ..engine.stats import (
    block_arc_crossing_number,
    is_noncrossing_partition,
    is_nonnesting_partition,
    klazar_crossing_number,
    ne_r,
    oracle_cr,
    oracle_enhanced_cr,
    oracle_enhanced_ne,
    oracle_ne,
    stat_record,
)
from ..errors import ConsistencyError
from ..models.objects import ArcDiagramDoc, PartitionDoc
from ..models.results import BlockStatsDoc, StatsDoc
from ..utils.render import render_set

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.stats")


def _arcs_text(d: ArcDiagramDoc) -> str:
    return " ".join(f"({i},{j})" for i, j in d.arcs) or "(none)"


def register_stats(cli: click.Group) -> None:
    @cli.command(name="stats")
    @click.option("--partition", "text", required=True, help="Dash notation, e.g. 1457-26-3.")
    @click.option("--enhanced", is_flag=True, help="Also report the enhanced statistics.")
    @click.option("--oracle", is_flag=True, help="Cross-check against brute-force clique search.")
    @click.option(
        "--r", "r", type=click.IntRange(min=1), default=None, help="Most arcs in r nestings."
    )
    @click.option("--blocks", is_flag=True, help="Block-level crossing notions.")
    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
    @click.pass_obj
    def stats(
        state: "AppState",
        text: str,
        enhanced: bool,
        oracle: bool,
        r: int | None,
        blocks: bool,
        fmt: str,
    ) -> None:
        """Crossing and nesting numbers of a set partition."""
        p = parse_partition(text)
        rec = stat_record(p)
        doc = StatsDoc.of(PartitionDoc.of(p), rec, enhanced)
        doc.arcs = ArcDiagramDoc.of(standard_rep(p))
        lines = [
            f"partition: {p}",
            f"min: {render_set(min_set(p))}  max: {render_set(max_set(p))}",
            f"arcs: {_arcs_text(doc.arcs)}",
            f"cr={rec.cr} ne={rec.ne}",
        ]
        if enhanced:
            lines.append(f"enhanced cr={rec.enhanced_cr} ne={rec.enhanced_ne}")
            doc.enhanced_arcs = ArcDiagramDoc.of(enhanced_rep(p))

        if oracle:
            found: tuple[int, ...] = (oracle_cr(p), oracle_ne(p))
            if enhanced:
                found += (oracle_enhanced_cr(p), oracle_enhanced_ne(p))
            expected = (rec.cr, rec.ne, rec.enhanced_cr, rec.enhanced_ne)[: len(found)]
            if found != expected:
                raise ConsistencyError(
                    f"walk statistics {expected} of {p} disagree with the oracle's {found}"
                )
            doc.oracle_agrees = True
            lines.append("oracle: agrees")

        if r is not None:
            doc.r, doc.ne_r = r, ne_r(p, r)
            lines.append(f"ne_{r}={doc.ne_r}")

        if blocks:
            blk = BlockStatsDoc(
                klazar=klazar_crossing_number(p),
                arc_crossing=block_arc_crossing_number(p),
                noncrossing=is_noncrossing_partition(p),
                nonnesting=is_nonnesting_partition(p),
            )
            doc.blocks = blk
            lines.append(
                f"klazar={blk.klazar} block-arc={blk.arc_crossing} "
                f"noncrossing={blk.noncrossing} nonnesting={blk.nonnesting}"
            )

        log.debug("stats.done", extra={"partition": str(p), "cr": rec.cr, "ne": rec.ne})
        state.emit(fmt, doc, "\n".join(lines))
