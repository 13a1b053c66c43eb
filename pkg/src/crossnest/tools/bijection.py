# src/crossnest/tools/bijection.py
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

import click

from ..engine.setpart import SetPartition, parse_partition
from ..engine.walks import (
    TableauWalk,
    WalkKind,
    matching_to_oscillating,
    oscillating_to_matching,
    parse_walk,
    permutation_matching,
    phi,
    phi_bar,
    psi_bar,
    rsk_via_oscillating,
    trace_psi,
    validate_walk,
)
from ..engine.young import StandardTableau
from ..models.objects import PartitionDoc, TableauDoc, WalkDoc
from ..models.results import BijectionDoc
from ..utils.parsing import looks_like_walk, parse_permutation
from ..utils.render import render_tableau

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.bijection")

DIRECTIONS = ["phi", "psi", "phibar", "psibar", "oscillate"]


def _text(
    p: SetPartition,
    walk: TableauWalk,
    forward: bool,
    t: StandardTableau | None,
    trace: tuple[StandardTableau, ...],
) -> str:
    lines = [str(walk) if forward else str(p)]
    if t is not None and t.rows:
        lines += ["T:", render_tableau(t)]
    for i, tab in enumerate(trace):
        lines += [f"T_{i}:", render_tableau(tab)]
    return "\n".join(lines)


def register_bijection(cli: click.Group) -> None:
    @cli.command(name="bijection")
    @click.argument("direction", type=click.Choice(DIRECTIONS))
    @click.option(
        "--input", "text", required=True, help="Partition (1457-26-3) or walk (0,0,1,...)."
    )
    @click.option("--permutation", is_flag=True, help="oscillate: read --input as a permutation w.")
    @click.option("--trace", is_flag=True, help="Also print the intermediate tableaux T_i.")
    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
    @click.pass_obj
    def bijection(
        state: "AppState", direction: str, text: str, permutation: bool, trace: bool, fmt: str
    ) -> None:
        """Map partitions to vacillating/hesitating/oscillating walks and back."""
        t0 = time.perf_counter()
        log.info("tool.request", extra={"tool": "bijection", "direction": direction})
        tableau: StandardTableau | None = None
        tabs: tuple[StandardTableau, ...] = ()
        extra_lines: list[str] = []

        if direction == "phi":
            p = parse_partition(text)
            walk, tr = phi(p)
            forward, tabs = True, tr.tableaux
        elif direction == "phibar":
            p = parse_partition(text)
            walk, tr = phi_bar(p)
            forward, tabs = True, tr.tableaux
        elif direction == "psi":
            walk = parse_walk(text, WalkKind.VACILLATING)
            p, tableau, tr = trace_psi(walk)
            forward, tabs = False, tr.tableaux
        elif direction == "psibar":
            walk = parse_walk(text, WalkKind.HESITATING)
            p = psi_bar(walk)
            forward = False
        elif permutation:
            w = parse_permutation(text)
            p = permutation_matching(w)
            walk = matching_to_oscillating(p)
            a, b = rsk_via_oscillating(w)
            forward = True
            extra_lines = [f"matching: {p}", "A:", render_tableau(a), "B:", render_tableau(b)]
        elif looks_like_walk(text):
            walk = parse_walk(text, WalkKind.OSCILLATING)
            validate_walk(walk)
            p = oscillating_to_matching(walk)
            forward = False
        else:
            p = parse_partition(text)
            walk = matching_to_oscillating(p)
            forward = True

        shown = tabs if trace else ()
        doc = BijectionDoc(
            direction=direction,  # type: ignore[arg-type]
            partition=PartitionDoc.of(p),
            walk=WalkDoc.of(walk),
            tableau=TableauDoc.of(tableau) if tableau is not None and tableau.rows else None,
            trace=[TableauDoc.of(x) for x in shown],
        )
        body = _text(p, walk, forward, tableau, shown)
        if extra_lines:
            body = "\n".join([body, *extra_lines])
        state.emit(fmt, doc, body)
        log.info(
            "tool.response",
            extra={"tool": "bijection", "took_ms": int((time.perf_counter() - t0) * 1000)},
        )
