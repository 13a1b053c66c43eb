# src/crossnest/tools/walks.py
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

import click

from ..cache import cache_key
from ..engine.walks import count_walks
from ..engine.young import parse_shape
from ..models.params import WalkCountParams
from ..models.results import CountDoc

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.walks")


def register_walks(cli: click.Group) -> None:
    @cli.command(name="walks")
    @click.option("--kind", type=click.Choice(["vacillating", "hesitating", "oscillating"]),
                  required=True)
    @click.option("--shape", default="", help="End shape, e.g. 21 or 2,1; empty for ∅.")
    @click.option("--length", type=int, required=True, help="Number of steps.")
    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
    @click.pass_obj
    def walks(state: "AppState", kind: str, shape: str, length: int, fmt: str) -> None:
        """Count walks of a given kind from ∅ to a shape."""
        params = WalkCountParams(kind=kind, shape=shape, length=length)  # type: ignore[arg-type]
        t0 = time.perf_counter()
        end = parse_shape(params.shape)
        key = cache_key("walks", kind=params.kind, shape=end.compact(empty="0"), length=length)
        value = state.cache.get_or_compute(key, lambda: count_walks(params.kind, end, length))
        state.emit(fmt, CountDoc(query=key, value=str(value)), str(value))
        log.info(
            "tool.response",
            extra={"tool": "walks", "took_ms": int((time.perf_counter() - t0) * 1000)},
        )
