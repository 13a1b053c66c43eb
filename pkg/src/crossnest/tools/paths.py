# src/crossnest/tools/paths.py
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

import click

from ..engine.paths import (
    LatticePath,
    dyck_from_matching_k2,
    dyck_pair_from_matching_k3,
    matching_from_dyck_k2,
    matching_from_dyck_pair_k3,
    motzkin_profile,
    noncrossing_from_motzkin,
    nonnesting_from_motzkin,
)
from ..engine.setpart import parse_partition
from ..models.objects import PartitionDoc
from ..models.results import PathDoc, PathsDoc
from ..utils.parsing import parse_int_set

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.paths")

_FMT = click.Choice(["text", "json"])


def _path_doc(p: LatticePath) -> PathDoc:
    return PathDoc(steps=str(p), heights=list(p.heights))


def _took(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def register_paths(cli: click.Group) -> None:
    @cli.group(name="paths")
    def paths() -> None:
        """Motzkin profiles and Dyck-path encodings of matchings."""

    @paths.command(name="motzkin")
    @click.option("--n", type=int, required=True)
    @click.option("--min", "min_set", required=True, help="S, the block minima.")
    @click.option("--max", "max_set", required=True, help="T, the block maxima.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def motzkin(state: "AppState", n: int, min_set: str, max_set: str, fmt: str) -> None:
        """Profile path of (S, T); when it is Motzkin, the noncrossing and nonnesting partitions."""
        t0 = time.perf_counter()
        S, T = parse_int_set(min_set), parse_int_set(max_set)
        path = motzkin_profile(S, T, n)
        doc = PathsDoc(mode="motzkin", paths=[_path_doc(path)], nonempty=path.is_motzkin)
        lines = [str(path) or "(empty path)", f"nonempty={path.is_motzkin}"]
        if path.is_motzkin:
            nc = noncrossing_from_motzkin(path, S, T)
            nn = nonnesting_from_motzkin(path, S, T)
            doc.noncrossing, doc.nonnesting = PartitionDoc.of(nc), PartitionDoc.of(nn)
            lines += [f"noncrossing: {nc}", f"nonnesting: {nn}"]
        state.emit(fmt, doc, "\n".join(lines))
        log.info("tool.response", extra={"tool": "paths.motzkin", "took_ms": _took(t0)})

    @paths.command(name="dyck2")
    @click.option("--matching", default=None, help="A 2-noncrossing matching, e.g. 14-23.")
    @click.option("--path", "path_text", default=None, help="A Dyck path in U/D, e.g. UUDD.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def dyck2(state: "AppState", matching: str | None, path_text: str | None, fmt: str) -> None:
        """Noncrossing matchings <-> Dyck paths."""
        if (matching is None) == (path_text is None):
            raise click.UsageError("give exactly one of --matching and --path")
        t0 = time.perf_counter()
        if matching is not None:
            m = parse_partition(matching)
            path = dyck_from_matching_k2(m)
        else:
            path = LatticePath.parse(path_text or "")
            m = matching_from_dyck_k2(path)
        doc = PathsDoc(mode="dyck2", partition=PartitionDoc.of(m), paths=[_path_doc(path)])
        state.emit(fmt, doc, "\n".join([str(m), str(path)]))
        log.info("tool.response", extra={"tool": "paths.dyck2", "took_ms": _took(t0)})

    @paths.command(name="dyck3")
    @click.option("--matching", default=None, help="A 3-noncrossing matching.")
    @click.option("--upper", default=None, help="Upper Dyck path.")
    @click.option("--lower", default=None, help="Lower Dyck path.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def dyck3(
        state: "AppState",
        matching: str | None,
        upper: str | None,
        lower: str | None,
        fmt: str,
    ) -> None:
        """3-noncrossing matchings <-> pairs of non-crossing Dyck paths."""
        pair_given = upper is not None and lower is not None
        if (matching is not None) == pair_given or (upper is None) != (lower is None):
            raise click.UsageError("give either --matching or both --upper and --lower")
        t0 = time.perf_counter()
        if matching is not None:
            m = parse_partition(matching)
            top, bottom = dyck_pair_from_matching_k3(m)
        else:
            top, bottom = LatticePath.parse(upper or ""), LatticePath.parse(lower or "")
            m = matching_from_dyck_pair_k3(top, bottom)
        doc = PathsDoc(
            mode="dyck3", partition=PartitionDoc.of(m), paths=[_path_doc(top), _path_doc(bottom)]
        )
        state.emit(fmt, doc, "\n".join([str(m), str(top), str(bottom)]))
        log.info("tool.response", extra={"tool": "paths.dyck3", "took_ms": _took(t0)})
