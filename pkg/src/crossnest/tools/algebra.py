# src/crossnest/tools/algebra.py
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

import click

from ..cache import cache_key
from ..counting.chambers import Stepping, chamber_walk_count, gk1_reflection
from ..counting.series import fk_series, matching_count
from ..counting.tables import ncn
from ..counting.transfer import (
    char_poly,
    eigenvalue_form_check,
    gkj_count,
    gkj_sequence,
    p_kj,
    rank_report,
    rect_lattice,
)
from ..models.params import (
    BoxParams,
    ChamberParams,
    FkParams,
    GkjParams,
    NcnParams,
    StripParams,
)
from ..models.results import CharPolyDoc, CountDoc, EigenDoc, PolyDoc, RankDoc, SeriesDoc
from ..utils.render import render_sequence

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.algebra")

_FMT = click.Choice(["text", "json"])


def _took(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def register_algebra(cli: click.Group) -> None:
    @cli.command(name="charpoly")
    @click.option("--k", type=int, required=True)
    @click.option("--j", type=int, required=True)
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def charpoly(state: "AppState", k: int, j: int, fmt: str) -> None:
        """p_{k,j}(x): det(I - tA_{k,j}) with t^2 replaced by x."""
        params = BoxParams(k=k, j=j)
        t0 = time.perf_counter()
        full, _ = rect_lattice(params.k, params.j)
        det = char_poly(full)
        p = p_kj(params.k, params.j)
        doc = CharPolyDoc(
            k=params.k, j=params.j, dim=full.dim, det_poly=PolyDoc.of(det), p=PolyDoc.of(p)
        )
        text = "\n".join([str(p), " ".join(p.to_strings())])
        state.emit(fmt, doc, text)
        log.info("tool.response", extra={"tool": "charpoly", "took_ms": _took(t0)})

    @cli.command(name="rank")
    @click.option("--k", type=int, required=True)
    @click.option("--j", type=int, required=True)
    @click.option("--no-degree", is_flag=True, help="Skip the 2 deg p_{k,j} cross-check.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def rank(state: "AppState", k: int, j: int, no_degree: bool, fmt: str) -> None:
        """Exact rank and corank of A_{k,j}."""
        params = BoxParams(k=k, j=j)
        t0 = time.perf_counter()
        report = rank_report(params.k, params.j, with_degree=not no_degree)
        lines = [
            f"dim={report.dim} rank={report.rank} corank={report.corank}",
            f"invertible={'yes' if report.invertible else 'no'}",
        ]
        if report.twice_degree is not None:
            lines.append(f"2deg(p)={report.twice_degree} consistent={report.consistent}")
        state.emit(fmt, RankDoc.of(report), "\n".join(lines))
        log.info("tool.response", extra={"tool": "rank", "took_ms": _took(t0)})

    @cli.command(name="gkj")
    @click.option("--k", type=int, required=True)
    @click.option("--j", type=int, required=True)
    @click.option("--m", type=int, required=True, help="Matchings on [2m].")
    @click.option("--series", is_flag=True, help="Print g_{k,j}(0..m) from the series.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def gkj(state: "AppState", k: int, j: int, m: int, series: bool, fmt: str) -> None:
        """Matchings on [2m] with cr <= k and ne <= j."""
        params = GkjParams(k=k, j=j, m=m)
        key = cache_key("gkj", k=params.k, j=params.j, m=params.m)
        value = state.cache.get_or_compute(key, lambda: gkj_count(params.k, params.j, params.m))
        doc = CountDoc(query=key, value=str(value))
        text = str(value)
        if series:
            seq = gkj_sequence(params.k, params.j, params.m)
            doc.sequence = [str(v) for v in seq]
            text = render_sequence(seq)
        state.emit(fmt, doc, text)

    @cli.command(name="fk")
    @click.option("--k", type=int, required=True)
    @click.option("--order", type=int, required=True, help="Largest m in f_k(m).")
    @click.option("--series", is_flag=True, help="Print the truncated F_k(x) instead.")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def fk(state: "AppState", k: int, order: int, series: bool, fmt: str) -> None:
        """k-noncrossing matching counts f_k(0..order) from the Bessel determinant."""
        params = FkParams(k=k, order=order)
        t0 = time.perf_counter()
        if series:
            s = fk_series(params.k, 2 * params.order + 1)
            state.emit(fmt, SeriesDoc.of(s), "\n".join(s.to_strings()))
        else:
            values = [
                state.cache.get_or_compute(
                    cache_key("fk", k=params.k, m=m), lambda m=m: matching_count(params.k, m)
                )
                for m in range(params.order + 1)
            ]
            doc = CountDoc(
                query=cache_key("fk", k=params.k, order=params.order),
                value=str(values[-1]),
                sequence=[str(v) for v in values],
            )
            state.emit(fmt, doc, render_sequence(values))
        log.info("tool.response", extra={"tool": "fk", "took_ms": _took(t0)})

    @cli.command(name="chamber")
    @click.option("--k", type=int, required=True)
    @click.option("--length", type=int, required=True)
    @click.option("--stepping", type=click.Choice([s.value for s in Stepping]), default="free")
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def chamber(state: "AppState", k: int, length: int, stepping: str, fmt: str) -> None:
        """Closed walks in the Weyl chamber of dimension k - 1."""
        params = ChamberParams(k=k, length=length, stepping=stepping)  # type: ignore[arg-type]
        t0 = time.perf_counter()
        key = cache_key("chamber", k=params.k, length=params.length, stepping=params.stepping)
        value = state.cache.get_or_compute(
            key, lambda: chamber_walk_count(params.k, params.length, params.stepping)
        )
        state.emit(fmt, CountDoc(query=key, value=str(value)), str(value))
        log.info("tool.response", extra={"tool": "chamber", "took_ms": _took(t0)})

    @cli.command(name="strip")
    @click.option("--k", type=int, required=True, help="Strip height.")
    @click.option("--m", type=int, required=True)
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def strip(state: "AppState", k: int, m: int, fmt: str) -> None:
        """g_{k,1}(m) from the reflection sum."""
        params = StripParams(k=k, m=m)
        t0 = time.perf_counter()
        key = cache_key("strip", k=params.k, m=params.m)
        value = state.cache.get_or_compute(key, lambda: gk1_reflection(params.k, params.m))
        state.emit(fmt, CountDoc(query=key, value=str(value)), str(value))
        log.info("tool.response", extra={"tool": "strip", "took_ms": _took(t0)})

    @cli.command(name="ncn")
    @click.option("--k", type=int, default=None, help="cr < k; omit for no bound.")
    @click.option("--l", "l_", type=int, default=None, help="ne < l; omit for no bound.")
    @click.option("--n", type=int, required=True)
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def ncn_cmd(state: "AppState", k: int | None, l_: int | None, n: int, fmt: str) -> None:
        """Partitions of [n] with cr < k and ne < l."""
        params = NcnParams(k=k, l=l_, n=n)
        t0 = time.perf_counter()
        key = cache_key("ncn", k=str(params.k), l=str(params.l), n=params.n)
        value = state.cache.get_or_compute(key, lambda: ncn(params.k, params.l, params.n))
        state.emit(fmt, CountDoc(query=key, value=str(value)), str(value))
        log.info("tool.response", extra={"tool": "ncn", "took_ms": _took(t0)})

    @cli.command(name="eigen")
    @click.option("--k", type=int, required=True)
    @click.option("--j", type=int, required=True)
    @click.option("--tolerance", type=float, default=None)
    @click.option("--format", "fmt", type=_FMT, default="text")
    @click.pass_obj
    def eigen(state: "AppState", k: int, j: int, tolerance: float | None, fmt: str) -> None:
        """Match each eigenvalue of A_{k,j} with a sum of cosines."""
        params = BoxParams(k=k, j=j)
        report = eigenvalue_form_check(params.k, params.j, tolerance)
        lines = [
            f"{mt.eigenvalue:+.9f} ~ {mt.theta:+.9f} r={list(mt.witness)}" for mt in report.matches
        ]
        lines.append(f"ok={report.ok} tolerance={report.tolerance:g}")
        state.emit(fmt, EigenDoc.of(report), "\n".join(lines))
        if not report.ok:
            raise click.exceptions.Exit(1)
