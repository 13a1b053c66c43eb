# src/crossnest/tools/verify.py
"""
Acceptance suites. Every check records a named pass/fail with a short detail; ``--quick``
shrinks the exhaustive sweeps so the whole set runs in seconds.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import TYPE_CHECKING, Callable, Iterable, TypeVar

import click

from ..counting.chambers import Stepping, chamber_walk_count, gk1_reflection
from ..counting.numbers import bell, bnk, catalan, three_noncrossing_matchings
from ..counting.series import ExactPoly, matching_count
from ..counting.tables import (
    ObjectKind,
    distribution,
    distribution_by_profile,
    g_lambda_product_sum,
    nc_count,
    nn_count,
    profile_of,
)
from ..counting.transfer import (
    bipartite_balance,
    eigenvalue_form_check,
    gaussian_at_minus_one,
    gkj_count,
    gkj_sequence,
    is_invertible,
    lattice_rank,
    p_kj,
    rank_report,
)
from ..engine.paths import (
    dyck_from_matching_k2,
    dyck_pair_from_matching_k3,
    dyck_paths,
    matching_from_dyck_k2,
    matching_from_dyck_pair_k3,
    motzkin_profile,
    noncrossing_dyck_pairs,
    noncrossing_from_motzkin,
    nonnesting_from_motzkin,
    profile_is_nonempty,
)
from ..engine.setpart import (
    SetPartition,
    matchings_iter,
    max_set,
    min_set,
    parse_partition,
    partitions_iter,
)
from ..engine.stats import (
    block_arc_crossing_number,
    cr_ne,
    enhanced_cr_ne,
    is_noncrossing_partition,
    is_nonnesting_partition,
    klazar_crossing_number,
    ne,
    ne_r,
    oracle_cr,
    oracle_enhanced_cr,
    oracle_enhanced_ne,
    oracle_ne,
    oracle_ne_r,
)
from ..engine.walks import (
    WalkKind,
    conjugate_walk,
    iter_walks,
    matching_to_oscillating,
    min_max_from_walk,
    opener_closer_from_walk,
    oscillating_to_matching,
    parse_walk,
    permutation_matching,
    phi,
    phi_bar,
    psi,
    psi_bar,
    rsk_via_oscillating,
    walk_distribution,
)
from ..engine.young import (
    EMPTY,
    EMPTY_TABLEAU,
    StandardTableau,
    conjugate,
    greene_decreasing,
    greene_increasing,
    iter_shapes,
    rsk,
    syt_count,
    up_down_commutator,
)
from ..errors import CrossnestError
from ..models.results import CheckDoc, SuiteDoc

if TYPE_CHECKING:
    from ..cli import AppState

log = logging.getLogger("crossnest.tools.verify")

X = TypeVar("X")

GOLDEN_PARTITION = "1457-26-3"
GOLDEN_PHI = "∅,∅,1,1,11,11,11,1,2,1,11,1,1,∅,∅"
GOLDEN_PHI_BAR = "∅,∅,1,1,11,21,11,21,2,21,11,1,1,∅,∅"
GOLDEN_OPEN_WALK = "∅,∅,1,1,2,2,2,2,21,21,211,21,21,11,21"
GOLDEN_MATCHING_WALK = "∅,1,2,21,31,21,11,21,2,1,∅"
GOLDEN_PERMUTATION_WALK = "∅,1,11,21,2,1,∅"

# p_{k,j}(x) as products of (coefficients constant-first, multiplicity)
P_KJ_FACTORS: dict[tuple[int, int], list[tuple[tuple[int, ...], int]]] = {
    (1, 1): [((1, -1), 1)],
    (1, 2): [((1, -2), 1)],
    (1, 3): [((1, -3, 1), 1)],
    (1, 4): [((1, -1), 1), ((1, -3), 1)],
    (2, 2): [((1, -1), 1), ((1, -5), 1)],
    (2, 3): [((1, -1), 1), ((1, -3), 1), ((1, -8, 4), 1)],
    (2, 4): [((1, -14, 49, -49), 1), ((1, -6, 5, -1), 1)],
    (3, 3): [((1, -1), 1), ((1, -19, 83, -1), 1), ((1, -5, 6, -1), 2)],
    (3, 4): [
        ((1, -2), 2),
        ((1, -8, 8), 1),
        ((1, -4, 2), 2),
        ((1, -16, 60, -32, 4), 1),
        ((1, -24, 136, -160, 16), 1),
    ],
    (4, 4): [
        ((1, -1), 2),
        ((1, -18, 81, -81), 2),
        ((1, -27, 99, -9), 1),
        ((1, -9, 18, -9), 2),
        ((1, -27, 195, -361), 1),
        ((1, -6, 9, -1), 2),
        ((1, -9, 6, -1), 2),
    ],
}

INVERTIBLE_PAIRS = frozenset(
    {(1, 1), (1, 3), (1, 5), (1, 7), (1, 9), (1, 11), (3, 3), (3, 7), (3, 9), (5, 5), (5, 7)}
)


def expected_p_kj(k: int, j: int) -> ExactPoly:
    return ExactPoly.product(
        ExactPoly.of(*coeffs) ** mult for coeffs, mult in P_KJ_FACTORS[(k, j)]
    )


@dataclass
class SuiteRun:
    quick: bool = False
    checks: list[CheckDoc] = field(default_factory=list)

    def size(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckDoc(name=name, ok=ok, detail=detail))
        level = logging.INFO if ok else logging.WARNING
        log.log(level, "verify.check", extra={"check": name, "ok": ok})

    def sweep(self, name: str, items: Iterable[X], pred: Callable[[X], bool]) -> None:
        """Pass when ``pred`` holds for every item; the detail names the first failure."""
        seen = 0
        for x in items:
            seen += 1
            if not pred(x):
                self.check(name, False, f"fails at {x}")
                return
        self.check(name, True, f"{seen} cases")

    def equal(self, name: str, got: object, want: object) -> None:
        self.check(name, got == want, f"got {got}" if got == want else f"got {got}, want {want}")

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


# ---------- suites ----------

def _golden(run: SuiteRun) -> None:
    p = parse_partition(GOLDEN_PARTITION)
    run.equal("golden.phi", phi(p)[0], parse_walk(GOLDEN_PHI, WalkKind.VACILLATING))
    run.equal("golden.phi_bar", phi_bar(p)[0], parse_walk(GOLDEN_PHI_BAR, WalkKind.HESITATING))
    q, t = psi(parse_walk(GOLDEN_OPEN_WALK, WalkKind.VACILLATING))
    run.equal("golden.psi_open", (q, t.rows), (parse_partition("1-26-3-47-5"), ((1, 7), (5,))))
    small, _ = psi(parse_walk("∅,∅,1,∅,1,∅,∅", WalkKind.VACILLATING))
    run.equal("golden.psi_small", small, parse_partition("123"))
    run.equal("golden.stats", cr_ne(p), (oracle_cr(p), oracle_ne(p)))
    run.equal("golden.enhanced_stats", enhanced_cr_ne(p), (2, 2))

    w = (2, 3, 1)
    a = StandardTableau.from_rows([[1, 3], [2]])
    b = StandardTableau.from_rows([[1, 2], [3]])
    run.equal("golden.rsk_231", rsk(w), (a, b))
    run.equal("golden.rsk_via_walk_231", rsk_via_oscillating(w), (a, b))
    run.equal(
        "golden.permutation_walk_231",
        matching_to_oscillating(permutation_matching(w)),
        parse_walk(GOLDEN_PERMUTATION_WALK, WalkKind.OSCILLATING),
    )
    fig = parse_walk(GOLDEN_MATCHING_WALK, WalkKind.OSCILLATING)
    run.equal("golden.matching_walk", matching_to_oscillating(oscillating_to_matching(fig)), fig)

    k = parse_partition("15-246-37")
    run.equal("golden.klazar_vs_cr", (klazar_crossing_number(k), oracle_cr(k)), (3, 2))


def _roundtrip(run: SuiteRun) -> None:
    n = run.size(9, 6)
    run.sweep(
        f"roundtrip.psi_phi[{n}]",
        partitions_iter(n),
        lambda p: psi(phi(p)[0]) == (p, EMPTY_TABLEAU),
    )
    n = run.size(8, 6)
    run.sweep(
        f"roundtrip.psibar_phibar[{n}]",
        partitions_iter(n),
        lambda p: psi_bar(phi_bar(p)[0]) == p,
    )
    n = run.size(6, 4)
    run.sweep(
        f"roundtrip.phi_psi[{2 * n}]",
        iter_walks(WalkKind.VACILLATING, 2 * n, EMPTY),
        lambda w: phi(psi(w)[0])[0] == w,
    )
    n = run.size(8, 5)
    run.sweep(
        f"roundtrip.phibar_psibar[{2 * n}]",
        iter_walks(WalkKind.HESITATING, 2 * n, EMPTY),
        lambda w: phi_bar(psi_bar(w))[0] == w,
    )
    m = run.size(6, 4)
    run.sweep(
        f"roundtrip.oscillating[{2 * m}]",
        matchings_iter(m),
        lambda mt: oscillating_to_matching(matching_to_oscillating(mt)) == mt,
    )


def _walk_stats(run: SuiteRun) -> None:
    top = run.size(8, 6)
    for n in range(top + 1):
        run.sweep(
            f"stats.walk_vs_oracle[{n}]",
            partitions_iter(n),
            lambda p: cr_ne(p) == (oracle_cr(p), oracle_ne(p)),
        )
    top = run.size(7, 5)
    for n in range(top + 1):
        run.sweep(
            f"stats.enhanced_walk_vs_oracle[{n}]",
            partitions_iter(n),
            lambda p: enhanced_cr_ne(p) == (oracle_enhanced_cr(p), oracle_enhanced_ne(p)),
        )
    n = run.size(8, 6)
    run.sweep(
        f"stats.min_max_from_walk[{n}]",
        partitions_iter(n),
        lambda p: min_max_from_walk(phi(p)[0]) == (min_set(p), max_set(p)),
    )
    run.sweep(
        f"stats.opener_closer_from_walk[{n}]",
        partitions_iter(n),
        lambda p: opener_closer_from_walk(phi_bar(p)[0]) == profile_of(p, bar=True),
    )
    top = run.size(8, 6)
    for n in range(top + 1):
        run.sweep(f"stats.enhanced_bounds[{n}]", partitions_iter(n), _enhanced_bounds)
        run.sweep(f"stats.block_notions[{n}]", partitions_iter(n), _block_notions)


def _enhanced_bounds(p: SetPartition) -> bool:
    c, e = cr_ne(p)
    ec, en = enhanced_cr_ne(p)
    return c <= ec <= c + 1 and e <= en


def _block_notions(p: SetPartition) -> bool:
    arc, klazar = block_arc_crossing_number(p), klazar_crossing_number(p)
    return oracle_cr(p) <= arc <= klazar and (klazar >= 3) == (arc >= 3)


def _involution(p: SetPartition) -> bool:
    q, _ = psi(conjugate_walk(phi(p)[0]))
    c, n = cr_ne(p)
    return cr_ne(q) == (n, c) and profile_of(q) == profile_of(p)


def _symmetry(run: SuiteRun) -> None:
    n = run.size(8, 6)
    tables = distribution_by_profile(ObjectKind.PARTITIONS, n)
    bad = [str(key) for key, t in tables.items() if not t.is_symmetric()]
    run.check(f"symmetry.partitions_by_profile[{n}]", not bad, ", ".join(bad) or f"{len(tables)}")
    run.equal(f"symmetry.partitions_total[{n}]", sum(t.total for t in tables.values()), bell(n))
    run.sweep(f"symmetry.conjugation[{n}]", partitions_iter(n), _involution)

    m = run.size(6, 4)
    tables = distribution_by_profile(ObjectKind.MATCHINGS, 2 * m)
    bad = [str(key) for key, t in tables.items() if not t.is_symmetric()]
    run.check(f"symmetry.matchings_by_profile[{2 * m}]", not bad, ", ".join(bad) or "")

    for k in (2, 3, 4):
        run.sweep(
            f"symmetry.nc_equals_nn[k={k}]",
            range(n + 1),
            lambda i, k=k: nc_count(k, i) == nn_count(k, i),
        )
    run.sweep("symmetry.noncrossing_catalan", range(n + 1), lambda i: nc_count(2, i) == catalan(i))


def _bar_symmetry(run: SuiteRun) -> None:
    top = run.size(7, 5)
    for n in range(1, top + 1):
        tables = distribution_by_profile(ObjectKind.PARTITIONS, n, bar=True)
        bad = [str(key) for key, t in tables.items() if not t.is_symmetric()]
        run.check(f"bar_symmetry.by_profile[{n}]", not bad, ", ".join(bad) or f"{len(tables)}")


def _identities(run: SuiteRun) -> None:
    top = run.size(10, 7)
    run.sweep(
        "identities.vacillating_bell",
        range(top + 1),
        lambda n: walk_distribution(WalkKind.VACILLATING, 2 * n).get(EMPTY, 0)
        == bell(n),
    )
    top = run.size(8, 6)
    run.sweep(
        "identities.product_sum_bell",
        [(n, top - n) for n in range(top + 1)],
        lambda nm: g_lambda_product_sum(*nm) == bell(nm[0] + nm[1]),
    )

    def g_formula(n: int) -> bool:
        dist = walk_distribution(WalkKind.VACILLATING, 2 * n)
        return all(
            dist.get(s, 0) == bnk(n, size) * syt_count(s)
            for size in range(5)
            for s in iter_shapes(size)
        )

    def f_equals_g(n: int) -> bool:
        vac = walk_distribution(WalkKind.VACILLATING, 2 * n)
        hes = walk_distribution(WalkKind.HESITATING, 2 * n)
        return all(
            vac.get(s, 0) == hes.get(s, 0) for size in range(4) for s in iter_shapes(size)
        )

    run.sweep("identities.g_is_bnk_times_f", range(6), g_formula)
    run.sweep("identities.hesitating_equals_vacillating", range(6), f_equals_g)
    run.sweep(
        "identities.du_minus_ud",
        [s for size in range(6) for s in iter_shapes(size)],
        lambda s: up_down_commutator(s) == Counter({s: 1}),
    )
    run.sweep(
        "identities.chamber_vacillating",
        [(k, n) for k in range(1, 5) for n in range(run.size(7, 5))],
        lambda kn: chamber_walk_count(kn[0], 2 * kn[1], Stepping.VACILLATING)
        == nc_count(kn[0], kn[1]),
    )


def _brute_k_noncrossing(k: int, m: int) -> int:
    table = distribution(ObjectKind.MATCHINGS, 2 * m)
    return sum(c for (i, _), c in table.cells.items() if i < k)


def _matchings(run: SuiteRun) -> None:
    brute, top = run.size(7, 5), run.size(8, 6)
    run.sweep(
        "matchings.f2_brute",
        range(brute + 1),
        lambda m: _brute_k_noncrossing(2, m) == catalan(m),
    )
    run.sweep(
        "matchings.f2_chamber",
        range(top + 1),
        lambda m: chamber_walk_count(2, 2 * m, Stepping.FREE) == catalan(m),
    )
    run.sweep(
        "matchings.f2_series",
        range(top + 1),
        lambda m: matching_count(2, m) == catalan(m),
    )

    top = run.size(7, 5)
    f3 = three_noncrossing_matchings
    run.sweep(
        "matchings.f3_brute",
        range(brute + 1),
        lambda m: _brute_k_noncrossing(3, m) == f3(m),
    )
    run.sweep(
        "matchings.f3_chamber",
        range(top + 1),
        lambda m: chamber_walk_count(3, 2 * m, Stepping.FREE) == f3(m),
    )
    run.sweep(
        "matchings.f3_dyck_pairs",
        range(run.size(6, 4) + 1),
        lambda m: sum(1 for _ in noncrossing_dyck_pairs(m)) == f3(m),
    )
    run.sweep("matchings.f3_series", range(top + 1), lambda m: matching_count(3, m) == f3(m))


def _transfer(run: SuiteRun) -> None:
    top = run.size(4, 3)
    for k in range(1, top + 1):
        for j in range(k, top + 1):
            run.equal(f"transfer.p[{k},{j}]", p_kj(k, j), expected_p_kj(k, j))
    top_m = run.size(10, 6)
    for k in range(1, 4):
        for j in range(1, 4):
            run.equal(
                f"transfer.series_vs_walks[{k},{j}]",
                gkj_sequence(k, j, top_m),
                [gkj_count(k, j, m) for m in range(top_m + 1)],
            )
    run.sweep(
        "transfer.strip_reflection",
        [(k, m) for k in range(1, 6) for m in range(top_m + 1)],
        lambda km: gk1_reflection(*km) == gkj_count(km[0], 1, km[1]),
    )


def _spectral(run: SuiteRun) -> None:
    limit = run.size(12, 8)
    pairs = [(k, j) for k in range(1, limit) for j in range(k, limit) if k + j <= limit]
    found = sorted((k, j) for k, j in pairs if is_invertible(k, j))
    want = sorted(pr for pr in INVERTIBLE_PAIRS if pr[0] + pr[1] <= limit)
    run.equal(f"spectral.invertible_pairs[k+j<={limit}]", found, want)

    def balanced(kj: tuple[int, int]) -> bool:
        even, odd = bipartite_balance(*kj)
        return even - odd == gaussian_at_minus_one(*kj) and (even == odd) == (
            kj[0] * kj[1] % 2 == 1
        )

    run.sweep("spectral.bipartite_balance", pairs, balanced)

    top = run.size(4, 3)
    run.sweep(
        "spectral.rank_is_twice_degree",
        [(k, j) for k in range(1, top + 1) for j in range(k, top + 1)],
        lambda kj: rank_report(*kj).consistent is True,
    )
    if not run.quick:
        _, corank = lattice_rank(3, 11)
        run.equal("spectral.corank[3,11]", corank, 6)
    run.sweep(
        "spectral.eigenvalue_form",
        [(k, j) for k in range(1, 4) for j in range(1, 4)],
        lambda kj: eigenvalue_form_check(*kj).ok,
    )


def _paths(run: SuiteRun) -> None:
    top = run.size(7, 5)
    for n in range(1, top + 1):
        realized = {profile_of(p) for p in partitions_iter(n)}
        ground = range(1, n + 1)
        candidates = [
            (frozenset(s), frozenset(t))
            for size in range(n + 1)
            for s in combinations(ground, size)
            for t in combinations(ground, size)
        ]
        run.sweep(
            f"paths.motzkin_criterion[{n}]",
            candidates,
            lambda st, n=n, realized=realized: profile_is_nonempty(st[0], st[1], n)
            == (st in realized),
        )

    top = run.size(9, 6)
    for n in range(top + 1):
        profiles = {profile_of(p) for p in partitions_iter(n)}

        def recovers(st: tuple[frozenset[int], frozenset[int]], n: int = n) -> bool:
            path = motzkin_profile(st[0], st[1], n)
            nc = noncrossing_from_motzkin(path, *st)
            nn = nonnesting_from_motzkin(path, *st)
            return (
                is_noncrossing_partition(nc)
                and is_nonnesting_partition(nn)
                and profile_of(nc) == st
                and profile_of(nn) == st
            )

        ordered = sorted(profiles, key=lambda st: (sorted(st[0]), sorted(st[1])))
        run.sweep(f"paths.recovery[{n}]", ordered, recovers)
        run.equal(f"paths.catalan_profiles[{n}]", len(profiles), catalan(n))
        run.equal(
            f"paths.catalan_noncrossing[{n}]",
            sum(1 for p in partitions_iter(n) if is_noncrossing_partition(p)),
            catalan(n),
        )

    top = run.size(7, 5)
    for m in range(top + 1):
        run.sweep(
            f"paths.dyck2[{m}]",
            dyck_paths(m),
            lambda path: dyck_from_matching_k2(matching_from_dyck_k2(path)) == path,
        )
    for m in range(run.size(6, 4) + 1):
        run.sweep(
            f"paths.dyck3[{m}]",
            noncrossing_dyck_pairs(m),
            lambda pr: dyck_pair_from_matching_k3(matching_from_dyck_pair_k3(*pr)) == pr,
        )


def _greene(run: SuiteRun) -> None:
    n = run.size(8, 6)
    run.sweep(
        f"greene.ne_r_vs_oracle[{n}]",
        partitions_iter(n),
        lambda p: all(ne_r(p, r) == oracle_ne_r(p, r) for r in (1, 2, 3)),
    )
    run.sweep(f"greene.ne_1_is_ne[{n}]", partitions_iter(n), lambda p: ne_r(p, 1) == ne(p))

    def greene_shape(w: tuple[int, ...]) -> bool:
        shape = rsk(w)[0].shape
        cols = conjugate(shape)
        return all(
            greene_increasing(w, k) == sum(shape.parts[:k])
            and greene_decreasing(w, k) == sum(cols.parts[:k])
            for k in (1, 2, 3)
        )

    size = run.size(6, 5)
    run.sweep(f"greene.rsk_shape[{size}]", permutations(range(1, size + 1)), greene_shape)


SUITES: dict[str, Callable[[SuiteRun], None]] = {
    "golden": _golden,
    "roundtrip": _roundtrip,
    "stats": _walk_stats,
    "symmetry": _symmetry,
    "bar-symmetry": _bar_symmetry,
    "identities": _identities,
    "matchings": _matchings,
    "transfer": _transfer,
    "spectral": _spectral,
    "paths": _paths,
    "greene": _greene,
}


def run_suite(name: str, quick: bool = False) -> SuiteRun:
    """Run one suite (or ``all``); domain errors become failed checks rather than aborts."""
    run = SuiteRun(quick=quick)
    names = list(SUITES) if name == "all" else [name]
    for suite in names:
        t0 = time.perf_counter()
        try:
            SUITES[suite](run)
        except CrossnestError as e:
            run.check(f"{suite}.error", False, f"{type(e).__name__}: {e}")
        log.info(
            "verify.suite",
            extra={
                "suite": suite,
                "quick": quick,
                "took_ms": int((time.perf_counter() - t0) * 1000),
            },
        )
    return run


def register_verify(cli: click.Group) -> None:
    @cli.command(name="verify")
    @click.option("--suite", type=click.Choice([*SUITES, "all"]), default="all", show_default=True)
    @click.option("--quick", is_flag=True, help="Reduced sizes.")
    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
    @click.pass_context
    def verify(ctx: click.Context, suite: str, quick: bool, fmt: str) -> None:
        """Run the acceptance suites; exits 1 when any check fails."""
        state: AppState = ctx.obj
        t0 = time.perf_counter()
        run = run_suite(suite, quick=quick)
        elapsed = round(time.perf_counter() - t0, 3) if state.timestamps else None
        doc = SuiteDoc(suite=suite, ok=run.ok, elapsed_s=elapsed, checks=run.checks)
        lines = [
            f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f"  {c.detail}" if c.detail else "")
            for c in run.checks
        ]
        failed = sum(1 for c in run.checks if not c.ok)
        lines.append(f"{len(run.checks) - failed} passed, {failed} failed")
        state.emit(fmt, doc, "\n".join(lines))
        if not run.ok:
            ctx.exit(1)
