"""
Exhaustive and seeded sweeps that check the identities the toolkit relies on.

Each sweep returns a :class:`VerifyReport`; a report with zero defects
means every checked instance satisfied the identity exactly.
"""
from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable

import numpy as np

from apps.pdgp.core.config import get_settings
from apps.pdgp.core.errors import BadParameter, SizeCapExceeded
from apps.pdgp.models.schemas import VerifyLine, VerifyReport
from apps.pdgp.services import chords, graphs, invariants
from apps.pdgp.services.gf2 import corank, rank_of_subset
from apps.pdgp.services.graphs import SimpleGraph
from apps.pdgp.services.polynomial import Poly
from apps.pdgp.services.recurrence import pdgp_recursive

logger: logging.Logger = logging.getLogger(__name__)


class _Sweep:
    def __init__(self, check: str) -> None:
        self.check = check
        self.lines: list[VerifyLine] = []
        self.first_defect: str | None = None
        self._t0 = time.monotonic()

    def add(self, label: str, checked: int, defects: int, word: str = "defects") -> None:
        self.lines.append(VerifyLine(label=label, checked=checked, defects=defects, defect_word=word))
        logger.info("%s %s: %d checked, %d %s", self.check, label, checked, defects, word)

    def defect(self, description: str) -> None:
        if self.first_defect is None:
            self.first_defect = description
            logger.warning("%s: first defect: %s", self.check, description)

    def report(self) -> VerifyReport:
        logger.info("%s finished in %.2fs", self.check, time.monotonic() - self._t0)
        return VerifyReport(
            check=self.check,
            lines=self.lines,
            checked=sum(line.checked for line in self.lines),
            defects=sum(line.defects for line in self.lines),
            first_defect=self.first_defect,
        )


def _check_graph_cap(nmax: int) -> None:
    cap = get_settings().PDGP_GRAPH_ENUM_CAP
    if nmax > cap:
        raise SizeCapExceeded("labeled graph enumeration", nmax, cap)


def _check_diagram_cap(mmax: int) -> None:
    cap = get_settings().PDGP_DIAGRAM_ENUM_CAP
    if mmax > cap:
        raise SizeCapExceeded("chord diagram enumeration", mmax, cap)


def _edges_text(graph: SimpleGraph) -> str:
    return f"n={graph.n} edges={','.join(f'{u}-{v}' for u, v in graph.edges())}"


# ---------------------------------------------------------------------------
# Four-term relation
# ---------------------------------------------------------------------------
def verify_four_term(
    nmax: int,
    *,
    random_count: int = 0,
    random_nmax: int = 10,
    seed: int = 0,
    extended: bool = False,
) -> VerifyReport:
    """Four-term defect over all labeled graphs with ``2 <= n <= nmax`` and
    every ordered pair, then over *random_count* seeded random graphs."""
    _check_graph_cap(nmax)
    selected = invariants.FOUR_TERM_EXTENDED if extended else invariants.FOUR_TERM_CORE
    sweep = _Sweep("fourterm")
    memo: dict[tuple[invariants.Invariant, tuple[int, ...]], Poly] = {}

    def value(inv: invariants.Invariant, graph: SimpleGraph) -> Poly:
        key = (inv, graph.adj)
        if key not in memo:
            memo[key] = invariants.INVARIANTS[inv](graph)
        return memo[key]

    def defect_of(inv: invariants.Invariant, graph: SimpleGraph, a: int, b: int) -> Poly:
        toggled = graphs.toggle_edge(graph, a, b)
        tilde = graphs.neighbor_toggle(graph, a, b)
        tilde_toggled = graphs.toggle_edge(tilde, a, b)
        return value(inv, graph) - value(inv, toggled) - value(inv, tilde) + value(inv, tilde_toggled)  # type: ignore[operator]

    def check(graph: SimpleGraph, pairs: Iterable[tuple[int, int]]) -> tuple[int, int]:
        checked = defects = 0
        for a, b in pairs:
            for inv in selected:
                checked += 1
                if not defect_of(inv, graph, a, b).is_zero():
                    defects += 1
                    sweep.defect(f"{inv.value} on {_edges_text(graph)} pair=({a},{b})")
        return checked, defects

    for n in range(2, nmax + 1):
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
        count = checked = defects = 0
        for graph in graphs.enumerate_labeled_graphs(n):
            c, d = check(graph, pairs)
            count += 1
            checked += c
            defects += d
        sweep.add(f"n={n}: {count} graphs × {len(pairs)} pairs × {len(selected)} invariants", checked, defects)
        memo.clear()

    if random_count:
        if random_nmax < 2:
            raise BadParameter("random four-term sweep needs random_nmax >= 2")
        rng = np.random.default_rng(seed)
        checked = defects = 0
        for _ in range(random_count):
            n = int(rng.integers(2, random_nmax + 1))
            graph = graphs.random_graph(n, 0.5, int(rng.integers(0, 2**31)))
            a, b = (int(x) for x in rng.choice(n, size=2, replace=False))
            c, d = check(graph, [(a, b)])
            checked += c
            defects += d
        memo.clear()
        sweep.add(f"random: {random_count} graphs (n<={random_nmax}, seed={seed}) × {len(selected)} invariants", checked, defects)
    return sweep.report()


# ---------------------------------------------------------------------------
# Chord-diagram identities
# ---------------------------------------------------------------------------
def _diagram_sweep(
    check: str, mmax: int, predicate: Callable[[chords.ChordDiagram], int], word: str = "mismatches"
) -> VerifyReport:
    _check_diagram_cap(mmax)
    sweep = _Sweep(check)
    for m in range(1, mmax + 1):
        count = bad = checked = 0
        for diagram in chords.enumerate_diagrams(m):
            count += 1
            failures = predicate(diagram)
            checked += 1
            if failures:
                bad += 1
                sweep.defect(f"{check} fails on {diagram.to_text()}")
        sweep.add(f"m={m}: {count} diagrams", checked, bad, word)
    return sweep.report()


def verify_theorem1(mmax: int) -> VerifyReport:
    """Face-traced ``Σ z^{ε(G^A)}`` equals the rank formula on the intersection graph."""
    def mismatch(diagram: chords.ChordDiagram) -> int:
        by_ribbon = chords.pdgp_via_ribbon(diagram, threads=1)
        by_rank = invariants.pdgp(chords.intersection_graph(diagram), threads=1)
        return int(by_ribbon != by_rank)

    return _diagram_sweep("theorem1", mmax, mismatch)


def verify_beck(mmax: int) -> VerifyReport:
    """Boundary components of the bouquet = corank of the intersection matrix + 1."""
    def mismatch(diagram: chords.ChordDiagram) -> int:
        matrix = chords.intersection_graph(diagram).matrix
        return int(chords.face_count(diagram) != corank(matrix) + 1)

    return _diagram_sweep("beck", mmax, mismatch)


def verify_rank_genus(mmax: int) -> VerifyReport:
    """``ε(F_A) = rank(M_A)`` for every diagram and every chord subset."""
    def mismatch(diagram: chords.ChordDiagram) -> int:
        matrix = chords.intersection_graph(diagram).matrix
        return sum(
            chords.euler_genus_spanning(diagram, a) != rank_of_subset(matrix, a)
            for a in range(1 << diagram.m)
        )

    return _diagram_sweep("rankgenus", mmax, mismatch)


def verify_self_duality(mmax: int, *, samples: int = 3, seed: int = 0) -> VerifyReport:
    """Genus multiset of ``{G^{B⊕A}}`` equals that of ``{G^B}`` for sampled ``A``."""
    rng = np.random.default_rng(seed)

    def mismatch(diagram: chords.ChordDiagram) -> int:
        total = 1 << diagram.m
        base = sorted(chords.partial_dual_genus(diagram, b) for b in range(total))
        bad = 0
        for _ in range(samples):
            a = int(rng.integers(0, total))
            shifted = sorted(chords.partial_dual_genus(diagram, b ^ a) for b in range(total))
            bad += shifted != base
        return bad

    return _diagram_sweep("selfdual", mmax, mismatch)


# ---------------------------------------------------------------------------
# Degree-one recurrence
# ---------------------------------------------------------------------------
def random_graph_with_leaf(n: int, rng: np.random.Generator) -> SimpleGraph:
    """Random ``G(n-1, 1/2)`` plus one pendant vertex ``n-1``."""
    base = graphs.random_graph(n - 1, 0.5, int(rng.integers(0, 2**31)))
    anchor = int(rng.integers(0, n - 1))
    return graphs.from_edge_list(n, base.edges() + [(anchor, n - 1)])


def verify_recurrence(
    nmax: int, *, random_count: int = 0, random_nmax: int = 14, seed: int = 0
) -> VerifyReport:
    """Recursive evaluation equals direct enumeration."""
    _check_graph_cap(nmax)
    sweep = _Sweep("recurrence")
    for n in range(0, nmax + 1):
        count = bad = 0
        for graph in graphs.enumerate_labeled_graphs(n):
            count += 1
            if pdgp_recursive(graph) != invariants.pdgp(graph):
                bad += 1
                sweep.defect(f"recurrence fails on {_edges_text(graph)}")
        sweep.add(f"n={n}: {count} graphs", count, bad, "mismatches")

    if random_count:
        if random_nmax < 2:
            raise BadParameter("random recurrence sweep needs random_nmax >= 2")
        rng = np.random.default_rng(seed)
        bad = 0
        for _ in range(random_count):
            graph = random_graph_with_leaf(int(rng.integers(2, random_nmax + 1)), rng)
            if pdgp_recursive(graph) != invariants.pdgp(graph):
                bad += 1
                sweep.defect(f"recurrence fails on {_edges_text(graph)}")
        sweep.add(f"random: {random_count} graphs with a leaf (n<={random_nmax}, seed={seed})", random_count, bad, "mismatches")
    return sweep.report()


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------
def verify_closed_forms(kn_max: int = 12, kmn_max: int = 6) -> VerifyReport:
    sweep = _Sweep("closed")
    bad = 0
    for n in range(1, kn_max + 1):
        if invariants.pdgp(graphs.complete_graph(n)) != invariants.kn_closed(n):
            bad += 1
            sweep.defect(f"K_{n}")
    sweep.add(f"K_n for n=1..{kn_max}", kn_max, bad, "mismatches")

    bad = checked = 0
    for m in range(1, kmn_max + 1):
        for n in range(1, kmn_max + 1):
            checked += 1
            if invariants.pdgp(graphs.complete_bipartite(m, n)) != invariants.kmn_closed(m, n):
                bad += 1
                sweep.defect(f"K_({m},{n})")
    sweep.add(f"K_(m,n) for m,n=1..{kmn_max}", checked, bad, "mismatches")
    return sweep.report()
