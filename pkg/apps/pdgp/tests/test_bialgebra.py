"""Tests for set partitions, the coproduct table and the primitive projection."""

import pytest

from apps.pdgp.core.errors import BadParameter, NonMultiplicativeInvariant, SizeCapExceeded
from apps.pdgp.services import graphs
from apps.pdgp.services.bialgebra import (
    SetPartition,
    coproduct_table,
    eval_on_projection,
    pdgp_via_coproduct,
    set_partitions,
)
from apps.pdgp.services.invariants import Invariant, pdgp
from apps.pdgp.services.polynomial import BiPoly, UniPoly

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


# ---------------------------------------------------------------------------
# a. Set partitions
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("n", range(0, 9))
def test_partition_counts_are_bell_numbers(n):
    parts = list(set_partitions((1 << n) - 1))
    assert len(parts) == BELL[n]
    assert len({p.blocks for p in parts}) == BELL[n]
    assert all(p.ground == (1 << n) - 1 for p in parts)


def test_partitions_of_sparse_subset():
    parts = list(set_partitions(0b10100))
    assert [p.as_lists() for p in parts] == [[[2, 4]], [[2], [4]]]


def test_partition_blocks_in_canonical_order():
    for p in set_partitions(0b111111):
        lows = [b & -b for b in p.blocks]
        assert lows == sorted(lows)


@pytest.mark.parametrize("blocks", [(0b01, 0b11), (0b10, 0b01), (0, 0b1)])
def test_invalid_partitions_rejected(blocks):
    with pytest.raises(BadParameter):
        SetPartition(blocks)


def test_partition_cap(override_env):
    override_env(PDGP_PARTITION_CAP=4)
    with pytest.raises(SizeCapExceeded):
        next(set_partitions(0b11111))


# ---------------------------------------------------------------------------
# b. Coproduct
# ---------------------------------------------------------------------------
def test_coproduct_table_sizes():
    assert coproduct_table(graphs.empty_graph(1)) == [(0, 1), (1, 0)]
    assert len(coproduct_table(graphs.complete_graph(3))) == 8


def test_coproduct_identity(k2):
    assert pdgp_via_coproduct(k2) == UniPoly({0: 2, 2: 2})
    for seed in range(10):
        g = graphs.random_graph(6, 0.5, seed=seed)
        assert pdgp_via_coproduct(g) == pdgp(g)


# ---------------------------------------------------------------------------
# c. Projection
# ---------------------------------------------------------------------------
def test_projection_spot_values(k2):
    k1 = graphs.complete_graph(1)
    assert eval_on_projection("pdgp", k1) == UniPoly.constant(2)
    assert eval_on_projection(Invariant.PDGP, k2) == UniPoly({0: -2, 2: 2})
    assert eval_on_projection(Invariant.SKEW, k1) == UniPoly.monomial(1, var="w")
    # Q(K_2) - Q(K_1)^2 = (1 + w^2) - w^2
    skew = eval_on_projection(Invariant.SKEW, k2)
    assert skew == UniPoly.constant(1, var="w")
    assert skew.is_constant()


def test_projection_of_empty_graph_is_zero():
    assert eval_on_projection(Invariant.PDGP, graphs.empty_graph(0)).is_zero()
    assert eval_on_projection(Invariant.REFINED, graphs.empty_graph(0)) == BiPoly()


def test_projection_vanishes_on_disjoint_unions():
    g = graphs.disjoint_union(graphs.path(3), graphs.complete_graph(1))
    for inv in (Invariant.PDGP, Invariant.REFINED, Invariant.SKEW, Invariant.RANK):
        assert eval_on_projection(inv, g).is_zero(), inv.value


def test_projection_runs_on_connected_graphs_up_to_five():
    for n in range(1, 6):
        for g in graphs.enumerate_labeled_graphs(n):
            if len(graphs.connected_components(g)) != 1:
                continue
            eval_on_projection(Invariant.PDGP, g)
            skew = eval_on_projection(Invariant.SKEW, g)
            if n >= 2:
                assert skew.is_constant(), f"edges={g.edges()}: {skew}"


def test_projection_rejects_non_multiplicative(k2):
    with pytest.raises(NonMultiplicativeInvariant):
        eval_on_projection("kpart", k2)
    with pytest.raises(BadParameter):
        eval_on_projection("volume", k2)


def test_projection_cap(override_env):
    override_env(PDGP_PROJECTION_CAP=3)
    with pytest.raises(SizeCapExceeded):
        eval_on_projection(Invariant.PDGP, graphs.path(4))
