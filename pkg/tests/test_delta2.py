"""The max-degree-2 cover: dual reduction, per-component edge covers, and the
(r-1)*nu certificate on seeded instances."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ryser import (
    Hypergraph,
    dual,
    gen_delta2,
    nu_exact,
    reduce_dual,
    ryser_delta2,
    tau_exact,
)
from ryser.delta2 import classify_component, edge_cover_graph
from ryser.errors import PreconditionError
from ryser.graphs import (
    adjacency_masks,
    max_independent_set,
    max_matching,
    max_matching_size_bruteforce,
    min_edge_cover_size,
)


def test_two_disjoint_triples():
    h = Hypergraph(3, [["a", "b", "c"], ["x", "y", "z"]])
    cover = ryser_delta2(h)
    assert len(cover) == 2
    assert all(set(cover) & e for e in h.edges)


def test_shared_vertex_pair_needs_one():
    h = Hypergraph(3, [["a", "b", "c"], ["a", "y", "z"]])
    assert ryser_delta2(h) == ("a",)


def test_loose_cycle_alternates():
    h = gen_delta2(3, 6, seed=0, mode="cycle")
    cover = ryser_delta2(h)
    assert len(cover) == 3  # six edges, every chosen vertex hits two
    assert tau_exact(h) == 3


def test_empty_hypergraph():
    assert ryser_delta2(Hypergraph(3, [])) == ()


def test_degree_three_rejected():
    h = Hypergraph(3, [["a", "b", "c"], ["a", "d", "e"], ["a", "f", "g"]])
    with pytest.raises(PreconditionError):
        ryser_delta2(h)


def test_uniformity_required():
    h = Hypergraph(3, [["a", "b"]])
    with pytest.raises(PreconditionError):
        ryser_delta2(h)


@pytest.mark.parametrize("mode", ["mixed", "cycle", "chain", "disjoint"])
@pytest.mark.parametrize("r", [3, 4, 5])
def test_seeded_instances_within_bound(mode, r):
    for i in range(25):
        m = 1 + (i % 12)
        h = gen_delta2(r, m, seed=1000 * r + i, mode=mode)
        cover = ryser_delta2(h, verify=False)
        assert all(set(cover) & e for e in h.edges)
        assert tau_exact(h, max_vertices=80) <= len(cover)
        assert len(cover) <= (r - 1) * nu_exact(h, max_vertices=80)


# -- dual reduction -------------------------------------------------------------


def test_reduce_dual_forces_unit_only_vertices():
    # b meets only edge 0; a meets both: the reduction keeps the pair {0,1}
    # through a and never forces anything
    h = Hypergraph(3, [["a", "b", "c"], ["a", "x", "y"]])
    red = reduce_dual(dual(h), edge_labels=list(h.vertices))
    assert red.forced == ()
    assert red.edges == (("e0", "e1"),)
    assert red.sources[("e0", "e1")] == ("a",)


def test_reduce_dual_forced_when_only_unit_stars():
    h = Hypergraph(3, [["a", "b", "c"], ["x", "y", "z"]])
    red = reduce_dual(dual(h), edge_labels=list(h.vertices))
    assert red.edges == ()
    assert red.forced == ("a", "x")  # smallest label per hyperedge


def test_classify_component_shapes():
    # C4
    adj = adjacency_masks(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert classify_component([0, 1, 2, 3], adj) == "cycle"
    # K4
    adj = adjacency_masks(4, list(itertools.combinations(range(4), 2)))
    assert classify_component([0, 1, 2, 3], adj) == "complete"
    # path
    adj = adjacency_masks(3, [(0, 1), (1, 2)])
    assert classify_component([0, 1, 2], adj) == "general"


# -- graph edge covers ----------------------------------------------------------


def test_edge_cover_c5():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    cover = edge_cover_graph(5, edges, r=3)
    assert len(cover) == 3
    assert set().union(*[set(e) for e in cover]) == set(range(5))


def test_edge_cover_k4():
    edges = list(itertools.combinations(range(4), 2))
    cover = edge_cover_graph(4, edges, r=5)
    assert len(cover) == 2


def test_edge_cover_petersen():
    pet = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
           (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
           (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    cover = edge_cover_graph(10, pet, r=4)
    assert set().union(*[set(e) for e in cover]) == set(range(10))
    # Gallai: optimum is 10 - 5 = 5; construction may pay up to (r-1)*alpha = 12
    assert min_edge_cover_size(10, pet) == 5
    assert 5 <= len(cover) <= 12


def test_edge_cover_rejects_isolated_vertex():
    with pytest.raises(PreconditionError):
        edge_cover_graph(3, [(0, 1)], r=3)


# -- oracle helpers cross-checked -----------------------------------------------


@given(st.integers(2, 9), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_max_matching_against_bruteforce(n, seed):
    from ryser.generators import SplitMix64

    rng = SplitMix64(seed)
    edges = sorted({tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(n * 2)})
    edges = [(u, v) for u, v in edges if u != v]
    assert len(max_matching(n, edges)) == max_matching_size_bruteforce(n, edges)


@given(st.integers(1, 10), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_max_independent_set_against_subsets(n, seed):
    from ryser.generators import SplitMix64

    rng = SplitMix64(seed)
    edges = sorted({tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(n)})
    edges = [(u, v) for u, v in edges if u != v]
    adj = adjacency_masks(n, edges)
    got = max_independent_set(adj, n).bit_count()
    best = 0
    for bits in range(1 << n):
        if all(not (adj[v] & bits) for v in range(n) if bits >> v & 1):
            best = max(best, bits.bit_count())
    assert got == best
