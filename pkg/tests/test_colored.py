import pytest
from hypothesis import given, settings, strategies as st

from ryser import (
    ColoredCompleteGraph,
    FormatError,
    Hypergraph,
    PartialColoredGraph,
    components_of,
    contract_full_color_classes,
    delete_color,
    gen_transitive_colored,
    gyarfas_graph,
    is_valid_component_cover,
    isomorphic_colored,
    merge_color_components,
    monochromatic_components,
    parse_cgf,
    to_cgf,
    transitive_closure,
)
from ryser.colored import ComponentCover, lift_cover
from ryser.errors import PreconditionError


def _mask_graph(n, r, pairs):
    """pairs: {(u,v): iterable of 1-based colors}; must list every pair."""
    masks = [[0] * n for _ in range(n)]
    for (u, v), cols in pairs.items():
        m = 0
        for c in cols:
            m |= 1 << (c - 1)
        masks[u][v] = masks[v][u] = m
    return ColoredCompleteGraph(n, r, masks)


def test_rejects_uncolored_pair():
    with pytest.raises(PreconditionError):
        _mask_graph(3, 2, {(0, 1): [1], (0, 2): [2], (1, 2): []})


def test_rejects_out_of_range_color():
    with pytest.raises(PreconditionError):
        _mask_graph(2, 2, {(0, 1): [3]})


def test_transitivity_flag():
    g = _mask_graph(3, 2, {(0, 1): [1], (0, 2): [1], (1, 2): [2]})
    assert not g.transitive  # 0-1 and 0-2 in color 1 but 1-2 is not
    t = transitive_closure(g)
    assert t.transitive
    assert 1 in t.col(1, 2) and 2 in t.col(1, 2)


def test_components_and_cover_validation():
    g = _mask_graph(4, 2, {
        (0, 1): [1, 2], (0, 2): [1, 2], (1, 2): [1, 2],
        (0, 3): [2], (1, 3): [2], (2, 3): [2],
    })
    idx = monochromatic_components(g)
    assert idx.k(1) == 2 and idx.k(2) == 1  # color 1: triangle plus singleton
    cov = components_of(g, 0, [1, 2])
    assert cov.covered_count == 4 and cov.common_vertex == 0
    assert is_valid_component_cover(g, cov)
    fake = ComponentCover(((1, frozenset([0, 3])),), 2)
    assert not is_valid_component_cover(g, fake)


@given(st.integers(3, 10), st.integers(2, 5), st.integers(0, 2**32))
@settings(max_examples=50, deadline=None)
def test_closure_is_idempotent(n, r, seed):
    g = gen_transitive_colored(n, r, 1, seed)
    assert transitive_closure(g) == g


def test_contract_full_color_classes():
    # vertices 0,1 carry every color; contraction glues them
    g = _mask_graph(3, 2, {(0, 1): [1, 2], (0, 2): [1], (1, 2): [1]})
    c, mapping = contract_full_color_classes(g)
    assert c.n == 2
    assert sorted(map(sorted, mapping)) == [[0, 1], [2]]
    cover = components_of(c, 0, [1])
    lifted = lift_cover(cover, mapping)
    assert lifted.covered_count == 3


def test_delete_color_shifts_down():
    g = _mask_graph(3, 3, {(0, 1): [1, 3], (0, 2): [3], (1, 2): [3]})
    d = delete_color(g, 2)  # color 2 is unused; 3 slides down to 2
    assert d.r == 2
    assert d.col(0, 1) == frozenset([1, 2])
    assert d.col(0, 2) == frozenset([2])
    with pytest.raises(PreconditionError):
        delete_color(d, 2)  # (0,2) would lose its only color


def test_merge_color_components_adds_cross_pairs():
    g = _mask_graph(4, 2, {
        (0, 1): [1, 2], (2, 3): [1, 2], (0, 2): [2], (0, 3): [2], (1, 2): [2], (1, 3): [2],
    })
    assert monochromatic_components(g).k(1) == 2
    merged = merge_color_components(g, 1, 0, 1)
    assert merged.transitive
    assert 1 in merged.col(0, 2)
    assert monochromatic_components(merged).k(1) == 1


# -- gyarfas graph -------------------------------------------------------------


def test_gyarfas_intersecting_triangle():
    h = Hypergraph(
        3,
        [["a1", "b1", "c1"], ["a1", "b2", "c2"], ["a2", "b1", "c2"]],
        classes=[["a1", "a2"], ["b1", "b2"], ["c1", "c2"]],
    )
    g = gyarfas_graph(h)
    assert isinstance(g, ColoredCompleteGraph)
    assert g.col(0, 1) == frozenset([1])  # share the class-1 vertex a1
    assert g.col(0, 2) == frozenset([2])
    assert g.col(1, 2) == frozenset([3])
    assert g.transitive


def test_gyarfas_disjoint_pair_reported():
    h = Hypergraph(
        2,
        [["a1", "b1"], ["a2", "b2"]],
        classes=[["a1", "a2"], ["b1", "b2"]],
    )
    g = gyarfas_graph(h)
    assert isinstance(g, PartialColoredGraph)
    assert g.disjoint_witness == (0, 1)


def test_gyarfas_requires_classes():
    with pytest.raises(PreconditionError):
        gyarfas_graph(Hypergraph(2, [["a", "b"]]))


# -- CGF -----------------------------------------------------------------------


def test_parse_cgf_example():
    text = "colored n 3 r 2\ne 0 1 1\ne 0 2 1,2\ne 1 2 2\n"
    g = parse_cgf(text)
    assert g.n == 3 and g.r == 2
    assert g.col(0, 2) == frozenset([1, 2])


@pytest.mark.parametrize(
    "text",
    [
        "colored n 3 r 2\ne 0 1 1\n",  # missing pairs
        "colored n 2 r 2\ne 1 0 1\n",  # u >= v
        "colored n 2 r 2\ne 0 1 3\n",  # color out of range
        "colored n 2 r 2\ne 0 1 1\ne 0 1 2\n",  # duplicate pair
        "e 0 1 1\n",  # missing header
        "colored n 2 r 2\ne 0 1 0\n",  # colors are 1-based
    ],
)
def test_parse_cgf_rejects(text):
    with pytest.raises(FormatError):
        parse_cgf(text)


@given(st.integers(2, 9), st.integers(2, 5), st.integers(0, 2**32))
@settings(max_examples=50, deadline=None)
def test_cgf_round_trip(n, r, seed):
    g = gen_transitive_colored(n, r, 1, seed)
    assert parse_cgf(to_cgf(g)) == g


# -- isomorphism ---------------------------------------------------------------


def test_isomorphic_colored_color_swap():
    g1 = _mask_graph(3, 2, {(0, 1): [1], (0, 2): [1], (1, 2): [1]})
    g2 = _mask_graph(3, 2, {(0, 1): [2], (0, 2): [2], (1, 2): [2]})
    assert isomorphic_colored(g1, g2)


def test_isomorphic_colored_distinguishes():
    g1 = _mask_graph(3, 2, {(0, 1): [1], (0, 2): [1], (1, 2): [1]})
    g2 = _mask_graph(3, 2, {(0, 1): [1], (0, 2): [1], (1, 2): [2]})
    assert not isomorphic_colored(g1, g2)


@given(st.integers(3, 8), st.integers(2, 4), st.integers(0, 2**31), st.integers(0, 2**31))
@settings(max_examples=30, deadline=None)
def test_isomorphic_colored_invariant_under_relabeling(n, r, seed, permseed):
    from ryser.generators import SplitMix64

    g = gen_transitive_colored(n, r, 1, seed)
    rng = SplitMix64(permseed)
    perm = list(range(n))
    rng.shuffle(perm)
    masks = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v:
                masks[perm[u]][perm[v]] = g.masks[u][v]
    assert isomorphic_colored(g, ColoredCompleteGraph(n, r, masks))
