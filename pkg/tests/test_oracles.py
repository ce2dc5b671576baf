import pytest
from hypothesis import given, settings, strategies as st

from ryser import (
    Hypergraph,
    alpha_exact,
    alpha_prime_exact,
    dual,
    gen_delta2,
    gen_transitive_colored,
    max_partial_cover_distinct,
    min_component_cover,
    nu_exact,
    parameters_exact,
    rho_exact,
    tau_bruteforce,
    tau_exact,
    truncated_projective_plane,
)
from ryser.errors import PreconditionError
from ryser.generators import gen_t_intersecting_hypergraph


def test_truncated_plane_q2():
    p = parameters_exact(truncated_projective_plane(2))
    assert (p.tau, p.nu, p.rho, p.delta, p.alpha_prime, p.t_level) == (2, 1, 3, 2, 2, 1)
    assert p.alpha == 4  # n - tau


def test_single_edge():
    h = Hypergraph(3, [["a", "b", "c"]])
    p = parameters_exact(h)
    assert (p.tau, p.nu, p.rho, p.alpha, p.alpha_prime) == (1, 1, 1, 2, 1)
    assert p.t_level == 3  # lone edge meets itself everywhere


def test_tau_raises_on_empty_edge():
    with pytest.raises(PreconditionError):
        tau_exact(Hypergraph(0, [[]]))


def test_rho_none_when_vertex_uncovered():
    h = Hypergraph(2, [["a", "b"]], vertices=["a", "b", "z"])
    assert rho_exact(h) is None


def test_size_limits_enforced():
    h = gen_delta2(3, 30, seed=0, mode="disjoint")  # 90 vertices
    with pytest.raises(PreconditionError):
        tau_exact(h)
    assert tau_exact(h, max_vertices=100) == 30


@given(st.integers(2, 4), st.integers(1, 8), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_tau_branch_and_bound_matches_bruteforce(r, m, seed):
    h = gen_delta2(r, m, seed=seed)
    if h.n <= 20:
        assert tau_exact(h) == tau_bruteforce(h)


@given(st.integers(3, 5), st.integers(1, 10), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_tau_nu_sandwich(r, m, seed):
    # nu <= tau <= r * nu for any r-uniform hypergraph
    h = gen_delta2(r, m, seed=seed)
    tau = tau_exact(h, max_vertices=80)
    nu = nu_exact(h, max_vertices=80)
    assert nu <= tau <= r * nu


@given(st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_alpha_prime_equals_nu_of_dual(seed):
    h, _ = gen_t_intersecting_hypergraph(3, 1, 5, 3, seed=seed)
    assert alpha_prime_exact(dual(h)) == nu_exact(h)
    assert alpha_exact(h) == h.n - tau_exact(h)


# -- colored oracles -----------------------------------------------------------


def test_min_component_cover_spanning_color():
    g = gen_transitive_colored(8, 3, 2, seed=3)
    cov = min_component_cover(g)
    assert cov.covered_count == g.n
    # re-check optimality greedily: no single component may span unless size 1
    from ryser.colored import monochromatic_components

    comps = monochromatic_components(g)
    if any(len(c) == g.n for col in range(1, 4) for c in comps.of_color(col)):
        assert cov.size == 1


def test_min_component_cover_two_color_bipartition():
    # color 1 splits {0,1} / {2,3}; color 2 is complete: optimum is one part
    masks = [[0] * 4 for _ in range(4)]
    for u in range(4):
        for v in range(4):
            if u != v:
                masks[u][v] = 0b10
    for u, v in ((0, 1), (2, 3)):
        masks[u][v] |= 0b01
        masks[v][u] |= 0b01
    from ryser import ColoredCompleteGraph

    g = ColoredCompleteGraph(4, 2, masks)
    assert min_component_cover(g).size == 1


def test_max_partial_cover_is_maximum_by_enumeration():
    from itertools import product

    from ryser.colored import monochromatic_components

    for seed in range(8):
        g = gen_transitive_colored(7, 3, 1, seed=seed)
        cov = max_partial_cover_distinct(g)
        comps = monochromatic_components(g)
        best = 0
        for omit in range(1, 4):
            colors = [c for c in range(1, 4) if c != omit]
            for choice in product(*(comps.of_color(c) for c in colors)):
                best = max(best, len(frozenset().union(*choice)))
        assert cov.covered_count == best
        colors_used = [c for c, _ in cov.parts]
        assert len(set(colors_used)) == len(colors_used) == g.r - 1


def test_min_component_cover_deterministic():
    g = gen_transitive_colored(9, 4, 1, seed=99)
    assert min_component_cover(g) == min_component_cover(g)
