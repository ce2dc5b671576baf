import pytest

from ryser import (
    GF,
    affine_plane,
    blowup_graph,
    monochromatic_components,
    truncated_projective_plane,
    validate,
    verify_affine_axioms,
)
from ryser.errors import PreconditionError
from ryser.planes import SUPPORTED_ORDERS


@pytest.mark.parametrize("q", sorted(SUPPORTED_ORDERS))
def test_field_axioms(q):
    f = GF(q)
    els = f.elements()
    assert len(els) == q
    for a in els:
        assert f.add[a][0] == a
        assert f.mul[a][1] == a
        # additive inverse exists
        assert any(f.add[a][b] == 0 for b in els)
        if a != 0:
            assert any(f.mul[a][b] == 1 for b in els)
    # distributivity on all triples
    for a in els:
        for b in els:
            for c in els:
                assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]


def test_gf4_is_not_integers_mod_4():
    f = GF(4)
    assert f.add[2][2] == 0  # characteristic 2
    assert f.mul[2][2] == 3  # x * x = x + 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_affine_plane_axioms(q):
    plane = affine_plane(q)
    assert len(plane.points) == q * q
    assert len(plane.lines) == q * q + q
    assert len(plane.parallel_classes) == q + 1
    assert plane.r == q + 1
    assert verify_affine_axioms(plane.points, plane.lines, order=q) == []


def test_unsupported_order_rejected():
    with pytest.raises(PreconditionError):
        affine_plane(6)
    with pytest.raises(PreconditionError):
        GF(12)


def test_axiom_checker_flags_broken_family():
    plane = affine_plane(2)
    lines = list(plane.lines)[:-1]  # drop one line: some pair now uncovered
    rules = [v.rule for v in verify_affine_axioms(plane.points, lines, order=2)]
    assert rules  # must complain
    assert any("pair" in r or "parallel" in r or "disjoint" in r for r in rules)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_truncated_plane_shape(q):
    h = truncated_projective_plane(q)
    assert h.r == q + 1
    assert h.m == q * q
    assert h.n == q * q + q
    assert validate(h) == []
    # every pair of kept lines still meets: either an affine point or a slope
    for i in range(h.m):
        for j in range(i + 1, h.m):
            assert h.edges[i] & h.edges[j]


@pytest.mark.parametrize("q,b", [(2, 1), (2, 3), (3, 2)])
def test_blowup_structure(q, b):
    g = blowup_graph(affine_plane(q), b)
    assert g.n == b * q * q
    assert g.r == q + 1
    comps = monochromatic_components(g)
    for color in range(1, g.r + 1):
        sizes = comps.sizes(color)
        assert len(sizes) == q  # one component per line of the class
        assert all(s == b * q for s in sizes)
    # vertices over one point always share all colors
    for v in range(0, g.n, b):
        for w in range(v + 1, v + b):
            assert g.mask(v, w) == (1 << g.r) - 1


def test_blowup_needs_positive_b():
    with pytest.raises(PreconditionError):
        blowup_graph(affine_plane(2), 0)
