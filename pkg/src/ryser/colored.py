"""Complete graphs whose edges carry nonempty sets of colors drawn from [r].

Color sets are stored as bitmasks (bit c-1 = color c, so r <= 30). The
central structural notion is transitivity: color i on uv and on vw forces i
on uw. Transitive colorings are exactly systems of r vertex partitions, and
the monochromatic components of color i are the blocks of partition i, which
are cliques in that color.

Includes the edge-intersection construction that turns an r-partite
intersecting hypergraph into such a graph (vertices = hyperedges, colors =
the partite classes where two hyperedges meet), the CGF text format, and
canonical forms for isomorphism up to vertex AND color relabeling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import FormatError, PreconditionError
from .hypergraph import Hypergraph, validate

MAX_COLORS = 30


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ColoredCompleteGraph:
    """Complete graph on vertices 0..n-1 with color-set masks on every pair.

    The component index (per color: the partition of V into monochromatic
    components) and the transitivity flag are computed eagerly at
    construction, so concurrent readers always see a fully built index.
    """

    def __init__(self, n: int, r: int, masks: Sequence[Sequence[int]]):
        if n < 1:
            raise PreconditionError("need at least one vertex")
        if not 1 <= r <= MAX_COLORS:
            raise PreconditionError(f"r must be in 1..{MAX_COLORS}, got {r}")
        self.n = n
        self.r = r
        full = (1 << r) - 1
        mm: list[list[int]] = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                x = masks[u][v]
                if x != masks[v][u]:
                    raise PreconditionError(f"asymmetric colors on pair ({u},{v})")
                if x == 0:
                    raise PreconditionError(f"pair ({u},{v}) carries no color")
                if x & ~full:
                    raise PreconditionError(f"pair ({u},{v}) uses a color outside 1..{r}")
                mm[u][v] = x
        self.masks = mm
        self._components = self._build_components()
        self.transitive = self._check_transitive()

    def mask(self, u: int, v: int) -> int:
        return self.masks[u][v]

    def col(self, u: int, v: int) -> frozenset[int]:
        """Colors of the pair uv, 1-based."""
        return frozenset(b + 1 for b in _bits(self.masks[u][v]))

    def _build_components(self) -> tuple[tuple[frozenset[int], ...], ...]:
        per_color = []
        for c in range(self.r):
            bit = 1 << c
            parent = list(range(self.n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u in range(self.n):
                mu = self.masks[u]
                for v in range(u + 1, self.n):
                    if mu[v] & bit:
                        ru, rv = find(u), find(v)
                        if ru != rv:
                            parent[max(ru, rv)] = min(ru, rv)
            blocks: dict[int, list[int]] = {}
            for v in range(self.n):
                blocks.setdefault(find(v), []).append(v)
            comps = tuple(frozenset(blocks[k]) for k in sorted(blocks))
            per_color.append(comps)
        return tuple(per_color)

    def _check_transitive(self) -> bool:
        for c in range(self.r):
            bit = 1 << c
            for comp in self._components[c]:
                vs = sorted(comp)
                for u, v in itertools.combinations(vs, 2):
                    if not self.masks[u][v] & bit:
                        return False
        return True

    def component_of(self, v: int, color: int) -> frozenset[int]:
        if not 1 <= color <= self.r:
            raise PreconditionError(f"color {color} out of range 1..{self.r}")
        for comp in self._components[color - 1]:
            if v in comp:
                return comp
        raise AssertionError("component index does not partition V")

    def __repr__(self) -> str:
        return f"ColoredCompleteGraph(n={self.n}, r={self.r}, transitive={self.transitive})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self.masks == other.masks

    def __hash__(self):
        return hash((self.n, self.r, tuple(tuple(row) for row in self.masks)))


@dataclass(frozen=True)
class PartialColoredGraph:
    """Edge-intersection graph of a non-intersecting hypergraph.

    Some vertex pairs carry no color, so none of the covering machinery
    applies; `disjoint_witness` names one offending hyperedge pair.
    """

    n: int
    r: int
    col: dict
    disjoint_witness: tuple[int, int]

    @property
    def complete(self) -> bool:
        return False


@dataclass(frozen=True)
class ComponentIndex:
    """Per color: the monochromatic components, each a frozenset of vertices.

    components[c-1] lists color c's components sorted by smallest member;
    for a transitive graph every color's list partitions all of V.
    """

    r: int
    components: tuple[tuple[frozenset[int], ...], ...]

    def k(self, color: int) -> int:
        return len(self.components[color - 1])

    def of_color(self, color: int) -> tuple[frozenset[int], ...]:
        return self.components[color - 1]

    def sizes(self, color: int) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components[color - 1])


@dataclass(frozen=True)
class ComponentCover:
    """A set of (color, component) parts plus bookkeeping.

    covered_count = |union of the parts|; common_vertex, when set, lies in
    every part. Parts are sorted by (color, smallest vertex) and exact
    duplicates (same color, same vertex set) are never repeated.
    """

    parts: tuple[tuple[int, frozenset[int]], ...]
    covered_count: int
    common_vertex: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.parts)

    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for _, comp in self.parts:
            out |= comp
        return frozenset(out)

    @staticmethod
    def build(parts: Iterable[tuple[int, frozenset[int]]], common_vertex: Optional[int] = None) -> "ComponentCover":
        dedup = sorted(set((c, frozenset(s)) for c, s in parts), key=lambda p: (p[0], min(p[1])))
        covered: set[int] = set()
        for _, s in dedup:
            covered |= s
        return ComponentCover(tuple(dedup), len(covered), common_vertex)


def monochromatic_components(g: ColoredCompleteGraph) -> ComponentIndex:
    """Component index of a transitive coloring.

    Each color's components are cliques in that color and partition V; the
    clique property is asserted here (it is the component/clique duality that
    every cover construction leans on).
    """
    if not g.transitive:
        raise PreconditionError("graph is not transitive; apply transitive_closure first")
    return ComponentIndex(g.r, g._components)


def components_of(g: ColoredCompleteGraph, x: int, colors: Iterable[int]) -> ComponentCover:
    """The components through x in the given colors, as a cover with common vertex x."""
    parts = [(c, g.component_of(x, c)) for c in sorted(set(colors))]
    return ComponentCover.build(parts, common_vertex=x)


def is_valid_component_cover(g: ColoredCompleteGraph, cover: ComponentCover, require_spanning: bool = True) -> bool:
    """Every part must be an actual monochromatic component of its color."""
    for c, s in cover.parts:
        if not 1 <= c <= g.r:
            return False
        if s not in g._components[c - 1]:
            return False
    if len(cover.union()) != cover.covered_count:
        return False
    if cover.common_vertex is not None and any(cover.common_vertex not in s for _, s in cover.parts):
        return False
    if require_spanning and cover.covered_count != g.n:
        return False
    return True


# -- constructions -----------------------------------------------------------


def gyarfas_graph(h: Hypergraph):
    """Edge-intersection coloring of an r-partite r-uniform hypergraph.

    Vertices are the hyperedge instances of h; color i lies on a pair iff
    the two hyperedges share their class-i vertex. Intersecting h gives a
    ColoredCompleteGraph (always transitive: two hyperedges meeting a third
    in the same class-i vertex meet each other there too); otherwise a
    PartialColoredGraph is returned.
    """
    if h.classes is None:
        raise PreconditionError("hypergraph has no declared classes")
    bad = validate(h)
    if bad:
        raise PreconditionError(f"hypergraph is not valid r-partite r-uniform: {bad[0]}")
    if h.m < 1:
        raise PreconditionError("need at least one hyperedge")
    if h.r > MAX_COLORS:
        raise PreconditionError(f"r={h.r} exceeds the color budget {MAX_COLORS}")
    class_of = {}
    for ci, c in enumerate(h.classes):
        for v in c:
            class_of[v] = ci
    reps: list[list[Optional[str]]] = []
    for e in h.edges:
        row: list[Optional[str]] = [None] * h.r
        for v in e:
            row[class_of[v]] = v
        reps.append(row)
    n = h.m
    masks = [[0] * n for _ in range(n)]
    witness = None
    for a in range(n):
        for b in range(a + 1, n):
            m = 0
            for ci in range(h.r):
                if reps[a][ci] == reps[b][ci]:
                    m |= 1 << ci
            masks[a][b] = masks[b][a] = m
            if m == 0 and witness is None:
                witness = (a, b)
    if witness is not None:
        col = {}
        for a in range(n):
            for b in range(a + 1, n):
                if masks[a][b]:
                    col[(a, b)] = frozenset(x + 1 for x in _bits(masks[a][b]))
        return PartialColoredGraph(n, h.r, col, witness)
    return ColoredCompleteGraph(n, h.r, masks)


def transitive_closure(g: ColoredCompleteGraph) -> ColoredCompleteGraph:
    """Smallest transitive coloring containing g: color i is added to every
    pair lying in one connected component of color i. Idempotent, and the
    components themselves are unchanged."""
    masks = [[0] * g.n for _ in range(g.n)]
    for c in range(g.r):
        bit = 1 << c
        for comp in g._components[c]:
            vs = sorted(comp)
            for u, v in itertools.combinations(vs, 2):
                masks[u][v] |= bit
                masks[v][u] |= bit
    out = ColoredCompleteGraph(g.n, g.r, masks)
    assert out.transitive
    return out


def contract_full_color_classes(g: ColoredCompleteGraph):
    """Contract every maximal set of vertices pairwise joined in all r colors.

    Returns (contracted graph, mapping) where mapping[i] is the frozenset of
    original vertices behind contracted vertex i. Transitivity makes the
    full-color relation an equivalence, and the induced color sets are
    well-defined (asserted); the result has no full-color pair unless it is
    a single vertex.
    """
    if not g.transitive:
        raise PreconditionError("contraction needs a transitive coloring")
    full = (1 << g.r) - 1
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.masks[u][v] == full:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(find(v), []).append(v)
    mapping = tuple(frozenset(blocks[k]) for k in sorted(blocks))
    reps = [min(b) for b in mapping]
    k = len(mapping)
    masks = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            m = g.masks[reps[i]][reps[j]]
            for u in mapping[i]:
                for v in mapping[j]:
                    assert g.masks[u][v] == m, "contraction color sets are not well-defined"
            masks[i][j] = masks[j][i] = m
    return ColoredCompleteGraph(k, g.r, masks), mapping


def lift_cover(cover: ComponentCover, mapping: Sequence[frozenset[int]]) -> ComponentCover:
    """Map a cover of a contracted graph back to the original vertex set."""
    parts = []
    for c, comp in cover.parts:
        blown: set[int] = set()
        for i in comp:
            blown |= mapping[i]
        parts.append((c, frozenset(blown)))
    common = None
    if cover.common_vertex is not None:
        common = min(mapping[cover.common_vertex])
    return ComponentCover.build(parts, common_vertex=common)


def delete_color(g: ColoredCompleteGraph, color: int) -> ColoredCompleteGraph:
    """Drop one color; colors above it shift down by one. Errors if some pair
    would be left colorless."""
    if not 1 <= color <= g.r:
        raise PreconditionError(f"color {color} out of range 1..{g.r}")
    if g.r == 1:
        raise PreconditionError("cannot delete the only color")
    bit = 1 << (color - 1)
    low = bit - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.masks[u][v] == bit:
                raise PreconditionError(f"pair ({u},{v}) carries only color {color}")
    masks = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            m = g.masks[u][v]
            masks[u][v] = (m & low) | ((m >> 1) & ~low)
    return ColoredCompleteGraph(g.n, g.r - 1, masks)


def merge_color_components(g: ColoredCompleteGraph, color: int, a: int, b: int) -> ColoredCompleteGraph:
    """Coarsen one color's partition by merging its components #a and #b
    (indices into the component list). Preserves transitivity."""
    if not g.transitive:
        raise PreconditionError("coarsening needs a transitive coloring")
    comps = g._components[color - 1]
    if not (0 <= a < len(comps) and 0 <= b < len(comps) and a != b):
        raise PreconditionError(f"color {color} has {len(comps)} components; cannot merge {a} and {b}")
    bit = 1 << (color - 1)
    masks = [row[:] for row in g.masks]
    for u in comps[a]:
        for v in comps[b]:
            masks[u][v] |= bit
            masks[v][u] |= bit
    out = ColoredCompleteGraph(g.n, g.r, masks)
    assert out.transitive
    return out


# -- CGF text format ----------------------------------------------------------
#
#   colored n <int> r <int>
#   e <u> <v> <c1,c2,...>      (0-based u < v, 1-based colors, every pair once)


def parse_cgf(text: str) -> ColoredCompleteGraph:
    n = r = None
    masks: Optional[list[list[int]]] = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "colored":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(toks) != 5 or toks[1] != "n" or toks[3] != "r":
                raise FormatError(f"line {lineno}: header must be 'colored n <int> r <int>'")
            try:
                n, r = int(toks[2]), int(toks[4])
            except ValueError:
                raise FormatError(f"line {lineno}: bad header integers") from None
            if n < 1:
                raise FormatError(f"line {lineno}: n must be positive")
            if not 1 <= r <= MAX_COLORS:
                raise FormatError(f"line {lineno}: r must be in 1..{MAX_COLORS}")
            masks = [[0] * n for _ in range(n)]
        elif toks[0] == "e":
            if masks is None or n is None or r is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(toks) != 4:
                raise FormatError(f"line {lineno}: edge line needs 'e u v colors'")
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex ids") from None
            if not (0 <= u < v < n):
                raise FormatError(f"line {lineno}: need 0 <= u < v < n, got {u},{v}")
            if (u, v) in seen:
                raise FormatError(f"line {lineno}: pair ({u},{v}) listed twice")
            seen.add((u, v))
            m = 0
            for part in toks[3].split(","):
                try:
                    c = int(part)
                except ValueError:
                    raise FormatError(f"line {lineno}: bad color {part!r}") from None
                if not 1 <= c <= r:
                    raise FormatError(f"line {lineno}: color {c} out of range 1..{r}")
                m |= 1 << (c - 1)
            if m == 0:
                raise FormatError(f"line {lineno}: empty color list")
            masks[u][v] = masks[v][u] = m
        else:
            raise FormatError(f"line {lineno}: unknown directive {toks[0]!r}")
    if n is None or r is None or masks is None:
        raise FormatError("missing header line")
    want = n * (n - 1) // 2
    if len(seen) != want:
        raise FormatError(f"expected {want} pair lines, saw {len(seen)}")
    return ColoredCompleteGraph(n, r, masks)


def to_cgf(g: ColoredCompleteGraph, comment: str = "") -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"colored n {g.n} r {g.r}")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cols = ",".join(str(b + 1) for b in _bits(g.masks[u][v]))
            lines.append(f"e {u} {v} {cols}")
    return "\n".join(lines) + "\n"


# -- canonical form / isomorphism (vertex AND color relabeling) ---------------


def _color_invariants(g: ColoredCompleteGraph) -> list[tuple]:
    """Per color: an invariant that any color relabeling must respect."""
    out = []
    for c in range(g.r):
        comps = g._components[c]
        sizes = tuple(sorted(len(x) for x in comps))
        deg = tuple(sorted(sum(1 for v in range(g.n) if u != v and g.masks[u][v] >> c & 1) for u in range(g.n)))
        out.append((len(comps), sizes, deg))
    return out


def colored_fingerprint(g: ColoredCompleteGraph) -> tuple:
    """Invariant under vertex and color permutations; equality is necessary
    (not sufficient beyond the exact-search budget) for isomorphism."""
    inv = _color_invariants(g)
    comp_size = [[0] * g.r for _ in range(g.n)]
    for c in range(g.r):
        for comp in g._components[c]:
            for v in comp:
                comp_size[v][c] = len(comp)

    def pair_tag(u: int, v: int) -> tuple:
        cs = sorted((inv[b], comp_size[u][b]) for b in _bits(g.masks[u][v]))
        return (g.masks[u][v].bit_count(), tuple(cs))

    lab: list = [tuple(sorted((inv[c], comp_size[v][c]) for c in range(g.r))) for v in range(g.n)]
    for _ in range(3):
        sigs = []
        for v in range(g.n):
            around = sorted((pair_tag(v, u), lab[u]) for u in range(g.n) if u != v)
            sigs.append((lab[v], tuple(around)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        lab = [rank[s] for s in sigs]
    pair_profile = sorted(
        (pair_tag(u, v), min(lab[u], lab[v]), max(lab[u], lab[v]))
        for u, v in itertools.combinations(range(g.n), 2)
    )
    return ("cg", g.n, g.r, tuple(sorted(inv)), tuple(sorted(lab)), tuple(pair_profile))


def _lexmin_vertex_order(masks: list[list[int]], n: int, cap: int) -> Optional[tuple]:
    """Lex-min, over vertex orders, of the concatenated lower-triangle rows.

    Layered greedy search: the frontier holds every partial order achieving
    the minimal encoding prefix; None when the frontier outgrows the cap.
    """
    frontier: list[tuple[int, ...]] = [()]
    prefix: list[tuple] = []
    for _pos in range(n):
        best_seg = None
        ext: list[tuple[int, ...]] = []
        for order in frontier:
            used = set(order)
            for v in range(n):
                if v in used:
                    continue
                seg = tuple(masks[v][u] for u in order)
                if best_seg is None or seg < best_seg:
                    best_seg = seg
                    ext = [order + (v,)]
                elif seg == best_seg:
                    ext.append(order + (v,))
        frontier = ext
        if len(frontier) > cap:
            return None
        assert best_seg is not None
        prefix.append(best_seg)
    return tuple(prefix)


def canonical_form_colored(
    g: ColoredCompleteGraph, max_n: int = 12, max_color_perms: int = 50_000, frontier_cap: int = 40_000
) -> tuple[str, tuple]:
    """("exact", encoding) minimizing over vertex orders and invariant-
    respecting color permutations; ("fingerprint", invariant) beyond the
    size gates."""
    if g.n > max_n:
        return ("fingerprint", colored_fingerprint(g))
    inv = _color_invariants(g)
    groups: dict[tuple, list[int]] = {}
    for c in range(g.r):
        groups.setdefault(inv[c], []).append(c)
    cells = [groups[k] for k in sorted(groups)]
    nperms = 1
    for cell in cells:
        nperms *= factorial(len(cell))
        if nperms > max_color_perms:
            return ("fingerprint", colored_fingerprint(g))
    best = None
    for perms in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        rho = [0] * g.r  # old color bit -> new color bit
        pos = 0
        for cell, perm in zip(cells, perms):
            for src in perm:
                rho[src] = pos
                pos += 1
        remapped = [
            [sum(1 << rho[b] for b in _bits(g.masks[u][v])) if u != v else 0 for v in range(g.n)]
            for u in range(g.n)
        ]
        enc = _lexmin_vertex_order(remapped, g.n, frontier_cap)
        if enc is None:
            return ("fingerprint", colored_fingerprint(g))
        if best is None or enc < best:
            best = enc
    return ("exact", (g.n, g.r, best))


def isomorphic_colored(g1: ColoredCompleteGraph, g2: ColoredCompleteGraph, max_n: int = 12) -> bool:
    """Isomorphism up to vertex and color relabeling; exact within the size
    gate, fingerprint comparison above it (documented caveat)."""
    if (g1.n, g1.r) != (g2.n, g2.r):
        return False
    if colored_fingerprint(g1) != colored_fingerprint(g2):
        return False
    k1 = canonical_form_colored(g1, max_n=max_n)
    k2 = canonical_form_colored(g2, max_n=max_n)
    if k1[0] == "exact" and k2[0] == "exact":
        return k1 == k2
    return True
