"""Exact solvers for small simple graphs.

Everything here is desk scale and deterministic. Graphs are given as an
adjacency list over vertices 0..n-1 (list of int bitmasks).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import RyserError


def adjacency_masks(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise RyserError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def max_independent_set(adj: Sequence[int], n: int) -> int:
    """One maximum independent set, as a bitmask. Branch and bound: branch on
    a highest-degree candidate vertex (take it / drop it)."""
    best_mask = 0
    best_size = -1

    def rec(cand: int, cur: int, cur_size: int):
        nonlocal best_mask, best_size
        if cur_size + cand.bit_count() <= best_size:
            return
        if cand == 0:
            if cur_size > best_size:
                best_size, best_mask = cur_size, cur
            return
        v = max(_iter_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        rec(cand & ~(1 << v) & ~adj[v], cur | (1 << v), cur_size + 1)
        rec(cand & ~(1 << v), cur, cur_size)

    rec((1 << n) - 1, 0, 0)
    return best_mask


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Maximum-cardinality matching of a simple graph (networkx blossom)."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    m = nx.max_weight_matching(g, maxcardinality=True)
    return sorted((min(u, v), max(u, v)) for u, v in m)


def max_matching_size_bruteforce(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Independent oracle: exhaustive search over edge subsets (small n only)."""
    es = list(edges)

    def rec(i: int, used: int) -> int:
        if i == len(es):
            return 0
        best = rec(i + 1, used)
        u, v = es[i]
        m = (1 << u) | (1 << v)
        if not used & m:
            best = max(best, 1 + rec(i + 1, used | m))
        return best

    return rec(0, 0)


def bipartite_matching_cover(left: Sequence[int], right: Sequence[int], adj: dict[int, set[int]]) -> dict[int, int]:
    """A matching covering every vertex of `left` inside left x right.

    Kuhn augmenting paths; raises if Hall's condition fails.
    """
    match_r: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for w in sorted(adj.get(u, ())):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or try_augment(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    for u in left:
        if not try_augment(u, set()):
            raise RyserError(f"internal invariant violated: no matching saturates {u}")
    return {u: w for w, u in match_r.items()}


def min_edge_cover_size(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Gallai: with no isolated vertex, min edge cover = n - max matching."""
    covered = set()
    for u, v in edges:
        covered.add(u)
        covered.add(v)
    if len(covered) != n:
        raise RyserError("edge cover undefined: isolated vertex")
    return n - len(max_matching(n, edges))


def connected_components(n: int, adj: Sequence[int]) -> list[list[int]]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in _iter_bits(adj[v]):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out
