"""Canonical forms for small weighted graphs.

Canonicalization proceeds by iterated color refinement (initial color =
weight + degree, refined by sorted neighbor colors) followed by
individualization of the first non-singleton color class.  The canonical
key of a graph is the minimum, over all leaves of the search tree, of the
relabeled (weights, edges) pair; two weighted graphs have equal keys iff
they are isomorphic as weighted graphs.  Intended for n <= 9 or so —
every enumeration in this package stays in that range.
"""

from __future__ import annotations

from .weighted_graph import WeightedGraph

CanonicalKey = tuple[tuple[int, ...], tuple[tuple[int, int], ...]]


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Iterated neighborhood color refinement; returns stable coloring."""
    n = len(adj)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_key(g: WeightedGraph) -> CanonicalKey:
    """Isomorphism-invariant (weights, edges) key with labels 0..n-1."""
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        adj[idx[u]].append(idx[v])
        adj[idx[v]].append(idx[u])
    weights = list(g.weights)

    init = [0] * n
    ranking = {
        s: i
        for i, s in enumerate(sorted({(weights[v], len(adj[v])) for v in range(n)}))
    }
    for v in range(n):
        init[v] = ranking[(weights[v], len(adj[v]))]

    best: list[CanonicalKey] = []

    def leaf_key(order: list[int]) -> CanonicalKey:
        # order[pos] = original vertex receiving label pos
        label = [0] * n
        for pos, v in enumerate(order):
            label[v] = pos
        w = tuple(weights[v] for v in order)
        es = tuple(
            sorted(
                (min(label[idx[u]], label[idx[x]]), max(label[idx[u]], label[idx[x]]))
                for u, x in g.edges
            )
        )
        return (w, es)

    def search(colors: list[int]):
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(n), key=lambda v: colors[v])
            key = leaf_key(order)
            if not best or key < best[0]:
                best[:] = [key]
            return
        for v in target:
            child = list(colors)
            child[v] = -1  # individualize: strictly smallest color
            search(child)

    search(init)
    return best[0]


def from_canonical_key(key: CanonicalKey) -> WeightedGraph:
    weights, edges = key
    return WeightedGraph.build(range(len(weights)), edges, weights)


def are_isomorphic(g: WeightedGraph, h: WeightedGraph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.weights) != sorted(h.weights):
        return False
    return canonical_key(g) == canonical_key(h)
