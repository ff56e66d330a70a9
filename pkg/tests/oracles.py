"""Independent brute-force oracles for the test suite.

Each helper recomputes a package answer from first principles with no
shared code beyond the graph container, so agreement is meaningful:

* ``brute_matching_number`` enumerates edge multisets recursively.
* ``brute_in_power`` expands I^t literally as products of t edges.
* ``brute_spanned`` tries every vertex bijection.
* ``brute_minimal_covers`` filters the full subset lattice.
* ``maximal_independent_sets`` for the cover/independence duality.
"""

from __future__ import annotations

import itertools

from edgesat.weighted_graph import WeightedGraph


def brute_matching_number(g: WeightedGraph) -> int:
    edges = sorted(g.edges)

    def rec(i: int, caps: dict) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        best = rec(i + 1, caps)
        top = min(caps[u], caps[v])
        for k in range(1, top + 1):
            caps[u] -= k
            caps[v] -= k
            best = max(best, k + rec(i + 1, caps))
            caps[u] += k
            caps[v] += k
        return best

    return rec(0, {v: g.weight(v) for v in g.vertices})


def brute_in_power(gamma: WeightedGraph, a, t: int) -> bool:
    """x^a in I^t by expanding I^t: some product of t edge generators
    divides x^a."""
    edges = sorted(gamma.edges)
    for combo in itertools.combinations_with_replacement(edges, t):
        counts: dict[int, int] = {}
        for u, v in combo:
            counts[u] = counts.get(u, 0) + 1
            counts[v] = counts.get(v, 0) + 1
        if all(a[v] >= c for v, c in counts.items()):
            return True
    return False


def brute_spanned(g: WeightedGraph, p: WeightedGraph) -> bool:
    """Spanning-subgraph containment by exhausting all bijections."""
    if g.n != p.n:
        return False
    for perm in itertools.permutations(g.vertices):
        m = dict(zip(p.vertices, perm))
        if all(g.weight(m[v]) == p.weight(v) for v in p.vertices) and all(
            (min(m[u], m[v]), max(m[u], m[v])) in g.edges for u, v in p.edges
        ):
            return True
    return False


def brute_covers(g: WeightedGraph):
    verts = sorted(g.vertices)
    out = []
    for k in range(len(verts) + 1):
        for sub in itertools.combinations(verts, k):
            s = set(sub)
            if all(u in s or v in s for u, v in g.edges):
                out.append(frozenset(sub))
    return out


def brute_minimal_covers(g: WeightedGraph):
    covers = brute_covers(g)
    return sorted(
        tuple(sorted(c))
        for c in covers
        if not any(d < c for d in covers)
    )


def maximal_independent_sets(g: WeightedGraph):
    verts = sorted(g.vertices)
    indep = [
        frozenset(sub)
        for k in range(len(verts) + 1)
        for sub in itertools.combinations(verts, k)
        if all(
            (min(u, v), max(u, v)) not in g.edges
            for u, v in itertools.combinations(sub, 2)
        )
    ]
    return sorted(
        tuple(sorted(s)) for s in indep if not any(s < t for t in indep)
    )


def random_graph(rng, n: int, p: float = 0.5, max_weight: int = 1) -> WeightedGraph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    return WeightedGraph.build(range(n), edges, weights)
