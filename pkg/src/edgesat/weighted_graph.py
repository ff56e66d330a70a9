"""Vertex-weighted simple graphs and their matching-theoretic predicates.

A weighted graph is a simple graph whose vertices carry positive integer
weights.  A matching of a weighted graph is a multiset of edges in which
each vertex appears (with multiplicity) at most its weight many times;
``matching_number`` is the largest size of such a multiset.  On top of
these two notions the module provides polarization (splitting a vertex of
weight w into w mutually non-adjacent clones sharing its neighborhood),
the inverse collapse operation, and the t-saturating predicate

    nu(g) < t   and   nu(g - N(i)) >= t - wdeg(i)   for every vertex i,

where N(i) is the open neighborhood of i and wdeg(i) the sum of the
weights over N(i).

Matching numbers are computed by a capacitated branch-and-bound search
directly on the weighted graph; polarization plus a blossom-based simple
matching (networkx) is used as a fallback once the polarization gets
large.  The two routes agree by the polarization invariance of nu, which
the test suite checks exhaustively on small graphs against a brute-force
multiset enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

Edge = tuple[int, int]

#: polarization size above which matching_number switches from the
#: branch-and-bound search to blossom matching on the polarization.
_BLOSSOM_THRESHOLD = 16


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable vertex-weighted simple graph.

    ``vertices`` is a sorted tuple of integer ids (ambient graphs use the
    dense range 0..n-1, induced subgraphs keep their original ids),
    ``weights`` is aligned with ``vertices``, and ``edges`` holds
    normalized (u < v) pairs.  ``provenance`` is an optional map carried
    by polarizations (clone id -> original vertex id); it is ignored by
    equality and hashing.
    """

    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    weights: tuple[int, ...]
    provenance: Optional[tuple[tuple[int, int], ...]] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        if tuple(sorted(set(self.vertices))) != self.vertices:
            raise ValueError("vertices must be strictly sorted and distinct")
        if len(self.weights) != len(self.vertices):
            raise ValueError("weights length must match vertex count")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u},{v}) not normalized")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u},{v}) has unknown endpoint")

    # -- construction -------------------------------------------------

    @staticmethod
    def build(
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]],
        weights: Mapping[int, int] | Sequence[int] | None = None,
    ) -> "WeightedGraph":
        """Build a graph from any iterable of vertices/edges.

        ``weights`` may be a mapping vertex -> weight, a sequence aligned
        with the sorted vertex order, or None (all weights 1).
        """
        vs = tuple(sorted(set(vertices)))
        es = frozenset(_norm_edge(u, v) for u, v in edges)
        if weights is None:
            ws = tuple(1 for _ in vs)
        elif isinstance(weights, Mapping):
            ws = tuple(int(weights[v]) for v in vs)
        else:
            ws = tuple(int(w) for w in weights)
            if len(ws) != len(vs):
                raise ValueError("weights length must match vertex count")
        return WeightedGraph(vs, es, ws)

    # -- basic accessors ----------------------------------------------

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def weight(self, v: int) -> int:
        return self.weights[self._index[v]]

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}") from None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_map(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.weights))

    def relabel(self, mapping: Mapping[int, int]) -> "WeightedGraph":
        """Apply an injective vertex relabeling (used by tests and canonicalization)."""
        wmap = {mapping[v]: w for v, w in zip(self.vertices, self.weights)}
        return WeightedGraph.build(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in self.edges),
            wmap,
        )


def simple_graph(n: int, edges: Iterable[tuple[int, int]]) -> WeightedGraph:
    """All-weight-1 graph on the dense vertex set 0..n-1."""
    return WeightedGraph.build(range(n), edges)


# ---------------------------------------------------------------------
# neighborhoods / subgraphs
# ---------------------------------------------------------------------

def neighborhood(g: WeightedGraph, v: int) -> frozenset[int]:
    """Open neighborhood N(v)."""
    return g.neighbors(v)


def weighted_degree(g: WeightedGraph, v: int) -> int:
    """Sum of the weights over N(v)."""
    return sum(g.weight(u) for u in g.neighbors(v))


def delete_vertices(g: WeightedGraph, s: Iterable[int]) -> WeightedGraph:
    """Induced weighted subgraph on vertices(g) minus s."""
    drop = set(s)
    unknown = drop - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    keep = [v for v in g.vertices if v not in drop]
    keepset = set(keep)
    return WeightedGraph(
        tuple(keep),
        frozenset(e for e in g.edges if e[0] in keepset and e[1] in keepset),
        tuple(g.weight(v) for v in keep),
    )


def induced_subgraph(g: WeightedGraph, keep: Iterable[int]) -> WeightedGraph:
    keep = set(keep)
    return delete_vertices(g, (v for v in g.vertices if v not in keep))


def connected_components(g: WeightedGraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    todo = set(g.vertices)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        todo -= comp
        comps.append(frozenset(comp))
    return comps


# ---------------------------------------------------------------------
# polarization and collapse
# ---------------------------------------------------------------------

def polarize(g: WeightedGraph) -> WeightedGraph:
    """Split each vertex v into weight(v) non-adjacent clones sharing N(v).

    Clone ids are dense 0..total_weight-1, assigned in (vertex, copy)
    order; the returned graph carries ``provenance`` mapping each clone
    id to its original vertex.
    """
    clones: dict[int, list[int]] = {}
    provenance: list[tuple[int, int]] = []
    next_id = 0
    for v in g.vertices:
        ids = list(range(next_id, next_id + g.weight(v)))
        clones[v] = ids
        provenance.extend((c, v) for c in ids)
        next_id += g.weight(v)
    edges = set()
    for u, v in g.edges:
        for cu in clones[u]:
            for cv in clones[v]:
                edges.add(_norm_edge(cu, cv))
    return WeightedGraph(
        tuple(range(next_id)),
        frozenset(edges),
        tuple(1 for _ in range(next_id)),
        provenance=tuple(provenance),
    )


def collapse(g: WeightedGraph, group: Iterable[int]) -> WeightedGraph:
    """Merge a set of pairwise non-adjacent, same-neighborhood vertices.

    The merged vertex keeps the smallest id in the group and carries the
    sum of the group's weights.  Inverse of polarization; the matching
    number is invariant (tested exhaustively).
    """
    group = sorted(set(group))
    if not group:
        raise ValueError("empty group")
    for v in group:
        if v not in g._index:
            raise ValueError(f"unknown vertex {v}")
    rep = group[0]
    nbhd = g.neighbors(rep)
    for v in group[1:]:
        if v in nbhd or rep in g.neighbors(v):
            raise ValueError("group vertices are adjacent")
        if g.neighbors(v) != nbhd:
            raise ValueError("group vertices have differing neighborhoods")
    dropped = set(group[1:])
    keep = [v for v in g.vertices if v not in dropped]
    wmap = g.weight_map()
    wmap[rep] = sum(wmap[v] for v in group)
    edges = set()
    for u, v in g.edges:
        u2 = rep if u in dropped else u
        v2 = rep if v in dropped else v
        edges.add(_norm_edge(u2, v2))
    return WeightedGraph.build(keep, edges, {v: wmap[v] for v in keep})


# ---------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    """Multiset of edges, stored as a sorted tuple of normalized pairs."""

    edges: tuple[Edge, ...]

    @staticmethod
    def of(edges: Iterable[tuple[int, int]]) -> "Matching":
        return Matching(tuple(sorted(_norm_edge(u, v) for u, v in edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def multiplicity(self, v: int) -> int:
        return sum((v == u) + (v == w) for u, w in self.edges)


def is_matching(g: WeightedGraph, m: Matching) -> bool:
    """Check the two matching axioms: edges exist, capacities respected."""
    counts: dict[int, int] = {}
    for e in m.edges:
        if e not in g.edges:
            return False
        counts[e[0]] = counts.get(e[0], 0) + 1
        counts[e[1]] = counts.get(e[1], 0) + 1
    return all(c <= g.weight(v) for v, c in counts.items())


def _bb_matching(
    edges: list[Edge],
    caps: dict[int, int],
    limit: int,
    want_edges: bool,
) -> tuple[int, Optional[list[Edge]]]:
    """Capacitated branch-and-bound maximum matching.

    Returns (size, multiset) where size is min(nu, limit); the multiset is
    only tracked when want_edges is set.
    """
    # static per-edge bound: no edge can be used more often than the
    # smaller of its endpoint capacities
    edge_max = [min(caps[u], caps[v]) for u, v in edges]
    suffix = [0] * (len(edges) + 1)
    for i in range(len(edges) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + edge_max[i]

    best = 0
    best_edges: Optional[list[Edge]] = [] if want_edges else None
    cap_total = sum(caps.values())
    chosen: list[tuple[Edge, int]] = []

    def rec(i: int, size: int, cap_left: int):
        nonlocal best, best_edges
        if size > best:
            best = size
            if want_edges:
                best_edges = [e for e, k in chosen for _ in range(k)]
        if best >= limit or i == len(edges):
            return
        if size + min(suffix[i], cap_left // 2) <= best:
            return
        u, v = edges[i]
        top = min(caps[u], caps[v])
        for k in range(top, -1, -1):
            caps[u] -= k
            caps[v] -= k
            if k:
                chosen.append((edges[i], k))
            rec(i + 1, size + k, cap_left - 2 * k)
            if k:
                chosen.pop()
            caps[u] += k
            caps[v] += k
            if best >= limit:
                return

    rec(0, 0, cap_total)
    return best, best_edges


def matching_number(g: WeightedGraph, cap: Optional[int] = None) -> int:
    """Maximum size of a matching of g; with ``cap`` set, min(nu, cap).

    The capped form lets "nu >= t" queries stop early and licenses
    clamping weights at the cap.
    """
    if not g.edges:
        return 0
    covered = {v for e in g.edges for v in e}
    caps = {v: g.weight(v) for v in covered}
    ceiling = sum(caps.values()) // 2
    limit = ceiling if cap is None else min(cap, ceiling)
    if limit <= 0:
        return 0
    # clamping each capacity at the limit cannot change min(nu, limit)
    caps = {v: min(w, limit) for v, w in caps.items()}
    if sum(caps.values()) > _BLOSSOM_THRESHOLD:
        return _blossom_matching_number(g, caps, limit)
    edges = sorted(g.edges)
    size, _ = _bb_matching(edges, caps, limit, want_edges=False)
    # a single branch step can add several copies of one edge at once,
    # overshooting the limit
    return min(size, limit)


def _blossom_matching_number(g: WeightedGraph, caps: dict[int, int], limit: int) -> int:
    """nu via polarization + blossom maximum-cardinality matching."""
    clamped = WeightedGraph.build(
        g.vertices, g.edges, {v: caps.get(v, 1) for v in g.vertices}
    )
    p = polarize(clamped)
    h = nx.Graph()
    h.add_nodes_from(p.vertices)
    h.add_edges_from(p.edges)
    m = nx.max_weight_matching(h, maxcardinality=True)
    return min(len(m), limit)


def maximum_matching(g: WeightedGraph) -> Matching:
    """Some maximum matching of g as an explicit edge multiset."""
    if not g.edges:
        return Matching(())
    covered = {v for e in g.edges for v in e}
    caps = {v: g.weight(v) for v in covered}
    ceiling = sum(caps.values()) // 2
    edges = sorted(g.edges)
    _, ms = _bb_matching(edges, caps, ceiling, want_edges=True)
    return Matching.of(ms or [])


# ---------------------------------------------------------------------
# the t-saturating predicate
# ---------------------------------------------------------------------

def is_t_saturating(g: WeightedGraph, t: int) -> bool:
    """nu(g) < t and nu(g - N(i)) >= t - wdeg(i) for every vertex i."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if matching_number(g, cap=t) >= t:
        return False
    for v in g.vertices:
        need = t - weighted_degree(g, v)
        if need <= 0:
            continue
        h = delete_vertices(g, g.neighbors(v))
        if matching_number(h, cap=need) < need:
            return False
    return True


def is_t_saturating_vertex_deletion(g: WeightedGraph, t: int) -> bool:
    """Variant reading of the degree condition: delete i itself, not N(i).

    The worked example computing nu values after deletions is only
    consistent with removing the single vertex i (nu(g - i)), not its
    neighborhood; under the literal definition the same graph fails at
    t = 4.  This variant reproduces the example's numbers and is exposed
    for the record; everything else in the package uses the literal
    ``is_t_saturating``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if matching_number(g, cap=t) >= t:
        return False
    for v in g.vertices:
        need = t - weighted_degree(g, v)
        if need <= 0:
            continue
        h = delete_vertices(g, (v,))
        if matching_number(h, cap=need) < need:
            return False
    return True


# ---------------------------------------------------------------------
# augmenting cycles (structure of maximum matchings in saturating graphs)
# ---------------------------------------------------------------------

def find_augmenting_cycle(
    g: WeightedGraph, m: Matching, i: int
) -> Optional[tuple[int, ...]]:
    """Odd alternating cycle through an uncovered vertex i.

    g must be all-weight-1 with m a maximum matching not covering i.  The
    cycle is returned as a vertex tuple (i, v1, ..., v2k) of distinct
    vertices: consecutive edges alternate non-matching, matching, ...,
    non-matching, with the closing edge (v2k, i) non-matching.  Returns
    the lexicographically least such cycle, or None if none exists.
    """
    if any(w != 1 for w in g.weights):
        raise ValueError("find_augmenting_cycle requires all weights 1")
    if not is_matching(g, m):
        raise ValueError("m is not a matching of g")
    if i not in g._index:
        raise ValueError(f"unknown vertex {i}")
    mate: dict[int, int] = {}
    for u, v in m.edges:
        if u in mate or v in mate:
            raise ValueError("m is not a proper matching (vertex reused)")
        mate[u] = v
        mate[v] = u
    if i in mate:
        raise ValueError(f"vertex {i} is covered by m")
    if matching_number(g) != len(m):
        raise ValueError("m is not a maximum matching")

    results: list[tuple[int, ...]] = []

    def dfs(path: list[int], need_matched: bool):
        last = path[-1]
        for w in sorted(g.neighbors(last)):
            is_matched_edge = mate.get(last) == w
            if need_matched != is_matched_edge:
                continue
            if w == i:
                # closing edge must be non-matching and the cycle odd,
                # i.e. an even number of vertices after i
                if not need_matched and len(path) >= 3 and len(path) % 2 == 1:
                    results.append(tuple(path))
                continue
            if w in path:
                continue
            path.append(w)
            dfs(path, not need_matched)
            path.pop()

    dfs([i], need_matched=False)
    return min(results) if results else None
