"""Canonical keys: relabeling invariance and isomorphism detection."""

import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from edgesat.canonical import are_isomorphic, canonical_key, from_canonical_key
from edgesat.weighted_graph import WeightedGraph

from .oracles import random_graph


@st.composite
def graph_and_permutation(draw, max_n=6, max_weight=3):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    weights = [draw(st.integers(1, max_weight)) for _ in range(n)]
    perm = draw(st.permutations(range(n)))
    return WeightedGraph.build(range(n), edges, weights), dict(enumerate(perm))


@settings(max_examples=200, deadline=None)
@given(graph_and_permutation())
def test_key_invariant_under_relabeling(pair):
    g, perm = pair
    assert canonical_key(g) == canonical_key(g.relabel(perm))


@settings(max_examples=100, deadline=None)
@given(graph_and_permutation())
def test_key_round_trip(pair):
    g, _ = pair
    h = from_canonical_key(canonical_key(g))
    assert canonical_key(h) == canonical_key(g)
    assert are_isomorphic(g, h)


def test_distinguishes_nonisomorphic():
    path = WeightedGraph.build(range(4), [(0, 1), (1, 2), (2, 3)])
    star = WeightedGraph.build(range(4), [(0, 1), (0, 2), (0, 3)])
    assert canonical_key(path) != canonical_key(star)
    assert not are_isomorphic(path, star)
    # same simple graph, different weight placement on asymmetric position
    p1 = WeightedGraph.build(range(3), [(0, 1), (1, 2)], [2, 1, 1])
    p2 = WeightedGraph.build(range(3), [(0, 1), (1, 2)], [1, 2, 1])
    assert canonical_key(p1) != canonical_key(p2)
    # weight on either leaf of the path is the same graph
    p3 = WeightedGraph.build(range(3), [(0, 1), (1, 2)], [1, 1, 2])
    assert canonical_key(p1) == canonical_key(p3)


def test_regular_graphs_needing_individualization():
    # C6 vs 2xC3: both 2-regular with equal color refinement
    c6 = WeightedGraph.build(range(6), [(i, (i + 1) % 6) for i in range(6)])
    two_c3 = WeightedGraph.build(
        range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert not are_isomorphic(c6, two_c3)


def test_key_counts_random_pairs():
    """Agreement with brute-force isomorphism on random pairs."""
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, 5, p=0.5, max_weight=2)
        h = random_graph(rng, 5, p=0.5, max_weight=2)
        brute = any(
            all(
                h.weight(m[v]) == g.weight(v) for v in g.vertices
            )
            and {
                (min(m[u], m[v]), max(m[u], m[v])) for u, v in g.edges
            }
            == h.edges
            for m in (
                dict(zip(g.vertices, p))
                for p in itertools.permutations(h.vertices)
            )
        )
        assert are_isomorphic(g, h) == brute
