"""Covers, cores and associated primes against subset-lattice oracles."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgesat.associated_primes import (
    ass_primes_4,
    ass_primes_oracle,
    closed_neighborhood,
    core,
    depth4_positive,
    derived_table4_patterns,
    is_associated_prime,
    is_cover,
    minimal_covers,
)
from edgesat.edge_ideal import in_power, in_saturation, restriction
from edgesat.weighted_graph import (
    WeightedGraph,
    connected_components,
    is_t_saturating,
    simple_graph,
)

from .oracles import brute_covers, brute_minimal_covers, maximal_independent_sets, random_graph


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    return simple_graph(n, edges)


def test_closed_neighborhood_examples():
    path = simple_graph(3, [(0, 1), (1, 2)])
    assert closed_neighborhood(path, []) == frozenset()
    assert closed_neighborhood(path, [1]) == frozenset({0, 1, 2})
    assert closed_neighborhood(path, [0]) == frozenset({0, 1})


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_core_complements_closed_neighborhood(g):
    """core(F) = V minus N[V minus F] for every cover F."""
    for f in brute_covers(g):
        want = set(g.vertices) - closed_neighborhood(g, set(g.vertices) - f)
        assert core(g, f) == frozenset(want)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_core_empty_iff_minimal(g):
    minimal = set(brute_minimal_covers(g))
    for f in brute_covers(g):
        assert (not core(g, f)) == (tuple(sorted(f)) in minimal)


def test_core_rejects_non_cover():
    with pytest.raises(ValueError):
        core(simple_graph(2, [(0, 1)]), [])


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_minimal_covers_vs_lattice_and_independent_sets(g):
    got = minimal_covers(g)
    assert got == brute_minimal_covers(g)
    # complements of maximal independent sets
    verts = set(g.vertices)
    complements = sorted(
        tuple(sorted(verts - set(s))) for s in maximal_independent_sets(g)
    )
    assert got == complements


def test_minimal_covers_examples():
    assert minimal_covers(simple_graph(2, [(0, 1)])) == [(0,), (1,)]
    tri = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert minimal_covers(tri) == [(0, 1), (0, 2), (1, 2)]


def test_is_associated_prime_minimal_and_triangle():
    tri = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert is_associated_prime(tri, (0, 1), 4) == (True, None)
    ok, witness = is_associated_prime(tri, (0, 1, 2), 2)
    assert ok and witness == (1, 1, 1)
    with pytest.raises(ValueError):
        is_associated_prime(tri, (0,), 2)


def test_witness_revalidates():
    """Returned witnesses satisfy the full certificate independently."""
    rng = random.Random(9)
    validated = 0
    for _ in range(40):
        g = random_graph(rng, 5, p=0.6)
        if not g.edges:
            continue
        for f in brute_covers(g):
            ok, a = is_associated_prime(g, f, 4)
            if a is None:
                continue
            gam_a = restriction(g, a)
            assert is_t_saturating(gam_a, 4)
            assert all(x <= 4 for x in a)
            assert not in_power(g, a, 4)
            # F minimal among covers containing N[V_a]
            nb = closed_neighborhood(g, set(gam_a.vertices))
            assert nb <= f
            for v in f - nb:
                assert not is_cover(g, f - {v})
            # matching condition at every core vertex outside the support
            from edgesat.weighted_graph import delete_vertices, matching_number

            for i in core(g, f) - set(gam_a.vertices):
                nbrs_in = [j for j in g.neighbors(i) if j in set(gam_a.vertices)]
                need = 4 - sum(a[j] for j in nbrs_in)
                if need > 0:
                    h = delete_vertices(gam_a, nbrs_in)
                    assert matching_number(h) >= need
            validated += 1
    assert validated > 0


def test_oracle_edge_t1():
    e = simple_graph(2, [(0, 1)])
    assert ass_primes_oracle(e, 1, 2) == [(0,), (1,)]


def test_oracle_triangle_t2():
    tri = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert ass_primes_oracle(tri, 2, 4) == [(0, 1), (0, 1, 2), (0, 2), (1, 2)]


def test_oracle_stable_in_cap():
    """Output is unchanged as cap grows from t+1 to 2t (n <= 5)."""
    rng = random.Random(4)
    for _ in range(12):
        g = random_graph(rng, 5, p=0.5)
        if not g.edges:
            continue
        for t in (2, 3):
            base = ass_primes_oracle(g, t, t + 1)
            for cap in range(t + 1, 2 * t + 1):
                assert ass_primes_oracle(g, t, cap) == base


def test_oracle_partition_merges():
    tri = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    full = ass_primes_oracle(tri, 2, 4)
    merged = set()
    for k in range(3):
        merged |= set(ass_primes_oracle(tri, 2, 4, partition=(k, 3)))
    assert sorted(merged) == full


def test_ass_primes_4_triangle_report():
    tri = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    rep = ass_primes_4(tri)
    assert rep.minimal == [(0, 1), (0, 2), (1, 2)]
    assert [e.cover for e in rep.embedded] == [(0, 1, 2)]
    emb = rep.embedded[0]
    assert emb.witness == (2, 2, 2)
    assert emb.pattern_id == "T3/1"
    js = rep.to_jsonable()
    assert set(js) == {"graph", "minimal", "embedded"}
    # minimal and embedded covers are disjoint; embedded cores nonempty
    assert not set(rep.minimal) & {e.cover for e in rep.embedded}
    assert all(core(tri, e.cover) for e in rep.embedded)


def test_ass_primes_4_vs_oracle_random():
    rng = random.Random(13)
    checked = 0
    while checked < 10:
        g = random_graph(rng, 5, p=0.55)
        if not g.edges:
            continue
        checked += 1
        assert ass_primes_4(g).covers() == ass_primes_oracle(g, 4, 8)


def test_depth4_examples():
    assert depth4_positive(simple_graph(2, [(0, 1)]))
    assert not depth4_positive(simple_graph(3, [(0, 1), (0, 2), (1, 2)]))
    tk4 = simple_graph(
        7,
        [(0, 1), (0, 2), (1, 2)]
        + list(itertools.combinations(range(3, 7), 2)),
    )
    assert not depth4_positive(tk4)
    with pytest.raises(ValueError):
        depth4_positive(simple_graph(3, []))
    with pytest.raises(ValueError):
        ass_primes_4(simple_graph(2, []))
    with pytest.raises(ValueError):
        ass_primes_oracle(simple_graph(2, []), 4, 8)


def test_reported_covers_avoid_isolated_vertices():
    # an isolated vertex never joins a reported cover
    g = simple_graph(4, [(0, 1), (0, 2), (1, 2)])  # vertex 3 isolated
    rep = ass_primes_4(g)
    for c in rep.covers():
        assert 3 not in c


def test_derived_table4_patterns():
    pats = derived_table4_patterns()
    ids = [pid for pid, _ in pats]
    assert ids == [f"T4/{i + 1}" for i in range(len(pats))]
    from edgesat.canonical import canonical_key
    from edgesat.classification import TABLE2, _cycle, _disjoint, _triangle, derived_table3

    keys = {canonical_key(g) for _, g in pats}
    # deduplicated
    assert len(keys) == len(pats)
    # every simple type template and every derived weighted class appears
    for t in TABLE2:
        assert canonical_key(t.pattern.graph) in keys
    for _, g in derived_table3():
        assert canonical_key(g) in keys
    # the reduced forms are present: two disjoint triangles and a pentagon
    assert canonical_key(_disjoint(_triangle(), _triangle())) in keys
    assert canonical_key(_cycle(5)) in keys
