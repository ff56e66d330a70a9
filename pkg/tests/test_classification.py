"""Pattern matching and the saturating-type classifiers."""

import itertools
import random

from edgesat.canonical import canonical_key
from edgesat.classification import (
    TABLE1,
    TABLE2,
    TABLE3_NAMES,
    Pattern,
    all_collapses,
    classify3,
    classify4,
    derived_table3,
    four_saturating_simple_classes,
    matches_any_type4,
    sample_classification,
    spanned_by,
    verify_classification,
)
from edgesat.weighted_graph import WeightedGraph, is_t_saturating, simple_graph

from .oracles import brute_spanned, random_graph


def _k(n):
    return simple_graph(n, itertools.combinations(range(n), 2))


def test_spanned_by_vs_brute():
    rng = random.Random(2)
    checked = hits = 0
    for _ in range(150):
        g = random_graph(rng, 5, p=0.6, max_weight=2)
        p = random_graph(rng, 5, p=0.4, max_weight=2)
        got = spanned_by(g, Pattern(p, "spanned"))
        want = brute_spanned(g, p)
        assert got == want
        checked += 1
        hits += got
    assert checked == 150 and hits > 0


def test_exact_vs_spanned_modes():
    tri_plus = simple_graph(3, [(0, 1), (0, 2), (1, 2)])
    path = simple_graph(3, [(0, 1), (1, 2)])
    assert spanned_by(tri_plus, Pattern(path, "spanned"))
    assert not spanned_by(tri_plus, Pattern(path, "exact"))
    assert spanned_by(path, Pattern(path, "exact"))


def test_components_mode():
    two_tris = simple_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    entry = next(t for t in TABLE1 if t.index == 4)
    assert spanned_by(two_tris, entry.pattern)
    # a connecting edge breaks the component structure
    joined = simple_graph(
        6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    )
    assert not spanned_by(joined, entry.pattern)


def test_classify3_examples():
    assert classify3(_k(4)).tag == "T1/3"
    tri221 = WeightedGraph.build(range(3), [(0, 1), (0, 2), (1, 2)], [2, 2, 1])
    assert classify3(tri221).tag == "T1/1"
    assert classify3(simple_graph(5, [(i, (i + 1) % 5) for i in range(5)])).tag == "T1/6"
    assert classify3(_k(3)) is None  # plain triangle is not 3-saturating


def test_classify4_examples():
    assert classify4(_k(5)).tag == "T2/1"
    assert classify4(_k(4)) is None
    c7 = simple_graph(7, [(i, (i + 1) % 7) for i in range(7)])
    assert classify4(c7).tag == "T2/8"
    tri222 = WeightedGraph.build(range(3), [(0, 1), (0, 2), (1, 2)], [2, 2, 2])
    assert classify4(tri222).tag == "T3/1"
    tri211 = WeightedGraph.build(range(3), [(0, 1), (0, 2), (1, 2)], [2, 1, 1])
    assert classify4(tri211) is None


def test_matches_any_type4_exclusion():
    tk4 = simple_graph(
        7,
        [(0, 1), (0, 2), (1, 2)]
        + list((u, v) for u, v in itertools.combinations(range(3, 7), 2)),
    )
    assert matches_any_type4(tk4)
    assert not matches_any_type4(tk4, exclude=(("T2", 7),))


def test_four_saturating_simple_classes():
    assert len(four_saturating_simple_classes(5)) == 1
    for n in (5, 6, 7, 8, 9):
        for g in four_saturating_simple_classes(n):
            assert is_t_saturating(g, 4)


def test_all_collapses_includes_identity_and_respects_nu():
    sq = simple_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    cs = all_collapses(sq)
    keys = {canonical_key(c) for c in cs}
    assert canonical_key(sq) in keys
    # the square collapses to a weighted path and a doubled edge
    assert len(cs) >= 3
    assert all(c.total_weight == 4 for c in cs)


def test_derived_table3_is_sound_and_named():
    rows = derived_table3()
    assert len(rows) == 198
    assert {row for row, _ in rows} == set(TABLE3_NAMES)
    keys = set()
    for row, g in rows:
        assert max(g.weights) >= 2
        assert is_t_saturating(g, 4)
        k = canonical_key(g)
        assert k not in keys
        keys.add(k)


def test_verify_classification_t3_small():
    report = verify_classification(3, 5, weight_cap=3, max_total_weight=8)
    assert report.disagreements == []
    assert report.total_graphs > 0


def test_verify_classification_t4_small():
    report = verify_classification(4, 6)
    assert report.disagreements == []
    # the K_5 class is present exactly once among 5-vertex graphs
    assert report.per_type_counts["T2/1"] == 1


def test_sample_classification_runs():
    report = sample_classification(4, 8, 2000, seed=0)
    assert report.disagreements == []
    assert report.total_graphs == 2000


def test_sample_classification_reproducible():
    a = sample_classification(4, 8, 1000, seed=42).to_jsonable()
    b = sample_classification(4, 8, 1000, seed=42).to_jsonable()
    assert a == b
