"""Vectorized enumeration engines against the scalar implementations."""

import random

import numpy as np
import pytest

from edgesat.canonical import canonical_key
from edgesat.sweep import (
    edges_of_mask,
    graph_of_mask,
    iter_classes,
    mask_of_edges,
    nu_mask_table,
    t_saturating_batch,
    t_saturating_mask_array,
    weight_vectors_up_to,
)
from edgesat.weighted_graph import is_t_saturating, matching_number


def test_mask_round_trip():
    n = 5
    for mask in (0, 1, 0b1011, (1 << 10) - 1):
        assert mask_of_edges(n, edges_of_mask(n, mask)) == mask


def test_nu_table_exhaustive_n4():
    n = 4
    nu = nu_mask_table(n)
    for mask in range(1 << 6):
        assert nu[mask] == matching_number(graph_of_mask(n, mask))


def test_nu_table_spot_n7():
    n = 7
    nu = nu_mask_table(n)
    rng = random.Random(0)
    for _ in range(200):
        mask = rng.randrange(1 << 21)
        assert nu[mask] == matching_number(graph_of_mask(n, mask))


@pytest.mark.parametrize("t", [2, 3, 4])
def test_saturating_mask_array_exhaustive_n5(t):
    n = 5
    arr = t_saturating_mask_array(n, t)
    for mask in range(1 << 10):
        assert bool(arr[mask]) == is_t_saturating(graph_of_mask(n, mask), t)


def test_saturating_batch_agrees_with_mask_array():
    n = 6
    arr = t_saturating_mask_array(n, 4)
    rng = np.random.default_rng(1)
    masks = rng.integers(0, 1 << 15, size=4000, dtype=np.int64)
    batch = t_saturating_batch(n, masks, 4)
    assert (batch == arr[masks]).all()


def test_iter_classes_counts():
    # numbers of unlabeled simple graphs on n vertices
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n, count in expected.items():
        assert sum(1 for _ in iter_classes(n)) == count


def test_iter_classes_orbit_sizes_sum():
    # the iterator itself asserts exhaustiveness; also check a weighted space
    wvs = weight_vectors_up_to(4, 2)
    infos = list(iter_classes(4, wvs))
    assert sum(i.orbit_size for i in infos) == len(wvs) << 6


def test_iter_classes_representatives_distinct():
    wvs = weight_vectors_up_to(4, 2)
    keys = [canonical_key(i.graph()) for i in iter_classes(4, wvs)]
    assert len(keys) == len(set(keys))


def test_iter_classes_partition_is_a_partition():
    full = [i.mask for i in iter_classes(5)]
    sharded = []
    for k in range(3):
        sharded += [i.mask for i in iter_classes(5, partition=(k, 3))]
    assert sorted(sharded) == sorted(full)


def test_iter_classes_rejects_unclosed_weights():
    with pytest.raises(ValueError):
        list(iter_classes(3, [(1, 1, 2)]))


def test_weight_vectors_up_to():
    wvs = weight_vectors_up_to(3, 2, max_total=4)
    assert (1, 1, 1) in wvs and (2, 1, 1) in wvs
    assert (2, 2, 1) not in wvs
    assert all(sum(w) <= 4 for w in wvs)
