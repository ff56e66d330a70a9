"""Exhaustive enumeration machinery for small labeled graph spaces.

Three ingredients, shared by the classification verifier, the oracle
sweeps and the test suite:

* ``nu_mask_table(n)`` — the matching number of *every* labeled simple
  graph on n vertices at once, indexed by edge bitmask.  The recurrence
  is over edge masks: for the lowest edge e = {u, v} of a mask m,
  nu(m) = max(nu(m - e), 1 + nu(m with u, v deleted)).  One byte per
  mask; n = 7 costs 2^21 bytes.

* ``t_saturating_mask_array(n, t)`` — the t-saturating predicate of every
  labeled simple graph on n vertices, fully vectorized over masks using
  the nu table (numpy).

* ``iter_classes(n, weight_vectors)`` — isomorphism-class iterator over
  the product space (edge mask, weight vector).  Masks are scanned in
  ascending combined order; each unseen element is the minimum of its
  orbit and is reported as the class representative, and its whole orbit
  is expanded with precomputed permutation gather tables and marked
  seen.  Orbit sizes must sum to the full space size, which the iterator
  verifies itself — an exhaustiveness proof built into every sweep.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .weighted_graph import WeightedGraph


@lru_cache(maxsize=None)
def edge_positions(n: int) -> tuple[tuple[int, int], ...]:
    """Bit position -> vertex pair, in lexicographic pair order."""
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _edge_bit(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(edge_positions(n))}


def mask_of_edges(n: int, edges) -> int:
    bit = _edge_bit(n)
    m = 0
    for u, v in edges:
        m |= 1 << bit[(min(u, v), max(u, v))]
    return m


def edges_of_mask(n: int, mask: int) -> list[tuple[int, int]]:
    pos = edge_positions(n)
    return [pos[i] for i in range(len(pos)) if mask >> i & 1]


def graph_of_mask(n: int, mask: int, weights=None) -> WeightedGraph:
    return WeightedGraph.build(range(n), edges_of_mask(n, mask), weights)


# ---------------------------------------------------------------------
# nu for every labeled graph at once
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def nu_mask_table(n: int) -> bytearray:
    """nu of the graph with edge bitmask m, for every m < 2^C(n,2)."""
    pos = edge_positions(n)
    ne = len(pos)
    # for each edge bit: mask of edges avoiding both endpoints
    clear = []
    for u, v in pos:
        keep = 0
        for j, (a, b) in enumerate(pos):
            if a not in (u, v) and b not in (u, v):
                keep |= 1 << j
        clear.append(keep)
    nu = bytearray(1 << ne)
    for m in range(1, 1 << ne):
        low = (m & -m).bit_length() - 1
        skip = nu[m & (m - 1)]
        take = 1 + nu[m & clear[low]]
        nu[m] = take if take > skip else skip
    return nu


@lru_cache(maxsize=None)
def _vertex_incidence_bits(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each vertex i: tuple of (edge bit position, other endpoint)."""
    out = []
    for i in range(n):
        row = []
        for e, (u, v) in enumerate(edge_positions(n)):
            if u == i:
                row.append((e, v))
            elif v == i:
                row.append((e, u))
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=None)
def _avoid_set_table(n: int) -> np.ndarray:
    """Vertex-set bitset S -> mask of edges avoiding S entirely."""
    pos = edge_positions(n)
    table = np.zeros(1 << n, dtype=np.int64)
    for s in range(1 << n):
        m = 0
        for j, (a, b) in enumerate(pos):
            if not (s >> a & 1) and not (s >> b & 1):
                m |= 1 << j
        table[s] = m
    return table


def t_saturating_mask_array(n: int, t: int) -> np.ndarray:
    """Boolean array over all edge masks: is the labeled graph t-saturating?

    Weights are all 1 here (the weighted case goes through the generic
    predicate); fully vectorized, so the n = 7 space (2^21 graphs) takes
    seconds.
    """
    nu = np.frombuffer(bytes(nu_mask_table(n)), dtype=np.uint8).astype(np.int16)
    masks = np.arange(nu.shape[0], dtype=np.int64)
    ok = nu < t
    avoid = _avoid_set_table(n)
    inc = _vertex_incidence_bits(n)
    for i in range(n):
        nbr = np.zeros(nu.shape[0], dtype=np.int64)
        deg = np.zeros(nu.shape[0], dtype=np.int16)
        for e, other in inc[i]:
            bit = (masks >> e) & 1
            nbr |= bit << other
            deg += bit.astype(np.int16)
        sub_nu = nu[masks & avoid[nbr]]
        ok &= (sub_nu + deg) >= t
    return ok


# ---------------------------------------------------------------------
# batched per-graph predicate for sampled checks (n = 8, 9)
# ---------------------------------------------------------------------

def t_saturating_batch(n: int, masks: np.ndarray, t: int) -> np.ndarray:
    """t-saturating predicate for a batch of edge masks (all weights 1).

    Uses the vertex-subset matching DP per graph, vectorized across the
    batch; memory is batch * 2^n bytes, so chunk callers at ~10^5.
    """
    pos = edge_positions(n)
    ne = len(pos)
    g = masks.shape[0]
    has = np.empty((g, ne), dtype=np.int8)
    for e in range(ne):
        has[:, e] = (masks >> e) & 1
    ebit = _edge_bit(n)

    dp = np.zeros((g, 1 << n), dtype=np.int8)
    for s in range(3, 1 << n):
        bits = [v for v in range(n) if s >> v & 1]
        if len(bits) < 2:
            continue
        x = bits[0]
        cur = dp[:, s & ~(1 << x)].copy()
        for y in bits[1:]:
            e = ebit[(x, y)]
            cand = 1 + dp[:, s & ~(1 << x) & ~(1 << y)]
            np.maximum(cur, np.where(has[:, e] == 1, cand, 0), out=cur)
        dp[:, s] = cur

    full = (1 << n) - 1
    ok = dp[:, full] < t
    rows = np.arange(g)
    for i in range(n):
        nbr = np.zeros(g, dtype=np.int64)
        deg = np.zeros(g, dtype=np.int16)
        for e, other in _vertex_incidence_bits(n)[i]:
            bit = (masks >> e) & 1
            nbr |= bit << other
            deg += bit.astype(np.int16)
        sub = dp[rows, full & ~nbr].astype(np.int16)
        ok &= (sub + deg) >= t
    return ok


# ---------------------------------------------------------------------
# isomorphism-class iteration over (edge mask, weight vector) spaces
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _perm_gather(n: int) -> np.ndarray:
    """perm index p, new edge bit j -> source edge bit under permutation p."""
    pos = edge_positions(n)
    bit = _edge_bit(n)
    perms = list(itertools.permutations(range(n)))
    gather = np.empty((len(perms), len(pos)), dtype=np.int64)
    for p, perm in enumerate(perms):
        for e, (u, v) in enumerate(pos):
            a, b = perm[u], perm[v]
            gather[p, bit[(min(a, b), max(a, b))]] = e
    return gather


class ClassInfo:
    """One isomorphism class of the swept space."""

    __slots__ = ("n", "mask", "weights", "orbit_size", "orbit")

    def __init__(self, n, mask, weights, orbit_size, orbit):
        self.n = n
        self.mask = mask
        self.weights = weights
        self.orbit_size = orbit_size
        self.orbit = orbit  # combined indices wv_index << ne | mask

    def graph(self) -> WeightedGraph:
        return graph_of_mask(self.n, self.mask, self.weights)


def iter_classes(
    n: int,
    weight_vectors: Optional[Sequence[tuple[int, ...]]] = None,
    partition: Optional[tuple[int, int]] = None,
) -> Iterator[ClassInfo]:
    """Yield one representative per isomorphism class of (graph, weights).

    ``weight_vectors`` must be closed under coordinate permutation
    (default: the single all-ones vector).  With ``partition = (k, m)``
    only every m-th class (offset k) is yielded; the seen bitmap is still
    maintained globally so sharding is by class index, deterministic.
    """
    ne = len(edge_positions(n))
    if weight_vectors is None:
        wvs = [tuple([1] * n)]
    else:
        wvs = sorted(set(tuple(w) for w in weight_vectors))
    wv_index = {w: i for i, w in enumerate(wvs)}
    perms = list(itertools.permutations(range(n)))
    gather = _perm_gather(n)
    npm = len(perms)

    # permutation action on weight vectors: new_w[perm[v]] = w[v]
    wv_perm = np.empty((npm, len(wvs)), dtype=np.int64)
    for wi, w in enumerate(wvs):
        for p, perm in enumerate(perms):
            new = [0] * n
            for v in range(n):
                new[perm[v]] = w[v]
            try:
                wv_perm[p, wi] = wv_index[tuple(new)]
            except KeyError:
                raise ValueError(
                    "weight_vectors must be closed under permutation"
                ) from None

    space = len(wvs) << ne
    seen = np.zeros(space, dtype=bool)
    bitcols = np.arange(ne, dtype=np.int64)
    total = 0
    count = 0
    ptr = 0
    chunk = 1 << 16
    while ptr < space:
        zeros = np.flatnonzero(~seen[ptr : ptr + chunk])
        if zeros.shape[0] == 0:
            ptr += chunk
            continue
        c = ptr + int(zeros[0])
        wi, mask = c >> ne, c & ((1 << ne) - 1)
        bits = (mask >> bitcols) & 1
        pmasks = (bits[gather] << bitcols).sum(axis=1)
        combined = (wv_perm[:, wi] << ne) | pmasks
        orbit = np.unique(combined)
        assert not seen[orbit].any()
        seen[orbit] = True
        total += orbit.shape[0]
        info = ClassInfo(n, mask, wvs[wi], orbit.shape[0], orbit)
        if partition is None or count % partition[1] == partition[0]:
            yield info
        count += 1
    if total != space:
        raise AssertionError(
            f"orbit sizes sum to {total}, expected {space}: sweep not exhaustive"
        )


def weight_vectors_up_to(
    n: int, cap: int, min_weight: int = 1, max_total: Optional[int] = None
) -> list[tuple[int, ...]]:
    """All weight vectors in {min_weight..cap}^n, optionally sum-bounded."""
    out = []
    for w in itertools.product(range(min_weight, cap + 1), repeat=n):
        if max_total is None or sum(w) <= max_total:
            out.append(w)
    return out
