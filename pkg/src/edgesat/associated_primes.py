"""Associated primes of powers of edge ideals via vertex covers.

A vertex cover F of the ambient graph corresponds to the monomial prime
P_F generated by its variables.  The minimal primes of every power I^t
are exactly the minimal covers.  An embedded prime P_F of I^t is
certified by a witness exponent vector a: the weighted restriction
Gamma_a must be t-saturating, F must be minimal among the covers
containing the closed neighborhood N[V_a] of the support, and
nu(Gamma_a - N_a(i)) >= t - deg_a(i) must hold for every core vertex of
F outside the support.

For t = 4 the witness restrictions range over a finite catalogue of
weighted graph types; ``ass_primes_4`` enumerates candidate covers from
the closed neighborhoods of actual witness supports and validates each
through ``is_associated_prime``, so its correctness never rests on the
catalogue alone.  ``ass_primes_oracle`` recomputes Ass(I^t) straight
from the colon-ideal definition (P_F is associated iff (I^t : x^a) =
P_F for some monomial x^a) and is the ground truth in every test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .edge_ideal import _check_ambient, _outside_condition, restriction
from .weighted_graph import (
    WeightedGraph,
    induced_subgraph,
    is_t_saturating,
    matching_number,
)

Cover = tuple[int, ...]


def closed_neighborhood(gamma: WeightedGraph, u: Iterable[int]) -> frozenset[int]:
    """N[U]: U together with every vertex adjacent to U."""
    u = set(u)
    out = set(u)
    for v in u:
        out |= gamma.neighbors(v)
    return frozenset(out)


def is_cover(gamma: WeightedGraph, f: Iterable[int]) -> bool:
    f = set(f)
    return all(u in f or v in f for u, v in gamma.edges)


def core(gamma: WeightedGraph, f: Iterable[int]) -> frozenset[int]:
    """Vertices of the cover f with no neighbor outside f.

    Empty exactly when f is a minimal cover.  Raises on non-covers.
    """
    f = frozenset(f)
    if not is_cover(gamma, f):
        raise ValueError("core is defined only for vertex covers")
    return frozenset(
        v for v in f if not any(u not in f for u in gamma.neighbors(v))
    )


def minimal_covers(gamma: WeightedGraph) -> list[Cover]:
    """All inclusion-minimal vertex covers, lexicographically sorted.

    Brute subset enumeration by ascending size; fine for the package's
    n <= 9 scale.
    """
    verts = sorted(gamma.vertices)
    found: list[frozenset[int]] = []
    for k in range(len(verts) + 1):
        for sub in itertools.combinations(verts, k):
            s = frozenset(sub)
            if any(m <= s for m in found):
                continue
            if is_cover(gamma, s):
                found.append(s)
    return sorted(tuple(sorted(s)) for s in found)


# ---------------------------------------------------------------------
# witness search (certification of embedded primes)
# ---------------------------------------------------------------------

@lru_cache(maxsize=64)
def _saturating_witnesses(
    gamma: WeightedGraph, t: int
) -> tuple[tuple[tuple[int, ...], frozenset[int]], ...]:
    """All exponent vectors a with a_i <= t whose restriction is
    t-saturating, as (a, support) pairs sorted by total degree then a.

    Exponents above t never change t-saturation or capped matching
    numbers, so this bounded list carries every witness that exists.
    """
    n = gamma.n
    out = []
    for supp in _nonisolated_subsets(gamma):
        sv = sorted(supp)
        for w in itertools.product(range(1, t + 1), repeat=len(sv)):
            a = [0] * n
            for v, x in zip(sv, w):
                a[v] = x
            a = tuple(a)
            if is_t_saturating(restriction(gamma, a), t):
                out.append((a, supp))
    out.sort(key=lambda pair: (sum(pair[0]), pair[0]))
    return tuple(out)


def _nonisolated_subsets(gamma: WeightedGraph) -> list[frozenset[int]]:
    """Nonempty vertex subsets whose induced subgraph has no isolated
    vertex (a necessary condition for any t-saturating restriction)."""
    verts = sorted(gamma.vertices)
    out = []
    for k in range(2, len(verts) + 1):
        for sub in itertools.combinations(verts, k):
            s = set(sub)
            if all(gamma.neighbors(v) & s for v in sub):
                out.append(frozenset(sub))
    return out


def _minimal_over(
    gamma: WeightedGraph, f: frozenset[int], nb: frozenset[int]
) -> bool:
    """Is the cover f minimal among covers containing nb?"""
    return all(not is_cover(gamma, f - {v}) for v in f - nb)


def is_associated_prime(
    gamma: WeightedGraph, f: Iterable[int], t: int
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Is P_F an associated prime of I^t?  Returns (answer, witness).

    Minimal covers (empty core) are associated with witness None.  An
    embedded cover is associated iff some exponent vector a with
    a_i <= t has a t-saturating restriction, F minimal among covers
    containing N[V_a], and nu(Gamma_a - N_a(i)) >= t - deg_a(i) for
    every core vertex i outside the support; the minimal-total-degree
    witness is returned.
    """
    _check_ambient(gamma)
    if t < 1:
        raise ValueError("t must be >= 1")
    f = frozenset(f)
    if not is_cover(gamma, f):
        raise ValueError("f is not a vertex cover")
    c = core(gamma, f)
    if not c:
        return True, None
    for a, supp in _saturating_witnesses(gamma, t):
        nb = closed_neighborhood(gamma, supp)
        if not nb <= f:
            continue
        if not _minimal_over(gamma, f, nb):
            continue
        if _outside_condition(gamma, a, t, iter(c - supp)):
            return True, a
    return False, None


# ---------------------------------------------------------------------
# derived pattern table for t = 4
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def derived_table4_patterns() -> tuple[tuple[str, WeightedGraph], ...]:
    """The dominating-subgraph patterns whose closed neighborhoods
    generate the embedded primes of I^4, deduplicated up to isomorphism.

    Not every pattern is 4-saturating on its own: the reduced forms
    (e.g. two disjoint simple triangles, a plain pentagon) are the
    shapes left after shrinking a witness, and the weights live on the
    unreduced witness restriction.

    Starts from every 4-saturating simple type's template graph and
    every derived weighted class, adds the reduced form each reduction
    produces (triangle + K_4 and the non-adjacent two-triangles bridge
    reduce to two disjoint triangles; prism and the cone over a
    pentagon reduce to a pentagon; the four-triangle union reduces to
    two triangles at a vertex; the doubled double triangle reduces to a
    weighted triangle), and returns ("T4/k", graph) rows sorted by
    vertex count.
    """
    from .canonical import canonical_key
    from .classification import (
        TABLE2,
        _bowtie,
        _complete,
        _cycle,
        _disjoint,
        _triangle,
        derived_table3,
    )

    base: list[WeightedGraph] = [t.pattern.graph for t in TABLE2]
    base += [g for _, g in derived_table3()]
    # reduced forms guaranteed reachable by the pruning steps
    base += [
        _disjoint(_triangle(), _triangle()),
        _cycle(5),
        _bowtie(),
        _triangle([2, 2, 1]),
        _disjoint(_triangle(), _triangle([2, 2, 1])),
        _disjoint(_triangle(), _complete(4)),
    ]
    seen: dict = {}
    for g in base:
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    ordered = sorted(seen.values(), key=lambda g: (g.n, canonical_key(g)))
    return tuple((f"T4/{i + 1}", g) for i, g in enumerate(ordered))


# ---------------------------------------------------------------------
# Ass(I^4) and the brute-force oracle
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddedPrime:
    cover: Cover
    witness: tuple[int, ...]
    pattern_id: str


@dataclass
class AssReport:
    graph: WeightedGraph
    minimal: list[Cover]
    embedded: list[EmbeddedPrime]

    def covers(self) -> list[Cover]:
        return sorted(set(self.minimal) | {e.cover for e in self.embedded})

    def to_jsonable(self) -> dict:
        return {
            "graph": {
                "n": self.graph.n,
                "edges": sorted(list(e) for e in self.graph.edges),
            },
            "minimal": [list(c) for c in self.minimal],
            "embedded": [
                {
                    "cover": list(e.cover),
                    "witness": list(e.witness),
                    "pattern_id": e.pattern_id,
                }
                for e in self.embedded
            ],
        }


def _check_has_edges(gamma: WeightedGraph) -> None:
    if not gamma.edges:
        raise ValueError("edge ideal of an edgeless graph is zero")


def ass_primes_4(gamma: WeightedGraph) -> AssReport:
    """All associated primes of I^4: minimal covers plus the embedded
    covers, each embedded one carrying its witness and the type of the
    witness restriction.

    Candidate embedded covers are exactly N[V_a] union a minimal cover
    of the graph outside N[V_a], for V_a ranging over supports of
    4-saturating restrictions; every candidate is validated through the
    generic witness test.
    """
    from .classification import classify4

    _check_ambient(gamma)
    _check_has_edges(gamma)
    minimal = minimal_covers(gamma)
    minimal_set = {frozenset(c) for c in minimal}
    supports = sorted(
        {supp for _, supp in _saturating_witnesses(gamma, 4)}, key=sorted
    )
    seen: set[frozenset[int]] = set()
    embedded: list[EmbeddedPrime] = []
    for supp in supports:
        nb = closed_neighborhood(gamma, supp)
        rest = induced_subgraph(gamma, [v for v in gamma.vertices if v not in nb])
        for m in minimal_covers(rest):
            f = frozenset(nb | set(m))
            if f in seen or f in minimal_set:
                continue
            seen.add(f)
            ok, witness = is_associated_prime(gamma, f, 4)
            if ok and witness is not None:
                sat_type = classify4(restriction(gamma, witness))
                embedded.append(
                    EmbeddedPrime(
                        tuple(sorted(f)),
                        witness,
                        sat_type.tag if sat_type else "unclassified",
                    )
                )
    embedded.sort(key=lambda e: e.cover)
    return AssReport(gamma, minimal, embedded)


def ass_primes_oracle(
    gamma: WeightedGraph,
    t: int,
    cap: int,
    partition: Optional[tuple[int, int]] = None,
) -> list[Cover]:
    """Ass(I^t) straight from the colon-ideal definition.

    F is reported iff some a with a_i <= cap has (I^t : x^a) = P_F,
    checked as: x^a not in I^t; x^(a + e_i) in I^t exactly for i in F;
    and no monomial off F clears x^a into I^t (bumping every variable
    outside F leaves x^a outside I^t) — without the last check the
    degree-1 equalities alone would also accept colon ideals that
    merely agree with P_F in degree one.

    Exponents are interchangeable above t, so vectors are deduplicated
    by clamping at t.  ``partition = (k, m)`` keeps every m-th leading
    exponent for external sharding; results merge by set union.
    """
    _check_ambient(gamma)
    _check_has_edges(gamma)
    if t < 1 or cap < 1:
        raise ValueError("t and cap must be >= 1")
    n = gamma.n
    memo: dict[tuple[int, ...], bool] = {}

    def ip(a: tuple[int, ...]) -> bool:
        key = tuple(min(x, t) for x in a)
        hit = memo.get(key)
        if hit is None:
            hit = matching_number(restriction(gamma, key), cap=t) >= t
            memo[key] = hit
        return hit

    found: set[frozenset[int]] = set()
    done: set[tuple[int, ...]] = set()
    for head in range(cap + 1):
        if partition is not None and head % partition[1] != partition[0]:
            continue
        for rest in itertools.product(range(cap + 1), repeat=n - 1):
            a = (head,) + rest
            key = tuple(min(x, t) for x in a)
            if key in done:
                continue
            done.add(key)
            if ip(a):
                continue
            f = frozenset(i for i in range(n) if ip(a[:i] + (a[i] + 1,) + a[i + 1 :]))
            if not f or f in found:
                continue
            bumped = tuple(a[i] if i in f else a[i] + 2 * t for i in range(n))
            if ip(bumped):
                continue
            assert is_cover(gamma, f)
            found.add(f)
    return sorted(tuple(sorted(f)) for f in found)


def depth4_positive(gamma: WeightedGraph) -> bool:
    """depth R/I^4 > 0, i.e. the full vertex set is not an associated
    prime of I^4.  Errors on edgeless graphs (I = 0)."""
    _check_ambient(gamma)
    _check_has_edges(gamma)
    ok, _ = is_associated_prime(gamma, gamma.vertices, 4)
    return not ok
