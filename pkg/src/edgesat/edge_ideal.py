"""Monomial membership in powers of edge ideals and their saturations.

The ambient object is a simple graph gamma on vertices 0..n-1; the edge
ideal I is generated by x_u x_v over the edges.  The ideal is never
materialized: every question reduces to weighted matchings.

* x^a lies in I^t  iff  the weighted restriction of gamma to the support
  of a (weights a_i) has a matching of size t.
* x^a lies in sat(I^t) \ I^t  iff  the restriction is t-saturating and
  every vertex outside the support satisfies
  nu(Gamma_a - N_a(i)) >= t - deg_a(i), where N_a(i) is the set of
  neighbors of i inside the support and deg_a(i) the sum of their
  weights.

``in_saturation_oracle`` decides the same membership straight from the
definition of saturation (bump one variable's exponent high and test
power membership), giving an independent cross-check.

``is_sat4_member`` is the closed-form t = 4 answer: membership in
sat(I^4) \ I^4 holds iff the support is dominating and one of three
structural cases fires (triangle plus K_4; two triangles joined by a
length-2 path; any other 4-saturating restriction with
deg_a(i) > 7 - deg(x^a) outside the support).
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .weighted_graph import (
    WeightedGraph,
    connected_components,
    delete_vertices,
    induced_subgraph,
    is_t_saturating,
    matching_number,
)

ExponentVector = tuple[int, ...]


def support(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(a) if x > 0)


def degree(a: Sequence[int]) -> int:
    return sum(a)


def _check_ambient(gamma: WeightedGraph) -> None:
    if any(w != 1 for w in gamma.weights):
        raise ValueError("ambient graph must have all weights 1")
    if gamma.vertices != tuple(range(gamma.n)):
        raise ValueError("ambient graph must live on vertices 0..n-1")


def restriction(gamma: WeightedGraph, a: Sequence[int]) -> WeightedGraph:
    """Induced subgraph on the support of a, vertex i weighted a_i."""
    _check_ambient(gamma)
    if len(a) != gamma.n:
        raise ValueError("exponent vector length must match vertex count")
    if any(x < 0 for x in a):
        raise ValueError("exponents must be nonnegative")
    supp = support(a)
    sub = induced_subgraph(gamma, supp)
    return WeightedGraph(sub.vertices, sub.edges, tuple(a[v] for v in supp))


def in_power(gamma: WeightedGraph, a: Sequence[int], t: int) -> bool:
    """x^a in I^t, i.e. nu(Gamma_a) >= t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return matching_number(restriction(gamma, a), cap=t) >= t


def _outside_condition(
    gamma: WeightedGraph, a: Sequence[int], t: int, outside: Iterator[int]
) -> bool:
    """nu(Gamma_a - N_a(i)) >= t - deg_a(i) for the given outside vertices."""
    gam_a = restriction(gamma, a)
    supp = set(gam_a.vertices)
    for i in outside:
        nbrs_in = [j for j in gamma.neighbors(i) if j in supp]
        need = t - sum(a[j] for j in nbrs_in)
        if need <= 0:
            continue
        h = delete_vertices(gam_a, nbrs_in)
        if matching_number(h, cap=need) < need:
            return False
    return True


def in_saturation(gamma: WeightedGraph, a: Sequence[int], t: int) -> bool:
    """x^a in sat(I^t), via the t-saturating characterization."""
    if in_power(gamma, a, t):
        return True
    gam_a = restriction(gamma, a)
    if not is_t_saturating(gam_a, t):
        return False
    supp = set(gam_a.vertices)
    return _outside_condition(
        gamma, a, t, (i for i in gamma.vertices if i not in supp)
    )


def in_saturation_oracle(gamma: WeightedGraph, a: Sequence[int], t: int) -> bool:
    """x^a in sat(I^t), straight from the definition of saturation.

    x^a is in the saturation iff for every vertex i some power x_i^k
    pushes x^a into I^t.  Membership is monotone in exponents and
    exponents beyond t at a single vertex cannot raise a capped matching
    number, so the fixed bump K = 2t is saturating.
    """
    _check_ambient(gamma)
    k = 2 * t
    a = tuple(a)
    for i in gamma.vertices:
        bumped = a[:i] + (a[i] + k,) + a[i + 1 :]
        if not in_power(gamma, bumped, t):
            return False
    return True


def is_dominating(gamma: WeightedGraph, s: set[int], strict: bool = False) -> bool:
    """Every vertex lies in s or has a neighbor in s.

    With ``strict`` set, vertices of s must themselves have a neighbor in
    s.  The two readings coincide on every actual saturation witness
    (4-saturating restrictions have no isolated vertices), and the
    inclusive default is the one under which every saturation witness has
    a dominating support (verified exhaustively).
    """
    for v in gamma.vertices:
        if v in s and not strict:
            continue
        if not (gamma.neighbors(v) & s):
            return False
    return True


# ---------------------------------------------------------------------
# the closed-form t = 4 membership test
# ---------------------------------------------------------------------

def _is_triangle_plus_k4(g: WeightedGraph) -> Optional[tuple[set[int], set[int]]]:
    """If g is exactly a disjoint triangle + K_4 (all weights 1), return them."""
    if g.n != 7 or any(w != 1 for w in g.weights) or len(g.edges) != 9:
        return None
    comps = connected_components(g)
    if sorted(len(c) for c in comps) != [3, 4]:
        return None
    tri = min(comps, key=len)
    k4 = max(comps, key=len)
    tri_edges = sum(1 for u, v in g.edges if u in tri)
    k4_edges = sum(1 for u, v in g.edges if u in k4)
    if tri_edges == 3 and k4_edges == 6:
        return set(tri), set(k4)
    return None


def _two_triangles_path2_placements(
    g: WeightedGraph,
) -> Iterator[tuple[set[int], set[int], int, int, int]]:
    """Spanning placements of: two disjoint triangles T1, T2 plus a middle
    vertex v adjacent to u in T1 and w in T2 (yields (T1, T2, u, v, w))."""
    if g.n != 7 or any(w != 1 for w in g.weights):
        return
    verts = list(g.vertices)
    for t1 in itertools.combinations(verts, 3):
        if not _is_triangle(g, t1):
            continue
        rest = [x for x in verts if x not in t1]
        for t2 in itertools.combinations(rest, 3):
            if not _is_triangle(g, t2):
                continue
            (v,) = [x for x in rest if x not in t2]
            for u in t1:
                if u not in g.neighbors(v):
                    continue
                for w in t2:
                    if w in g.neighbors(v):
                        yield set(t1), set(t2), u, v, w


def _is_triangle(g: WeightedGraph, tri) -> bool:
    a, b, c = tri
    return (
        b in g.neighbors(a) and c in g.neighbors(a) and c in g.neighbors(b)
    )


def is_sat4_member(
    gamma: WeightedGraph, a: Sequence[int], strict_dominating: bool = False
) -> tuple[bool, Optional[str]]:
    """x^a in sat(I^4) \\ I^4 by the structural trichotomy.

    Returns (member, case) with case in {"i", "ii", "iii"} naming the
    first clause that fired (None when not a member).
    """
    _check_ambient(gamma)
    a = tuple(a)
    gam_a = restriction(gamma, a)
    supp = set(gam_a.vertices)
    if not supp or not is_dominating(gamma, supp, strict=strict_dominating):
        return False, None
    outside = [i for i in gamma.vertices if i not in supp]

    # (i) restriction is exactly triangle + K_4; every outside vertex is
    # adjacent to the triangle or to >= 2 vertices of the K_4 (hence to
    # every triangle of the K_4)
    split = _is_triangle_plus_k4(gam_a)
    if split is not None:
        tri, k4 = split
        if all(
            (gamma.neighbors(i) & tri) or len(gamma.neighbors(i) & k4) >= 2
            for i in outside
        ):
            return True, "i"

    # (ii) restriction is spanned by two disjoint triangles joined by a
    # length-2 path; the path endpoints are adjacent, or every outside
    # vertex is adjacent to one of the triangles
    for t1, t2, u, v, w in _two_triangles_path2_placements(gam_a):
        if w in gam_a.neighbors(u):
            return True, "ii"
        if all(gamma.neighbors(i) & (t1 | t2) for i in outside):
            return True, "ii"

    # (iii) restriction matches any other 4-saturating type and
    # deg_a(i) > 7 - deg(x^a) for every outside vertex
    from .classification import matches_any_type4

    if matches_any_type4(gam_a, exclude=((("T2", 7), ("T2", 12)))):
        d = degree(a)
        ok = True
        for i in outside:
            deg_a = sum(a[j] for j in gamma.neighbors(i) if j in supp)
            if not deg_a > 7 - d:
                ok = False
                break
        if ok:
            return True, "iii"
    return False, None


def saturation_gap_witnesses(
    gamma: WeightedGraph,
    t: int,
    cap: Optional[int] = None,
    partition: Optional[tuple[int, int]] = None,
) -> list[ExponentVector]:
    """All a with a_i <= cap and x^a in sat(I^t) \\ I^t, lexicographic.

    Default cap is t (exponents above t are equivalent to t for both
    memberships).  ``partition = (k, m)`` keeps every m-th candidate
    block by leading coordinate for external sharding.
    """
    _check_ambient(gamma)
    if cap is None:
        cap = t
    if cap < 1:
        raise ValueError("cap must be >= 1")
    out = []
    for idx, head in enumerate(range(cap + 1)):
        if partition is not None and idx % partition[1] != partition[0]:
            continue
        for rest in itertools.product(range(cap + 1), repeat=gamma.n - 1):
            a = (head,) + rest
            if in_saturation(gamma, a, t) and not in_power(gamma, a, t):
                out.append(a)
    return out
