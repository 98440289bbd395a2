"""Independent reference implementations used by the tests.

Everything here works on frozensets of labels and shares no code with the
package, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import sympy
from sympy.polys.matrices import DomainMatrix


def all_faces(facets):
    out = {frozenset()}
    for F in facets:
        F = tuple(F)
        for k in range(1, len(F) + 1):
            out.update(frozenset(c) for c in combinations(F, k))
    return out


def f_vector(facets):
    faces = all_faces(facets)
    top = max(len(f) for f in faces)
    return tuple(sum(1 for f in faces if len(f) == k) for k in range(top + 1))


def graph(facets):
    G = nx.Graph()
    for F in facets:
        G.add_nodes_from(F)
        G.add_edges_from(combinations(sorted(F), 2))
    return G


def minimal_nonfaces(facets):
    faces = all_faces(facets)
    verts = sorted(set().union(*faces))
    out = set()
    for k in range(1, len(verts) + 1):
        for c in combinations(verts, k):
            s = frozenset(c)
            if s in faces:
                continue
            if all(s - {x} in faces for x in s):
                out.add(s)
    return out


def is_flag(facets):
    return all(len(s) == 2 for s in minimal_nonfaces(facets))


def reduced_betti(facets, field):
    """Reduced Betti numbers from sympy ranks over QQ or GF(2)."""
    faces = all_faces(facets)
    top = max(len(f) for f in faces) - 1
    by_dim = {k: sorted(sorted(f) for f in faces if len(f) == k + 1) for k in range(-1, top + 1)}
    dom = sympy.QQ if field == "q" else sympy.GF(2)
    ranks = {}
    for k in range(0, top + 1):
        rows = {tuple(f): i for i, f in enumerate(by_dim[k - 1])}
        M = [[0] * len(by_dim[k]) for _ in rows]
        for j, F in enumerate(by_dim[k]):
            for pos in range(len(F)):
                sub = tuple(F[:pos] + F[pos + 1:])
                M[rows[sub]][j] = (-1) ** pos
        ranks[k] = DomainMatrix([[dom(x) for x in r] for r in M], (len(M), len(by_dim[k])), dom).rank() if M and by_dim[k] else 0
    out = []
    for k in range(0, top + 1):
        nk = len(by_dim[k])
        out.append(nk - ranks[k] - ranks.get(k + 1, 0))
    return out


def induced(facets, S):
    S = frozenset(S)
    faces = [f for f in all_faces(facets) if f and f <= S]
    return [f for f in faces if not any(f < g for g in faces)]


def is_cycle(facets):
    if not facets or any(len(f) != 2 for f in facets):
        return False
    G = graph(facets)
    return nx.is_connected(G) and all(d == 2 for _, d in G.degree())


def is_2sphere(facets):
    """Triangulated closed surface, connected, χ = 2, cycle links."""
    if not facets or any(len(f) != 3 for f in facets):
        return False
    edges = {}
    for F in facets:
        for e in combinations(sorted(F), 2):
            edges[e] = edges.get(e, 0) + 1
    if any(c != 2 for c in edges.values()):
        return False
    verts = set().union(*facets)
    if len(verts) - len(edges) + len(facets) != 2:
        return False
    if not nx.is_connected(graph(facets)):
        return False
    for v in verts:
        lk = [F - {v} for F in facets if v in F]
        if not is_cycle(lk):
            return False
    return True


def link(facets, v):
    return [frozenset(F) - {v} for F in facets if v in F]


def equators(facets):
    """All S with an induced 2-sphere, by brute force over every subset."""
    verts = sorted(set().union(*map(frozenset, facets)))
    out = []
    for k in range(4, len(verts) + 1):
        for S in combinations(verts, k):
            E = induced(facets, S)
            if is_2sphere(E):
                out.append(frozenset(S))
    return out


def induced_4cycles(facets, e):
    G = graph(facets)
    u, v = e
    out = set()
    for a in G[v]:
        for b in G[u]:
            if len({u, v, a, b}) < 4:
                continue
            H = G.subgraph({u, v, a, b})
            if H.number_of_edges() == 4 and all(d == 2 for _, d in H.degree()):
                out.add(frozenset({u, v, a, b}))
    return out


def isomorphic(f1, f2):
    """Facet-vertex incidence graphs are isomorphic iff the complexes are."""

    def inc(facets):
        B = nx.Graph()
        for i, F in enumerate(facets):
            B.add_node(("F", i), side=1)
            for x in F:
                B.add_node(("v", x), side=0)
                B.add_edge(("F", i), ("v", x))
        return B

    return nx.is_isomorphic(inc(f1), inc(f2), node_match=lambda a, b: a["side"] == b["side"])


def is_shelling(order):
    """Each facet meets the earlier ones in a pure codim-1 complex."""
    order = [frozenset(F) for F in order]
    for j in range(1, len(order)):
        F = order[j]
        meets = {F & G for G in order[:j]}
        maxi = [m for m in meets if not any(m < o for o in meets)]
        if any(len(m) != len(F) - 1 for m in maxi):
            return False
    return True
