"""Simple graphs viewed as one-dimensional simplicial complexes.

Covers the Stanley-Reisner ideal of a graph and its symbolic powers, the
graph invariants the closed-form formulas branch on (girth, diameter,
compact vertices, the five condition classes), matroid tests, and a
brute-force canonical form used for isomorphism and deduplication.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable

from .complexes import SimplicialComplex
from .monomial import (
    MonomialIdeal,
    intersect_all,
    minimalize,
    power,
    prime_ideal,
    squarefree,
)
from .values import InputError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Loop-free undirected graph on vertices 1..nvertices; isolated vertices allowed."""

    nvertices: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.nvertices < 1:
            raise InputError("a graph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u < v <= self.nvertices):
                raise InputError(f"bad edge {(u, v)} for a graph on {self.nvertices} vertices")

    @classmethod
    def from_edges(cls, nvertices: int, edges: Iterable[Iterable[int]]) -> "Graph":
        seen: set[Edge] = set()
        for e in edges:
            pair = tuple(int(x) for x in e)
            if len(pair) != 2:
                raise InputError(f"edge {pair} does not have two endpoints")
            u, v = pair
            if u == v:
                raise InputError(f"loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= nvertices:
                    raise InputError(f"vertex {x} outside 1..{nvertices}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        return cls(nvertices, frozenset(seen))

    @property
    def r(self) -> int:
        return self.nvertices

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.nvertices + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, p: int) -> frozenset[int]:
        return self._adj[p]

    def degree(self, p: int) -> int:
        return len(self._adj[p])

    def max_degree(self) -> int:
        return max(self.degree(p) for p in self.vertices())

    def vertices(self) -> range:
        return range(1, self.nvertices + 1)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def isolated_vertices(self) -> list[int]:
        return [p for p in self.vertices() if not self._adj[p]]

    def as_complex(self) -> SimplicialComplex:
        """The graph as a 1-dimensional complex (isolated vertices become 0-dim facets)."""
        faces = [list(e) for e in self.edges] + [[p] for p in self.vertices()]
        return SimplicialComplex.from_faces(self.nvertices, faces)

    def without_isolated(self) -> tuple["Graph", list[int]]:
        """Relabel onto the non-isolated vertices; returns the graph and the old labels."""
        keep = [p for p in self.vertices() if self._adj[p]]
        if not keep:
            raise InputError("graph has no edges")
        return induced_subgraph(self, keep), keep

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"G[{self.nvertices}]({body})"


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """G[V], relabelled 1..|V| in increasing order of V."""
    vs = sorted(vertices)
    index = {v: i + 1 for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph(len(vs), frozenset(edges))


# named graphs; P_l and C_l are indexed by length (number of edges)

def path_graph(length: int) -> Graph:
    return Graph.from_edges(length + 1, [(i, i + 1) for i in range(1, length + 1)])


def cycle_graph(length: int) -> Graph:
    return Graph.from_edges(length, [(i, i % length + 1) for i in range(1, length + 1)])


def complete_graph(r: int) -> Graph:
    return Graph.from_edges(r, combinations(range(1, r + 1), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre labelled leaves+1."""
    return Graph.from_edges(leaves + 1, [(leaves + 1, i) for i in range(1, leaves + 1)])


def broom() -> Graph:
    """Triangle 1-2-3 with pendant edge 3-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def pentagon() -> Graph:
    return cycle_graph(5)


def diamond() -> Graph:
    """Two non-adjacent vertices 4, 5 joined to each of 1, 2, 3."""
    return Graph.from_edges(5, [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)])


# canonical form

def _pairs(r: int) -> list[Edge]:
    return list(combinations(range(r), 2))


def canonical_form(G: Graph) -> tuple[int, int]:
    """(r, code) where code is the minimum adjacency bitstring over relabellings.

    The minimum runs over relabellings that list vertices in increasing order
    of the invariant (degree, sorted neighbour degrees); this set of
    relabellings is itself isomorphism-invariant, so the result is canonical.
    """
    r = G.nvertices
    adj = [[False] * r for _ in range(r)]
    for u, v in G.edges:
        adj[u - 1][v - 1] = adj[v - 1][u - 1] = True
    deg = [sum(row) for row in adj]
    key = [(deg[v], tuple(sorted(deg[w] for w in range(r) if adj[v][w]))) for v in range(r)]
    classes: dict[tuple, list[int]] = {}
    for v in range(r):
        classes.setdefault(key[v], []).append(v)
    blocks = [classes[k] for k in sorted(classes)]
    pairs = _pairs(r)
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        code = 0
        for i, j in pairs:
            code = (code << 1) | adj[order[i]][order[j]]
        if best is None or code < best:
            best = code
    return r, best if best is not None else 0


def graph_from_code(r: int, code: int) -> Graph:
    pairs = _pairs(r)
    edges = []
    for k, (i, j) in enumerate(pairs):
        if (code >> (len(pairs) - 1 - k)) & 1:
            edges.append((i + 1, j + 1))
    return Graph(r, frozenset(edges))


def canonical_graph(G: Graph) -> Graph:
    return graph_from_code(*canonical_form(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return canonical_form(G) == canonical_form(H)


# ideals

def stanley_reisner(G: Graph) -> MonomialIdeal:
    """I_G: generated by the non-edges and the triangles of G."""
    if not G.edges:
        raise InputError("the Stanley-Reisner ideal needs at least one edge")
    r = G.nvertices
    gens = [squarefree(p, r) for p in combinations(G.vertices(), 2) if p not in G.edges]
    gens += [squarefree(t, r) for t in triangles(G)]
    return minimalize(gens, r)


def edge_prime(e: Iterable[int], r: int) -> MonomialIdeal:
    """P_e = (x_i : i not in e)."""
    e = set(e)
    if len(e) != 2 or any(not 1 <= x <= r for x in e):
        raise InputError(f"{sorted(e)} is not an edge on 1..{r}")
    return prime_ideal((i for i in range(1, r + 1) if i not in e), r)


def facet_prime(F: Iterable[int], r: int) -> MonomialIdeal:
    """P_{complement of F} = (x_i : i not in F)."""
    F = set(F)
    return prime_ideal((i for i in range(1, r + 1) if i not in F), r)


def facet_primes(G: Graph) -> list[MonomialIdeal]:
    """Minimal primes of I_G: one per edge and one per isolated vertex."""
    return [facet_prime(F, G.nvertices) for F in G.as_complex().facets]


def symbolic_power(G: Graph, n: int) -> MonomialIdeal:
    """I_G^(n), the intersection of the n-th powers of the minimal primes of I_G.

    Without isolated vertices the minimal primes are exactly the edge primes
    P_e; an isolated vertex p contributes the prime (x_i : i != p).
    """
    if not G.edges:
        raise InputError("symbolic powers need at least one edge")
    if n < 1:
        raise InputError("symbolic power exponent must be positive")
    return intersect_all((power(P, n) for P in facet_primes(G)), G.nvertices)


# invariants

def triangles(G: Graph) -> list[tuple[int, int, int]]:
    return [t for t in combinations(G.vertices(), 3)
            if G.adjacent(t[0], t[1]) and G.adjacent(t[0], t[2]) and G.adjacent(t[1], t[2])]


def distances_from(G: Graph, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def girth(G: Graph) -> float | int:
    """Length of a shortest cycle, math.inf for forests."""
    best: float | int = math.inf
    for s in G.vertices():
        dist = {s: 0}
        parent = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def diameter(G: Graph) -> float | int:
    best = 0
    for s in G.vertices():
        dist = distances_from(G, s)
        if len(dist) < G.nvertices:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def compact_vertices(G: Graph) -> set[int]:
    in_triangle = {v for t in triangles(G) for v in t}
    return {p for p in in_triangle if G.degree(p) >= 3}


@dataclass(frozen=True)
class GraphProfile:
    girth: float | int
    diameter: float | int
    max_degree: int
    connected: bool
    compact_vertices: frozenset[int]
    isolated_vertices: frozenset[int]


def graph_profile(G: Graph) -> GraphProfile:
    diam = diameter(G)
    return GraphProfile(
        girth=girth(G),
        diameter=diam,
        max_degree=G.max_degree(),
        connected=diam != math.inf,
        compact_vertices=frozenset(compact_vertices(G)),
        isolated_vertices=frozenset(G.isolated_vertices()),
    )


@dataclass(frozen=True)
class ConditionClass:
    label: str  # C1..C5
    subcase: str = "NONE"  # for C5: P1, P2, C3CYCLE, C4CYCLE, C5CYCLE

    def __str__(self) -> str:
        return self.label if self.subcase == "NONE" else f"{self.label}/{self.subcase}"


def has_wide_common_neighborhood(G: Graph) -> bool:
    """Two non-adjacent vertices sharing at least three neighbours."""
    return any(not G.adjacent(p, q) and len(G.neighbors(p) & G.neighbors(q)) >= 3
               for p, q in combinations(G.vertices(), 2))


_C5_SUBCASES = {
    "P1": path_graph(1),
    "P2": path_graph(2),
    "C3CYCLE": cycle_graph(3),
    "C4CYCLE": cycle_graph(4),
    "C5CYCLE": cycle_graph(5),
}


def condition_class(G: Graph) -> ConditionClass:
    """Classify G into C1..C5 for the a_1 formula (no isolated vertices, r >= 3)."""
    if G.nvertices < 3:
        raise InputError("condition classes are defined for r >= 3")
    if G.isolated_vertices():
        raise InputError("condition classes need a graph without isolated vertices")
    if compact_vertices(G):
        return ConditionClass("C1")
    if has_wide_common_neighborhood(G):
        return ConditionClass("C2")
    if G.max_degree() >= 3:
        return ConditionClass("C3")
    if diameter(G) >= 3:
        return ConditionClass("C4")
    for name, H in _C5_SUBCASES.items():
        if is_isomorphic(G, H):
            return ConditionClass("C5", name)
    raise AssertionError(f"{G} has max degree <= 2 and diameter <= 2 but is unrecognised")


# matroids

class MatroidMethod(str, enum.Enum):
    EXCHANGE = "exchange"
    FOURCYCLE = "fourcycle"
    OBSTRUCTION = "obstruction"


def _exchange(G: Graph) -> bool:
    faces: list[frozenset[int]] = [frozenset()]
    faces += [frozenset([p]) for p in G.vertices()]
    faces += [frozenset(e) for e in G.edges]
    face_set = set(faces)
    for F in faces:
        for H in faces:
            if len(F) < len(H) and not any(F | {x} in face_set for x in H - F):
                return False
    return True


def _fourcycle(G: Graph) -> bool:
    # an isolated vertex next to an edge already breaks exchange (diameter is infinite)
    if G.edges and G.isolated_vertices():
        return False
    for (a, b), (c, d) in combinations(G.sorted_edges(), 2):
        if {a, b} & {c, d}:
            continue
        adj = G.adjacent
        if not ((adj(b, c) and adj(d, a)) or (adj(b, d) and adj(c, a))):
            return False
    return True


def find_obstruction(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    """First induced Broom (on 4 vertices) or Pentagon (on 5), or None."""
    target = canonical_form(broom())
    for vs in combinations(G.vertices(), 4):
        if canonical_form(induced_subgraph(G, vs)) == target:
            return "Broom", vs
    target = canonical_form(pentagon())
    for vs in combinations(G.vertices(), 5):
        if canonical_form(induced_subgraph(G, vs)) == target:
            return "Pentagon", vs
    return None


def is_matroid(G: Graph, method: MatroidMethod | str = MatroidMethod.EXCHANGE) -> bool:
    method = MatroidMethod(method)
    if method is MatroidMethod.EXCHANGE:
        return _exchange(G)
    if method is MatroidMethod.FOURCYCLE:
        return _fourcycle(G)
    if diameter(G) > 2:
        raise PreconditionError("the obstruction test needs diameter <= 2")
    return find_obstruction(G) is None
