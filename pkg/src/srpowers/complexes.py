"""Finite simplicial complexes given by their facets."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

Face = tuple[int, ...]


class Kind(enum.Enum):
    VOID = "void"  # no faces at all
    IRRELEVANT = "irrelevant"  # only the empty face
    PROPER = "proper"


def _maximal(faces: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    sets = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in sets:
        if not any(s <= k for k in kept):
            kept.append(s)
    return tuple(sorted((tuple(sorted(s)) for s in kept), key=lambda f: (len(f), f)))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the ground set 1..nvertices.

    Only facets are stored. ``facets == ()`` is the void complex and
    ``facets == ((),)`` the irrelevant complex {emptyset}; the two have
    different reduced homology in dimension -1 and are never conflated.
    """

    nvertices: int
    facets: tuple[Face, ...]

    @classmethod
    def from_faces(cls, nvertices: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(nvertices, _maximal(faces))

    @classmethod
    def void(cls, nvertices: int) -> "SimplicialComplex":
        return cls(nvertices, ())

    @classmethod
    def irrelevant(cls, nvertices: int) -> "SimplicialComplex":
        return cls(nvertices, ((),))

    @property
    def kind(self) -> Kind:
        if not self.facets:
            return Kind.VOID
        if self.facets == ((),):
            return Kind.IRRELEVANT
        return Kind.PROPER

    @property
    def dimension(self) -> int | None:
        """Largest face dimension; None for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set[Face]:
        out: set[Face] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return out

    def faces_by_dimension(self) -> dict[int, list[Face]]:
        by_dim: dict[int, list[Face]] = {}
        for f in self.faces():
            by_dim.setdefault(len(f) - 1, []).append(f)
        return {d: sorted(fs) for d, fs in sorted(by_dim.items())}

    def __contains__(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    def vertices(self) -> set[int]:
        return {v for f in self.facets for v in f}

    def isolated_vertices(self) -> set[int]:
        """Vertices p with {p} a facet."""
        return {f[0] for f in self.facets if len(f) == 1}

    def __str__(self) -> str:
        if self.kind is Kind.VOID:
            return "VOID"
        if self.kind is Kind.IRRELEVANT:
            return "{{}}"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets) + ">"


def link(D: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    """Link_D(F) = {H - F : F <= H in D}."""
    s = frozenset(F)
    above = [set(f) - s for f in D.facets if s <= set(f)]
    if not above:
        return SimplicialComplex.void(D.nvertices)
    return SimplicialComplex.from_faces(D.nvertices, above)


def pure_skeleton(D: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by the i-dimensional faces of D."""
    if i < 0:
        raise ValueError("skeleton dimension must be nonnegative")
    top = set()
    for f in D.facets:
        top.update(combinations(f, i + 1))
    return SimplicialComplex(D.nvertices, tuple(sorted(top)))


def is_connected(D: SimplicialComplex) -> bool:
    """Connectivity of the 1-skeleton; the void and irrelevant complexes count as connected."""
    verts = D.vertices()
    if not verts:
        return True
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for f in D.facets:
        for a, b in combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return seen == verts


def components(D: SimplicialComplex) -> int:
    """Number of connected components (0 for void/irrelevant)."""
    verts = D.vertices()
    parent = {v: v for v in verts}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in D.facets:
        for a in f[1:]:
            parent[find(a)] = find(f[0])
    return len({find(v) for v in verts})
