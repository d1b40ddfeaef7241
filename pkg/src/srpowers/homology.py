"""Reduced simplicial homology over the rationals via exact integer ranks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Face, SimplicialComplex

Matrix = list[list[int]]


@dataclass(frozen=True)
class ChainComplexData:
    """Faces per dimension (lexicographic) and the boundary matrices.

    ``boundaries[j]`` maps j-chains to (j-1)-chains: rows index
    ``faces[j-1]`` and columns index ``faces[j]``. The augmentation is
    ``boundaries[0]``, a 1 x #vertices row of ones.
    """

    faces: dict[int, list[Face]]
    boundaries: dict[int, Matrix]


@dataclass(frozen=True)
class HomologyDims:
    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, j: int) -> int:
        return self.dims.get(j, 0)

    def nonzero(self) -> dict[int, int]:
        return {j: d for j, d in self.dims.items() if d}


def boundary_matrices(D: SimplicialComplex) -> ChainComplexData:
    faces = D.faces_by_dimension() if D.facets else {}
    index = {j: {f: k for k, f in enumerate(fs)} for j, fs in faces.items()}
    boundaries: dict[int, Matrix] = {}
    for j, fs in faces.items():
        if j < 0:
            continue
        rows = faces[j - 1]
        mat = [[0] * len(fs) for _ in rows]
        for c, f in enumerate(fs):
            for k in range(len(f)):
                sub = f[:k] + f[k + 1:]
                mat[index[j - 1][sub]][c] = -1 if k % 2 else 1
        boundaries[j] = mat
    return ChainComplexData(faces, boundaries)


def integer_rank(mat: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            f = m[r][c]
            for k in range(c, ncols):
                m[r][k] = (p * m[r][k] - f * m[rank][k]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


_CACHE: dict[SimplicialComplex, HomologyDims] = {}


def reduced_homology_dims(D: SimplicialComplex) -> HomologyDims:
    """dim H~_j(D; Q) for j >= -1; results are memoised per complex."""
    cached = _CACHE.get(D)
    if cached is not None:
        return cached
    data = boundary_matrices(D)
    ranks = {j: integer_rank(mat) for j, mat in data.boundaries.items()}
    dims = {}
    for j, fs in data.faces.items():
        d = len(fs) - ranks.get(j, 0) - ranks.get(j + 1, 0)
        if d:
            dims[j] = d
    result = HomologyDims(dims)
    _CACHE[D] = result
    return result


def seen_complexes() -> list[SimplicialComplex]:
    """Every complex whose homology has been computed in this process."""
    return list(_CACHE)


def clear_cache() -> None:
    _CACHE.clear()
