"""Brute-force local cohomology of S/I for a monomial ideal I.

For a degree vector a in Z^r, the graded piece H^i_m(S/I)_a is the reduced
homology H~_{i-|G_a|-1} of the degree complex

    Delta_a(I) = {F <= [r] - G_a : x^{a_+} not in I[F u G_a]},

gated by the requirement that x_{G_a} is not in the radical of I.  The
complex depends on a only through G_a = {i : a_i < 0} and min(a_i, D_i),
where D_i is the largest exponent of x_i among the generators, and the
pieces vanish once some a_i reaches D_i (Delta_a is then a cone).  So the
finite box  prod_i {-1, 0, ..., D_i}  carries every a_i-invariant.

:func:`degree_sweep` evaluates the whole box at once with numpy bitmask
arithmetic; :func:`delta_a` and :func:`delta_a_by_localization` are the
per-vector reference routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .complexes import SimplicialComplex
from .homology import reduced_homology_dims
from .monomial import (
    MonomialIdeal,
    contains,
    localize,
    monomials_in_box,
    power,
    radical,
    saturate,
    squarefree,
)
from .values import NEG_INFINITY, InputError, InvariantValue, vmax

# points per vectorised chunk; bounds the (points x generators x r) temporary
_CHUNK = 2048


@dataclass(frozen=True)
class DegreeVector:
    entries: tuple[int, ...]

    @property
    def neg_support(self) -> frozenset[int]:
        """G_a, 1-indexed."""
        return frozenset(i + 1 for i, x in enumerate(self.entries) if x < 0)

    @property
    def pos_part(self) -> tuple[int, ...]:
        return tuple(max(x, 0) for x in self.entries)

    @property
    def degree(self) -> int:
        return sum(self.entries)


def _as_degree(a: Sequence[int] | DegreeVector, r: int) -> DegreeVector:
    dv = a if isinstance(a, DegreeVector) else DegreeVector(tuple(int(x) for x in a))
    if len(dv.entries) != r:
        raise InputError(f"degree vector {dv.entries} has length {len(dv.entries)}, expected {r}")
    return dv


def _bits(mask: int, r: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(r) if mask >> i & 1)


def delta_a(I: MonomialIdeal, a: Sequence[int] | DegreeVector) -> SimplicialComplex:
    """Delta_a(I) by the generator-degree test.

    F is a face iff F misses G_a and every generator u has some coordinate
    i outside F u G_a with a_i < deg_i(u).
    """
    r = I.nvars
    a = _as_degree(a, r)
    neg = a.neg_support
    free = [i for i in range(1, r + 1) if i not in neg]
    faces = []
    for k in range(1 << len(free)):
        F = {free[b] for b in range(len(free)) if k >> b & 1}
        outside = [i for i in range(1, r + 1) if i not in F and i not in neg]
        if all(any(a.entries[i - 1] < u[i - 1] for i in outside) for u in I.gens):
            faces.append(F)
    return SimplicialComplex.from_faces(r, faces)


def delta_a_by_localization(I: MonomialIdeal, a: Sequence[int] | DegreeVector) -> SimplicialComplex:
    """Delta_a(I) via membership of x^{a_+} in the monomial localization."""
    r = I.nvars
    a = _as_degree(a, r)
    neg = a.neg_support
    free = [i for i in range(1, r + 1) if i not in neg]
    faces = []
    for k in range(1 << len(free)):
        F = {free[b] for b in range(len(free)) if k >> b & 1}
        if not contains(localize(I, F | neg), a.pos_part):
            faces.append(F)
    return SimplicialComplex.from_faces(r, faces)


def in_radical_complex(I: MonomialIdeal, G: frozenset[int] | set[int]) -> bool:
    """G in Delta(I), i.e. x_G is not in the radical of I."""
    return not contains(radical(I), squarefree(G, I.nvars))


def lc_piece_dim(I: MonomialIdeal, i: int, a: Sequence[int] | DegreeVector, *, gated: bool = True) -> int:
    """dim_K H^i_m(S/I)_a."""
    if i < 0:
        raise InputError("cohomological index must be nonnegative")
    r = I.nvars
    a = _as_degree(a, r)
    neg = a.neg_support
    if gated and not in_radical_complex(I, neg):
        return 0
    return reduced_homology_dims(delta_a(I, a))[i - len(neg) - 1]


# the vectorised sweep

@dataclass
class DegreeSweep:
    """Every graded piece of H^*_m(S/I) over the capped degree box.

    ``dims[p, i]`` is the gated piece dimension at ``points[p]`` and
    ``ungated[p, i]`` the same without the radical gate.
    """

    ideal: MonomialIdeal
    caps: tuple[int, ...]
    points: np.ndarray
    degrees: np.ndarray
    nneg: np.ndarray
    complex_index: np.ndarray
    complexes: list[SimplicialComplex]
    gate: np.ndarray
    dims: np.ndarray
    ungated: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    def complex_at(self, a: Sequence[int]) -> SimplicialComplex:
        return self.complexes[self.complex_index[self._row(a)]]

    def _row(self, a: Sequence[int]) -> int:
        r = len(self.caps)
        idx = 0
        for i in range(r):
            v = min(int(a[i]), self.caps[i])
            v = -1 if v < 0 else v
            idx = idx * (self.caps[i] + 2) + (v + 1)
        return idx

    def ai(self, i: int, j: int | None = None) -> InvariantValue:
        """a_i, or the refinement a_i^j restricted to |G_a| = j."""
        if i < 0:
            raise InputError("cohomological index must be nonnegative")
        if i > len(self.caps):
            return NEG_INFINITY
        key = (i, j)
        if key not in self._cache:
            mask = self.dims[:, i] > 0
            if j is not None:
                mask &= self.nneg == j
            self._cache[key] = int(self.degrees[mask].max()) if mask.any() else NEG_INFINITY
        return self._cache[key]

    def gate_redundant(self) -> bool:
        """True iff gated and ungated dimensions agree at every point."""
        return bool((self.dims == self.ungated).all())

    def boundary_vanishes(self) -> bool:
        caps = np.array(self.caps)
        at_cap = (self.points == caps[None, :]).any(axis=1)
        return not self.ungated[at_cap].any()


def _box(caps: Sequence[int]) -> np.ndarray:
    grids = [np.arange(-1, c + 1) for c in caps]
    mesh = np.meshgrid(*grids, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1).astype(np.int64)


def _face_table(U: np.ndarray, A: np.ndarray, r: int) -> np.ndarray:
    """face[p, F] for every point of A and every subset bitmask F."""
    full = (1 << r) - 1
    nsub = 1 << r
    weights = (1 << np.arange(r)).astype(np.int64)
    npts = len(A)
    negmask = ((A < 0) * weights).sum(axis=1)
    covered = np.zeros((npts, nsub), dtype=bool)
    if len(U):
        # L[p, u]: coordinates where generator u is dominated by the point
        le = U[None, :, :] <= A[:, None, :]
        L = (le * weights).sum(axis=2)
        rows = np.repeat(np.arange(npts), L.shape[1])
        covered[rows, L.ravel()] = True
        # T is covered iff T <= L_u for some u: close upward under supersets
        masks = np.arange(nsub)
        for b in range(r):
            lo = masks[(masks >> b & 1) == 0]
            covered[:, lo] |= covered[:, lo | (1 << b)]
    F = np.arange(nsub)
    disjoint = (F[None, :] & negmask[:, None]) == 0
    outside = full ^ (F[None, :] | negmask[:, None])
    return disjoint & ~np.take_along_axis(covered, outside, axis=1)


@lru_cache(maxsize=1024)
def degree_sweep(I: MonomialIdeal) -> DegreeSweep:
    r = I.nvars
    caps = I.max_exponents()
    U = np.array(I.gens, dtype=np.int64).reshape(-1, r)
    A = _box(caps)
    npts = len(A)
    table = np.concatenate([_face_table(U, A[s:s + _CHUNK], r) for s in range(0, npts, _CHUNK)])
    uniq, inverse = np.unique(table, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    complexes = []
    for row in uniq:
        faces = [_bits(m, r) for m in np.flatnonzero(row)]
        complexes.append(SimplicialComplex.from_faces(r, faces))

    # H[c, k + 1] = dim H~_k(complex c) for k = -1..r
    H = np.zeros((len(complexes), r + 2), dtype=np.int64)
    for c, cx in enumerate(complexes):
        h = reduced_homology_dims(cx)
        for k in range(-1, r + 1):
            H[c, k + 1] = h[k]

    nneg = (A < 0).sum(axis=1)
    weights = (1 << np.arange(r)).astype(np.int64)
    negmask = ((A < 0) * weights).sum(axis=1)
    rad = [sum(1 << k for k in range(r) if g[k]) for g in radical(I).gens]
    gate_of = {m: not any((g & m) == g for g in rad) for m in np.unique(negmask).tolist()}
    gate = np.array([gate_of[m] for m in negmask.tolist()], dtype=bool)

    ungated = np.zeros((npts, r + 1), dtype=np.int64)
    for i in range(r + 1):
        col = i - nneg  # index into H: H~_{i-j-1} lives at column i-j
        ok = col >= 0
        ungated[ok, i] = H[inverse[ok], col[ok]]
    dims = ungated * gate[:, None]

    sweep = DegreeSweep(
        ideal=I,
        caps=caps,
        points=A,
        degrees=A.sum(axis=1),
        nneg=nneg,
        complex_index=inverse,
        complexes=complexes,
        gate=gate,
        dims=dims,
        ungated=ungated,
    )
    if not sweep.boundary_vanishes():
        raise AssertionError(f"nonzero local cohomology on the cap boundary for {I}")
    return sweep


def ai_oracle(I: MonomialIdeal, i: int) -> InvariantValue:
    return degree_sweep(I).ai(i)


def ai_j_oracle(I: MonomialIdeal, i: int, j: int) -> InvariantValue:
    return degree_sweep(I).ai(i, j)


def greg_oracle(I: MonomialIdeal) -> InvariantValue:
    """Geometric regularity max_{i>0} a_i + i."""
    sweep = degree_sweep(I)
    return vmax(sweep.ai(i) + i for i in range(1, I.nvars + 1))


def reg_oracle(I: MonomialIdeal) -> InvariantValue:
    sweep = degree_sweep(I)
    return vmax(sweep.ai(i) + i for i in range(0, I.nvars + 1))


def a0_by_saturation(I: MonomialIdeal) -> InvariantValue:
    """Top degree of (I : m^inf) / I by brute force over the generator box."""
    sat = saturate(I)
    best: InvariantValue = NEG_INFINITY
    for v in monomials_in_box(I.max_exponents()):
        if contains(sat, v) and not contains(I, v):
            best = max(best, sum(v))
    return best


@dataclass
class AiTable:
    """a_i(S/I_n) indexed by (i, n), with optional refinement (i, j, n)."""

    values: dict[tuple[int, int], InvariantValue] = field(default_factory=dict)
    refinement: dict[tuple[int, int, int], InvariantValue] = field(default_factory=dict)

    def get(self, i: int, n: int) -> InvariantValue:
        return self.values.get((i, n), NEG_INFINITY)

    def column(self, i: int) -> dict[int, InvariantValue]:
        return {n: v for (k, n), v in sorted(self.values.items()) if k == i}


def ai_table(ideals: Mapping[int, MonomialIdeal]) -> AiTable:
    """Oracle a_i and a_i^j for each ideal of the family n -> I_n."""
    table = AiTable()
    for n, I in ideals.items():
        sweep = degree_sweep(I)
        for i in range(I.nvars + 1):
            table.values[(i, n)] = sweep.ai(i)
            for j in range(I.nvars + 1):
                table.refinement[(i, j, n)] = sweep.ai(i, j)
    return table


def power_table(I: MonomialIdeal, n_max: int) -> AiTable:
    return ai_table({n: power(I, n) for n in range(1, n_max + 1)})


def nonneg_box(caps: Sequence[int]):
    """Nonnegative points of the capped box, as tuples."""
    return product(*(range(c + 1) for c in caps))
