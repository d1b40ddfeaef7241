"""Monomial ideals stored as minimal generating sets of exponent vectors.

Variables are indexed 1..r in the mathematical API (VariableSubset members),
while exponent tuples are plain 0-indexed Python tuples of length r.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .values import InputError

Exponent = tuple[int, ...]


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def _check(vec: Sequence[int], r: int, *, nonneg: bool = True) -> Exponent:
    vec = tuple(int(x) for x in vec)
    if len(vec) != r:
        raise InputError(f"exponent vector {vec} has length {len(vec)}, expected {r}")
    if nonneg and any(x < 0 for x in vec):
        raise InputError(f"exponent vector {vec} has a negative entry")
    return vec


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of K[x_1..x_r].

    ``gens`` is a sorted divisibility antichain. The zero ideal has no
    generators; the unit ideal is generated by the zero vector. Build
    instances through :func:`minimalize` or the helpers below rather than
    calling the constructor with unreduced data.
    """

    nvars: int
    gens: tuple[Exponent, ...]

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise InputError("nvars must be positive")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.nvars,)

    def max_exponents(self) -> Exponent:
        if not self.gens:
            return (0,) * self.nvars
        return tuple(max(g[i] for g in self.gens) for i in range(self.nvars))

    def __contains__(self, u: Sequence[int]) -> bool:
        return contains(self, u)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        if self.is_unit:
            return "(1)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def monomial_str(u: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(gens: Iterable[Sequence[int]], r: int) -> MonomialIdeal:
    """Reduce a generating set to its divisibility antichain."""
    vecs = sorted({_check(g, r) for g in gens}, key=lambda v: (sum(v), v))
    kept: list[Exponent] = []
    # sorted by total degree, so a divisor always precedes its multiples
    for v in vecs:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return MonomialIdeal(r, tuple(sorted(kept)))


def zero_ideal(r: int) -> MonomialIdeal:
    return MonomialIdeal(r, ())


def unit_ideal(r: int) -> MonomialIdeal:
    return MonomialIdeal(r, ((0,) * r,))


def variable_vector(i: int, r: int, e: int = 1) -> Exponent:
    """Exponent vector of x_i^e (i is 1-indexed)."""
    if not 1 <= i <= r:
        raise InputError(f"variable index {i} outside 1..{r}")
    return tuple(e if k == i - 1 else 0 for k in range(r))


def squarefree(support: Iterable[int], r: int) -> Exponent:
    """Exponent vector of x_F for a 1-indexed subset F."""
    s = set(support)
    if any(not 1 <= i <= r for i in s):
        raise InputError(f"subset {sorted(s)} not contained in 1..{r}")
    return tuple(1 if k + 1 in s else 0 for k in range(r))


def prime_ideal(variables: Iterable[int], r: int) -> MonomialIdeal:
    """The monomial prime generated by the given (1-indexed) variables."""
    return minimalize((variable_vector(i, r) for i in variables), r)


def maximal_ideal(r: int) -> MonomialIdeal:
    return prime_ideal(range(1, r + 1), r)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.nvars != J.nvars:
        raise InputError(f"ideals live in different rings ({I.nvars} vs {J.nvars} variables)")
    return I.nvars


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    r = _same_ring(I, J)
    return minimalize((tuple(a + b for a, b in zip(u, v)) for u in I.gens for v in J.gens), r)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise InputError("power exponent must be nonnegative")
    result = unit_ideal(I.nvars)
    for _ in range(n):
        result = multiply(result, I)
    return result


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    r = _same_ring(I, J)
    return minimalize(I.gens + J.gens, r)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    r = _same_ring(I, J)
    return minimalize((tuple(max(a, b) for a, b in zip(u, v)) for u in I.gens for v in J.gens), r)


def intersect_all(ideals: Iterable[MonomialIdeal], r: int) -> MonomialIdeal:
    result = unit_ideal(r)
    for J in ideals:
        result = intersect(result, J)
    return result


def colon(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """I : (x^u)."""
    u = _check(u, I.nvars)
    return minimalize((tuple(max(g - e, 0) for g, e in zip(gen, u)) for gen in I.gens), I.nvars)


def saturate(I: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity, as the intersection of the per-variable saturations.

    Colon by x_i^{D_i}, with D_i the largest exponent of x_i among the
    generators, already equals I : x_i^infinity.
    """
    r = I.nvars
    bounds = I.max_exponents()
    return intersect_all((colon(I, variable_vector(i + 1, r, bounds[i])) for i in range(r)), r)


def saturate_by_maximal_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity by iterating J -> J : m to a fixed point (slow reference route)."""
    r = I.nvars
    current = I
    while True:
        nxt = intersect_all((colon(current, variable_vector(i, r)) for i in range(1, r + 1)), r)
        if nxt == current:
            return current
        current = nxt


def contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    u = _check(u, I.nvars)
    return any(divides(g, u) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subideal of I."""
    _same_ring(I, J)
    return all(contains(I, g) for g in J.gens)


def localize(I: MonomialIdeal, F: Iterable[int]) -> MonomialIdeal:
    """Monomial localization I[F]: set x_i = 1 for every i in F (1-indexed).

    The result is kept in the same r variables with the F-coordinates zeroed.
    """
    r = I.nvars
    drop = set(F)
    if any(not 1 <= i <= r for i in drop):
        raise InputError(f"subset {sorted(drop)} not contained in 1..{r}")
    return minimalize((tuple(0 if k + 1 in drop else e for k, e in enumerate(g)) for g in I.gens), r)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimalize((tuple(1 if e else 0 for e in g) for g in I.gens), I.nvars)


def monomials_up_to(r: int, max_degree: int):
    """All exponent vectors of total degree <= max_degree (brute-force helper)."""
    for vec in product(range(max_degree + 1), repeat=r):
        if sum(vec) <= max_degree:
            yield vec


def monomials_in_box(bounds: Sequence[int]):
    """All exponent vectors v with 0 <= v_i <= bounds[i]."""
    return product(*(range(b + 1) for b in bounds))


def extend_variables(I: MonomialIdeal, k: int = 1) -> MonomialIdeal:
    """I S' for S' = S[y_1..y_k]; the new variables are appended last."""
    return MonomialIdeal(I.nvars + k, tuple(g + (0,) * k for g in I.gens))


def cone_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """(I, x_1 y, ..., x_r y) in r + 1 variables, y last.

    For I = I_G this is the ideal of G with one extra isolated vertex.
    """
    r = I.nvars
    gens = [g + (0,) for g in I.gens]
    gens += [variable_vector(i, r) + (1,) for i in range(1, r + 1)]
    return minimalize(gens, r + 1)
