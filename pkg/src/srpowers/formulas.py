"""Closed-form a_1, a_2 and geometric regularity of S/I_G^n.

Every formula returns a :class:`FormulaResult` naming the case row that
fired, so a disagreement with the oracle points at a specific row.
Graphs with isolated vertices are reduced to their non-isolated part and
rebuilt one cone vertex at a time with :func:`cone_extend`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .graphs import Graph, condition_class, diameter, girth, stanley_reisner
from .monomial import MonomialIdeal, radical, variable_vector
from .takayama import AiTable
from .values import NEG_INFINITY, FormulaInapplicable, InputError, InvariantValue, vmax

GregTable = Mapping[int, InvariantValue]


@dataclass(frozen=True)
class FormulaResult:
    value: InvariantValue
    branch: str


def _check_graph(G: Graph, n: int) -> None:
    if G.nvertices < 3:
        raise InputError("the closed forms need r >= 3")
    if not G.edges:
        raise InputError("the closed forms need at least one edge")
    if n < 1:
        raise InputError("n must be positive")


def has_full_radical(I: MonomialIdeal) -> bool:
    """sqrt(I) equals (x_1, ..., x_r)."""
    rad = radical(I)
    return all(variable_vector(i, I.nvars) in rad for i in range(1, I.nvars + 1))


# a_1 and a_2 for graphs without isolated vertices

def _shares_two_triangles(G: Graph) -> bool:
    """Some edge pq has at least two common neighbours."""
    return any(len(G.neighbors(p) & G.neighbors(q)) >= 2 for p, q in G.edges)


def _a1_core(G: Graph, n: int, corrected: bool = False) -> FormulaResult:
    if n == 1:
        if diameter(G) == math.inf:
            return FormulaResult(0, "N1/DISCONNECTED")
        return FormulaResult(NEG_INFINITY, "N1/CONNECTED")
    cls = condition_class(G)
    if cls.label == "C1":
        if corrected and _shares_two_triangles(G):
            return FormulaResult(3 * n - 2, "C1-TWOTRIANGLES/3n-2")
        return FormulaResult(3 * n - 3, "C1/3n-3")
    if cls.label == "C2":
        return FormulaResult(2 * n - 1, "C2/2n-1")
    if cls.label in ("C3", "C4"):
        return FormulaResult(2 * n - 2, f"{cls.label}/2n-2")
    if cls.subcase == "C5CYCLE":
        if n == 2:
            return FormulaResult(NEG_INFINITY, "C5/C5CYCLE-N2/-inf")
        return FormulaResult(2 * n - 2, "C5/C5CYCLE/2n-2")
    # P2, C4 and the triangle: S/I_G^n is Cohen-Macaulay
    return FormulaResult(NEG_INFINITY, f"C5/{cls.subcase}/-inf")


def _a2_core(G: Graph, n: int) -> FormulaResult:
    g = girth(G)
    if g == 3:
        return FormulaResult(3 * n - 3, "GIRTH3/3n-3")
    if g == 4:
        return FormulaResult(2 * n - 2, "GIRTH4/2n-2")
    if g != math.inf:
        if n >= 2:
            return FormulaResult(2 * n - 3, "GIRTH5+/2n-3")
        return FormulaResult(0, "GIRTH5+-N1/0")
    if G.max_degree() >= 2:
        return FormulaResult(2 * n - 3, "FOREST-DEG2+/2n-3")
    return FormulaResult(n - 3, "FOREST-DEG1/n-3")


def _base_column(
    G: Graph, i: int, n: int, corrected: bool = False
) -> tuple[dict[int, InvariantValue], str]:
    """a_i(S/I_{G0}^m), m = 1..n, for the non-isolated part G0 of G."""
    if G.nvertices == 2:
        # a bare edge: I_G is the zero ideal of K[x_1, x_2], so only H^2 survives, in degree -2
        return {m: (-2 if i == 2 else NEG_INFINITY) for m in range(1, n + 1)}, "EDGE-R2"
    if i == 1:
        rows = [_a1_core(G, m, corrected) for m in range(1, n + 1)]
    else:
        rows = [_a2_core(G, m) for m in range(1, n + 1)]
    return {m: row.value for m, row in enumerate(rows, 1)}, rows[-1].branch


def _with_cones(G: Graph, i: int, n: int, corrected: bool = False) -> FormulaResult:
    base, labels = G.without_isolated()
    column, branch = _base_column(base, i, n, corrected)
    if len(labels) == G.nvertices:
        return FormulaResult(column[n], branch)
    # re-add the isolated vertices one at a time, each a cone over the current ideal
    current = base
    for _ in range(G.nvertices - len(labels)):
        full = has_full_radical(stanley_reisner(current))
        table = AiTable({(i, m): v for m, v in column.items()})
        column = {m: cone_extend(table, i, m, full) for m in range(1, n + 1)}
        current = Graph(current.nvertices + 1, current.edges)
    k = G.nvertices - len(labels)
    return FormulaResult(column[n], f"CONE{k}({branch})")


def a1_formula(G: Graph, n: int, corrected: bool = False) -> FormulaResult:
    """a_1(S/I_G^n) from the condition-class table.

    The C1 row gives 3n-3. That value is only attained when no edge has
    two common neighbours; otherwise the exact value is 3n-2, which
    ``corrected=True`` returns under the branch C1-TWOTRIANGLES.
    """
    _check_graph(G, n)
    return _with_cones(G, 1, n, corrected)


def a2_formula(G: Graph, n: int) -> FormulaResult:
    _check_graph(G, n)
    return _with_cones(G, 2, n)


def greg_formula(G: Graph, n: int) -> FormulaResult:
    """g-reg(S/I_G^n); isolated vertices are allowed."""
    _check_graph(G, n)
    g = girth(G)
    if g == 3:
        return FormulaResult(3 * n - 1, "GIRTH3/3n-1")
    if g == 4:
        return FormulaResult(2 * n, "GIRTH4/2n")
    if g != math.inf:
        if n >= 2:
            return FormulaResult(2 * n - 1, "GIRTH5+/2n-1")
        return FormulaResult(2, "GIRTH5+-N1/2")
    if G.max_degree() >= 2:
        return FormulaResult(2 * n - 1, "FOREST-DEG2+/2n-1")
    return FormulaResult(2 * n - 1, "DEG1/2n-1")


def greg_from_ai(G: Graph, n: int, corrected: bool = False) -> InvariantValue:
    """g-reg as max(a_1 + 1, a_2 + 2); S/I_G^n has dimension 2."""
    return vmax([a1_formula(G, n, corrected).value + 1, a2_formula(G, n).value + 2])


# recursions

def cone_extend(base: AiTable, i: int, n: int, has_full_radical: bool) -> InvariantValue:
    """a_i(R/J^n) for J = (I, x_1 y, ..., x_r y) from the values a_i(S/I^m), m <= n."""
    if i == 0:
        raise InputError("the cone recursion says nothing about a_0")
    if i < 0 or n < 1:
        raise InputError("need i >= 1 and n >= 1")
    terms = [base.get(i, n - t) + t for t in range(n)]
    if i == 1:
        if has_full_radical:
            raise FormulaInapplicable("a_1 recursion needs sqrt(I) != (x_1, ..., x_r)")
        terms.append(2 * n - 2)
    return vmax(terms)


def add_polynomial_variables(base_greg: GregTable, k: int, n: int) -> InvariantValue:
    """g-reg of S[y_1..y_k]/(I, y_1, ..., y_k)^n from g-reg(S/I^m), m <= n."""
    if k < 0 or n < 1:
        raise InputError("need k >= 0 and n >= 1")
    table = {m: base_greg[m] for m in range(1, n + 1)}
    for _ in range(k):
        table = {m: vmax(table[j] + m - j for j in range(1, m + 1)) for m in range(1, n + 1)}
    return table[n]


def is_cm(G: Graph, n: int, corrected: bool = False) -> bool:
    """Whether S/I_G^n is Cohen-Macaulay (no isolated vertices, r >= 3).

    By default the positive set is P_2 and C_4 for every n and C_5 for
    n = 2. That list misses two families: every connected graph at n = 1
    (Stanley-Reisner rings of connected 1-complexes are Cohen-Macaulay) and
    the triangle for every n. ``corrected=True`` includes both.
    """
    _check_graph(G, n)
    if G.isolated_vertices():
        raise InputError("is_cm needs a graph without isolated vertices")
    if corrected and n == 1:
        return diameter(G) != math.inf
    cls = condition_class(G)
    if cls.label != "C5":
        return False
    if cls.subcase == "C5CYCLE":
        return n == 2
    if cls.subcase == "C3CYCLE":
        return corrected
    return True
