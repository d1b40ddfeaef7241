"""a_i-invariants and regularity of powers of Stanley-Reisner ideals of graphs.

Two independent routes: a brute-force local cohomology oracle built on
degree complexes and simplicial homology, and closed-form case formulas
keyed on graph invariants.
"""

from .formulas import (
    FormulaResult,
    a1_formula,
    a2_formula,
    add_polynomial_variables,
    cone_extend,
    greg_formula,
    is_cm,
)
from .graphs import Graph, condition_class, is_matroid, stanley_reisner, symbolic_power
from .harness import enumerate_graphs, parse_graph, run_classify, run_invariants, run_verify
from .takayama import ai_oracle, greg_oracle, reg_oracle
from .values import NEG_INFINITY, FormulaInapplicable, InputError, PreconditionError

__all__ = [
    "FormulaResult", "a1_formula", "a2_formula", "add_polynomial_variables", "cone_extend",
    "greg_formula", "is_cm", "Graph", "condition_class", "is_matroid", "stanley_reisner",
    "symbolic_power", "enumerate_graphs", "parse_graph", "run_classify", "run_invariants",
    "run_verify", "ai_oracle", "greg_oracle", "reg_oracle", "NEG_INFINITY",
    "FormulaInapplicable", "InputError", "PreconditionError",
]
