import random

import pytest
from hypothesis import given, settings

from srpowers.complexes import Kind, SimplicialComplex, link
from srpowers.graphs import (
    Graph,
    broom,
    complete_graph,
    cycle_graph,
    path_graph,
    pentagon,
    stanley_reisner,
    star_graph,
    symbolic_power,
)
from srpowers.monomial import cone_ideal, maximal_ideal, minimalize, power
from srpowers.takayama import (
    DegreeVector,
    a0_by_saturation,
    ai_j_oracle,
    ai_oracle,
    degree_sweep,
    delta_a,
    delta_a_by_localization,
    greg_oracle,
    lc_piece_dim,
    nonneg_box,
    reg_oracle,
)
from srpowers.values import NEG_INFINITY

from cech_oracle import cech_piece_dim
from conftest import graphs, ideals


def IG(G, n=1):
    return power(stanley_reisner(G), n)


def Cx(r, *facets):
    return SimplicialComplex.from_faces(r, facets)


def test_degree_vector_parts():
    a = DegreeVector((2, -1, 0, -3))
    assert a.neg_support == {2, 4}
    assert a.pos_part == (2, 0, 0, 0)
    assert a.degree == -2


# degree complexes

def test_delta_a_broom():
    assert delta_a(IG(broom(), 2), (1, 1, 0, 1)) == Cx(4, (1, 2), (3,))


def test_delta_a_pentagon_cube_is_connected():
    # the vector (1, n-2, 0, n-2, 1) only separates {1,2} from {4,5} once n >= 4
    assert delta_a(IG(pentagon(), 3), (1, 1, 0, 1, 1)) == Cx(5, (1, 2), (1, 5), (4, 5))
    assert delta_a(IG(pentagon(), 4), (1, 2, 0, 2, 1)) == Cx(5, (1, 2), (4, 5))


@pytest.mark.parametrize("G", [broom(), pentagon(), star_graph(3), complete_graph(4)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_at_zero_is_the_graph(G, n):
    assert delta_a(IG(G, n), (0,) * G.nvertices) == G.as_complex()


@given(ideals(max_exp=3))
def test_delta_routes_agree(I):
    caps = I.max_exponents()
    rng = random.Random(len(I.gens))
    for _ in range(20):
        a = [rng.randint(-1, c + 1) for c in caps]
        assert delta_a(I, a) == delta_a_by_localization(I, a)


# graded pieces

def test_lc_piece_examples():
    assert lc_piece_dim(IG(pentagon(), 3), 1, (1, 1, 0, 1, 1)) == 0
    assert lc_piece_dim(IG(pentagon(), 4), 1, (1, 2, 0, 2, 1)) == 1
    K3 = IG(complete_graph(3))
    assert all(lc_piece_dim(K3, 1, a) == 0 for a in nonneg_box((3, 3, 3)))
    two_edges = IG(Graph.from_edges(4, [(1, 2), (3, 4)]))
    assert delta_a(two_edges, (0, 0, -1, -1)).kind is Kind.IRRELEVANT
    assert lc_piece_dim(two_edges, 2, (0, 0, -1, -1)) == 1


CECH_CASES = [
    (IG(broom(), 2), 60),
    (IG(pentagon(), 2), 60),
    (IG(complete_graph(4), 2), 40),
    (IG(Graph.from_edges(4, [(1, 2), (3, 4)]), 2), 60),
    (symbolic_power(star_graph(3), 2), 60),
    (power(maximal_ideal(2), 3), 30),
    (power(cone_ideal(stanley_reisner(path_graph(2))), 2), 60),
    (minimalize([(2, 1, 0), (0, 2, 1), (1, 0, 3)], 3), 60),
]


@pytest.mark.parametrize("I,samples", CECH_CASES)
def test_takayama_matches_cech_oracle(I, samples):
    sweep = degree_sweep(I)
    rng = random.Random(7)
    rows = rng.sample(range(len(sweep.points)), min(samples, len(sweep.points)))
    # every nonzero piece is included as well as the random sample
    rows += [int(p) for p in (sweep.dims.sum(axis=1) > 0).nonzero()[0]]
    for p in sorted(set(rows)):
        a = [int(x) for x in sweep.points[p]]
        for i in range(I.nvars + 1):
            assert sweep.dims[p, i] == cech_piece_dim(I, i, a) == lc_piece_dim(I, i, a)


# invariants

def test_ai_oracle_examples():
    assert ai_oracle(IG(pentagon(), 2), 1) is NEG_INFINITY
    assert ai_oracle(IG(broom(), 2), 1) == 3
    assert ai_oracle(IG(cycle_graph(4), 2), 2) == 2
    assert ai_j_oracle(IG(star_graph(3), 2), 1, 1) == 2
    assert ai_oracle(IG(broom(), 2), 9) is NEG_INFINITY


def test_greg_oracle_examples():
    assert greg_oracle(IG(complete_graph(3), 2)) == 5
    assert greg_oracle(IG(pentagon(), 1)) == 2
    J = cone_ideal(power(maximal_ideal(2), 2))
    assert greg_oracle(power(J, 2)) == 1


def test_reg_oracle_examples():
    assert reg_oracle(IG(complete_graph(3), 2)) == 5
    assert reg_oracle(symbolic_power(pentagon(), 2)) == 3
    m2 = power(maximal_ideal(2), 2)
    assert reg_oracle(m2) == 1
    assert ai_oracle(m2, 0) == 1 == a0_by_saturation(m2)


@settings(max_examples=40)
@given(ideals(max_exp=3))
def test_a0_matches_saturation(I):
    assert ai_oracle(I, 0) == a0_by_saturation(I)


@given(ideals(max_exp=3))
def test_cap_boundary_vanishes(I):
    assert degree_sweep(I).boundary_vanishes()


@given(ideals(max_exp=2))
def test_ai_is_max_of_refinements(I):
    for i in range(I.nvars + 1):
        refined = [ai_j_oracle(I, i, j) for j in range(I.nvars + 1)]
        assert ai_oracle(I, i) == max(refined)


# structural facts about graph ideals

@settings(max_examples=25)
@given(graphs(max_r=5))
def test_gate_is_redundant_for_graph_powers(G):
    for n in (1, 2, 3):
        assert degree_sweep(IG(G, n)).gate_redundant()
        assert degree_sweep(symbolic_power(G, n)).gate_redundant()


@settings(max_examples=25)
@given(graphs(max_r=5))
def test_link_transfer(G):
    for n in (1, 2):
        I = IG(G, n)
        sweep = degree_sweep(I)
        for a in sweep.points.tolist():
            neg = [k + 1 for k, x in enumerate(a) if x < 0]
            if neg:
                plus = [max(x, 0) for x in a]
                assert sweep.complex_at(a) == link(delta_a(I, plus), neg)


def test_skeleton_of_power_complex_is_symbolic_complex():
    from srpowers.complexes import pure_skeleton
    from srpowers.harness import enumerate_graphs
    for r in (3, 4):
        for G in enumerate_graphs(r, with_isolated=False):
            for n in (1, 2, 3):
                I, S = IG(G, n), symbolic_power(G, n)
                for a in nonneg_box(I.max_exponents()):
                    D = delta_a(I, a)
                    has_edges = D.dimension is not None and D.dimension >= 1
                    expected = pure_skeleton(D, 1) if has_edges else SimplicialComplex.void(r)
                    assert delta_a(S, a) == expected


@pytest.mark.parametrize("n,a", [(2, (1, 1, 1, 1)), (3, (1, 2, 2, 2))])
def test_adjacent_isolated_vertices_reach_3n_minus_2(n, a):
    # K4 minus the edge 1-4: edge 2-3 lies in two triangles
    G = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    J = IG(G, n)
    assert delta_a(J, a) == Cx(4, (2,), (3,))
    assert sum(a) == 3 * n - 2
    assert lc_piece_dim(J, 1, a) == 1 == cech_piece_dim(J, 1, list(a))
    assert ai_oracle(J, 1) == 3 * n - 2
