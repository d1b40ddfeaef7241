import math
from itertools import combinations

import pytest
from hypothesis import given

from srpowers.complexes import Kind, SimplicialComplex, link, pure_skeleton
from srpowers.graphs import (
    Graph,
    MatroidMethod,
    broom,
    canonical_form,
    complete_graph,
    condition_class,
    cycle_graph,
    diamond,
    edge_prime,
    facet_primes,
    find_obstruction,
    graph_profile,
    is_isomorphic,
    is_matroid,
    path_graph,
    pentagon,
    stanley_reisner,
    star_graph,
    symbolic_power,
)
from srpowers.harness import enumerate_graphs
from srpowers.monomial import contains, intersect_all, minimalize, monomials_up_to, power, prime_ideal
from srpowers.values import InputError, PreconditionError

from conftest import graphs


def G(r, *edges):
    return Graph.from_edges(r, edges)


def test_graph_rejects_bad_edges():
    for bad in ([(1, 1)], [(1, 2), (2, 1)], [(1, 5)]):
        with pytest.raises(InputError):
            Graph.from_edges(4, bad)


def test_stanley_reisner_examples():
    assert stanley_reisner(complete_graph(3)) == minimalize([(1, 1, 1)], 3)
    assert stanley_reisner(G(3, (1, 2))) == minimalize([(1, 0, 1), (0, 1, 1)], 3)
    assert stanley_reisner(cycle_graph(4)) == minimalize([(1, 0, 1, 0), (0, 1, 0, 1)], 4)
    with pytest.raises(InputError):
        stanley_reisner(Graph(3, frozenset()))


def test_stanley_reisner_of_c4_by_minimal_nonfaces():
    C4 = cycle_graph(4)
    faces = C4.as_complex()
    nonfaces = [s for k in range(1, 5) for s in combinations(range(1, 5), k) if s not in faces]
    minimal = [s for s in nonfaces if not any(set(t) < set(s) for t in nonfaces)]
    assert stanley_reisner(C4) == minimalize(
        [tuple(int(i in s) for i in range(1, 5)) for s in minimal], 4)


def test_edge_prime_examples():
    assert edge_prime((1, 2), 4) == prime_ideal([3, 4], 4)
    assert edge_prime((1, 2), 3) == prime_ideal([3], 3)
    assert edge_prime((2, 3), 5) == prime_ideal([1, 4, 5], 5)


def test_symbolic_power_examples():
    assert symbolic_power(complete_graph(3), 2) == minimalize([(2, 2, 2)], 3)
    with pytest.raises(InputError):
        symbolic_power(Graph(3, frozenset()), 1)


def test_symbolic_power_of_c4_equals_ordinary_square():
    C4 = cycle_graph(4)
    ordinary, symbolic = power(stanley_reisner(C4), 2), symbolic_power(C4, 2)
    for u in monomials_up_to(4, 6):
        assert contains(symbolic, u) == contains(ordinary, u)
    assert symbolic == minimalize([(2, 0, 2, 0), (0, 2, 0, 2), (1, 1, 1, 1)], 4)


def test_symbolic_square_of_k4_is_strictly_larger():
    K4 = complete_graph(4)
    # x1x2x3x4 meets every P_e in degree 2 but I_{K4} is generated in degree 3
    assert not contains(power(stanley_reisner(K4), 2), (1, 1, 1, 1))
    assert contains(symbolic_power(K4, 2), (1, 1, 1, 1))


def test_isolated_vertex_contributes_its_own_prime():
    E = G(3, (1, 2))
    assert facet_primes(E) == [prime_ideal([1, 2], 3), prime_ideal([3], 3)]
    assert intersect_all([edge_prime(e, 3) for e in E.edges], 3) == prime_ideal([3], 3)
    assert intersect_all(facet_primes(E), 3) == stanley_reisner(E)


@given(graphs())
def test_primary_decomposition(H):
    IG = stanley_reisner(H)
    assert intersect_all(facet_primes(H), H.nvertices) == IG
    if not H.isolated_vertices():
        assert intersect_all([edge_prime(e, H.nvertices) for e in H.edges], H.nvertices) == IG


@given(graphs(max_r=5))
def test_symbolic_power_contains_ordinary_power(H):
    IG = stanley_reisner(H)
    assert symbolic_power(H, 1) == IG
    for n in (2, 3):
        S = symbolic_power(H, n)
        assert all(contains(S, g) for g in power(IG, n).gens)


def test_graph_profile_examples():
    p = graph_profile(pentagon())
    assert (p.girth, p.diameter, p.max_degree, p.connected) == (5, 2, 2, True)
    assert p.compact_vertices == frozenset()
    b = graph_profile(broom())
    assert b.girth == 3 and b.compact_vertices == {3}
    d = graph_profile(G(4, (1, 2), (3, 4)))
    assert d.girth == math.inf and d.diameter == math.inf and d.max_degree == 1
    assert not d.connected


def test_condition_class_examples():
    assert str(condition_class(complete_graph(4))) == "C1"
    assert str(condition_class(diamond())) == "C2"
    assert str(condition_class(star_graph(3))) == "C3"
    assert str(condition_class(path_graph(3))) == "C4"
    assert str(condition_class(G(4, (1, 2), (3, 4)))) == "C4"
    assert str(condition_class(path_graph(2))) == "C5/P2"
    assert str(condition_class(cycle_graph(4))) == "C5/C4CYCLE"
    assert str(condition_class(pentagon())) == "C5/C5CYCLE"
    assert str(condition_class(complete_graph(3))) == "C5/C3CYCLE"
    with pytest.raises(InputError):
        condition_class(G(4, (1, 2), (2, 3)))


def test_condition_class_is_total_and_c5_is_small():
    for r in range(3, 7):
        for H in enumerate_graphs(r, with_isolated=False):
            cls = condition_class(H)
            if cls.label == "C5":
                named = {"P2": path_graph(2), "C3CYCLE": cycle_graph(3),
                         "C4CYCLE": cycle_graph(4), "C5CYCLE": cycle_graph(5)}
                assert is_isomorphic(H, named[cls.subcase])


def test_matroid_examples():
    for method in MatroidMethod:
        assert is_matroid(cycle_graph(4), method)
        assert is_matroid(diamond(), method)
        assert is_matroid(star_graph(3), method)
        assert not is_matroid(broom(), method)
        assert not is_matroid(pentagon(), method)
    assert find_obstruction(broom())[0] == "Broom"
    assert find_obstruction(pentagon())[0] == "Pentagon"
    with pytest.raises(PreconditionError):
        is_matroid(path_graph(3), MatroidMethod.OBSTRUCTION)


def test_matroid_with_isolated_vertex():
    H = G(3, (1, 2))
    assert not is_matroid(H, "exchange")
    assert not is_matroid(H, "fourcycle")


@given(graphs(max_r=7))
def test_canonical_form_is_relabelling_invariant(H):
    perm = list(H.vertices())[::-1]
    K = Graph(H.nvertices, frozenset(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in H.edges))
    assert canonical_form(H) == canonical_form(K)


def test_enumeration_counts():
    assert len(list(enumerate_graphs(3, False))) == 2
    assert len(list(enumerate_graphs(3, True))) == 3
    assert len(list(enumerate_graphs(4, False))) == 7
    assert len(list(enumerate_graphs(5, True))) == 33
    assert len(list(enumerate_graphs(3, True, dedupe=False))) == 7


def test_enumeration_is_exhaustive_against_labelled_graphs():
    for r in (3, 4, 5):
        labelled = {canonical_form(H) for H in enumerate_graphs(r, True, dedupe=False)}
        assert labelled == {canonical_form(H) for H in enumerate_graphs(r, True)}


def test_enumeration_rejects_out_of_range():
    for r in (2, 8):
        with pytest.raises(InputError):
            list(enumerate_graphs(r))


# complexes

def test_link_examples():
    D = broom().as_complex()
    assert link(D, (1, 2)).kind is Kind.IRRELEVANT
    assert link(SimplicialComplex.void(4), (1,)).kind is Kind.VOID
    assert link(D, (3,)).facets == ((1,), (2,), (4,))
    assert link(D, (1, 4)).kind is Kind.VOID


def test_pure_skeleton_examples():
    D = SimplicialComplex.from_faces(3, [(1, 2), (3,)])
    assert pure_skeleton(D, 1).facets == ((1, 2),)
    assert pure_skeleton(SimplicialComplex.from_faces(2, [(1, 2)]), 0).facets == ((1,), (2,))
    assert pure_skeleton(SimplicialComplex.irrelevant(3), 0).kind is Kind.VOID


@given(graphs())
def test_link_and_skeleton_keep_antichains(H):
    D = H.as_complex()
    for F in [()] + [(p,) for p in H.vertices()]:
        for E in (link(D, F), pure_skeleton(D, 0), pure_skeleton(D, 1)):
            assert not any(set(a) < set(b) for a in E.facets for b in E.facets)
