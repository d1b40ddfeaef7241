import hypothesis.strategies as st
from hypothesis import settings

from srpowers.graphs import Graph
from srpowers.monomial import minimalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def ideals(draw, r=None, max_gens=4, max_exp=2):
    r = draw(st.integers(1, 3)) if r is None else r
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * r), max_size=max_gens))
    return minimalize(gens, r)


@st.composite
def ideal_pairs(draw):
    r = draw(st.integers(1, 3))
    return draw(ideals(r)), draw(ideals(r))


@st.composite
def graphs(draw, min_r=3, max_r=6, isolated=True):
    r = draw(st.integers(min_r, max_r))
    pairs = [(u, v) for u in range(1, r + 1) for v in range(u + 1, r + 1)]
    edges = draw(st.sets(st.sampled_from(pairs), min_size=1))
    G = Graph(r, frozenset(edges))
    if not isolated:
        from hypothesis import assume
        assume(not G.isolated_vertices())
    return G


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
