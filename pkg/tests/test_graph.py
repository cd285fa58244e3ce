import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from griddraw.errors import BudgetExceeded
from griddraw.generators import atlas, complete, cycle, path, petersen
from griddraw.graph import (
    Graph,
    VertexPartition,
    chromatic_number,
    find_k_coloring,
    is_independent,
    is_linear_forest,
    is_proper_coloring,
    partition_problems,
    validate_partition,
)
from oracles import chromatic_by_enumeration, independent, linear_forest


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def test_graph_invariants():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    g = Graph.from_edges(3, [(2, 0)])
    assert g.edges == frozenset({(0, 2)})


def test_linear_forest_examples():
    assert not is_linear_forest(complete(3), {0, 1, 2})
    assert all(is_linear_forest(complete(5), s) for s in itertools.combinations(range(5), 2))
    assert not is_linear_forest(petersen(), range(10))
    with pytest.raises(ValueError):
        is_linear_forest(complete(3), {5})


def test_star_is_not_a_linear_forest():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_linear_forest(star, range(4))


@settings(max_examples=200)
@given(graphs(), st.data())
def test_predicates_match_networkx(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    assert is_linear_forest(g, s) == linear_forest(g, s)
    assert is_independent(g, s) == independent(g, s)
    sub = g.induced_edges(s)
    if is_linear_forest(g, s):
        assert len(sub) <= max(len(s) - 1, 0)


def test_chromatic_examples():
    assert chromatic_number(complete(5))[0] == 5
    assert chromatic_number(cycle(5))[0] == 3
    k, col = chromatic_number(petersen())
    assert k == 3 and is_proper_coloring(petersen(), col)
    assert chromatic_number(Graph(0))[0] == 0


def test_chromatic_matches_enumeration_on_small_graphs():
    for g in atlas(6, connected=False):
        k, col = chromatic_number(g)
        assert k == chromatic_by_enumeration(g)
        assert is_proper_coloring(g, col) and len(set(col)) == k


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_chromatic_matches_enumeration_n8(g):
    assert chromatic_number(g)[0] == chromatic_by_enumeration(g)


def test_k_coloring_budget_is_not_a_no():
    with pytest.raises(BudgetExceeded):
        find_k_coloring(complete(9), 8, budget=5)


def test_validate_partition_examples():
    k4 = complete(4)
    assert validate_partition(k4, VertexPartition.of(("path", {0, 1}), ("path", {2, 3})))
    assert not validate_partition(complete(3), VertexPartition.of(("normal", {0, 1}), ("normal", {2})))
    assert not validate_partition(cycle(6), VertexPartition.of(("path", range(6))))
    assert validate_partition(path(6), VertexPartition.of(("path", range(6))))


def test_partition_diagnostics():
    p = VertexPartition.of(("path", {0, 1}), ("path", {1, 2}))
    problems = partition_problems(complete(4), p)
    assert any("1" in msg for msg in problems)
    assert any("3" in msg for msg in problems)
    assert not validate_partition(complete(4), p)
