from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgqs.graph import (
    Graph,
    Graph6Error,
    GraphError,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    parse_graph6,
    path_graph,
    q_matrix,
    rooted_product,
    rooted_tower,
    to_graph6,
)
from dgqs.canon import is_isomorphic

from conftest import all_labeled_graphs


@st.composite
def graphs(draw, max_order: int = 8):
    n = draw(st.integers(1, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


def test_graph6_decodes_known_strings():
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("Bw") == cycle_graph(3)
    assert parse_graph6("@") == Graph(1, frozenset())
    assert parse_graph6(">>graph6<<Bw\n") == cycle_graph(3)


def test_graph6_encodes_known_graphs():
    assert to_graph6(Graph(1, frozenset())) == "@"
    assert to_graph6(cycle_graph(3)) == "Bw"


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("Bww", 2), ("B", 1), ("~??", 0), ("A`", 1), ("B\x01", 1)],
)
def test_graph6_errors_name_offsets(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset
    assert "offset" in str(err.value)


def test_graph6_round_trip_n4_has_eleven_classes():
    reps = {}
    for g in all_labeled_graphs(4):
        assert parse_graph6(to_graph6(g)) == g
        if not any(is_isomorphic(g, h) for h in reps.values()):
            reps[to_graph6(g)] = g
    assert len(reps) == 11


def test_graph6_rejects_large_order():
    with pytest.raises(GraphError):
        to_graph6(empty_graph(63))


def test_graph_invariants():
    with pytest.raises(GraphError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(GraphError):
        Graph(0, frozenset())
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 2)}))
    g = Graph.from_edges(3, [(2, 0)])
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert g == Graph.from_edges(3, [(0, 2)])


def test_complement_examples():
    k1 = Graph(1, frozenset())
    assert complement(k1) == k1
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))
    assert complement(empty_graph(4)) == complete_graph(4)


def test_complement_is_involution_up_to_five_vertices():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            assert complement(complement(g)) == g


def test_q_matrix_examples():
    assert q_matrix(complete_graph(2)) == [[1, 1], [1, 1]]
    assert q_matrix(path_graph(3)) == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert q_matrix(empty_graph(2)) == [[0, 0], [0, 0]]


def test_rooted_product_examples():
    k1 = Graph(1, frozenset())
    for k in range(1, 7):
        assert rooted_product(k1, k) == path_graph(k)
    c3 = cycle_graph(3)
    assert rooted_product(c3, 1) == c3
    h = rooted_product(c3, 2)
    assert (h.order, h.size) == (6, 6)
    assert sorted(h.degrees()) == [1, 1, 1, 3, 3, 3]
    # layer-major: (root i, layer s) -> s*n + i
    assert h.has_edge(0, 3) and h.has_edge(1, 4) and h.has_edge(2, 5)


def test_rooted_tower_examples():
    c3 = cycle_graph(3)
    assert rooted_tower(c3, 3, 1) == rooted_product(c3, 3)
    assert rooted_tower(Graph(1, frozenset()), 2, 2).order == 4
    t = rooted_tower(c3, 2, 2)
    assert (t.order, t.size) == (12, 12)


def test_capacity_errors():
    with pytest.raises(GraphError):
        rooted_product(empty_graph(33), 2)
    with pytest.raises(GraphError):
        rooted_tower(empty_graph(5), 2, 4)
    with pytest.raises(GraphError):
        rooted_product(empty_graph(3), 0)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_rooted_product_counts_and_root_layer(g, k):
    h = rooted_product(g, k)
    assert h.order == g.order * k
    assert h.size == g.size + g.order * (k - 1)
    assert h.induced(list(range(g.order))) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=10))
def test_graph6_round_trip_property(g):
    assert parse_graph6(to_graph6(g)) == g
