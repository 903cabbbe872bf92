import pytest
from hypothesis import given, settings, strategies as st

from dpcolor.cover import diagonal_cover, random_cover, uniform_lists
from dpcolor.errors import DPColorError, ParseError
from dpcolor.formats import (
    format_capacities,
    format_cover,
    format_edge_list,
    format_representative_set,
    parse_capacities,
    parse_capacity_spec,
    parse_cover,
    parse_edge_list,
    parse_representative_set,
    read_cover,
    read_graph,
)
from dpcolor.graph import Graph
from dpcolor.oracle import CapacityMatrix

from conftest import DATA, c4_one_swap, cycle_graph
from test_graph import small_graphs


def test_edge_list_comments_and_blanks():
    g = parse_edge_list("# header\n\n1 2\n  2 3  \n# trailing\n")
    assert g.vertices == (1, 2, 3) and g.m == 2


def test_isolated_vertex_line():
    g = parse_edge_list("1 2\n7\n")
    assert g.vertices == (1, 2, 7) and g.degree(7) == 0


@pytest.mark.parametrize(
    "text, lineno",
    [("1 2\n1 2 3\n", 2), ("1 x\n", 1), ("# c\n3 3\n", 2), ("1 -2\n", 1)],
)
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g, header="x")) == g


def test_fixture_matches_helper():
    h = read_cover(DATA / "fixtures" / "c4_one_swap.cover", read_graph(DATA / "fixtures" / "c4.edges"))
    assert h == c4_one_swap()


def test_cover_diagonal_keyword():
    g = cycle_graph(3)
    h = parse_cover("lists\n1: 1 2\n2: 1 2\n3: 2 3\ndiagonal\n", g)
    assert h == diagonal_cover(g, {1: (1, 2), 2: (1, 2), 3: (2, 3)})


def test_cover_missing_edge_is_empty():
    g = cycle_graph(3)
    h = parse_cover("lists\n1: 1\n2: 1\n3: 1\nmatchings\n1 2: 1->1\n", g)
    assert h.matchings[(2, 3)] == frozenset() and h.matchings[(1, 3)] == frozenset()


@pytest.mark.parametrize(
    "text",
    [
        "1: 1 2\n",
        "lists\n1: 1 2\n2: 1 2\n3: 1 2\nmatchings\n2 1: 1->1\n",
        "lists\n1: 1 2\n2: 1 2\n3: 1 2\nmatchings\n1 2: 1-1\n",
        "lists\n1: 1 2\n2: 1 2\n",
        "lists\n1: 1\n2: 1\n3: 1\ndiagonal\nmatchings\n1 2: 1->1\n",
    ],
)
def test_cover_errors(text):
    with pytest.raises(ParseError):
        parse_cover(text, cycle_graph(3))


@settings(max_examples=60, deadline=None)
@given(small_graphs(6), st.integers(1, 3), st.integers(0, 2**64 - 1))
def test_cover_round_trip(g, s, seed):
    h = random_cover(g, s, seed)
    assert parse_cover(format_cover(h), g) == h


def test_capacities_round_trip():
    fm = CapacityMatrix({1: (2, 1, 1), 4: (0, 2, 2)})
    text = format_capacities(fm)
    assert text == "1: 2 1 1\n4: 0 2 2\n"
    assert parse_capacities(text) == fm


def test_capacities_ragged_rows():
    with pytest.raises(ParseError) as exc:
        parse_capacities("1: 2 2\n2: 2\n")
    assert exc.value.lineno == 2


@pytest.mark.parametrize("spec, row", [("2,2", (2, 2)), ("2 1 1", (2, 1, 1)), (" 3 ", (3,))])
def test_capacity_spec(spec, row):
    assert parse_capacity_spec(spec) == row


def test_capacity_spec_empty():
    with pytest.raises(DPColorError):
        parse_capacity_spec(" , ")


def test_representative_set_round_trip():
    picks = {3: 1, 1: 2}
    text = format_representative_set(picks)
    assert text == "1: 2\n3: 1\n"
    assert parse_representative_set(text) == picks
    with pytest.raises(ParseError):
        parse_representative_set("1: 2 3\n")


def test_uniform_lists_round_trip():
    g = Graph.from_edges([], vertices=[0, 5])
    h = diagonal_cover(g, uniform_lists(g, 2))
    assert parse_cover(format_cover(h), g) == h
