import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dpcolor.errors import SelfLoop, UnknownVertex
from dpcolor.graph import (
    Graph,
    build_graph,
    cycle_edges,
    enumerate_cycles,
    euler_planarity_sanity,
    find_c4_adjacent_c3,
    has_c4_adjacent_c3,
    induced_subgraph,
)

from conftest import chorded_c6, complete_graph, cycle_graph, octahedron
from oracles import brute_cycles


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([p for p, keep in zip(pairs, mask) if keep], vertices=range(n))


class TestBuildGraph:
    def test_path(self):
        g = build_graph([(1, 2), (2, 3)])
        assert g.vertices == (1, 2, 3)
        assert g.m == 2

    def test_duplicates_collapse(self):
        g = build_graph([(1, 2), (2, 1)])
        assert g.edges == frozenset({(1, 2)})

    def test_self_loop(self):
        with pytest.raises(SelfLoop) as exc:
            build_graph([(1, 1)])
        assert exc.value.vertex == 1

    def test_adjacency_symmetric(self):
        g = complete_graph(4)
        for v in g.vertices:
            for w in g.adj[v]:
                assert v in g.adj[w]


class TestCycles:
    def test_triangle(self):
        assert enumerate_cycles(cycle_graph(3), 6) == [(1, 2, 3)]

    def test_chorded_c6(self):
        got = enumerate_cycles(chorded_c6(), 6)
        assert [len(c) for c in got] == [3, 5, 6]
        assert got[0] == (1, 5, 6)
        assert got[1] == (1, 2, 3, 4, 5)
        assert {frozenset(frozenset(e) for e in cycle_edges(c)) for c in got} == brute_cycles(chorded_c6(), 6)

    def test_isolated(self):
        g = Graph.from_edges([], vertices=range(4))
        assert enumerate_cycles(g, 6) == []

    def test_max_len_validation(self):
        with pytest.raises(ValueError):
            enumerate_cycles(cycle_graph(3), 2)

    def test_k4_counts(self):
        # 4 triangles + 3 four-cycles
        got = enumerate_cycles(complete_graph(4), 4)
        assert sum(len(c) == 3 for c in got) == 4
        assert sum(len(c) == 4 for c in got) == 3

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(), st.integers(3, 7))
    def test_matches_brute_force(self, g, max_len):
        got = enumerate_cycles(g, max_len)
        as_edges = [frozenset(frozenset(e) for e in cycle_edges(c)) for c in got]
        assert len(as_edges) == len(set(as_edges))
        assert set(as_edges) == brute_cycles(g, max_len)
        for c in got:
            assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


class TestC4AdjacentC3:
    def test_k4(self):
        c4, c3 = find_c4_adjacent_c3(complete_graph(4))
        assert (c4, c3) == ((1, 2, 3, 4), (1, 2, 3))
        assert (1, 2) in cycle_edges(c4) & cycle_edges(c3)

    def test_chorded_c6(self):
        assert not has_c4_adjacent_c3(chorded_c6())

    def test_triangle(self):
        assert not has_c4_adjacent_c3(cycle_graph(3))

    def test_vertex_sharing_does_not_count(self):
        # bowtie-like: triangle 1-2-3 and square 3-4-5-6 share only vertex 3
        g = build_graph([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
        assert not has_c4_adjacent_c3(g)

    def test_octahedron(self):
        assert has_c4_adjacent_c3(octahedron())

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(), st.data())
    def test_monotone_under_edge_deletion(self, g, data):
        if has_c4_adjacent_c3(g) or not g.edges:
            return
        drop = data.draw(st.sampled_from(sorted(g.edges)))
        assert not has_c4_adjacent_c3(Graph(g.vertices, g.edges - {drop}))


class TestEuler:
    def test_k5(self):
        assert not euler_planarity_sanity(complete_graph(5))

    def test_tree(self):
        assert euler_planarity_sanity(build_graph([(1, 2), (1, 3), (3, 4), (3, 5)]))

    def test_octahedron_tight(self):
        g = octahedron()
        assert (g.n, g.m) == (6, 12)
        assert euler_planarity_sanity(g)

    def test_small_vacuous(self):
        assert euler_planarity_sanity(build_graph([(1, 2)]))


class TestInducedSubgraph:
    def test_triangle_edge(self):
        assert induced_subgraph(cycle_graph(3), {1, 2}).edges == frozenset({(1, 2)})

    def test_identity(self):
        g = octahedron()
        assert induced_subgraph(g, g.vertices) == g

    def test_chord_triangle(self):
        sub = induced_subgraph(chorded_c6(), {1, 5, 6})
        assert sub.edges == frozenset({(1, 5), (5, 6), (1, 6)})

    def test_unknown(self):
        with pytest.raises(UnknownVertex):
            induced_subgraph(cycle_graph(3), {1, 9})

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(), st.data())
    def test_degrees_do_not_grow(self, g, data):
        keep = data.draw(st.sets(st.sampled_from(g.vertices)))
        sub = induced_subgraph(g, keep)
        for v in sub.vertices:
            assert sub.degree(v) <= g.degree(v)
