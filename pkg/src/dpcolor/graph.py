"""Simple undirected graphs on small integer vertex ids.

Graphs are immutable and hashable so that per-graph work (hypothesis checks,
reduction plans) can be cached across the many covers of one host graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import SelfLoop, UnknownVertex

__all__ = [
    "Graph",
    "build_graph",
    "enumerate_cycles",
    "find_c4_adjacent_c3",
    "has_c4_adjacent_c3",
    "euler_planarity_sanity",
    "induced_subgraph",
    "cycle_edges",
]

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``vertices`` is kept sorted and ``edges`` holds each edge once as ``(u, v)``
    with ``u < v``. Use :func:`build_graph` or :meth:`from_edges` to construct.
    """

    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    adj: dict[int, frozenset[int]] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vs = set(self.vertices)
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(u)
            if u > v:
                raise ValueError(f"edge {(u, v)} not normalized")
            if u not in vs or v not in vs:
                raise UnknownVertex({w for w in (u, v) if w not in vs})
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", {v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "Graph":
        es = set()
        vs = set(vertices)
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            es.add(_norm(u, v))
            vs.add(u)
            vs.add(v)
        return cls(tuple(sorted(vs)), frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def remove_vertices(self, gone: Iterable[int]) -> "Graph":
        gone = set(gone)
        return induced_subgraph(self, [v for v in self.vertices if v not in gone])

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for v in self.vertices:
            d = self.degree(v)
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    @cached_property
    def c4_c3_witness(self):
        return find_c4_adjacent_c3(self)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edge_list: Iterable[Edge]) -> Graph:
    """Simple graph on the endpoints of ``edge_list``; repeated edges collapse."""
    return Graph.from_edges(edge_list)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = set(keep)
    missing = keep - set(g.vertices)
    if missing:
        raise UnknownVertex(missing)
    es = frozenset(e for e in g.edges if e[0] in keep and e[1] in keep)
    return Graph(tuple(sorted(keep)), es)


def enumerate_cycles(g: Graph, max_len: int) -> list[tuple[int, ...]]:
    """All cycles of length 3..max_len, each once, in canonical form.

    A cycle is reported starting at its minimum vertex and oriented so that the
    second vertex is smaller than the last. Output is sorted by (length, tuple).
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    adj = g.adj
    out = []
    for s in g.vertices:
        # DFS over simple paths from s through vertices larger than s
        stack = [(s, (s,), frozenset((s,)))]
        while stack:
            v, path, seen = stack.pop()
            for w in adj[v]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(path)
                elif w > s and w not in seen and len(path) < max_len:
                    stack.append((w, path + (w,), seen | {w}))
    out.sort(key=lambda c: (len(c), c))
    return out


def cycle_edges(cycle: tuple[int, ...]) -> frozenset[Edge]:
    k = len(cycle)
    return frozenset(_norm(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def find_c4_adjacent_c3(g: Graph):
    """Return a ``(c4, c3)`` pair of cycles sharing an edge, or ``None``.

    Cycles sharing only a vertex are not adjacent.
    """
    cycles = enumerate_cycles(g, 4)
    tris = [(c, cycle_edges(c)) for c in cycles if len(c) == 3]
    if not tris:
        return None
    for c4 in cycles:
        if len(c4) != 4:
            continue
        e4 = cycle_edges(c4)
        for c3, e3 in tris:
            if e4 & e3:
                return c4, c3
    return None


def has_c4_adjacent_c3(g: Graph) -> bool:
    return g.c4_c3_witness is not None


def euler_planarity_sanity(g: Graph) -> bool:
    """Necessary condition for planarity: |E| <= 3|V| - 6 when |V| >= 3."""
    if g.n < 3:
        return True
    return g.m <= 3 * g.n - 6
