"""Covers of a graph, representative sets and representative graphs.

A cover stores, for each host edge ``(u, v)`` with ``u < v``, the set of color
pairs ``(i, j)`` such that ``(u, i)`` and ``(v, j)`` are adjacent. The cliques
on each fiber ``{u} x L(u)`` are implicit and never stored: a representative set
picks one color per vertex, so fiber edges can never appear in its
representative graph.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import CombinatorialBlowup, InvalidPick
from .graph import Graph

__all__ = [
    "Cover",
    "CoverCheck",
    "validate_cover",
    "diagonal_cover",
    "uniform_lists",
    "enumerate_perfect_matching_covers",
    "count_perfect_matching_covers",
    "random_cover",
    "representative_graph",
    "is_hl_coloring",
    "check_representative_set",
    "DEFAULT_COVER_CAP",
]

DEFAULT_COVER_CAP = 2**20

Lists = Mapping[int, tuple[int, ...]]
RepresentativeSet = Mapping[int, int]


@dataclass(frozen=True)
class Cover:
    host: Graph
    lists: dict[int, tuple[int, ...]]
    matchings: dict[tuple[int, int], frozenset[tuple[int, int]]]
    # (u, v) -> {color at u: set of colors at v}, both directions
    _nbr: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbr: dict[tuple[int, int], dict[int, set[int]]] = {}
        for (u, v), pairs in self.matchings.items():
            fwd = nbr.setdefault((u, v), {})
            bwd = nbr.setdefault((v, u), {})
            for i, j in pairs:
                fwd.setdefault(i, set()).add(j)
                bwd.setdefault(j, set()).add(i)
        frozen = {k: {c: frozenset(s) for c, s in d.items()} for k, d in nbr.items()}
        object.__setattr__(self, "_nbr", frozen)

    def partners(self, u: int, i: int, v: int) -> frozenset[int]:
        """Colors ``j`` with ``(u, i)`` adjacent to ``(v, j)`` in the cover."""
        return self._nbr.get((u, v), {}).get(i, frozenset())

    def adjacent(self, u: int, i: int, v: int, j: int) -> bool:
        return j in self._nbr.get((u, v), {}).get(i, ())

    def matching(self, u: int, v: int) -> frozenset[tuple[int, int]]:
        """Pairs on edge uv oriented as (color at u, color at v)."""
        if u < v:
            return self.matchings.get((u, v), frozenset())
        return frozenset((j, i) for i, j in self.matchings.get((v, u), frozenset()))

    def restrict(self, keep) -> "Cover":
        keep = set(keep)
        host = self.host.remove_vertices(v for v in self.host.vertices if v not in keep)
        return Cover(
            host,
            {v: self.lists[v] for v in host.vertices},
            {e: p for e, p in self.matchings.items() if e[0] in keep and e[1] in keep},
        )

    def digest(self) -> str:
        h = hashlib.sha256()
        for v in sorted(self.lists):
            h.update(f"{v}:{self.lists[v]};".encode())
        for e in sorted(self.matchings):
            h.update(f"{e}:{sorted(self.matchings[e])};".encode())
        return h.hexdigest()[:16]


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    clause: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate_cover(h: Cover) -> CoverCheck:
    """Check the four defining clauses of a cover; report the first violation.

    Clause ids: ``i`` (fibers match the vertex set and lists, matching colors are
    list members), ``iii`` (each edge's pairs form a matching), ``iv`` (pairs only
    on host edges). Clause ``ii`` holds by construction.
    """
    g = h.host
    if set(h.lists) != set(g.vertices):
        return CoverCheck(False, "i", f"lists keyed by {sorted(h.lists)}, host has {list(g.vertices)}")
    for v in g.vertices:
        lv = h.lists[v]
        if not lv:
            return CoverCheck(False, "i", f"empty list at vertex {v}")
        if len(set(lv)) != len(lv):
            return CoverCheck(False, "i", f"repeated color in list of {v}")
    for (u, v), pairs in sorted(h.matchings.items()):
        if u >= v:
            return CoverCheck(False, "iv", f"matching key {(u, v)} not ordered u < v")
        if not g.has_edge(u, v):
            if pairs:
                return CoverCheck(False, "iv", f"cover edges between fibers of non-adjacent {u},{v}")
            continue
        left: set[int] = set()
        right: set[int] = set()
        for i, j in sorted(pairs):
            if i not in h.lists[u] or j not in h.lists[v]:
                return CoverCheck(False, "i", f"pair {i}->{j} on {u},{v} uses a color outside the lists")
            if i in left:
                return CoverCheck(False, "iii", f"color {i} of {u} matched twice on edge {u},{v}")
            if j in right:
                return CoverCheck(False, "iii", f"color {j} of {v} matched twice on edge {u},{v}")
            left.add(i)
            right.add(j)
    return CoverCheck(True)


def uniform_lists(g: Graph, s: int) -> dict[int, tuple[int, ...]]:
    return {v: tuple(range(1, s + 1)) for v in g.vertices}


def diagonal_cover(g: Graph, lists: Lists) -> Cover:
    """Cover matching equal colors across every edge."""
    matchings = {}
    for u, v in g.sorted_edges():
        common = set(lists[u]) & set(lists[v])
        matchings[(u, v)] = frozenset((c, c) for c in common)
    return Cover(g, {v: tuple(lists[v]) for v in g.vertices}, matchings)


def _perm_cover(g: Graph, s: int, edges, perms) -> Cover:
    matchings = {e: frozenset((i + 1, p[i] + 1) for i in range(s)) for e, p in zip(edges, perms)}
    return Cover(g, uniform_lists(g, s), matchings)


def count_perfect_matching_covers(g: Graph, s: int) -> int:
    return math.factorial(s) ** g.m


def enumerate_perfect_matching_covers(g: Graph, s: int, cap: int = DEFAULT_COVER_CAP) -> Iterator[Cover]:
    """Yield every cover with lists {1..s} whose edge matchings are perfect.

    Edges are taken in sorted order; permutations per edge in lexicographic
    order, the last edge varying fastest. The first cover is the diagonal one.
    """
    total = count_perfect_matching_covers(g, s)
    if total > cap:
        raise CombinatorialBlowup(f"{total} covers exceed cap {cap}")
    edges = g.sorted_edges()
    perms = list(itertools.permutations(range(s)))
    for choice in itertools.product(perms, repeat=len(edges)):
        yield _perm_cover(g, s, edges, choice)


def random_cover(g: Graph, s: int, seed: int) -> Cover:
    """Cover with an independent uniform permutation of {1..s} on each edge."""
    rng = random.Random(seed)
    edges = g.sorted_edges()
    perms = []
    for _ in edges:
        p = list(range(s))
        rng.shuffle(p)
        perms.append(p)
    return _perm_cover(g, s, edges, perms)


def check_representative_set(h: Cover, r: RepresentativeSet) -> None:
    if set(r) != set(h.host.vertices):
        raise InvalidPick(f"picks on {sorted(r)} but host vertices are {list(h.host.vertices)}")
    for v, c in r.items():
        if c not in h.lists[v]:
            raise InvalidPick(f"color {c} not in list of vertex {v}")


def representative_graph(h: Cover, r: RepresentativeSet) -> Graph:
    """Host edges whose picked endpoints are adjacent in the cover."""
    check_representative_set(h, r)
    kept = frozenset((u, v) for u, v in h.host.edges if h.adjacent(u, r[u], v, r[v]))
    return Graph(h.host.vertices, kept)


def is_hl_coloring(h: Cover, r: RepresentativeSet) -> bool:
    return representative_graph(h, r).m == 0
