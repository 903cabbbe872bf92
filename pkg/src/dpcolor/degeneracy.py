"""Strict f-degeneracy with replayable certificates.

A graph is strictly f-degenerate when every nonempty subgraph has a vertex whose
degree there is below its capacity. Greedy peeling decides this exactly:
removing a vertex never raises another vertex's degree, so if some peelable
vertex exists now it stays peelable, and the order of removals does not matter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .errors import CombinatorialBlowup
from .graph import Graph

__all__ = [
    "PeelCertificate",
    "check_strictly_f_degenerate",
    "verify_certificate",
    "brute_force_degeneracy",
    "peels_completely",
    "DEGENERATE",
    "STUCK",
]

DEGENERATE = "degenerate"
STUCK = "stuck"

Capacity = Mapping[int, int]


@dataclass(frozen=True)
class PeelCertificate:
    verdict: str
    order: tuple[int, ...] = ()
    witness: frozenset[int] = frozenset()

    @property
    def degenerate(self) -> bool:
        return self.verdict == DEGENERATE

    def lines(self) -> list[str]:
        if self.degenerate:
            return [f"peel {v}" for v in self.order]
        return ["witness " + " ".join(str(v) for v in sorted(self.witness))]


def check_strictly_f_degenerate(g: Graph, f: Capacity) -> PeelCertificate:
    """Peel the lowest-id vertex with degree below capacity until none is left.

    Returns a degenerate certificate with the removal order, or a stuck one whose
    witness is the set of vertices that could not be removed.
    """
    remaining = set(g.vertices)
    deg = {v: g.degree(v) for v in g.vertices}
    order = []
    while remaining:
        v = next((v for v in sorted(remaining) if deg[v] < f[v]), None)
        if v is None:
            return PeelCertificate(STUCK, witness=frozenset(remaining))
        remaining.discard(v)
        order.append(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
    return PeelCertificate(DEGENERATE, order=tuple(order))


def verify_certificate(g: Graph, f: Capacity, c: PeelCertificate) -> bool:
    """Replay ``c`` against ``g`` and ``f`` from scratch."""
    vs = set(g.vertices)
    if c.verdict == DEGENERATE:
        if len(c.order) != len(vs) or set(c.order) != vs:
            return False
        remaining = set(vs)
        for v in c.order:
            d = sum(1 for w in g.adj[v] if w in remaining)
            if not d < f[v]:
                return False
            remaining.discard(v)
        return True
    if c.verdict == STUCK:
        w = set(c.witness)
        if not w or not w <= vs:
            return False
        return all(sum(1 for u in g.adj[v] if u in w) >= f[v] for v in w)
    return False


def brute_force_degeneracy(g: Graph, f: Capacity, max_vertices: int = 12) -> bool:
    """Check every nonempty induced subgraph for a vertex with degree below capacity."""
    if g.n > max_vertices:
        raise CombinatorialBlowup(f"{g.n} vertices exceed brute-force cap {max_vertices}")
    for k in range(1, g.n + 1):
        for sub in itertools.combinations(g.vertices, k):
            s = set(sub)
            if not any(sum(1 for w in g.adj[v] if w in s) < f[v] for v in sub):
                return False
    return True


def peels_completely(adj: list[int], caps: list[int], mask: int) -> bool:
    """Bitmask form of the peeling test on the vertices in ``mask``.

    ``adj[v]`` is the neighbor bitmask of vertex index ``v``.
    """
    while mask:
        progress = False
        m = mask
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if (adj[v] & mask).bit_count() < caps[v]:
                mask ^= b
                progress = True
        if not progress:
            return False
    return True
