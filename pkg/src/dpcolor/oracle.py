"""Exhaustive DP-(f_1,...,f_s)-coloring search for small instances.

This is the trusted reference the constructive algorithm is checked against.
``infeasible`` is only ever reported after the whole search space was refuted;
anything too large raises :class:`CombinatorialBlowup` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .cover import (
    DEFAULT_COVER_CAP,
    Cover,
    check_representative_set,
    diagonal_cover,
    enumerate_perfect_matching_covers,
    representative_graph,
    uniform_lists,
)
from .degeneracy import PeelCertificate, check_strictly_f_degenerate, peels_completely, verify_certificate
from .errors import CombinatorialBlowup, DPColorError, InvalidPick
from .graph import Graph

__all__ = [
    "CapacityMatrix",
    "SolveOutcome",
    "FOUND",
    "INFEASIBLE",
    "solve_bruteforce",
    "verify_solution",
    "finish_outcome",
    "is_dp_colorable_all_covers",
    "AllCoversResult",
    "partition_via_diagonal",
    "list_forested_coloring",
]

FOUND = "found"
INFEASIBLE = "infeasible"


class CapacityMatrix:
    """Per-vertex capacity rows ``(f_1(v), ..., f_s(v))``; colors are 1-based."""

    __slots__ = ("rows", "s", "_key")

    def __init__(self, rows: Mapping[int, Iterable[int]]):
        rows = {v: tuple(int(x) for x in r) for v, r in rows.items()}
        sizes = {len(r) for r in rows.values()}
        if len(sizes) > 1:
            raise ValueError(f"capacity rows have differing lengths {sorted(sizes)}")
        if any(x < 0 for r in rows.values() for x in r):
            raise ValueError("capacities must be nonnegative")
        self.rows = rows
        self.s = sizes.pop() if sizes else 0
        self._key = tuple(sorted(rows.items()))

    @classmethod
    def uniform(cls, g: Graph, row: Iterable[int]) -> "CapacityMatrix":
        row = tuple(row)
        return cls({v: row for v in g.vertices})

    def cap(self, v: int, color: int) -> int:
        if 1 <= color <= self.s:
            return self.rows[v][color - 1]
        return 0

    def restrict(self, vertices: Iterable[int]) -> "CapacityMatrix":
        return CapacityMatrix({v: self.rows[v] for v in vertices})

    def f_of_picks(self, picks: Mapping[int, int]) -> dict[int, int]:
        return {v: self.cap(v, c) for v, c in picks.items()}

    def row_violations(self) -> list[str]:
        """Reasons the rows fall outside ``s >= 2``, entries <= 2, row sums >= 4."""
        out = []
        if self.s < 2:
            out.append(f"s = {self.s} < 2")
        for v, r in sorted(self.rows.items()):
            if any(x > 2 for x in r):
                out.append(f"vertex {v}: entry above 2 in {r}")
            if sum(r) < 4:
                out.append(f"vertex {v}: row sum {sum(r)} < 4")
        return out

    def __eq__(self, other):
        return isinstance(other, CapacityMatrix) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"CapacityMatrix(s={self.s}, rows={self.rows!r})"


@dataclass
class SolveOutcome:
    status: str
    solution: dict[int, int] | None = None
    certificate: PeelCertificate | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def lines(self) -> list[str]:
        out = [f"status {self.status}"]
        if self.solution is not None:
            out += [f"{v}: {c}" for v, c in sorted(self.solution.items())]
        if self.certificate is not None:
            out += self.certificate.lines()
        return out


def verify_solution(h: Cover, fm: CapacityMatrix, picks: Mapping[int, int], cert: PeelCertificate) -> bool:
    """Re-check a claimed coloring along the generic path: picks valid, G_R peels under f_R."""
    try:
        check_representative_set(h, picks)
    except InvalidPick:
        return False
    gr = representative_graph(h, picks)
    return cert.degenerate and verify_certificate(gr, fm.f_of_picks(picks), cert)


def finish_outcome(h: Cover, fm: CapacityMatrix, picks: Mapping[int, int], trace=()) -> SolveOutcome:
    """Certify ``picks`` and return a found outcome; raise if it does not verify."""
    picks = dict(picks)
    gr = representative_graph(h, picks)
    cert = check_strictly_f_degenerate(gr, fm.f_of_picks(picks))
    if not verify_solution(h, fm, picks, cert):
        raise DPColorError(f"claimed coloring failed verification: {cert.verdict}")
    return SolveOutcome(FOUND, picks, cert, list(trace))


def solve_bruteforce(h: Cover, fm: CapacityMatrix, max_vertices: int = 12) -> SolveOutcome:
    """Backtracking search over representative sets.

    Vertices are placed by descending degree; at each vertex colors are tried by
    descending capacity. A partial pick is abandoned as soon as the picked part
    of G_R fails to peel, which is sound since a stuck vertex set stays stuck.
    """
    g = h.host
    if g.n > max_vertices:
        raise CombinatorialBlowup(f"{g.n} vertices exceed oracle cap {max_vertices}")
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    pos = {v: p for p, v in enumerate(order)}
    earlier = [[u for u in g.adj[v] if pos[u] < p] for p, v in enumerate(order)]
    choices = []
    for v in order:
        cs = [c for c in h.lists[v] if fm.cap(v, c) > 0]
        cs.sort(key=lambda c: (-fm.cap(v, c), c))
        choices.append(cs)

    n = len(order)
    adj = [0] * n
    caps = [0] * n
    pick: dict[int, int] = {}

    def place(p: int) -> bool:
        if p == n:
            return True
        v = order[p]
        for c in choices[p]:
            nbm = 0
            for u in earlier[p]:
                if h.adjacent(u, pick[u], v, c):
                    nbm |= 1 << pos[u]
            caps[p] = fm.cap(v, c)
            adj[p] = nbm
            m = nbm
            while m:
                b = m & -m
                m ^= b
                adj[b.bit_length() - 1] |= 1 << p
            pick[v] = c
            if peels_completely(adj, caps, (1 << (p + 1)) - 1) and place(p + 1):
                return True
            m = nbm
            while m:
                b = m & -m
                m ^= b
                adj[b.bit_length() - 1] &= ~(1 << p)
            del pick[v]
        return False

    if not place(0):
        return SolveOutcome(INFEASIBLE)
    return finish_outcome(h, fm, pick)


class AllCoversResult(NamedTuple):
    ok: bool
    covers_checked: int
    counterexample: Cover | None = None
    counterexample_index: int | None = None


def is_dp_colorable_all_covers(
    g: Graph, fm: CapacityMatrix, cap: int = DEFAULT_COVER_CAP, max_vertices: int = 12
) -> AllCoversResult:
    """Solve every perfect-matching cover with lists {1..s}; stop at the first failure.

    Perfect matchings suffice: any cover is an edge-subgraph of a perfect one, and
    deleting cover edges only deletes edges of representative graphs.
    """
    count = 0
    for idx, h in enumerate(enumerate_perfect_matching_covers(g, fm.s, cap)):
        count += 1
        if not solve_bruteforce(h, fm, max_vertices).found:
            return AllCoversResult(False, count, h, idx)
    return AllCoversResult(True, count)


def partition_via_diagonal(g: Graph, fm: CapacityMatrix, max_vertices: int = 12) -> SolveOutcome:
    """(f_1,...,f_s)-partition as a DP-coloring of the diagonal cover on {1..s}."""
    return solve_bruteforce(diagonal_cover(g, uniform_lists(g, fm.s)), fm, max_vertices)


def list_forested_coloring(g: Graph, lists: Mapping[int, Iterable[int]], max_vertices: int = 12) -> SolveOutcome:
    """L-forested-coloring: capacity 2 on listed colors, 0 elsewhere, diagonal cover."""
    lists = {v: tuple(sorted(set(lists[v]))) for v in g.vertices}
    s = max((c for cs in lists.values() for c in cs), default=0)
    fm = CapacityMatrix({v: [2 if i in lists[v] else 0 for i in range(1, s + 1)] for v in g.vertices})
    return solve_bruteforce(diagonal_cover(g, lists), fm, max_vertices)
