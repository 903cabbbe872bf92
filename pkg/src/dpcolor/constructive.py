"""Constructive DP-(f_1,...,f_s)-coloring of planar graphs with no 4-cycle
adjacent to a 3-cycle.

The graph is taken apart by two reductions, recorded as a plan:

* ``peel v`` removes a vertex whose degree is below its total capacity; it is
  colored last with any color that still has positive residual capacity.
* ``configF x1..x6`` removes a 6-cycle with chord x1x5 whose vertices all have
  degree 4. After the rest is colored, residual capacities on F are computed
  and F is colored by the CASE 2 greedy when a trigger exists, otherwise by
  exhaustive CASE 1 search.

The plan depends only on the graph and the capacities, so it is computed once
and reused for every cover of the same host.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .cover import Cover, representative_graph
from .degeneracy import check_strictly_f_degenerate, peels_completely, verify_certificate
from .errors import (
    DPColorError,
    GreedyStuck,
    HypothesisViolated,
    NoConfigF,
    NoExtension,
    PreconditionFailed,
)
from .graph import Graph, enumerate_cycles, euler_planarity_sanity, has_c4_adjacent_c3, induced_subgraph
from .oracle import CapacityMatrix, SolveOutcome, finish_outcome

__all__ = [
    "ConfigF",
    "find_config_f",
    "extra_f_edges",
    "residual_capacities",
    "case2_trigger",
    "case1_applies",
    "extend_case1",
    "extend_case2",
    "extend_f",
    "verify_f_extension",
    "reduce_low_degree",
    "reduction_plan",
    "check_hypotheses",
    "dp_color_planar",
    "chorded_six_cycle",
]

Residuals = dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class ConfigF:
    """6-cycle ``x1..x6`` with chord ``x1x5``."""

    cycle: tuple[int, int, int, int, int, int]

    def x(self, k: int) -> int:
        """Vertex x_k, 1-based with indices taken mod 6."""
        return self.cycle[(k - 1) % 6]

    @property
    def chord(self) -> tuple[int, int]:
        return self.cycle[0], self.cycle[4]

    def edges(self) -> list[tuple[int, int]]:
        c = self.cycle
        es = [(c[i], c[(i + 1) % 6]) for i in range(6)] + [self.chord]
        return [(min(e), max(e)) for e in es]

    def internal_degree(self, k: int) -> int:
        return 3 if k in (1, 5) else 2


def chorded_six_cycle(vertices=(1, 2, 3, 4, 5, 6)) -> Graph:
    return Graph.from_edges(ConfigF(tuple(vertices)).edges())


def _labelings(cycle):
    for r in range(6):
        rot = cycle[r:] + cycle[:r]
        yield rot
        yield (rot[0],) + tuple(reversed(rot[1:]))


def find_config_f(g: Graph) -> ConfigF | None:
    """Lexicographically least labeled configuration F in ``g``, if any.

    Extra chords among x1..x6 are allowed here; see :func:`extra_f_edges`.
    """
    deg4 = [v for v in g.vertices if g.degree(v) == 4]
    if len(deg4) < 6:
        return None
    sub = induced_subgraph(g, deg4)
    best = None
    for c in enumerate_cycles(sub, 6):
        if len(c) != 6:
            continue
        for lab in _labelings(c):
            if g.has_edge(lab[0], lab[4]) and (best is None or lab < best):
                best = lab
    return ConfigF(best) if best is not None else None


def extra_f_edges(g: Graph, cfg: ConfigF) -> list[tuple[int, int]]:
    """Edges of g among x1..x6 other than the seven edges of F."""
    own = set(cfg.edges())
    return sorted(e for e in induced_subgraph(g, cfg.cycle).edges if e not in own)


def residual_capacities(fm: CapacityMatrix, h: Cover, partial: Mapping[int, int], cfg: ConfigF) -> Residuals:
    """Capacity left at each (x_k, i) after the colored vertices outside F.

    Each colored neighbor whose pick is cover-adjacent to (x_k, i) costs one
    unit; results are clamped at 0. Colors missing from a list get 0.
    """
    inside = set(cfg.cycle)
    out = {}
    for x in cfg.cycle:
        ext = [(v, partial[v]) for v in h.host.adj[x] if v not in inside and v in partial]
        row = []
        for i in range(1, fm.s + 1):
            if i not in h.lists[x]:
                row.append(0)
                continue
            hits = sum(1 for v, c in ext if h.adjacent(v, c, x, i))
            row.append(max(0, fm.cap(x, i) - hits))
        out[x] = tuple(row)
    return out


def case2_trigger(hf: Cover, cfg: ConfigF, fstar: Residuals) -> tuple[int, int] | None:
    """First ``(k, j)`` such that color j at x_{k+1} has positive residual and no
    cover neighbor at x_k with positive residual.

    Picking (x_{k+1}, j) first therefore leaves x_k's residuals untouched.
    """
    for k in range(1, 7):
        xk, xn = cfg.x(k), cfg.x(k + 1)
        for j in hf.lists[xn]:
            if fstar[xn][j - 1] >= 1 and all(fstar[xk][i - 1] == 0 for i in hf.partners(xn, j, xk)):
                return k, j
    return None


def case1_applies(fstar: Residuals, cfg: ConfigF) -> bool:
    """Every color has positive residual at every x_k (two-color form)."""
    return all(x >= 1 for v in cfg.cycle for x in fstar[v])


def extend_case2(hf: Cover, cfg: ConfigF, fstar: Residuals, k: int) -> dict[int, int]:
    """Greedy coloring of x_{k+1}, x_{k+2}, ..., x_k starting from the trigger at k."""
    trig = None
    xk, xn = cfg.x(k), cfg.x(k + 1)
    for j in hf.lists[xn]:
        if fstar[xn][j - 1] >= 1 and all(fstar[xk][i - 1] == 0 for i in hf.partners(xn, j, xk)):
            trig = j
            break
    if trig is None:
        raise PreconditionFailed(f"no CASE 2 trigger at k={k}")

    cap = {x: list(fstar[x]) for x in cfg.cycle}
    picks: dict[int, int] = {}
    adj = hf.host.adj
    for step in range(6):
        x = cfg.x(k + 1 + step)
        if step == 0:
            c = trig
        else:
            c = next((c for c in sorted(hf.lists[x]) if cap[x][c - 1] > 0), None)
            if c is None:
                raise GreedyStuck(f"no positive residual at {x} (residuals {cap[x]})")
        picks[x] = c
        for y in adj[x]:
            if y in picks:
                continue
            for j in hf.partners(x, c, y):
                cap[y][j - 1] = max(0, cap[y][j - 1] - 1)
    return picks


def extend_case1(hf: Cover, cfg: ConfigF, fstar: Residuals) -> dict[int, int]:
    """Exhaustive search over picks with positive residual on x1..x6."""
    xs = cfg.cycle
    idx = {x: p for p, x in enumerate(xs)}
    options = [[c for c in sorted(hf.lists[x]) if fstar[x][c - 1] > 0] for x in xs]
    pairs = [(idx[u], idx[v]) for u, v in hf.host.edges]
    for combo in itertools.product(*options):
        adj = [0] * 6
        for a, b in pairs:
            if hf.adjacent(xs[a], combo[a], xs[b], combo[b]):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        caps = [fstar[xs[p]][combo[p] - 1] for p in range(6)]
        if peels_completely(adj, caps, 0b111111):
            return dict(zip(xs, combo))
    raise NoExtension(f"no coloring of F {xs} under residuals {[fstar[x] for x in xs]}")


def extend_f(hf: Cover, cfg: ConfigF, fstar: Residuals) -> tuple[dict[int, int], str]:
    """Color F: CASE 2 greedy if a trigger exists, else CASE 1 search."""
    trig = case2_trigger(hf, cfg, fstar)
    if trig is not None:
        k, _ = trig
        return extend_case2(hf, cfg, fstar, k), f"case2 {k}"
    return extend_case1(hf, cfg, fstar), "case1"


def verify_f_extension(hf: Cover, cfg: ConfigF, fstar: Residuals, picks: Mapping[int, int]) -> bool:
    gr = representative_graph(hf, picks)
    f = {x: fstar[x][picks[x] - 1] for x in cfg.cycle}
    cert = check_strictly_f_degenerate(gr, f)
    return cert.degenerate and verify_certificate(gr, f, cert)


def reduce_low_degree(g: Graph, fm: CapacityMatrix) -> tuple[int, Graph] | None:
    """Lowest-id vertex with degree below its total capacity, and G minus it."""
    for v in g.vertices:
        if g.degree(v) < sum(fm.rows[v]):
            return v, g.remove_vertices((v,))
    return None


@dataclass(frozen=True)
class Step:
    kind: str
    vertex: int | None = None
    config: ConfigF | None = None

    def line(self) -> str:
        if self.kind == "peel":
            return f"peel {self.vertex}"
        return "configF " + " ".join(str(x) for x in self.config.cycle)


@lru_cache(maxsize=8192)
def reduction_plan(g: Graph, fm: CapacityMatrix) -> tuple[Step, ...]:
    """Sequence of reductions that empties ``g``.

    Raises NoConfigF when neither reduction applies.
    """
    steps = []
    cur = g
    while cur.n:
        if has_c4_adjacent_c3(cur):
            raise DPColorError(f"4-cycle adjacent to 3-cycle appeared in a subgraph: {cur.c4_c3_witness}")
        red = reduce_low_degree(cur, fm)
        if red is not None:
            v, cur = red
            steps.append(Step("peel", vertex=v))
            continue
        cfg = find_config_f(cur)
        if cfg is None:
            raise NoConfigF(f"no vertex of degree below capacity and no configuration F in {sorted(cur.edges)}")
        extra = extra_f_edges(cur, cfg)
        if extra:
            raise DPColorError(f"configuration F {cfg.cycle} is not induced: extra edges {extra}")
        steps.append(Step("configF", config=cfg))
        cur = cur.remove_vertices(cfg.cycle)
    return tuple(steps)


def check_hypotheses(g: Graph, h: Cover, fm: CapacityMatrix) -> None:
    """Raise HypothesisViolated unless the constructive algorithm's preconditions hold."""
    if not euler_planarity_sanity(g):
        raise HypothesisViolated(f"|E| = {g.m} > 3|V| - 6 = {3 * g.n - 6}: not planar")
    if has_c4_adjacent_c3(g):
        c4, c3 = g.c4_c3_witness
        raise HypothesisViolated(f"4-cycle {c4} is adjacent to 3-cycle {c3}")
    if set(fm.rows) < set(g.vertices):
        raise HypothesisViolated("capacities missing for some vertices")
    bad = fm.restrict(g.vertices).row_violations()
    if bad:
        raise HypothesisViolated("capacity rows: " + "; ".join(bad))
    if h.host is not g and h.host != g:
        raise HypothesisViolated("cover host differs from the graph")
    palette = set(range(1, fm.s + 1))
    for v in g.vertices:
        if not set(h.lists[v]) <= palette:
            raise HypothesisViolated(f"list of {v} has colors outside 1..{fm.s}")


def _peel_color(g: Graph, h: Cover, fm: CapacityMatrix, v: int, picks: Mapping[int, int]) -> int:
    colored = [(u, picks[u]) for u in g.adj[v] if u in picks]
    for c in sorted(h.lists[v]):
        hits = sum(1 for u, cu in colored if h.adjacent(u, cu, v, c))
        if fm.cap(v, c) - hits > 0:
            return c
    raise DPColorError(f"no color with positive residual at peeled vertex {v}")


def dp_color_planar(g: Graph, h: Cover, fm: CapacityMatrix) -> SolveOutcome:
    """Color ``g`` for cover ``h`` by replaying the reduction plan backwards.

    The outcome carries the recursion trace (``peel v``, ``configF ...``,
    ``case1`` / ``case2 k``) and a verified peel certificate for G_R.
    """
    check_hypotheses(g, h, fm)
    fm = fm.restrict(g.vertices)
    plan = reduction_plan(g, fm)
    picks: dict[int, int] = {}
    case_lines: dict[int, str] = {}
    for idx in range(len(plan) - 1, -1, -1):
        step = plan[idx]
        if step.kind == "peel":
            picks[step.vertex] = _peel_color(g, h, fm, step.vertex, picks)
            continue
        cfg = step.config
        fstar = residual_capacities(fm, h, picks, cfg)
        hf = h.restrict(cfg.cycle)
        fpicks, line = extend_f(hf, cfg, fstar)
        if not verify_f_extension(hf, cfg, fstar, fpicks):
            raise NoExtension(f"{line} extension of {cfg.cycle} failed verification")
        picks.update(fpicks)
        case_lines[idx] = line
    trace = []
    for idx, step in enumerate(plan):
        trace.append(step.line())
        if idx in case_lines:
            trace.append(case_lines[idx])
    return finish_outcome(h, fm, picks, trace)
