"""Plain-text formats for graphs, covers, capacities and representative sets.

Edge lists hold one edge per line (``u v``). A line with a single id declares
an isolated vertex. Lines starting with ``#`` and blank lines are ignored
everywhere.

Covers::

    lists
    0: 1 2
    1: 1 2
    matchings
    0 1: 1->2, 2->1

Host edges absent from the matchings section get an empty matching. The line
``diagonal`` may replace the matchings section.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

from .cover import Cover, diagonal_cover
from .errors import DPColorError, ParseError
from .graph import Graph
from .oracle import CapacityMatrix

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "read_graph",
    "parse_cover",
    "format_cover",
    "read_cover",
    "parse_capacities",
    "format_capacities",
    "read_capacities",
    "parse_capacity_spec",
    "parse_representative_set",
    "format_representative_set",
]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        val = int(tok, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    if val < 0:
        raise ParseError(f"negative value {val}", lineno)
    return val


def parse_edge_list(text: str) -> Graph:
    edges = []
    vertices = set()
    for lineno, line in _lines(text):
        toks = line.split()
        if len(toks) == 1:
            vertices.add(_int(toks[0], lineno))
        elif len(toks) == 2:
            u, v = _int(toks[0], lineno), _int(toks[1], lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
    return Graph.from_edges(edges, vertices)


def format_edge_list(g: Graph, header: str | None = None) -> str:
    out = [f"# {header}"] if header else []
    touched = {v for e in g.edges for v in e}
    out += [str(v) for v in g.vertices if v not in touched]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _split_keyed(line: str, lineno: int):
    if ":" not in line:
        raise ParseError(f"expected 'key: values', got {line!r}", lineno)
    key, _, rest = line.partition(":")
    return key.split(), rest


def parse_cover(text: str, g: Graph) -> Cover:
    section = None
    lists: dict[int, tuple[int, ...]] = {}
    matchings: dict[tuple[int, int], frozenset] = {}
    diagonal = False
    for lineno, line in _lines(text):
        if line in ("lists", "matchings"):
            section = line
            continue
        if line == "diagonal":
            diagonal = True
            section = None
            continue
        if section == "lists":
            key, rest = _split_keyed(line, lineno)
            if len(key) != 1:
                raise ParseError(f"expected 'v: colors', got {line!r}", lineno)
            lists[_int(key[0], lineno)] = tuple(_int(t, lineno) for t in rest.split())
        elif section == "matchings":
            key, rest = _split_keyed(line, lineno)
            if len(key) != 2:
                raise ParseError(f"expected 'u v: i->j, ...', got {line!r}", lineno)
            u, v = (_int(t, lineno) for t in key)
            if u > v:
                raise ParseError(f"matching key must have u < v, got {u} {v}", lineno)
            pairs = set()
            for item in filter(None, (s.strip() for s in rest.split(","))):
                a, arrow, b = item.partition("->")
                if not arrow:
                    raise ParseError(f"expected 'i->j', got {item!r}", lineno)
                pairs.add((_int(a.strip(), lineno), _int(b.strip(), lineno)))
            matchings[(u, v)] = frozenset(pairs)
        else:
            raise ParseError(f"line outside a section: {line!r}", lineno)
    missing = set(g.vertices) - set(lists)
    if missing:
        raise ParseError(f"no list for vertices {sorted(missing)}")
    if diagonal:
        if matchings:
            raise ParseError("cover has both 'diagonal' and a matchings section")
        return diagonal_cover(g, lists)
    for e in g.sorted_edges():
        matchings.setdefault(e, frozenset())
    return Cover(g, lists, matchings)


def format_cover(h: Cover) -> str:
    out = ["lists"]
    out += [f"{v}: " + " ".join(map(str, h.lists[v])) for v in sorted(h.lists)]
    out.append("matchings")
    for (u, v) in sorted(h.matchings):
        pairs = ", ".join(f"{i}->{j}" for i, j in sorted(h.matchings[(u, v)]))
        out.append(f"{u} {v}: {pairs}".rstrip())
    return "\n".join(out) + "\n"


def read_cover(path, g: Graph) -> Cover:
    return parse_cover(Path(path).read_text(), g)


def parse_capacities(text: str) -> CapacityMatrix:
    rows = {}
    for lineno, line in _lines(text):
        key, rest = _split_keyed(line, lineno)
        if len(key) != 1:
            raise ParseError(f"expected 'v: f1 f2 ...', got {line!r}", lineno)
        row = [_int(t, lineno) for t in rest.split()]
        if rows and len(row) != len(next(iter(rows.values()))):
            raise ParseError("capacity rows must all have the same length", lineno)
        rows[_int(key[0], lineno)] = row
    return CapacityMatrix(rows)


def format_capacities(fm: CapacityMatrix) -> str:
    return "".join(f"{v}: {' '.join(map(str, fm.rows[v]))}\n" for v in sorted(fm.rows))


def read_capacities(path) -> CapacityMatrix:
    return parse_capacities(Path(path).read_text())


def parse_capacity_spec(spec: str) -> tuple[int, ...]:
    """Uniform row such as ``"2,2"`` or ``"2 1 1"``."""
    toks = spec.replace(",", " ").split()
    if not toks:
        raise DPColorError("empty capacity spec")
    return tuple(_int(t, None) for t in toks)


def parse_representative_set(text: str) -> dict[int, int]:
    picks = {}
    for lineno, line in _lines(text):
        key, rest = _split_keyed(line, lineno)
        vals = rest.split()
        if len(key) != 1 or len(vals) != 1:
            raise ParseError(f"expected 'v: c', got {line!r}", lineno)
        picks[_int(key[0], lineno)] = _int(vals[0], lineno)
    return picks


def format_representative_set(picks: Mapping[int, int]) -> str:
    return "".join(f"{v}: {c}\n" for v, c in sorted(picks.items()))
