#!/usr/bin/env python3
"""Regenerate the committed corpus of small planar graphs with no 4-cycle
adjacent to a 3-cycle.

Runs offline: candidates come from the networkx graph atlas (every graph up to
7 vertices, one per isomorphism class) and planarity is decided exactly with
networkx.check_planarity. The result is written as edge-list files so the
package itself never needs a planarity test.

    python scripts/make_corpus.py tests/data/corpus
"""

import argparse
from pathlib import Path

import networkx as nx

from dpcolor.formats import format_edge_list
from dpcolor.graph import Graph, has_c4_adjacent_c3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for old in args.outdir.glob("*.edges"):
        old.unlink()
    kept = 0
    for idx, nxg in enumerate(nx.graph_atlas_g()):
        n = nxg.number_of_nodes()
        if n == 0 or n > args.max_n or not nx.is_connected(nxg):
            continue
        if not nx.check_planarity(nxg)[0]:
            continue
        g = Graph.from_edges(nxg.edges(), vertices=nxg.nodes())
        if has_c4_adjacent_c3(g):
            continue
        name = f"atlas{idx:04d}_n{g.n}_m{g.m}.edges"
        header = f"atlas graph {idx}: connected, planar, no 4-cycle adjacent to a 3-cycle"
        (args.outdir / name).write_text(format_edge_list(g, header=header))
        kept += 1
    print(f"wrote {kept} graphs to {args.outdir}")


if __name__ == "__main__":
    main()
