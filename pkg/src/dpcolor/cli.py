"""Command line front end.

Reports go to stdout and are byte-for-byte deterministic for fixed inputs and
seeds; wall time is only printed (to stderr) with ``--timing``.

Exit codes: 0 success, 1 failures or disagreements, 2 parse/usage errors,
3 hypothesis violated.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from .constructive import check_hypotheses, dp_color_planar, find_config_f
from .cover import (
    DEFAULT_COVER_CAP,
    count_perfect_matching_covers,
    diagonal_cover,
    enumerate_perfect_matching_covers,
    random_cover,
    uniform_lists,
)
from .errors import CombinatorialBlowup, DPColorError, HypothesisViolated, ParseError
from .formats import format_cover, parse_capacity_spec, read_capacities, read_cover, read_graph
from .graph import Graph, euler_planarity_sanity, find_c4_adjacent_c3
from .oracle import CapacityMatrix, solve_bruteforce, verify_solution

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_HYPOTHESIS = 0, 1, 2, 3


class Report:
    def __init__(self, argv):
        self.lines = ["command " + " ".join(argv)]

    def add(self, line: str):
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _graph_digest(g: Graph) -> str:
    return f"n={g.n} m={g.m}"


def _fmt(seq) -> str:
    return " ".join(str(x) for x in seq)


def cmd_analyze(args, rep: Report) -> int:
    g = read_graph(args.graph)
    rep.add(f"graph {_graph_digest(g)}")
    rep.add("degrees " + _fmt(f"{d}:{c}" for d, c in g.degree_histogram().items()))
    ok = euler_planarity_sanity(g)
    rep.add(f"euler_bound {'ok' if ok else 'violated'} m={g.m} bound={max(0, 3 * g.n - 6) if g.n >= 3 else 'n/a'}")
    rep.add("planarity assumed, not tested")
    w = find_c4_adjacent_c3(g)
    if w is None:
        rep.add("c4_adjacent_c3 false")
    else:
        rep.add(f"c4_adjacent_c3 true c4={_fmt(w[0])} c3={_fmt(w[1])}")
    cfg = find_config_f(g)
    rep.add("configF none" if cfg is None else f"configF {_fmt(cfg.cycle)}")
    return EXIT_OK


def _capacities(args, g: Graph) -> CapacityMatrix:
    if args.capacities:
        fm = read_capacities(args.capacities)
        missing = set(g.vertices) - set(fm.rows)
        if missing:
            raise ParseError(f"capacity file has no row for vertices {sorted(missing)}")
        return fm
    return CapacityMatrix.uniform(g, parse_capacity_spec(args.uniform))


def _solve(method, g, h, fm, oracle_cap):
    if method == "constructive":
        return dp_color_planar(g, h, fm)
    return solve_bruteforce(h, fm, oracle_cap)


def cmd_solve(args, rep: Report) -> int:
    g = read_graph(args.graph)
    fm = _capacities(args, g)
    if args.cover:
        h = read_cover(args.cover, g)
    elif args.random_seed is not None:
        h = random_cover(g, fm.s, args.random_seed)
    else:
        h = diagonal_cover(g, uniform_lists(g, fm.s))
    rep.add(f"graph {_graph_digest(g)} s={fm.s} cover={h.digest()} method={args.method}")
    try:
        out = _solve(args.method, g, h, fm, args.oracle_cap)
    except HypothesisViolated as e:
        rep.add(f"error HypothesisViolated: {e}")
        return EXIT_HYPOTHESIS
    if out.found and not verify_solution(h, fm, out.solution, out.certificate):
        rep.add("error verification failed")
        return EXIT_FAIL
    for line in out.lines():
        rep.add(line)
    if out.trace:
        rep.add("trace")
        for line in out.trace:
            rep.add(line)
    return EXIT_OK


class _Tally:
    def __init__(self):
        self.solved = self.found = self.failures = self.disagreements = 0
        self.oracle_checked = 0


def _dump_cover(rep: Report, h):
    for line in format_cover(h).splitlines():
        rep.add(f"  {line}")


def _check_cover(g, h, fm, tally: _Tally, rep: Report, tag: str, use_oracle: bool, oracle_cap: int):
    tally.solved += 1
    reason = "not found"
    try:
        out = dp_color_planar(g, h, fm)
        ok = out.found and verify_solution(h, fm, out.solution, out.certificate)
    except HypothesisViolated:
        raise
    except DPColorError as e:
        ok = False
        reason = f"{type(e).__name__}: {e}"
    if ok:
        tally.found += 1
    else:
        tally.failures += 1
        rep.add(f"failure {tag} cover={h.digest()} {reason}")
        _dump_cover(rep, h)
    if use_oracle and g.n <= oracle_cap:
        tally.oracle_checked += 1
        if solve_bruteforce(h, fm, oracle_cap).found != ok:
            tally.disagreements += 1
            rep.add(f"disagreement {tag} cover={h.digest()} constructive={ok}")
            _dump_cover(rep, h)


def _summary(rep: Report, tally: _Tally, skipped: int = 0) -> int:
    rep.add(
        f"total solved={tally.solved} found={tally.found} failures={tally.failures} "
        f"oracle_checked={tally.oracle_checked} disagreements={tally.disagreements} skipped={skipped}"
    )
    return EXIT_OK if tally.failures == 0 and tally.disagreements == 0 else EXIT_FAIL


def cmd_sweep(args, rep: Report) -> int:
    row = parse_capacity_spec(args.caps)
    s = args.s if args.s is not None else len(row)
    if s != len(row):
        raise ParseError(f"--s {s} does not match capacity row {row}")
    files = sorted(Path(args.corpus).glob("*.edges"))
    rep.add(f"corpus {len(files)} graphs s={s} caps={_fmt(row)} covers={'all' if args.all_covers else 'diagonal'}")
    tally = _Tally()
    skipped = 0
    for path in files:
        g = read_graph(path)
        fm = CapacityMatrix.uniform(g, row)
        before = (tally.solved, tally.failures, tally.disagreements)
        try:
            check_hypotheses(g, diagonal_cover(g, uniform_lists(g, s)), fm)
            if args.all_covers:
                if count_perfect_matching_covers(g, s) > args.cover_cap:
                    raise CombinatorialBlowup(f"{count_perfect_matching_covers(g, s)} covers exceed cap {args.cover_cap}")
                covers = enumerate_perfect_matching_covers(g, s, args.cover_cap)
            else:
                covers = [diagonal_cover(g, uniform_lists(g, s))]
            for idx, h in enumerate(covers):
                _check_cover(g, h, fm, tally, rep, f"{path.name}#{idx}", not args.no_oracle, args.oracle_cap)
        except (HypothesisViolated, CombinatorialBlowup) as e:
            skipped += 1
            rep.add(f"skip {path.name} {type(e).__name__}: {e}")
            continue
        rep.add(
            f"graph {path.name} {_graph_digest(g)} covers={tally.solved - before[0]} "
            f"failures={tally.failures - before[1]} disagreements={tally.disagreements - before[2]}"
        )
    return _summary(rep, tally, skipped)


def cmd_fuzz(args, rep: Report) -> int:
    g = read_graph(args.graph)
    row = parse_capacity_spec(args.caps)
    s = args.s if args.s is not None else len(row)
    if s != len(row):
        raise ParseError(f"--s {s} does not match capacity row {row}")
    fm = CapacityMatrix.uniform(g, row)
    rep.add(f"graph {_graph_digest(g)} s={s} caps={_fmt(row)} covers={args.covers} seed={args.seed}")
    rng = random.Random(args.seed)
    tally = _Tally()
    try:
        check_hypotheses(g, diagonal_cover(g, uniform_lists(g, s)), fm)
        for idx in range(args.covers):
            h = random_cover(g, s, rng.getrandbits(64))
            _check_cover(g, h, fm, tally, rep, f"#{idx}", not args.no_oracle, args.oracle_cap)
    except HypothesisViolated as e:
        rep.add(f"error HypothesisViolated: {e}")
        return EXIT_HYPOTHESIS
    return _summary(rep, tally)


def cmd_enum_covers(args, rep: Report) -> int:
    g = read_graph(args.graph)
    total = count_perfect_matching_covers(g, args.s)
    rep.add(f"graph {_graph_digest(g)} s={args.s} covers={total}")
    for idx, h in enumerate(enumerate_perfect_matching_covers(g, args.s, args.cover_cap)):
        if args.limit is not None and idx >= args.limit:
            break
        rep.add(f"# cover {idx} {h.digest()}")
        for line in format_cover(h).splitlines():
            rep.add(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpcolor", description="DP-coloring with variable degeneracy.")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="structural report for a graph")
    a.add_argument("graph")
    a.set_defaults(func=cmd_analyze)

    def caps_args(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--capacities", help="capacity file 'v: f1 ... fs'")
        g.add_argument("--uniform", help="capacity row for every vertex, e.g. 2,2")

    def oracle_args(sp):
        sp.add_argument("--oracle-cap", type=int, default=12, help="max vertices for the oracle")

    sv = sub.add_parser("solve", help="solve one instance")
    sv.add_argument("graph")
    caps_args(sv)
    cg = sv.add_mutually_exclusive_group()
    cg.add_argument("--cover", help="cover file")
    cg.add_argument("--diagonal", action="store_true", help="diagonal cover on {1..s} (default)")
    cg.add_argument("--random-seed", type=int, help="random perfect-matching cover")
    sv.add_argument("--method", choices=["constructive", "oracle"], default="constructive")
    oracle_args(sv)
    sv.set_defaults(func=cmd_solve)

    sw = sub.add_parser("sweep", help="constructive vs oracle over a corpus directory")
    sw.add_argument("corpus")
    sw.add_argument("--s", type=int)
    sw.add_argument("--caps", required=True, help="uniform capacity row, e.g. 2,2")
    sw.add_argument("--all-covers", action="store_true", help="every perfect-matching cover (default: diagonal only)")
    sw.add_argument("--cover-cap", type=int, default=DEFAULT_COVER_CAP)
    sw.add_argument("--no-oracle", action="store_true")
    oracle_args(sw)
    sw.set_defaults(func=cmd_sweep)

    fz = sub.add_parser("fuzz", help="random covers, constructive vs oracle")
    fz.add_argument("graph")
    fz.add_argument("--s", type=int)
    fz.add_argument("--caps", required=True)
    fz.add_argument("--covers", type=int, default=100)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--no-oracle", action="store_true")
    oracle_args(fz)
    fz.set_defaults(func=cmd_fuzz)

    ec = sub.add_parser("enum-covers", help="print the perfect-matching cover stream")
    ec.add_argument("graph")
    ec.add_argument("--s", type=int, required=True)
    ec.add_argument("--limit", type=int)
    ec.add_argument("--cover-cap", type=int, default=DEFAULT_COVER_CAP)
    ec.set_defaults(func=cmd_enum_covers)
    return p


def main(argv=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    rep = Report(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args, rep)
    except (ParseError, OSError) as e:
        rep.add(f"error {type(e).__name__}: {e}")
        code = EXIT_PARSE
    except HypothesisViolated as e:
        rep.add(f"error HypothesisViolated: {e}")
        code = EXIT_HYPOTHESIS
    except DPColorError as e:
        rep.add(f"error {type(e).__name__}: {e}")
        code = EXIT_FAIL
    stdout.write(rep.text())
    if args.timing:
        print(f"wall_time {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
