"""Command-line entry point: ``connfactor <subcommand> ...``.

Exit status:
    0  success (connected factor found, factor found, report clean)
    1  usage error or unparsable input
    2  no f-factor exists (or the given factor is not an f-factor)
    3  f-factors exist but none is connected (or the given factor is disconnected)
    4  arguments outside an operation's domain (e.g. f below the density threshold)
    5  brute-force budget ran out before an answer was reached

Machine-readable output goes to stdout, everything else to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from .distance import PathConstraint, distance_constrained_factor, path_constrained_factor
from .errors import BudgetExhausted, MalformedInput, PreconditionViolated
from .generators import MODELS, gen_instance, threshold
from .graph import Graph, bfs_distance, dump_edges, dump_graph, format_distance, is_connected, load_graph
from .matching import max_matching
from .oracle import EnumerationBudget, classify, enumerate_f_factors
from .solver import Outcome, solve, verify_connected_factor
from .tutte import DegreeSpec, dump_degree_spec, f_factor, load_degree_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_FACTOR = 2
EXIT_NO_CONNECTED = 3
EXIT_PRECONDITION = 4
EXIT_BUDGET = 5

STATUS_EXIT = {
    Outcome.CONNECTED: EXIT_OK,
    Outcome.NO_FACTOR: EXIT_NO_FACTOR,
    Outcome.NO_CONNECTED_FACTOR: EXIT_NO_CONNECTED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with "no factor".
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    graph: str | None = None
    f_file: str | None = None
    uniform_f: int | None = None
    u: int | None = None
    v: int | None = None
    path: tuple[int, int, int, int] | None = None
    factor_file: str | None = None
    model: str | None = None
    params: dict[str, str] = field(default_factory=dict)
    out: str | None = None
    sizes: list[int] = field(default_factory=list)
    seeds: int = 1
    seed: int = 0
    budget: int | None = None
    fallback_oracle: bool = False
    parallel: bool = False
    workers: int | None = None
    deterministic: bool = False
    json: bool = False
    count: bool = False


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_inputs(cfg: RunConfig, need_f: bool = True) -> tuple[Graph, DegreeSpec | None]:
    if cfg.graph is None:
        raise UsageError("--graph is required")
    g = load_graph(_read(cfg.graph))
    if not need_f:
        return g, None
    if (cfg.f_file is None) == (cfg.uniform_f is None):
        raise UsageError("give exactly one of --f and --uniform-f")
    if cfg.f_file is not None:
        f = load_degree_spec(_read(cfg.f_file))
        if len(f) != g.n:
            raise MalformedInput(f"f-file has {len(f)} values, graph has {g.n} vertices")
    else:
        if cfg.uniform_f < 0:
            raise UsageError("--uniform-f must be non-negative")
        f = DegreeSpec.uniform(g.n, cfg.uniform_f)
    return g, f


def _budget(cfg: RunConfig) -> EnumerationBudget:
    if cfg.budget is None:
        return EnumerationBudget()
    return EnumerationBudget(max_nodes=cfg.budget)


def _emit_factor(cfg: RunConfig, status: str, n: int, edges, extra: dict | None = None) -> None:
    if cfg.json:
        doc: dict = {"status": status}
        if edges is not None:
            doc.update(n=n, m=len(edges), edges=[list(e) for e in sorted(edges)])
        doc.update(extra or {})
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    sys.stdout.write(f"STATUS {status}\n")
    if edges is not None:
        sys.stdout.write(dump_edges(n, edges))


def cmd_solve(cfg: RunConfig) -> int:
    g, f = _load_inputs(cfg)
    t0 = time.perf_counter()
    result = solve(g, f, fallback_oracle=cfg.fallback_oracle, parallel=cfg.parallel,
                   workers=cfg.workers, oracle_budget=_budget(cfg))
    elapsed = time.perf_counter() - t0
    sys.stdout.write(result.to_json() if cfg.json else result.to_text())
    d = result.diagnostics
    if d.split is not None:
        print(f"split sizes {len(d.split[0])} / {len(d.split[1])}", file=sys.stderr)
    print(f"candidates tried {d.candidates_tried}, skipped {d.candidates_skipped}, "
          f"matchings {d.matchings_solved}" + (", by brute force" if d.used_oracle else ""),
          file=sys.stderr)
    if not cfg.deterministic:
        print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    return STATUS_EXIT[result.outcome]


def cmd_factor(cfg: RunConfig) -> int:
    g, f = _load_inputs(cfg)
    F = f_factor(g, f)
    if F is None:
        _emit_factor(cfg, "no-factor", g.n, None)
        return EXIT_NO_FACTOR
    _emit_factor(cfg, "factor", g.n, F.edges)
    return EXIT_OK


def cmd_dc_factor(cfg: RunConfig) -> int:
    g, f = _load_inputs(cfg)
    if cfg.path is not None:
        p = PathConstraint(*cfg.path)
        F = path_constrained_factor(g, f, p)
        u, v = p.u, p.v
    else:
        if cfg.u is None or cfg.v is None:
            raise UsageError("dc-factor needs --u and --v, or --path")
        u, v = cfg.u, cfg.v
        for x in (u, v):
            if not 0 <= x < g.n:
                raise PreconditionViolated(f"vertex {x} out of range 0..{g.n - 1}")
        F = distance_constrained_factor(g, f, u, v)
    if F is None:
        _emit_factor(cfg, "no-factor", g.n, None)
        return EXIT_NO_FACTOR
    d = format_distance(bfs_distance(F.graph, u, v))
    _emit_factor(cfg, "factor", g.n, F.edges, {"distance": d})
    print(f"dist({u}, {v}) = {d}", file=sys.stderr)
    return EXIT_OK


def cmd_match(cfg: RunConfig) -> int:
    g, _ = _load_inputs(cfg, need_f=False)
    m = max_matching(g)
    if cfg.json:
        doc = {"n": g.n, "size": m.size, "pairs": [list(e) for e in sorted(m.pairs)]}
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(dump_edges(g.n, m.pairs))
    perfect = 2 * m.size == g.n
    print(f"matching size {m.size}" + (" (perfect)" if perfect else ""), file=sys.stderr)
    return EXIT_OK


def _load_factor_edges(text: str) -> tuple[int, list[tuple[int, int]]]:
    # Accept solver output directly: drop its STATUS / WITNESS lines.
    keep = [ln for ln in text.splitlines() if not ln.startswith(("STATUS", "WITNESS"))]
    h = load_graph("\n".join(keep))
    return h.n, h.sorted_edges()


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.factor_file is None:
        raise UsageError("verify needs --factor FILE")
    g, f = _load_inputs(cfg)
    n, edges = _load_factor_edges(_read(cfg.factor_file))
    if n != g.n:
        raise MalformedInput(f"factor is on {n} vertices, graph on {g.n}")
    report = verify_connected_factor(g, f, edges)
    if cfg.json:
        doc = {"valid": report.ok, "connected": report.connected, "components": report.components,
               "diameter": format_distance(report.diameter), "violations": report.violations}
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(report.to_text())
    if report.ok:
        return EXIT_OK
    degree_trouble = any(not v.startswith("disconnected") for v in report.violations)
    return EXIT_NO_FACTOR if degree_trouble else EXIT_NO_CONNECTED


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.model is None:
        raise UsageError("gen needs --model")
    g, f = gen_instance(cfg.model, cfg.params, cfg.seed)
    if cfg.out is None:
        sys.stdout.write(dump_graph(g))
    else:
        with open(cfg.out + ".graph", "w", encoding="utf-8") as fh:
            fh.write(dump_graph(g))
        with open(cfg.out + ".f", "w", encoding="utf-8") as fh:
            fh.write(dump_degree_spec(f))
        print(f"wrote {cfg.out}.graph ({g.n} vertices, {g.m} edges) and {cfg.out}.f", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    g, f = _load_inputs(cfg)
    budget = _budget(cfg)
    if cfg.count:
        factors = enumerate_f_factors(g, f, budget)
        connected = sum(1 for F in factors if is_connected(F.graph))
        sys.stdout.write(f"FACTORS {len(factors)}\nCONNECTED {connected}\n")
        if not factors:
            return EXIT_NO_FACTOR
        return EXIT_OK if connected else EXIT_NO_CONNECTED
    verdict = classify(g, f, budget)
    status = verdict.outcome
    edges = verdict.connected_factor.edges if verdict.connected_factor else None
    _emit_factor(cfg, status, g.n, edges)
    return STATUS_EXIT[Outcome(status)]


def cmd_bench(cfg: RunConfig) -> int:
    model = cfg.model or "planted-connected"
    sizes = cfg.sizes or [12, 24, 48]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["model", "n", "m", "seed", "status", "seconds", "candidates_tried", "matchings_solved"])
    for n in sizes:
        params = dict(cfg.params)
        params.setdefault("n", str(n))
        params.setdefault("f", str(threshold(n)))
        if model == "twin-k":
            params.setdefault("k", str(max(n // 2 - 1, 1)))
        for s in range(cfg.seed, cfg.seed + cfg.seeds):
            g, f = gen_instance(model, params, s)
            t0 = time.perf_counter()
            r = solve(g, f, fallback_oracle=cfg.fallback_oracle, parallel=cfg.parallel, workers=cfg.workers)
            dt = time.perf_counter() - t0
            writer.writerow([model, g.n, g.m, s, r.outcome.value, f"{dt:.4f}",
                             r.diagnostics.candidates_tried, r.diagnostics.matchings_solved])
            sys.stdout.flush()
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "factor": cmd_factor,
    "dc-factor": cmd_dc_factor,
    "match": cmd_match,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
    "bench": cmd_bench,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _path(text: str) -> tuple[int, int, int, int]:
    vals = _int_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("--path takes four vertices u,a,b,v")
    return tuple(vals)  # type: ignore[return-value]


def _param(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    return key, value


def build_parser() -> argparse.ArgumentParser:
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--graph", metavar="PATH", help="edge-list file ('-' for stdin)")
    io.add_argument("--f", dest="f_file", metavar="PATH", help="f-value file, one target per line")
    io.add_argument("--uniform-f", type=int, metavar="K", help="use f(v) = K everywhere")
    io.add_argument("--json", action="store_true", help="JSON instead of the text format")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--fallback-oracle", action="store_true",
                     help="decide small instances outside the dense regime by brute force")
    run.add_argument("--parallel", action="store_true", help="try candidate paths in worker processes")
    run.add_argument("--workers", type=int, help="worker count for --parallel")
    run.add_argument("--budget", type=int, metavar="N", help="node limit for brute-force search")

    p = _Parser(prog="connfactor", description="Connected f-factors of dense graphs.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[io, run], help="decide and build a connected f-factor")
    s.add_argument("--deterministic", action="store_true", help="omit timing from stderr")
    s.add_argument("--seed", type=int, default=0, help="accepted for symmetry; solving uses no randomness")

    sub.add_parser("factor", parents=[io], help="any f-factor (Tutte reduction)")

    s = sub.add_parser("dc-factor", parents=[io], help="f-factor with dist(u, v) >= 3")
    s.add_argument("--u", type=int)
    s.add_argument("--v", type=int)
    s.add_argument("--path", type=_path, metavar="U,A,B,V", help="require this path as a shortest u-v path")

    sub.add_parser("match", parents=[io], help="maximum matching of the graph")

    s = sub.add_parser("verify", parents=[io], help="check a factor's degrees and connectivity")
    s.add_argument("--factor", dest="factor_file", metavar="FILE", required=True)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--model", choices=MODELS, required=True)
    s.add_argument("--param", dest="params", type=_param, action="append", default=[], metavar="KEY=VALUE",
                   help="model parameter (n, f, k, p, extra, left); repeatable")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", metavar="PREFIX", help="write PREFIX.graph and PREFIX.f instead of stdout")

    s = sub.add_parser("oracle", parents=[io], help="brute-force classification (small n)")
    s.add_argument("--budget", type=int, metavar="N", help="node limit")
    s.add_argument("--count", action="store_true", help="count all factors and the connected ones")

    s = sub.add_parser("bench", parents=[run], help="time solve on generated instances (CSV)")
    s.add_argument("--model", choices=MODELS, default="planted-connected")
    s.add_argument("--sizes", type=_int_list, default=[], metavar="N,N,...")
    s.add_argument("--param", dest="params", type=_param, action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("--seed", type=int, default=0, help="first seed")
    s.add_argument("--seeds", type=int, default=3, help="instances per size")
    return p


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    values = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    if "params" in values:
        values["params"] = dict(values["params"])
    return RunConfig(**values)


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"connfactor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedInput as exc:
        print(f"connfactor: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolated as exc:
        print(f"connfactor: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExhausted as exc:
        print(f"connfactor: inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main(argv: Sequence[str] | None = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
