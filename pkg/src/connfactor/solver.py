"""Connected f-factors of dense graphs (every f(v) >= ceil(n / 2.5)).

The algorithm:

1. Compute any f-factor with Tutte's reduction.  None means no f-factor.
2. If it is connected, return it.
3. Otherwise it has exactly two components ``X`` and ``V - X``.  If a
   connected f-factor exists at all, one of them has some ``u`` in ``X`` and
   ``v`` outside at distance exactly 3 along a path ``u - a - b - v``.  Try
   every such path (lexicographic order) through
   :func:`~connfactor.distance.path_constrained_factor`; the first factor it
   finds is connected.  If none works, there is no connected f-factor.
"""

from __future__ import annotations

import enum
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from .distance import PathConstraint, path_constrained_factor
from .errors import InternalInconsistency, PreconditionViolated
from .generators import threshold
from .graph import (
    Edge,
    Graph,
    VertexSet,
    connected_components,
    diameter,
    dump_edges,
    format_distance,
    norm_edge,
)
from .tutte import DegreeSpec, Factor, f_factor, factor_problems

MIN_VERTICES = 12


class Outcome(enum.Enum):
    CONNECTED = "connected"
    NO_FACTOR = "no-factor"
    NO_CONNECTED_FACTOR = "no-connected-factor"


@dataclass
class Diagnostics:
    split: tuple[VertexSet, VertexSet] | None = None
    witness: PathConstraint | None = None
    candidates_tried: int = 0
    candidates_skipped: int = 0
    matchings_solved: int = 0
    used_oracle: bool = False


@dataclass
class ConnectedFactorResult:
    outcome: Outcome
    factor: Factor | None = None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    def to_text(self) -> str:
        lines = [f"STATUS {self.outcome.value}\n"]
        if self.factor is not None:
            lines.append(dump_edges(self.factor.host.n, self.factor.edges))
        w = self.diagnostics.witness
        if w is not None:
            lines.append(f"WITNESS {w.u} {w.a} {w.b} {w.v}\n")
        return "".join(lines)

    def to_json(self) -> str:
        doc: dict = {"status": self.outcome.value}
        if self.factor is not None:
            doc["n"] = self.factor.host.n
            doc["m"] = len(self.factor.edges)
            doc["edges"] = [list(e) for e in sorted(self.factor.edges)]
        w = self.diagnostics.witness
        if w is not None:
            doc["witness"] = list(w.vertices)
        return json.dumps(doc, sort_keys=True) + "\n"


def density_problems(g: Graph, f: DegreeSpec) -> list[str]:
    """Reasons ``(g, f)`` lies outside the dense regime the solver is exact for."""
    problems = []
    if len(f) != g.n:
        return [f"{len(f)} targets for a graph on {g.n} vertices"]
    if g.n < MIN_VERTICES:
        problems.append(f"n = {g.n} < {MIN_VERTICES}")
    t = threshold(g.n)
    low = [v for v in range(g.n) if f[v] < t]
    if low:
        problems.append(f"f below ceil(n/2.5) = {t} at vertices {low[:10]}")
    return problems


def candidate_paths(g: Graph, X: Iterable[int]) -> Iterator[PathConstraint]:
    """Every path ``u - a - b - v`` of ``g`` with ``u`` in ``X`` and ``v`` not,
    in lexicographic ``(u, v, a, b)`` order."""
    side = frozenset(X)
    inside = sorted(side)
    outside = [v for v in range(g.n) if v not in side]
    for u in inside:
        for v in outside:
            nv = set(g.adj[v])
            for a in g.adj[u]:
                if a == v:
                    continue
                for b in g.adj[a]:
                    if b != u and b != v and b in nv:
                        yield PathConstraint(u, a, b, v)


@dataclass
class FactorReport:
    violations: list[str] = field(default_factory=list)
    connected: bool = False
    components: int = 0
    diameter: float = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [f"VALID {'yes' if self.ok else 'no'}\n",
                 f"COMPONENTS {self.components}\n",
                 f"DIAMETER {format_distance(self.diameter)}\n"]
        lines.extend(f"VIOLATION {v}\n" for v in self.violations)
        return "".join(lines)


def verify_connected_factor(g: Graph, f: DegreeSpec, F: Factor | Iterable[Edge]) -> FactorReport:
    """Check that ``F`` is an f-factor of ``g`` and connected; report its diameter."""
    edges = F.edges if isinstance(F, Factor) else frozenset(norm_edge(u, v) for u, v in F)
    report = FactorReport(violations=factor_problems(g, f, edges))
    sub = Graph(g.n, (e for e in edges if g.has_edge(*e)))
    report.components = len(connected_components(sub))
    report.connected = report.components <= 1
    if not report.connected:
        report.violations.append(f"disconnected: {report.components} components")
    report.diameter = diameter(sub)
    return report


def _try_path(args: tuple[Graph, DegreeSpec, PathConstraint]) -> Factor | None:
    g, f, p = args
    return path_constrained_factor(g, f, p)


def _viable(f: DegreeSpec, p: PathConstraint) -> bool:
    return f[p.u] >= 1 and f[p.v] >= 1 and f[p.a] >= 2 and f[p.b] >= 2


def solve(
    g: Graph,
    f: DegreeSpec,
    *,
    fallback_oracle: bool = False,
    parallel: bool = False,
    workers: int | None = None,
    oracle_budget=None,
) -> ConnectedFactorResult:
    """Decide whether ``g`` has a connected f-factor and build one if it does.

    Requires ``n >= 12`` and ``f(v) >= ceil(n / 2.5)`` everywhere; otherwise
    raises :class:`PreconditionViolated`, unless ``fallback_oracle`` is set,
    in which case brute force decides (small instances only, within
    ``oracle_budget``).
    """
    problems = density_problems(g, f)
    if problems:
        if not fallback_oracle or len(f) != g.n:
            raise PreconditionViolated("; ".join(problems))
        return _solve_by_oracle(g, f, oracle_budget)

    diag = Diagnostics()
    diag.matchings_solved += 1
    first = f_factor(g, f)
    if first is None:
        return ConnectedFactorResult(Outcome.NO_FACTOR, None, diag)
    comps = connected_components(first.graph)
    if len(comps) == 1:
        return ConnectedFactorResult(Outcome.CONNECTED, first, diag)
    if len(comps) != 2:
        raise InternalInconsistency(f"dense f-factor with {len(comps)} components")
    X, Y = comps
    diag.split = (X, Y)

    found = connect_across(g, f, X, diag=diag, parallel=parallel, workers=workers)
    if found is None:
        return ConnectedFactorResult(Outcome.NO_CONNECTED_FACTOR, None, diag)
    return ConnectedFactorResult(Outcome.CONNECTED, found[0], diag)


def connect_across(
    g: Graph,
    f: DegreeSpec,
    X: Iterable[int],
    *,
    diag: Diagnostics | None = None,
    parallel: bool = False,
    workers: int | None = None,
) -> tuple[Factor, PathConstraint] | None:
    """Search for a factor with some ``u`` in ``X`` and ``v`` outside at distance 3.

    ``X`` is normally one component of a disconnected f-factor; in the dense
    regime the factor found is then connected (otherwise
    :class:`InternalInconsistency` is raised).  Returns the factor and the
    path it was built around.
    """
    diag = diag if diag is not None else Diagnostics()
    found = _search_paths(g, f, candidate_paths(g, X), diag, parallel, workers)
    if found is None:
        return None
    factor, p = found
    report = verify_connected_factor(g, f, factor)
    if not report.ok:
        raise InternalInconsistency(f"path {p.vertices} gave a bad factor: {report.violations}")
    diag.witness = p
    return factor, p


def _search_paths(
    g: Graph,
    f: DegreeSpec,
    paths: Iterator[PathConstraint],
    diag: Diagnostics,
    parallel: bool,
    workers: int | None,
) -> tuple[Factor, PathConstraint] | None:
    viable = _count_viable(f, paths, diag)
    if not parallel:
        for p in viable:
            diag.candidates_tried += 1
            diag.matchings_solved += 1
            r = path_constrained_factor(g, f, p)
            if r is not None:
                return r, p
        return None

    nworkers = workers or os.cpu_count() or 1
    batch = 4 * nworkers
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        while True:
            chunk = list(islice(viable, batch))
            if not chunk:
                return None
            results = list(pool.map(_try_path, [(g, f, p) for p in chunk]))
            # Take the earliest success in the chunk so the witness matches a serial run.
            for p, r in zip(chunk, results):
                diag.candidates_tried += 1
                diag.matchings_solved += 1
                if r is not None:
                    return r, p


def _count_viable(f: DegreeSpec, paths: Iterator[PathConstraint], diag: Diagnostics) -> Iterator[PathConstraint]:
    for p in paths:
        if _viable(f, p):
            yield p
        else:
            diag.candidates_skipped += 1


def _solve_by_oracle(g: Graph, f: DegreeSpec, budget=None) -> ConnectedFactorResult:
    from .oracle import DEFAULT_BUDGET, classify

    verdict = classify(g, f, budget or DEFAULT_BUDGET)
    diag = Diagnostics(used_oracle=True)
    if verdict.outcome == "connected":
        return ConnectedFactorResult(Outcome.CONNECTED, verdict.connected_factor, diag)
    if verdict.outcome == "no-factor":
        return ConnectedFactorResult(Outcome.NO_FACTOR, None, diag)
    if verdict.some_factor is not None:
        comps = connected_components(verdict.some_factor.graph)
        diag.split = (comps[0], frozenset().union(*comps[1:]))
    return ConnectedFactorResult(Outcome.NO_CONNECTED_FACTOR, None, diag)
