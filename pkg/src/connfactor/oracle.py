"""Brute-force ground truth for small instances.

Nothing here touches the matching code: f-factors are enumerated by plain
edge-by-edge backtracking (edges in sorted order, "exclude" tried before
"include") with degree-feasibility pruning only.  Meant for n up to about 14.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import BudgetExhausted, PreconditionViolated
from .generators import gen_instance
from .graph import INF, Edge, Graph, bfs_distance, is_connected, norm_edge
from .tutte import DegreeSpec, Factor

__all__ = [
    "EnumerationBudget",
    "enumerate_f_factors",
    "find_factor",
    "exists_connected_f_factor",
    "find_connected_f_factor",
    "exists_factor_with_distance",
    "classify",
    "brute_max_matching_size",
    "brute_has_perfect_matching",
    "equitable_subsets_exist",
    "all_pairs_diameter",
    "gen_instance",
]


@dataclass(frozen=True)
class EnumerationBudget:
    max_solutions: int = 1_000_000
    max_nodes: int = 50_000_000

    def __post_init__(self) -> None:
        if self.max_solutions <= 0 or self.max_nodes <= 0:
            raise PreconditionViolated("budget limits must be positive")


DEFAULT_BUDGET = EnumerationBudget()


class _Stop(Exception):
    pass


def _search(g: Graph, f: DegreeSpec, budget: EnumerationBudget, visit: Callable[[frozenset[Edge]], bool]) -> bool:
    """Run the backtracking search, calling ``visit`` on each factor.

    Returns True if ``visit`` asked to stop.  Raises :class:`BudgetExhausted`
    (with an empty partial list) when the node budget runs out.
    """
    if len(f) != g.n:
        raise PreconditionViolated(f"{len(f)} targets for a graph on {g.n} vertices")
    edges = g.sorted_edges()
    need = list(f.targets)
    rem = [len(a) for a in g.adj]
    if any(need[v] > rem[v] for v in range(g.n)):
        return False
    chosen: list[Edge] = []
    nodes = 0

    def rec(i: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExhausted(f"node budget {budget.max_nodes} exhausted")
        if i == len(edges):
            if visit(frozenset(chosen)):
                raise _Stop
            return
        a, b = edges[i]
        rem[a] -= 1
        rem[b] -= 1
        if need[a] <= rem[a] and need[b] <= rem[b]:
            rec(i + 1)
        if need[a] > 0 and need[b] > 0:
            need[a] -= 1
            need[b] -= 1
            chosen.append((a, b))
            rec(i + 1)
            chosen.pop()
            need[a] += 1
            need[b] += 1
        rem[a] += 1
        rem[b] += 1

    try:
        rec(0)
    except _Stop:
        return True
    return False


def enumerate_f_factors(g: Graph, f: DegreeSpec, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[Factor]:
    """All f-factors of ``g`` in the deterministic search order."""
    found: list[Factor] = []

    def visit(es: frozenset[Edge]) -> bool:
        found.append(Factor(g, es, f))
        if len(found) >= budget.max_solutions:
            raise BudgetExhausted(f"solution budget {budget.max_solutions} reached", found)
        return False

    try:
        _search(g, f, budget, visit)
    except BudgetExhausted as exc:
        exc.partial = found
        raise
    return found


def find_factor(g: Graph, f: DegreeSpec, accept: Callable[[frozenset[Edge]], bool],
                budget: EnumerationBudget = DEFAULT_BUDGET) -> Factor | None:
    """First factor (in search order) for which ``accept`` holds."""
    hit: list[frozenset[Edge]] = []

    def visit(es: frozenset[Edge]) -> bool:
        if accept(es):
            hit.append(es)
            return True
        return False

    _search(g, f, budget, visit)
    return Factor(g, hit[0], f) if hit else None


def find_connected_f_factor(g: Graph, f: DegreeSpec, budget: EnumerationBudget = DEFAULT_BUDGET) -> Factor | None:
    return find_factor(g, f, lambda es: is_connected(Graph(g.n, es)), budget)


def exists_connected_f_factor(g: Graph, f: DegreeSpec, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    return find_connected_f_factor(g, f, budget) is not None


def exists_factor_with_distance(g: Graph, f: DegreeSpec, u: int, v: int, at_least: int = 3,
                                budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    return find_factor(g, f, lambda es: bfs_distance(Graph(g.n, es), u, v) >= at_least, budget) is not None


@dataclass(frozen=True)
class OracleVerdict:
    outcome: str  # "connected" | "no-factor" | "no-connected-factor"
    some_factor: Factor | None
    connected_factor: Factor | None


def classify(g: Graph, f: DegreeSpec, budget: EnumerationBudget = DEFAULT_BUDGET) -> OracleVerdict:
    """Three-way decision: is there a connected f-factor, only disconnected ones, or none."""
    first: list[frozenset[Edge]] = []

    def accept(es: frozenset[Edge]) -> bool:
        if not first:
            first.append(es)
        return is_connected(Graph(g.n, es))

    conn = find_factor(g, f, accept, budget)
    some = Factor(g, first[0], f) if first else None
    if conn is not None:
        return OracleVerdict("connected", some, conn)
    if some is None:
        return OracleVerdict("no-factor", None, None)
    return OracleVerdict("no-connected-factor", some, None)


def brute_max_matching_size(g: Graph) -> int:
    """Size of a largest matching, by exhaustive search over edge subsets."""
    edges = g.sorted_edges()
    best = 0

    def rec(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (g.n - len(used)) // 2 <= best:
            return
        for j in range(i, len(edges)):
            a, b = edges[j]
            if a not in used and b not in used:
                rec(j + 1, used | {a, b}, size + 1)

    rec(0, frozenset(), 0)
    return best


def brute_has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * brute_max_matching_size(g) == g.n


def equitable_subsets_exist(red: Iterable[Edge], blue: Iterable[Edge], proper: bool = True) -> bool:
    """Whether some nonempty (proper, by default) subset of red+blue is equitable.

    A nonempty equitable edge set always contains an alternating circuit, so
    for an alternating circuit this decides whether it is non-minimal.
    Exponential in the number of edges.
    """
    colored = [(norm_edge(*e), 1) for e in red] + [(norm_edge(*e), -1) for e in blue]
    k = len(colored)
    for size in range(1, k if proper else k + 1):
        for combo in itertools.combinations(colored, size):
            bal: dict[int, int] = {}
            for (a, b), sign in combo:
                bal[a] = bal.get(a, 0) + sign
                bal[b] = bal.get(b, 0) + sign
            if not any(bal.values()):
                return True
    return False


def all_pairs_diameter(g: Graph) -> float:
    """Diameter by running a BFS from every vertex to every other one."""
    worst: float = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            d = bfs_distance(g, u, v)
            if d == INF:
                return INF
            worst = max(worst, d)
    return worst
