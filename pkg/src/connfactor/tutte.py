"""Tutte's reduction from f-factors to perfect matchings.

For every vertex ``x`` of ``G`` the gadget graph ``H`` has a block ``A(x)`` of
``d(x)`` port vertices and a block ``B(x)`` of ``e(x) = d(x) - f(x)`` vertices,
joined by a complete bipartite graph.  Every edge ``{q, w}`` of ``G`` becomes
one edge of ``H`` between a port of ``A(q)`` and a port of ``A(w)``.  In a
perfect matching of ``H`` exactly ``e(x)`` ports of ``x`` are absorbed by
``B(x)``; the remaining ``f(x)`` ports use their cross edge, and those cross
edges form an f-factor of ``G``.

Layout of ``H`` is fixed: gadgets in vertex order, each one ``A(x)`` then
``B(x)``, and the k-th port of ``A(x)`` serves the k-th neighbor of ``x`` in
sorted order.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InternalInconsistency, MalformedInput, PreconditionViolated
from .graph import Edge, EdgeSet, Graph, norm_edge
from .matching import Matching, perfect_matching


@dataclass(frozen=True)
class DegreeSpec:
    """Per-vertex degree targets ``f(v)``."""

    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        for v, t in enumerate(self.targets):
            if t < 0:
                raise PreconditionViolated(f"f({v}) = {t} is negative")

    @classmethod
    def uniform(cls, n: int, k: int) -> "DegreeSpec":
        return cls((k,) * n)

    def __len__(self) -> int:
        return len(self.targets)

    def __getitem__(self, v: int) -> int:
        return self.targets[v]

    def __iter__(self):
        return iter(self.targets)

    @property
    def total(self) -> int:
        return sum(self.targets)

    def problems_against(self, g: Graph) -> list[str]:
        if len(self.targets) != g.n:
            return [f"{len(self.targets)} targets for a graph on {g.n} vertices"]
        return [
            f"f({v}) = {t} exceeds degree {len(g.adj[v])}"
            for v, t in enumerate(self.targets)
            if t > len(g.adj[v])
        ]

    def is_valid_for(self, g: Graph) -> bool:
        return not self.problems_against(g)

    def check_against(self, g: Graph) -> None:
        problems = self.problems_against(g)
        if problems:
            raise PreconditionViolated("; ".join(problems))

    def with_changes(self, delta: dict[int, int]) -> "DegreeSpec":
        t = list(self.targets)
        for v, dv in delta.items():
            t[v] += dv
        return DegreeSpec(tuple(t))


def load_degree_spec(text: str) -> DegreeSpec:
    """Parse an f-value file: one decimal per line, line i holds f(i)."""
    values = []
    for lineno, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            values.append(int(ln))
        except ValueError:
            raise MalformedInput(f"line {lineno}: expected an integer, got {ln!r}") from None
        if values[-1] < 0:
            raise MalformedInput(f"line {lineno}: negative f-value")
    return DegreeSpec(tuple(values))


def dump_degree_spec(f: DegreeSpec) -> str:
    return "".join(f"{t}\n" for t in f.targets)


@dataclass(frozen=True)
class Factor:
    """An edge subset of ``host`` in which every vertex ``v`` has degree ``spec[v]``."""

    host: Graph
    edges: EdgeSet
    spec: DegreeSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(norm_edge(u, v) for u, v in self.edges))
        problems = factor_problems(self.host, self.spec, self.edges)
        if problems:
            raise PreconditionViolated("not an f-factor: " + "; ".join(problems[:5]))

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.host.n, self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def factor_problems(host: Graph, f: DegreeSpec, edges: Iterable[Edge]) -> list[str]:
    """Every way in which ``edges`` fails to be an f-factor of ``host``."""
    problems = []
    if len(f) != host.n:
        return [f"{len(f)} targets for a graph on {host.n} vertices"]
    deg = [0] * host.n
    for u, v in edges:
        if not host.has_edge(u, v):
            problems.append(f"{u} {v} is not an edge of the host graph")
        deg[u] += 1
        deg[v] += 1
    problems.extend(
        f"vertex {v} has degree {deg[v]}, expected {f[v]}"
        for v in range(host.n)
        if deg[v] != f[v]
    )
    return problems


@dataclass(frozen=True)
class GadgetMap:
    """Where each original vertex and edge lives inside the gadget graph."""

    host: Graph
    a_start: tuple[int, ...]
    b_start: tuple[int, ...]
    b_size: tuple[int, ...]
    size: int = 0

    def A(self, x: int) -> range:
        return range(self.a_start[x], self.a_start[x] + len(self.host.adj[x]))

    def B(self, x: int) -> range:
        return range(self.b_start[x], self.b_start[x] + self.b_size[x])

    def port(self, x: int, y: int) -> int:
        """The vertex of ``A(x)`` whose cross edge represents ``{x, y}``."""
        nbrs = self.host.adj[x]
        k = bisect.bisect_left(nbrs, y)
        if k == len(nbrs) or nbrs[k] != y:
            raise KeyError(f"{x} {y} is not an edge")
        return self.a_start[x] + k

    def cross_edge(self, q: int, w: int) -> Edge:
        return norm_edge(self.port(q, w), self.port(w, q))


def gadget_layout(g: Graph, f: DegreeSpec) -> GadgetMap:
    a_start, b_start, b_size = [], [], []
    pos = 0
    for x in range(g.n):
        d = len(g.adj[x])
        e = d - f[x]
        a_start.append(pos)
        b_start.append(pos + d)
        b_size.append(e)
        pos += d + e
    return GadgetMap(g, tuple(a_start), tuple(b_start), tuple(b_size), pos)


def gadget_edges(gmap: GadgetMap) -> list[Edge]:
    g = gmap.host
    edges: list[Edge] = []
    for x in range(g.n):
        a = gmap.A(x)
        for z in gmap.B(x):
            edges.extend((w, z) for w in a)
    for q, w in g.edges:
        edges.append(gmap.cross_edge(q, w))
    return edges


def build_gadget(g: Graph, f: DegreeSpec) -> tuple[Graph, GadgetMap]:
    """Build Tutte's auxiliary graph ``H`` for ``(g, f)``."""
    f.check_against(g)
    gmap = gadget_layout(g, f)
    return Graph(gmap.size, gadget_edges(gmap)), gmap


def extract_factor(g: Graph, f: DegreeSpec, gmap: GadgetMap, m: Matching) -> Factor:
    """Pull an f-factor of ``g`` back from a perfect matching of the gadget graph."""
    chosen = [e for e in g.edges if gmap.cross_edge(*e) in m.pairs]
    problems = factor_problems(g, f, chosen)
    if problems:
        raise InternalInconsistency("matching does not pull back to an f-factor: " + "; ".join(problems[:5]))
    return Factor(g, frozenset(chosen), f)


def _alternating_path(g: Graph, taken: set[Edge], need: list[int], v: int) -> list[Edge] | None:
    """Shortest path from ``v`` alternating untaken/taken edges, ending with an
    untaken edge at another vertex that still needs degree."""
    start = (v, 0)
    prev: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, parity = state
        for y in g.adj[x]:
            e = norm_edge(x, y)
            if (e in taken) != bool(parity):
                continue
            nxt = (y, 1 - parity)
            if nxt in prev:
                continue
            prev[nxt] = state
            if parity == 0 and y != v and need[y] > 0:
                path = []
                cur: tuple[int, int] | None = nxt
                while prev[cur] is not None:
                    p = prev[cur]
                    path.append(norm_edge(p[0], cur[0]))
                    cur = p
                if len(set(path)) == len(path):
                    return path[::-1]
                continue
            queue.append(nxt)
    return None


def greedy_partial_factor(g: Graph, f: DegreeSpec) -> set[Edge]:
    """An edge set with degrees at most ``f``, close to an f-factor in practice.

    Greedy on scarcest vertices first, then repaired by flipping short
    alternating paths between vertices that still lack degree.  No blossom
    handling, so it is only a heuristic.
    """
    need = list(f.targets)
    slack = [len(g.adj[v]) - f[v] for v in range(g.n)]
    taken: set[Edge] = set()
    for v in sorted(range(g.n), key=lambda v: (slack[v], v)):
        for w in sorted(g.adj[v], key=lambda w: (slack[w], w)):
            if need[v] == 0:
                break
            e = norm_edge(v, w)
            if need[w] > 0 and e not in taken:
                need[v] -= 1
                need[w] -= 1
                taken.add(e)
    # Flips elsewhere can open new paths, so sweep until a pass changes nothing.
    progress = True
    while progress:
        progress = False
        for v in range(g.n):
            while need[v] > 0:
                path = _alternating_path(g, taken, need, v)
                if path is None:
                    break
                for i, e in enumerate(path):
                    if i % 2 == 0:
                        taken.add(e)
                    else:
                        taken.remove(e)
                need[v] -= 1
                need[_path_end(v, path)] -= 1
                progress = True
    return taken


def _path_end(v: int, path: list[Edge]) -> int:
    cur = v
    for a, b in path:
        cur = b if a == cur else a
    return cur


def warm_start(g: Graph, f: DegreeSpec, gmap: GadgetMap, H: Graph) -> Matching:
    """A large matching of the gadget graph derived from :func:`greedy_partial_factor`.

    Ports whose edge is taken use their cross edge; each remaining port is
    paired with a free ``B``-vertex of its own gadget when ``H`` allows it.
    """
    taken = sorted(greedy_partial_factor(g, f))
    pairs = set()
    used = set()
    for q, w in taken:
        e = gmap.cross_edge(q, w)
        if e in H.edges:
            pairs.add(e)
            used.update(e)
    for x in range(g.n):
        free_b = [z for z in gmap.B(x) if z not in used]
        for a in gmap.A(x):
            if not free_b:
                break
            if a in used:
                continue
            for i, z in enumerate(free_b):
                if norm_edge(a, z) in H.edges:
                    pairs.add(norm_edge(a, z))
                    used.update((a, z))
                    del free_b[i]
                    break
    return Matching(frozenset(pairs))


def factor_from_gadget(g: Graph, f: DegreeSpec, H: Graph, gmap: GadgetMap) -> Factor | None:
    m = perfect_matching(H, initial=warm_start(g, f, gmap, H))
    if m is None:
        return None
    return extract_factor(g, f, gmap, m)


def f_factor(g: Graph, f: DegreeSpec) -> Factor | None:
    """Tutte's f-factor algorithm: an f-factor of ``g`` or ``None``."""
    if len(f) != g.n:
        raise PreconditionViolated(f"{len(f)} targets for a graph on {g.n} vertices")
    if not f.is_valid_for(g) or f.total % 2:
        return None
    H, gmap = build_gadget(g, f)
    return factor_from_gadget(g, f, H, gmap)


def expected_gadget_order(g: Graph, f: Sequence[int]) -> int:
    return sum(2 * len(g.adj[x]) - f[x] for x in range(g.n))
