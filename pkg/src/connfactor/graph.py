"""Immutable simple undirected graphs and the elementary queries on them.

Vertices are the integers ``0 .. n-1``.  Edges are stored as normalized
pairs ``(u, v)`` with ``u < v``.  The text format understood by
:func:`load_graph` and produced by :func:`dump_graph` is::

    n m
    u v
    ...

with one edge per line, ``u < v``, lines sorted.  Lines starting with ``#``
are accepted (and skipped) on input.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from typing import Iterable

from .errors import MalformedInput, PreconditionViolated

Edge = tuple[int, int]
EdgeSet = frozenset[Edge]
VertexSet = frozenset[int]

INF = math.inf


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph on vertices ``0 .. n-1``.

    Instances never change after construction; methods that "modify" a graph
    return a new one.
    """

    __slots__ = ("n", "edges", "adj")

    n: int
    edges: EdgeSet
    adj: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise PreconditionViolated(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise PreconditionViolated(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionViolated(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add(norm_edge(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, sorted(self.edges)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def spanning(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """The spanning subgraph on the same vertex set with ``edges``."""
        return Graph(self.n, edges)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {norm_edge(u, v) for u, v in removed}
        return Graph(self.n, (e for e in self.edges if e not in drop))


def load_graph(text: str) -> Graph:
    """Parse the edge-list format into a :class:`Graph`.

    Raises :class:`MalformedInput` on a bad header, an out-of-range vertex, a
    duplicate edge, a self-loop or an edge count that disagrees with the header.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedInput("missing header line")
    header = lines[0].split()
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedInput(f"bad header {lines[0]!r}, expected 'n m'") from None
    if n < 0 or m < 0:
        raise MalformedInput(f"negative count in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedInput(f"header announces {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        try:
            if len(parts) != 2:
                raise ValueError
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(f"line {lineno}: expected 'u v', got {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise MalformedInput(f"line {lineno}: self-loop at {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise MalformedInput(f"line {lineno}: duplicate edge {e[0]} {e[1]}")
        seen.add(e)
    return Graph(n, seen)


def dump_edges(n: int, edges: Iterable[Edge]) -> str:
    es = sorted(norm_edge(u, v) for u, v in edges)
    out = [f"{n} {len(es)}\n"]
    out.extend(f"{u} {v}\n" for u, v in es)
    return "".join(out)


def dump_graph(g: Graph) -> str:
    return dump_edges(g.n, g.edges)


def degree(g: Graph, v: int) -> int:
    return len(g.adj[v])


def neighborhood(g: Graph, S: Iterable[int]) -> VertexSet:
    """Open neighborhood N(S): every neighbor of S that is not itself in S."""
    members = frozenset(S)
    out: set[int] = set()
    for v in members:
        out.update(g.adj[v])
    return frozenset(out - members)


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as vertex sets, ordered by their smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bfs_layers(g: Graph, source: int) -> list[float]:
    """Distances from ``source`` to every vertex (``INF`` when unreachable)."""
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] == INF:
                dist[w] = dv
                q.append(w)
    return dist


def bfs_distance(g: Graph, u: int, v: int) -> float:
    if u == v:
        return 0
    return bfs_layers(g, u)[v]


def diameter(g: Graph) -> float:
    """Largest pairwise distance; ``INF`` for a disconnected graph."""
    best: float = 0
    for s in range(g.n):
        ecc = max(bfs_layers(g, s))
        if ecc == INF:
            return INF
        best = max(best, ecc)
    return best


def format_distance(d: float) -> str:
    return "inf" if d == INF else str(int(d))


def edge_cut(g: Graph, X: Iterable[int]) -> EdgeSet:
    """Edges with exactly one endpoint in ``X``."""
    side = frozenset(X)
    return frozenset((u, v) for u, v in g.edges if (u in side) != (v in side))


class CutSide(enum.Enum):
    X = "X"
    COMPLEMENT = "complement"
    NEITHER = "neither"


def cut_covers(g: Graph, X: Iterable[int], edges: Iterable[tuple[int, int]]) -> CutSide:
    """Which side of the bipartition {X, V - X} the edge set covers.

    An edge set covers the bipartition when at least one of its edges crosses
    the cut and every vertex of some side touches one of its edges.  When both
    sides qualify, ``X`` is reported.
    """
    side = frozenset(X)
    es = [norm_edge(u, v) for u, v in edges]
    if not any((u in side) != (v in side) for u, v in es):
        return CutSide.NEITHER
    touched = {w for e in es for w in e}
    if side <= touched:
        return CutSide.X
    if all(w in touched for w in range(g.n) if w not in side):
        return CutSide.COMPLEMENT
    return CutSide.NEITHER
