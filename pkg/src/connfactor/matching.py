"""Maximum-cardinality matching in general graphs.

Edmonds' blossom-shrinking search, run once from every exposed vertex after a
greedy warm start.  A vertex from which no augmenting path exists never gets
one later, so a single pass over the vertices is enough.  Worst case is
O(n^3); the greedy start makes the typical dense instance much cheaper.

Everything here is deterministic: vertices are scanned in index order and
neighbors in sorted order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[Edge]

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> "Matching":
        return cls(frozenset((v, w) for v, w in enumerate(mate) if w > v))

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def mate_array(self, n: int) -> list[int]:
        mate = [-1] * n
        for u, v in self.pairs:
            mate[u] = v
            mate[v] = u
        return mate


def _greedy(adj: Sequence[Sequence[int]], mate: list[int]) -> None:
    # Low-degree vertices first; they have the fewest chances to be matched later.
    order = sorted(range(len(adj)), key=lambda v: (len(adj[v]), v))
    for v in order:
        if mate[v] != -1:
            continue
        best = -1
        for w in adj[v]:
            if mate[w] == -1 and (best == -1 or len(adj[w]) < len(adj[best])):
                best = w
        if best != -1:
            mate[v] = best
            mate[best] = v


def _augment_from(root: int, adj: Sequence[Sequence[int]], mate: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    outer = [False] * n
    outer[root] = True
    tree = [root]
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # Odd cycle through two outer vertices: shrink it.
                cur = lca(v, to)
                blossom: set[int] = set()
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in tree:
                    if base[i] in blossom:
                        base[i] = cur
                        if not outer[i]:
                            outer[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                tree.append(to)
                if mate[to] == -1:
                    # Augment along the alternating path ending at ``to``.
                    w = to
                    while w != -1:
                        pw = parent[w]
                        nxt = mate[pw]
                        mate[w] = pw
                        mate[pw] = w
                        w = nxt
                    return True
                m = mate[to]
                outer[m] = True
                tree.append(m)
                queue.append(m)
    return False


def _solve(
    adj: Sequence[Sequence[int]],
    mate: list[int] | None = None,
    stop_on_exposed: bool = False,
) -> list[int] | None:
    n = len(adj)
    if mate is None:
        mate = [-1] * n
        _greedy(adj, mate)
    for v in range(n):
        if mate[v] == -1 and not _augment_from(v, adj, mate):
            if stop_on_exposed:
                return None
    return mate


def max_matching(g: Graph, initial: Matching | None = None) -> Matching:
    """A maximum-cardinality matching of ``g``.

    ``initial``, if given, must be a valid matching of ``g``; it replaces the
    greedy warm start.
    """
    mate = initial.mate_array(g.n) if initial is not None else None
    out = _solve(g.adj, mate)
    assert out is not None
    return Matching.from_mate(out)


def perfect_matching(g: Graph, initial: Matching | None = None) -> Matching | None:
    """A perfect matching of ``g``, or ``None`` when there is none."""
    if g.n % 2:
        return None
    mate = initial.mate_array(g.n) if initial is not None else None
    out = _solve(g.adj, mate, stop_on_exposed=True)
    if out is None:
        return None
    return Matching.from_mate(out)


@dataclass
class MatchingReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_matching(g: Graph, m: Matching | Iterable[tuple[int, int]], perfect: bool = False) -> MatchingReport:
    pairs = m.pairs if isinstance(m, Matching) else [norm_edge(u, v) for u, v in m]
    report = MatchingReport()
    seen: dict[int, Edge] = {}
    for e in sorted(pairs):
        if e not in g.edges:
            report.violations.append(f"pair {e[0]} {e[1]} is not an edge")
        for w in e:
            if w in seen:
                report.violations.append(f"vertex {w} repeated in {seen[w]} and {e}")
            else:
                seen[w] = e
    if perfect and 2 * len(set(pairs)) != g.n:
        report.violations.append(f"not perfect: {len(set(pairs))} pairs for {g.n} vertices")
    return report
