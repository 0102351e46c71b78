"""Red/blue edge colorings, alternating circuits and switching.

Given two f-factors, color the edges only the first uses red and the edges
only the second uses blue.  The coloring is equitable (every vertex has as
many red as blue edges), so it splits into closed trails whose colors
alternate.  Swapping the colors along one such circuit ("switching") turns an
f-factor into another f-factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotASwitch, NotEquitable, PreconditionViolated
from .graph import Edge, Graph, connected_components, norm_edge
from .matching import perfect_matching
from .tutte import Factor

RED, BLUE = 0, 1


@dataclass(frozen=True)
class EdgeColoring:
    red: frozenset[Edge]
    blue: frozenset[Edge]

    def __post_init__(self) -> None:
        red = frozenset(norm_edge(*e) for e in self.red)
        blue = frozenset(norm_edge(*e) for e in self.blue)
        if red & blue:
            raise PreconditionViolated(f"edges colored both red and blue: {sorted(red & blue)[:3]}")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)

    @property
    def edges(self) -> frozenset[Edge]:
        return self.red | self.blue

    def color(self, e: Edge) -> int:
        return RED if norm_edge(*e) in self.red else BLUE

    def red_degree(self, v: int) -> int:
        return sum(1 for e in self.red if v in e)

    def blue_degree(self, v: int) -> int:
        return sum(1 for e in self.blue if v in e)

    def balance(self) -> dict[int, int]:
        """Red degree minus blue degree, for every vertex touched."""
        bal: dict[int, int] = {}
        for sign, es in ((1, self.red), (-1, self.blue)):
            for a, b in es:
                bal[a] = bal.get(a, 0) + sign
                bal[b] = bal.get(b, 0) + sign
        return bal

    def restrict(self, keep: Iterable[Edge]) -> "EdgeColoring":
        ks = {norm_edge(*e) for e in keep}
        return EdgeColoring(self.red & ks, self.blue & ks)


@dataclass(frozen=True)
class AlternatingCircuit:
    """A closed trail ``v_1, ..., v_2t, v_1`` whose edges alternate in color.

    Edge ``i`` joins ``vertices[i]`` and ``vertices[i + 1]`` (cyclically); it is
    red when ``i`` is even and ``first_red`` holds, and so on alternately.
    """

    vertices: tuple[int, ...]
    first_red: bool = True

    def __post_init__(self) -> None:
        k = len(self.vertices)
        if k % 2 or k == 2:
            raise PreconditionViolated(f"alternating circuit of length {k}")
        es = self.edges
        if len(set(es)) != len(es):
            raise PreconditionViolated("alternating circuit repeats an edge")

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def red(self) -> frozenset[Edge]:
        start = 0 if self.first_red else 1
        return frozenset(self.edges[start::2])

    @property
    def blue(self) -> frozenset[Edge]:
        start = 1 if self.first_red else 0
        return frozenset(self.edges[start::2])

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.red, self.blue)

    def swapped(self) -> "AlternatingCircuit":
        return AlternatingCircuit(self.vertices, not self.first_red)

    def crosses(self, side: Iterable[int]) -> bool:
        s = frozenset(side)
        return any((a in s) != (b in s) for a, b in self.edges)


EMPTY_CIRCUIT = AlternatingCircuit(())


def color_difference(fa: Factor, fb: Factor) -> EdgeColoring:
    """Red: edges only in ``fa``; blue: edges only in ``fb``."""
    if fa.host != fb.host or fa.spec != fb.spec:
        raise PreconditionViolated("factors must share host graph and degree targets")
    return EdgeColoring(fa.edges - fb.edges, fb.edges - fa.edges)


def is_equitable(c: EdgeColoring) -> bool:
    return not any(c.balance().values())


def _require_equitable(c: EdgeColoring) -> None:
    bad = sorted(v for v, b in c.balance().items() if b)
    if bad:
        raise NotEquitable(f"red and blue degrees differ at vertices {bad[:10]}")


def _trails(c: EdgeColoring) -> list[tuple[list[int], list[Edge]]]:
    """Hierholzer's algorithm on (vertex, color to leave by) states.

    Entering a vertex on a red edge forces leaving on a blue one and vice
    versa.  Each connected piece of the coloring yields one closed trail,
    started at its lowest vertex on a red edge.
    """
    inc: dict[tuple[int, int], list[tuple[int, Edge]]] = {}
    for col, es in ((RED, c.red), (BLUE, c.blue)):
        for a, b in es:
            inc.setdefault((a, col), []).append((b, (a, b)))
            inc.setdefault((b, col), []).append((a, (a, b)))
    for lst in inc.values():
        lst.sort()
    ptr = {key: 0 for key in inc}
    used: set[Edge] = set()

    def next_edge(v: int, col: int) -> tuple[int, Edge] | None:
        lst = inc.get((v, col))
        if lst is None:
            return None
        i = ptr[(v, col)]
        while i < len(lst) and lst[i][1] in used:
            i += 1
        ptr[(v, col)] = i
        return lst[i] if i < len(lst) else None

    out = []
    for s in sorted({v for e in c.edges for v in e}):
        while next_edge(s, RED) is not None:
            stack: list[tuple[int, int, Edge | None]] = [(s, RED, None)]
            order: list[tuple[int, Edge | None]] = []
            while stack:
                v, col, e_in = stack[-1]
                nxt = next_edge(v, col)
                if nxt is None:
                    stack.pop()
                    order.append((v, e_in))
                else:
                    w, e = nxt
                    used.add(e)
                    stack.append((w, 1 - col, e))
            order.reverse()
            vertices = [v for v, _ in order[:-1]]
            edges = [e for _, e in order[1:]]
            out.append((vertices, edges))
    return out


def _as_circuit(c: EdgeColoring, vertices: Sequence[int]) -> AlternatingCircuit:
    t = AlternatingCircuit(tuple(vertices), norm_edge(vertices[0], vertices[1]) in c.red)
    assert t.red <= c.red and t.blue <= c.blue, "trail does not alternate"
    return t


def decompose_circuits(c: EdgeColoring) -> list[AlternatingCircuit]:
    """Edge-disjoint alternating circuits covering every colored edge.

    One circuit per connected piece of the coloring, ordered by lowest vertex.
    """
    _require_equitable(c)
    return [_as_circuit(c, vs) for vs, _ in _trails(c)]


def _split_even_repeats(t: AlternatingCircuit, cut: frozenset[int] | None) -> AlternatingCircuit:
    """Cut a trail at a vertex it revisits after an even number of steps.

    Both halves are alternating circuits; the one crossing the cut is kept
    (the shorter one if both cross, or when there is no cut).
    """
    while True:
        vs = list(t.vertices)
        k = len(vs)
        first: dict[int, int] = {}
        split = None
        for j, v in enumerate(vs):
            i = first.get(v)
            if i is not None and (j - i) % 2 == 0:
                split = (i, j)
                break
            first.setdefault(v, j)
        if split is None:
            return t
        i, j = split
        c = t.coloring()
        parts = [vs[i:j], vs[j:] + vs[:i]]
        circuits = [_as_circuit(c, p) for p in parts if len(p) >= 4]
        if cut is not None:
            circuits = [x for x in circuits if x.crosses(cut)] or circuits
        t = min(circuits, key=len)
        if len(t) == k:
            return t


def _proper_equitable_subset(c: EdgeColoring) -> frozenset[Edge] | None:
    """A nonempty proper subset of the colored edges that is itself equitable.

    Each edge gets a port at both ends; at every vertex, red ports are joined
    to blue ports, and each edge joins its own two ports.  Perfect matchings
    of that graph are exactly the equitable subsets (the edges whose two ports
    are matched together).  The first edge is forced in, and each other edge
    in turn is forced out, until a matching turns up.
    """
    edges = sorted(c.edges)
    if len(edges) < 2:
        return None
    by_end: dict[tuple[int, int], list[int]] = {}
    for i, (a, b) in enumerate(edges):
        col = c.color((a, b))
        by_end.setdefault((a, col), []).append(2 * i)
        by_end.setdefault((b, col), []).append(2 * i + 1)
    internal = []
    for (v, col), ports in by_end.items():
        if col != RED:
            continue
        for p in ports:
            for q in by_end.get((v, BLUE), ()):
                internal.append((p, q))
    pinned = {0, 1}
    base = [e for e in internal if e[0] not in pinned and e[1] not in pinned]
    n = 2 * len(edges)
    for j in range(1, len(edges)):
        links = [(2 * i, 2 * i + 1) for i in range(len(edges)) if i != j]
        m = perfect_matching(Graph(n, base + links))
        if m is not None:
            return frozenset(edges[i] for i in range(len(edges)) if (2 * i, 2 * i + 1) in m.pairs)
    return None


def minimal_circuit(c: EdgeColoring, cut: Iterable[int] | None = None) -> AlternatingCircuit | None:
    """A minimal alternating circuit inside ``c``.

    With ``cut`` (one side of a vertex bipartition) the circuit must contain an
    edge crossing it; ``None`` is returned when no circuit of ``c`` does.  No
    proper subset of the returned circuit's edges is an alternating circuit.
    """
    _require_equitable(c)
    side = frozenset(cut) if cut is not None else None
    circuits = decompose_circuits(c)
    if side is not None:
        circuits = [t for t in circuits if t.crosses(side)]
    if not circuits:
        return None
    t = _split_even_repeats(circuits[0], side)
    while True:
        sub = _proper_equitable_subset(t.coloring())
        if sub is None:
            return t
        cur = t.coloring()
        options = [sub, cur.edges - sub]
        pieces = [x for opt in options for x in decompose_circuits(cur.restrict(opt))]
        if side is not None:
            pieces = [x for x in pieces if x.crosses(side)]
        t = _split_even_repeats(min(pieces, key=len), side)


def is_switch_on(t: AlternatingCircuit, f: Factor) -> bool:
    return t.red <= f.edges and not (t.blue & f.edges)


def switching(f: Factor, t: AlternatingCircuit) -> Factor:
    """Drop the circuit's red edges from ``f`` and add its blue ones."""
    if not is_switch_on(t, f):
        raise NotASwitch("circuit's red edges must lie in the factor and its blue edges outside it")
    return Factor(f.host, (f.edges - t.red) | t.blue, f.spec)


@dataclass(frozen=True)
class CutSwitch:
    side: frozenset[int]
    circuit: AlternatingCircuit
    result: Factor


def switch_across_cut(disconnected: Factor, other: Factor) -> CutSwitch | None:
    """Switch ``disconnected`` along a minimal circuit of its difference with
    ``other`` that crosses between its first component and the rest.

    ``None`` when no circuit of the difference crosses.
    """
    comps = connected_components(disconnected.graph)
    if len(comps) < 2:
        raise PreconditionViolated("factor is already connected")
    side = comps[0]
    t = minimal_circuit(color_difference(disconnected, other), side)
    if t is None:
        return None
    return CutSwitch(side, t, switching(disconnected, t))
