"""f-factors in which two chosen vertices end up at distance at least 3.

:func:`redn_pm` extends Tutte's gadget graph so that no perfect matching can
select both edges of a path ``u - l - v``.  For every common neighbor ``l``
of ``u`` and ``v`` it keeps one vertex ``z`` of ``B(l)`` adjacent only to the
two ports of ``A(l)`` that serve ``u`` and ``v``.  Then ``z`` must absorb one
of those two ports, so that edge stays out of the factor.

:func:`path_constrained_factor` goes one step further and asks for a factor
that contains a given 3-edge path ``u - a - b - v`` as a shortest ``u``-``v``
path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleConstraint, PreconditionViolated
from .graph import Edge, Graph, norm_edge
from .tutte import DegreeSpec, Factor, GadgetMap, factor_from_gadget, gadget_edges, gadget_layout


@dataclass(frozen=True)
class PathConstraint:
    u: int
    a: int
    b: int
    v: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.u, self.a, self.b, self.v)

    @property
    def path_edges(self) -> tuple[Edge, Edge, Edge]:
        return (norm_edge(self.u, self.a), norm_edge(self.a, self.b), norm_edge(self.b, self.v))

    def problems(self, g: Graph) -> list[str]:
        if len(set(self.vertices)) != 4:
            return [f"path {self.vertices} repeats a vertex"]
        if any(not 0 <= x < g.n for x in self.vertices):
            return [f"path {self.vertices} leaves the vertex range 0..{g.n - 1}"]
        return [f"{x} {y} is not an edge" for x, y in self.path_edges if not g.has_edge(x, y)]


def redn_pm(g: Graph, f: DegreeSpec, u: int, v: int) -> tuple[Graph, GadgetMap]:
    """Gadget graph whose perfect matchings are the f-factors of ``g - uv``
    with ``u`` and ``v`` at distance at least 3.

    Raises :class:`InfeasibleConstraint` when some common neighbor ``l`` has
    ``d(l) = f(l)``: both of its edges to ``u`` and ``v`` are then forced.
    """
    if u == v:
        raise PreconditionViolated("u and v must differ")
    g1 = g.without_edges([(u, v)]) if g.has_edge(u, v) else g
    f.check_against(g1)
    gmap = gadget_layout(g1, f)
    common = sorted(set(g1.adj[u]) & set(g1.adj[v]))
    removed: set[Edge] = set()
    for l in common:
        if gmap.b_size[l] == 0:
            raise InfeasibleConstraint(
                f"vertex {l} keeps every edge (d = f = {f[l]}), so {u} - {l} - {v} is forced"
            )
        keep = {gmap.port(l, u), gmap.port(l, v)}
        z = gmap.b_start[l]
        removed.update(norm_edge(z, w) for w in gmap.A(l) if w not in keep)
    edges = [e for e in gadget_edges(gmap) if e not in removed]
    return Graph(gmap.size, edges), gmap


def distance_constrained_factor(g: Graph, f: DegreeSpec, u: int, v: int) -> Factor | None:
    """An f-factor of ``g`` with ``dist(u, v) >= 3`` inside it, or ``None``.

    The factor never uses the edge ``uv``.
    """
    if u == v:
        raise PreconditionViolated("u and v must differ")
    if f.total % 2:
        return None
    try:
        H, gmap = redn_pm(g, f, u, v)
    except (InfeasibleConstraint, PreconditionViolated):
        return None
    found = factor_from_gadget(gmap.host, f, H, gmap)
    if found is None:
        return None
    return Factor(g, found.edges, f)


def path_constrained_factor(g: Graph, f: DegreeSpec, p: PathConstraint) -> Factor | None:
    """An f-factor of ``g`` containing ``p`` as a shortest ``u``-``v`` path.

    All edges among the four path vertices are dropped, the targets of the
    ends fall by 1 and of the inner vertices by 2, and the remainder must put
    ``u`` and ``v`` at distance at least 3.  The result has ``dist(u, v) == 3``.
    """
    problems = p.problems(g)
    if problems:
        raise PreconditionViolated("; ".join(problems))
    if min(f[p.u], f[p.v]) < 1 or min(f[p.a], f[p.b]) < 2:
        raise PreconditionViolated(f"targets on {p.vertices} too small to contain the path")
    quad = p.vertices
    chords = [norm_edge(x, y) for i, x in enumerate(quad) for y in quad[i + 1:] if g.has_edge(x, y)]
    rest = g.without_edges(chords)
    reduced = f.with_changes({p.u: -1, p.v: -1, p.a: -2, p.b: -2})
    found = distance_constrained_factor(rest, reduced, p.u, p.v)
    if found is None:
        return None
    return Factor(g, found.edges | set(p.path_edges), f)
