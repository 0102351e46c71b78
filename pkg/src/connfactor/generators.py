"""Seeded test-instance generators.

All randomness comes from :class:`random.Random` (CPython's MT19937 Mersenne
Twister) seeded with the integer ``seed``; the same ``(model, params, seed)``
always produces the same graph.  Models:

``twin-k``             two ``K_{k+1}`` cliques joined by a perfect matching, f = k
``planted-connected``  a random connected f-regular graph plus ``extra`` random edges
``gnp-threshold``      G(n, p) with f = ceil(n / 2.5) unless ``f`` is given
``planted-split``      two random f-regular blocks plus ``extra`` random edges,
                       so a two-component f-factor is guaranteed
"""

from __future__ import annotations

import itertools
import random
from typing import Any

from .errors import PreconditionViolated
from .graph import Edge, Graph, is_connected, norm_edge
from .tutte import DegreeSpec

MODELS = ("twin-k", "planted-connected", "gnp-threshold", "planted-split")


def threshold(n: int) -> int:
    """ceil(n / 2.5), computed exactly."""
    return (2 * n + 4) // 5


def twin_k(k: int) -> tuple[Graph, DegreeSpec]:
    if k < 1:
        raise PreconditionViolated("twin-k needs k >= 1")
    s = k + 1
    edges = [(u, v) for u, v in itertools.combinations(range(s), 2)]
    edges += [(u + s, v + s) for u, v in edges]
    edges += [(i, i + s) for i in range(s)]
    return Graph(2 * s, edges), DegreeSpec.uniform(2 * s, k)


def _circulant(n: int, d: int) -> list[Edge]:
    edges = set()
    for off in range(1, d // 2 + 1):
        for i in range(n):
            edges.add(norm_edge(i, (i + off) % n))
    if d % 2:
        for i in range(n // 2):
            edges.add((i, i + n // 2))
    return sorted(edges)


def random_regular(n: int, d: int, rng: random.Random, connected: bool = True) -> list[Edge]:
    """A random simple d-regular graph on n vertices via double-edge swaps."""
    if not 0 <= d < n or (n * d) % 2:
        raise PreconditionViolated(f"no {d}-regular graph on {n} vertices")
    if connected and d < 2 and n > 2:
        raise PreconditionViolated(f"a connected {d}-regular graph on {n} vertices does not exist")
    edges = _circulant(n, d)
    present = set(edges)
    m = len(edges)
    rounds = 0
    while True:
        for _ in range(10 * m if rounds == 0 else m):
            if m < 2:
                break
            i, j = rng.randrange(m), rng.randrange(m)
            if i == j:
                continue
            a, b = edges[i]
            c, e = edges[j]
            if rng.random() < 0.5:
                c, e = e, c
            if len({a, b, c, e}) < 4:
                continue
            ne1, ne2 = norm_edge(a, e), norm_edge(c, b)
            if ne1 in present or ne2 in present:
                continue
            present -= {edges[i], edges[j]}
            present |= {ne1, ne2}
            edges[i], edges[j] = ne1, ne2
        rounds += 1
        if not connected or is_connected(Graph(n, edges)):
            break
    perm = list(range(n))
    rng.shuffle(perm)
    return sorted(norm_edge(perm[u], perm[v]) for u, v in edges)


def _add_random_edges(n: int, edges: set[Edge], extra: int, rng: random.Random) -> set[Edge]:
    missing = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    if extra > len(missing):
        raise PreconditionViolated(f"only {len(missing)} non-edges available, {extra} requested")
    return edges | set(rng.sample(missing, extra))


def planted_connected(n: int, f: int, extra: int, seed: int) -> tuple[Graph, DegreeSpec]:
    rng = random.Random(seed)
    planted = set(random_regular(n, f, rng))
    return Graph(n, _add_random_edges(n, planted, extra, rng)), DegreeSpec.uniform(n, f)


def planted_split(n: int, f: int, extra: int, seed: int, left: int | None = None) -> tuple[Graph, DegreeSpec]:
    """Two f-regular blocks on a random vertex split, plus ``extra`` edges anywhere."""
    rng = random.Random(seed)
    if left is None:
        left = n // 2
    right = n - left
    if min(left, right) <= f:
        raise PreconditionViolated(f"blocks of size {left} and {right} cannot be {f}-regular")
    a = random_regular(left, f, rng)
    b = random_regular(right, f, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    planted = {norm_edge(perm[u], perm[v]) for u, v in a}
    planted |= {norm_edge(perm[u + left], perm[v + left]) for u, v in b}
    return Graph(n, _add_random_edges(n, planted, extra, rng)), DegreeSpec.uniform(n, f)


def gnp_threshold(n: int, p: float, seed: int, f: int | None = None) -> tuple[Graph, DegreeSpec]:
    if not 0.0 <= p <= 1.0:
        raise PreconditionViolated(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    k = threshold(n) if f is None else f
    if k < 0:
        raise PreconditionViolated("f must be non-negative")
    return Graph(n, edges), DegreeSpec.uniform(n, k)


def gen_instance(model: str, params: dict[str, Any], seed: int = 0) -> tuple[Graph, DegreeSpec]:
    """Dispatch on the model name; ``params`` holds the model's keyword arguments."""
    try:
        if model == "twin-k":
            return twin_k(int(params["k"]))
        if model == "planted-connected":
            return planted_connected(int(params["n"]), int(params["f"]), int(params.get("extra", 0)), seed)
        if model == "planted-split":
            left = params.get("left")
            return planted_split(
                int(params["n"]), int(params["f"]), int(params.get("extra", 0)), seed,
                None if left is None else int(left),
            )
        if model == "gnp-threshold":
            f = params.get("f")
            return gnp_threshold(int(params["n"]), float(params["p"]), seed, None if f is None else int(f))
    except KeyError as exc:
        raise PreconditionViolated(f"model {model!r} needs parameter {exc.args[0]!r}") from None
    raise PreconditionViolated(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
