"""Deterministic graph generators and the bundled fixture catalog."""

from __future__ import annotations

import json
import math
import random
from functools import lru_cache
from importlib import resources

from .errors import GraphError
from .graph import Graph, parse_graph

__all__ = [
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "empty",
    "gnp",
    "gnm",
    "bipartite_gnp",
    "fixture",
    "fixture_matching",
    "FIXTURES",
    "generate",
]

FIXTURES = (
    "fig1",
    "fig22_G1",
    "fig22_G2",
    "fig22_G3",
    "fig33_W",
    "fig33_H",
    "fig222_G1",
    "fig222_G2",
    "fig222_G3",
    "two_triangles_bridge",
    # forbidden-configuration drawings, each with its dashed matching
    "fig3_a",
    "fig3_b",
    "fig3_c",
    "fig3_d",
    "fig3_e",
)


def _need(cond, message):
    if not cond:
        raise GraphError(message)


def empty(n: int) -> Graph:
    _need(n >= 0, "n must be non-negative")
    return Graph(n)


def path(n: int) -> Graph:
    """Chordless path on ``n`` vertices (``n >= 1``; the named family starts at 3)."""
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Chordless cycle; ``n = 3`` is allowed and gives the triangle."""
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    _need(a >= 0 and b >= 0 and a + b >= 1, "complete_bipartite needs a, b >= 0, a + b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _check_p(p):
    _need(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")


def _gnp_pairs(n, p, rng):
    """Sparse G(n, p) edge sampling by geometric skips over the pair list."""
    if p <= 0.0 or n < 2:
        return []
    if p >= 1.0:
        return [(w, v) for v in range(n) for w in range(v)]
    lp = math.log1p(-p)
    out = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log1p(-rng.random()) / lp)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            out.append((w, v))
    return out


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p); identical output for identical ``(n, p, seed)``."""
    _need(n >= 0, "n must be non-negative")
    _check_p(p)
    return Graph(n, _gnp_pairs(n, p, random.Random(seed)))


def gnm(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    total = n * (n - 1) // 2
    _need(n >= 0 and 0 <= m <= total, f"need 0 <= m <= {total}")
    rng = random.Random(seed)
    edges = []
    for k in rng.sample(range(total), m):
        v = (1 + math.isqrt(1 + 8 * k)) // 2
        u = k - v * (v - 1) // 2
        edges.append((u, v))
    return Graph(n, edges)


def bipartite_gnp(a: int, b: int, p: float, seed: int = 0) -> Graph:
    """Random bipartite graph: sides ``0..a-1`` and ``a..a+b-1``, each cross pair with prob. p."""
    _need(a >= 0 and b >= 0, "side sizes must be non-negative")
    _check_p(p)
    rng = random.Random(seed)
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return Graph(a + b, edges)


# -- fixtures --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _fixture_data(name):
    if name not in FIXTURES:
        raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    root = resources.files("kegraph") / "fixtures"
    text = (root / f"{name}.txt").read_text()
    meta = json.loads((root / f"{name}.labels.json").read_text())
    g = parse_graph(text).relabeled(meta["labels"])
    return g, meta


def fixture(name: str) -> Graph:
    """A bundled fixture graph, labels attached."""
    return _fixture_data(name)[0]


def fixture_matching(name: str):
    """The matching drawn with a fixture (as label pairs), or None if none is drawn."""
    pairs = _fixture_data(name)[1].get("matching")
    return None if pairs is None else [tuple(p) for p in pairs]


_GENERATORS = {
    "path": (path, (int,)),
    "cycle": (cycle, (int,)),
    "complete": (complete, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "empty": (empty, (int,)),
    "gnp": (gnp, (int, float)),
    "gnm": (gnm, (int, int)),
    "bipartite_gnp": (bipartite_gnp, (int, int, float)),
}


def generate(kind: str, *params, seed: int = 0) -> Graph:
    """Dispatch by generator name; ``fixture`` takes the fixture name as its parameter."""
    if kind == "fixture":
        _need(len(params) == 1, "fixture takes exactly one name")
        return fixture(str(params[0]))
    try:
        fn, types = _GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown generator {kind!r}") from None
    _need(len(params) == len(types), f"{kind} takes {len(types)} parameter(s)")
    try:
        args = [t(x) for t, x in zip(types, params)]
    except ValueError as exc:
        raise GraphError(f"bad parameter for {kind}: {exc}") from None
    if kind in ("gnp", "gnm", "bipartite_gnp"):
        return fn(*args, seed=seed)
    return fn(*args)
