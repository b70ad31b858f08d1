"""Blossoms, flowers and posies relative to a maximum matching.

A flower is found by growing a plain alternating forest (no shrinking) from
the exposed vertices: with a maximum matching, two outer vertices of one
tree being adjacent is exactly the sign of a flower, and the tree paths give
it explicitly.  A posy is found around a heavy edge ``bm``: ``b`` must be
the start of a stem-plus-blossom in ``G - m`` and ``m`` likewise in
``G - b``; the two stems are then spliced into one join path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NotMaximumError
from ..graph import Graph, _edge
from .engine import Matching, _as_matching

__all__ = [
    "AlternatingPath",
    "StructureWitness",
    "is_blossom",
    "is_alternating_path",
    "is_flower",
    "is_posy",
    "validate_witness",
    "find_flower",
    "find_posy",
    "find_flower_or_posy",
]

OUTER, INNER = 1, 2


@dataclass(frozen=True)
class AlternatingPath:
    """Vertex sequence whose edges alternate light/heavy.

    ``first_heavy`` tells the membership of the first edge; it is None for a
    single-vertex path.
    """

    vertices: tuple[int, ...]
    first_heavy: bool | None

    @classmethod
    def of(cls, m: Matching, vertices) -> AlternatingPath:
        vertices = tuple(vertices)
        first = None
        if len(vertices) > 1:
            first = _edge(vertices[0], vertices[1]) in m.edges
        return cls(vertices, first)

    def __len__(self):
        """Number of edges."""
        return max(len(self.vertices) - 1, 0)


@dataclass(frozen=True)
class StructureWitness:
    """A flower, posy, blossom or forbidden configuration, spelled out.

    ``cycles`` hold blossoms with the base first.  ``path`` is the stem of a
    flower (base first, exposed vertex last) or the join path of a posy
    (from the first base to the second).  For forbidden configurations
    ``chains`` holds the two alternating walks that force contradictory
    choices, and ``config`` the drawing class (1..4).
    """

    kind: str
    matching: Matching
    cycles: tuple[tuple[int, ...], ...] = ()
    path: AlternatingPath | None = None
    bases: tuple[int, ...] = ()
    config: int | None = None
    chains: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def graph(self) -> Graph:
        return self.matching.graph

    def is_valid(self) -> bool:
        return validate_witness(self)

    def to_json(self) -> dict:
        g = self.graph
        lab = g.label
        out = {
            "kind": self.kind,
            "cycles": [[lab(v) for v in c] for c in self.cycles],
            "stem": [lab(v) for v in self.path.vertices] if self.path else [],
            "bases": [lab(v) for v in self.bases],
            "matching": [[lab(u), lab(v)] for u, v in self.matching],
        }
        if self.kind == "posy":
            out["join"] = out.pop("stem")
        if self.kind == "forbidden":
            out["config"] = self.config
            out["chains"] = [[lab(v) for v in c] for c in self.chains]
        return out


# -- definitional checkers ------------------------------------------------------


def _adjacent(g, u, v):
    return u != v and _edge(u, v) in g.edges


def is_blossom(g: Graph, m: Matching, cycle) -> bool:
    """Odd cycle ``x0..x2k`` (k >= 1) with ``x1x2, x3x4, .., x(2k-1)x(2k)`` heavy."""
    c = tuple(cycle)
    if len(c) < 3 or len(c) % 2 == 0 or len(set(c)) != len(c):
        return False
    if not all(0 <= v < g.n for v in c):
        return False
    if not all(_adjacent(g, c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
        return False
    return all(_edge(c[i], c[i + 1]) in m.edges for i in range(1, len(c), 2))


def is_alternating_path(g: Graph, m: Matching, vertices) -> bool:
    p = tuple(vertices)
    if not p or len(set(p)) != len(p) or not all(0 <= v < g.n for v in p):
        return False
    heavy = [(_edge(p[i], p[i + 1]) in m.edges) for i in range(len(p) - 1)]
    if not all(_adjacent(g, p[i], p[i + 1]) for i in range(len(p) - 1)):
        return False
    return all(heavy[i] != heavy[i + 1] for i in range(len(heavy) - 1))


def is_flower(g: Graph, m: Matching, cycle, stem) -> bool:
    """Blossom plus an even alternating stem from its base to an exposed vertex,
    meeting the blossom only at the base."""
    c, s = tuple(cycle), tuple(stem)
    if not is_blossom(g, m, c) or not s or s[0] != c[0]:
        return False
    if (len(s) - 1) % 2 or m.mate[s[-1]] != -1:
        return False
    if set(s) & set(c) != {c[0]}:
        return False
    return is_alternating_path(g, m, s)


def is_posy(g: Graph, m: Matching, cycle1, cycle2, join) -> bool:
    """Two blossoms whose bases are the ends of an odd alternating path with
    heavy first and last edges."""
    c1, c2, p = tuple(cycle1), tuple(cycle2), tuple(join)
    if not (is_blossom(g, m, c1) and is_blossom(g, m, c2)):
        return False
    if len(p) < 2 or len(p) % 2 or p[0] != c1[0] or p[-1] != c2[0]:
        return False
    if not is_alternating_path(g, m, p):
        return False
    return _edge(p[0], p[1]) in m.edges and _edge(p[-2], p[-1]) in m.edges


def _valid_chain(g, m, chain, from_exposed):
    # chain = [start, w1, l1, w2, l2, ...]: start-w1 light, w1-l1 heavy, l1-w2 light, ...
    if len(chain) < 3 or len(chain) % 2 == 0:
        return False
    start = chain[0]
    if from_exposed != (m.mate[start] == -1):
        return False
    for i in range(1, len(chain), 2):
        prev, w, lit = chain[i - 1], chain[i], chain[i + 1]
        if not _adjacent(g, prev, w) or _edge(prev, w) in m.edges:
            return False
        if m.mate[w] != lit:
            return False
    return True


def is_forbidden_configuration(g: Graph, m: Matching, chains) -> bool:
    """Two alternating walks forcing both ends of one heavy edge into (or out
    of) every independent set that takes one end of each heavy edge and all
    exposed vertices.

    Either both walks start at exposed vertices and end at the two ends of a
    heavy edge, or one walk runs from ``x`` to ``mate(x)`` and the other back.
    """
    if len(chains) != 2:
        return False
    a, b = (tuple(c) for c in chains)
    if not a or not b:
        return False
    if m.mate[a[0]] == -1:
        return (_valid_chain(g, m, a, True) and _valid_chain(g, m, b, True)
                and m.mate[a[-1]] == b[-1])
    x = a[0]
    return (_valid_chain(g, m, a, False) and _valid_chain(g, m, b, False)
            and a[-1] == m.mate[x] and b[0] == m.mate[x] and b[-1] == x)


def validate_witness(w: StructureWitness) -> bool:
    g, m = w.graph, w.matching
    if w.kind == "blossom":
        return len(w.cycles) == 1 and is_blossom(g, m, w.cycles[0])
    if w.kind == "flower":
        return (len(w.cycles) == 1 and w.path is not None
                and is_flower(g, m, w.cycles[0], w.path.vertices)
                and w.bases == (w.cycles[0][0],))
    if w.kind == "posy":
        return (len(w.cycles) == 2 and w.path is not None
                and is_posy(g, m, w.cycles[0], w.cycles[1], w.path.vertices)
                and w.bases == (w.cycles[0][0], w.cycles[1][0]))
    if w.kind == "forbidden":
        return w.config in (1, 2, 3, 4) and is_forbidden_configuration(g, m, w.chains)
    return False


# -- searches ---------------------------------------------------------------------


def _grow(g, mate, roots, banned=-1, skip_exposed=False):
    """Plain alternating BFS (no shrinking) from ``roots``.

    Returns ``(u, w, parent, root_of)`` for the first outer-outer edge met,
    or None when the forest completes without one.  ``parent`` maps inner
    vertices to their outer discoverer (-1 elsewhere).
    """
    n = g.n
    adj = g.adj
    label = bytearray(n)
    parent = [-1] * n
    root_of = [-1] * n
    queue = []
    for r in roots:
        label[r] = OUTER
        root_of[r] = r
        queue.append(r)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        mv = mate[v]
        for w in adj[v]:
            if w == mv or w == banned:
                continue
            lw = label[w]
            if lw == OUTER:
                return v, w, parent, root_of
            if lw == INNER:
                continue
            x = mate[w]
            if x == -1:
                if skip_exposed:
                    continue
                raise NotMaximumError("unlabelled exposed vertex reached")
            label[w] = INNER
            parent[w] = v
            root_of[w] = root_of[v]
            label[x] = OUTER
            root_of[x] = root_of[v]
            queue.append(x)
    return None


def _tree_up(v, mate, parent, root):
    out = [v]
    while v != root:
        i = mate[v]
        v = parent[i]
        out.append(i)
        out.append(v)
    return out


def _blossom_from(u, w, mate, parent, root):
    """Blossom (base first) and the tree path base->root for conflict edge uw."""
    up_u = _tree_up(u, mate, parent, root)
    up_w = _tree_up(w, mate, parent, root)
    on_w = {v: i for i, v in enumerate(up_w)}
    i = next(k for k, v in enumerate(up_u) if v in on_w)
    lca = up_u[i]
    j = on_w[lca]
    cycle = [lca] + up_u[:i][::-1] + up_w[:j]
    stem = up_u[i:]  # lca ... root
    return tuple(cycle), stem


def _exposed_forest(g, m):
    mate = m.mate
    roots = [v for v in g.vertices if mate[v] == -1]
    hit = _grow(g, mate, roots)
    if hit is None:
        return None
    u, w, parent, root_of = hit
    if root_of[u] != root_of[w]:
        a = _tree_up(u, mate, parent, root_of[u])
        b = _tree_up(w, mate, parent, root_of[w])
        raise NotMaximumError("matching admits an augmenting path", a[::-1] + b)
    return u, w, parent, root_of[u]


def find_flower(g: Graph, m) -> StructureWitness | None:
    """A flower relative to the maximum matching ``m``, or None.

    >>> from kegraph.generators import complete
    >>> g = complete(3)
    >>> w = find_flower(g, Matching(g, [(0, 1)]))
    >>> w.cycles, w.path.vertices
    (((2, 1, 0),), (2,))
    """
    m = _as_matching(g, m)
    hit = _exposed_forest(g, m)
    if hit is None:
        return None
    u, w, parent, root = hit
    cycle, stem = _blossom_from(u, w, m.mate, parent, root)
    out = StructureWitness("flower", m, (cycle,), AlternatingPath.of(m, stem), (cycle[0],))
    if not validate_witness(out):
        raise AssertionError(f"internal error: invalid flower {out}")
    return out


def _stem_and_blossom(g, mate, root, banned):
    """Stem (root first) and blossom found from ``root`` in ``G - banned``."""
    hit = _grow(g, mate, [root], banned=banned, skip_exposed=True)
    if hit is None:
        return None
    u, w, parent, _ = hit
    cycle, stem = _blossom_from(u, w, mate, parent, root)
    return stem[::-1], cycle


def _splice(s1, c1, s2, c2):
    """Join two stems hanging off the ends of a heavy edge into a posy.

    ``s1`` runs from ``b`` to the base of ``c1`` (avoiding ``mate(b)``),
    ``s2`` from ``mate(b)`` to the base of ``c2`` (avoiding ``b``).  Where the
    stems cross, either a new blossom closes at the crossing or the pivot
    moves down both stems; each round strictly shortens them.
    """
    while True:
        pos1 = {v: i for i, v in enumerate(s1)}
        j = next((k for k, v in enumerate(s2) if v in pos1), None)
        if j is None:
            return c1, c2, s1[::-1] + s2
        i = pos1[s2[j]]
        if i % 2:
            # same orientation: s2[j] = s1[i] is the base of a new blossom
            cycle = (s1[i],) + tuple(s1[:i][::-1]) + tuple(s2[:j])
            return cycle, c1, list(s1[i:])
        s1 = s1[i:]
        s2 = s2[j + 1:]


def find_posy(g: Graph, m) -> StructureWitness | None:
    """A posy relative to the maximum matching ``m``, or None.

    Tries the heavy edges in ascending order as the pivot of the join path.
    """
    m = _as_matching(g, m)
    _exposed_forest(g, m)  # raises on an augmenting path
    return _posy_search(g, m)


def _posy_search(g, m):
    mate = m.mate
    for b, c in m.edges:
        one = _stem_and_blossom(g, mate, b, c)
        if one is None:
            continue
        two = _stem_and_blossom(g, mate, c, b)
        if two is None:
            continue
        c1, c2, join = _splice(one[0], one[1], two[0], two[1])
        out = StructureWitness("posy", m, (c1, c2), AlternatingPath.of(m, join), (c1[0], c2[0]))
        if not validate_witness(out):
            raise AssertionError(f"internal error: invalid posy {out}")
        return out
    return None


def find_flower_or_posy(g: Graph, m) -> StructureWitness | None:
    """A flower if there is one, else a posy, else None; ``m`` must be maximum."""
    m = _as_matching(g, m)
    # find_flower grows the exposed forest, which also rules out augmenting paths
    return find_flower(g, m) or _posy_search(g, m)
