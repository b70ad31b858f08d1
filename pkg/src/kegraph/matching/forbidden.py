"""Forbidden configurations via the cover-choice implication graph.

Fix a maximum matching ``M``.  The graph is K-E iff some independent set has
``n - |M|`` vertices, and such a set must contain every exposed vertex and
exactly one end of every heavy edge.  Choosing "``x`` in, ``mate(x)`` out"
for a heavy edge is a boolean literal; a light edge ``xw`` between saturated
vertices gives the implication ``x -> mate(w)``, and a light edge from an
exposed vertex to ``w`` forces ``mate(w)``.  The choices are consistent iff
no configuration of the forbidden kinds exists, and an inconsistency is
witnessed by two alternating walks:

* both starting at exposed vertices and forcing the two ends of one heavy
  edge (the drawings with the pendant exposed vertex ``v``), or
* ``x => mate(x)`` and ``mate(x) => x`` (two odd closed walks at the ends of
  a heavy edge: the bridged-triangles drawing when they are disjoint, the
  ladder drawings when they overlap).
"""

from __future__ import annotations

from collections import deque

from ..errors import NotMaximumError
from ..graph import Graph, VertexSet, _edge
from .engine import Matching, _as_matching, certify_maximum
from .structures import StructureWitness, validate_witness

__all__ = [
    "find_forbidden_configuration",
    "cover_choice",
    "CONFIG_LADDER_ODD",
    "CONFIG_LADDER_TWISTED",
    "CONFIG_EXPOSED",
    "CONFIG_BRIDGED",
]

CONFIG_LADDER_ODD = 1
CONFIG_LADDER_TWISTED = 2
CONFIG_EXPOSED = 3
CONFIG_BRIDGED = 4

# how many heavy-edge pivots to try when looking for disjoint closed walks
_BRIDGE_TRIES = 64


def _implications(g, mate):
    """Successor lists over saturated vertices; ``(lit, via)`` means ``x -> lit`` through light edge ``x-via``."""
    succ = [[] for _ in range(g.n)]
    for u, v in g.sorted_edges:
        mu, mv = mate[u], mate[v]
        if mu == v or mu == -1 or mv == -1:
            continue
        succ[u].append((mv, v))
        succ[v].append((mu, u))
    return succ


def _forced(g, mate, succ):
    """BFS closure of literals forced by exposed vertices.

    Returns ``(parent, clash)``; ``parent[lit] = (prev, via)`` with ``prev``
    the exposed vertex for directly forced literals; ``clash`` is a literal
    forced together with its mate, or None.
    """
    parent = {}
    queue = deque()
    for e in g.vertices:
        if mate[e] != -1:
            continue
        for w in g.adj[e]:
            if mate[w] == -1:
                raise NotMaximumError("two adjacent exposed vertices", [e, w])
            lit = mate[w]
            if lit not in parent:
                parent[lit] = (e, w)
                queue.append(lit)
    while queue:
        x = queue.popleft()
        if mate[x] in parent:
            return parent, x
        for lit, via in succ[x]:
            if lit not in parent:
                parent[lit] = (x, via)
                queue.append(lit)
    for x in parent:
        if mate[x] in parent:
            return parent, x
    return parent, None


def _walk_back(parent, lit, stop):
    """Rebuild ``[start, via1, lit1, via2, lit2, ..., lit]`` from BFS parents."""
    out = [lit]
    while True:
        prev, via = parent[lit]
        out.append(via)
        out.append(prev)
        if prev == stop or prev not in parent:
            break
        lit = prev
    out.reverse()
    return out


def _scc(n, succ, active):
    """Iterative Tarjan; component ids come out in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = bytearray(n)
    stack = []
    counter = 0
    ncomp = 0
    for s in range(n):
        if not active[s] or index[s] != -1:
            continue
        work = [(s, 0)]
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = 1
        while work:
            v, i = work[-1]
            nbrs = succ[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i][0]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = 1
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def _bfs_chain(succ, src, dst):
    parent = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for lit, via in succ[x]:
            if lit in parent:
                continue
            parent[lit] = (x, via)
            if lit == dst:
                out = [lit]
                while parent[lit] is not None:
                    prev, v = parent[lit]
                    out.append(v)
                    out.append(prev)
                    lit = prev
                out.reverse()
                return out
            queue.append(lit)
    return None


def _classify(chain_a, chain_b, mate):
    closed_a = set(chain_a[:-1])
    closed_b = set(chain_b[:-1])
    if not closed_a & closed_b:
        return CONFIG_BRIDGED
    heavy = set()
    for chain in (chain_a, chain_b):
        for i in range(1, len(chain), 2):
            heavy.add(_edge(chain[i], chain[i + 1]))
    return CONFIG_LADDER_ODD if len(heavy) % 2 else CONFIG_LADDER_TWISTED


def _analyse(g, m):
    mate = m.mate
    succ = _implications(g, mate)
    parent, clash = _forced(g, mate, succ)
    return mate, succ, parent, clash


def find_forbidden_configuration(g: Graph, m) -> StructureWitness | None:
    """A forbidden configuration relative to the maximum matching ``m``, or None.

    >>> from kegraph.generators import complete
    >>> g = complete(3)
    >>> find_forbidden_configuration(g, Matching(g, [(0, 1)])).config
    3
    """
    m = _as_matching(g, m)
    certify_maximum(g, m)
    mate, succ, parent, clash = _analyse(g, m)
    if clash is not None:
        a = _walk_back(parent, clash, None)
        b = _walk_back(parent, mate[clash], None)
        out = StructureWitness("forbidden", m, config=CONFIG_EXPOSED, chains=(tuple(a), tuple(b)))
    else:
        active = [w != -1 for w in mate]
        comp = _scc(g.n, succ, active)
        bad = [x for x in g.vertices if mate[x] > x and comp[x] == comp[mate[x]]]
        if not bad:
            return None
        best = None
        for x in bad[:_BRIDGE_TRIES]:
            a = _bfs_chain(succ, x, mate[x])
            b = _bfs_chain(succ, mate[x], x)
            config = _classify(a, b, mate)
            if best is None:
                best = (a, b, config)
            if config == CONFIG_BRIDGED:
                best = (a, b, config)
                break
        a, b, config = best
        out = StructureWitness("forbidden", m, config=config, chains=(tuple(a), tuple(b)))
    if not validate_witness(out):
        raise AssertionError(f"internal error: invalid configuration {out}")
    return out


def cover_choice(g: Graph, m) -> VertexSet | None:
    """An independent set of size ``n - |m|`` (exposed vertices plus one end of
    each heavy edge), or None when the choices are inconsistent.

    With ``m`` maximum this exists iff the graph is K-E.
    """
    m = _as_matching(g, m)
    mate, succ, parent, clash = _analyse(g, m)
    if clash is not None:
        return None
    # forced literals become unit implications mate(x) -> x
    succ = [list(s) for s in succ]
    for x in parent:
        succ[mate[x]].append((x, None))
    active = [w != -1 for w in mate]
    comp = _scc(g.n, succ, active)
    chosen = set(v for v in g.vertices if mate[v] == -1)
    for x in g.vertices:
        y = mate[x]
        if y == -1 or y < x:
            continue
        if comp[x] == comp[y]:
            return None
        # Tarjan numbers sinks first: pick the literal that comes later topologically
        chosen.add(x if comp[x] < comp[y] else y)
    return VertexSet(chosen, g)
