"""Maximum matching in general graphs (Edmonds' blossom shrinking).

The search is the classic single-root BFS with base relabelling.  Two
standard accelerations keep it usable at ~10^4 vertices: a min-degree greedy
start, and permanent removal of Hungarian trees (once the search from a
root fails, no later augmenting path can touch that tree's vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GraphError, NotMaximumError
from ..graph import EdgeSet, Graph, VertexSet, _check_owner, _edge

__all__ = [
    "Matching",
    "MuReport",
    "maximum_matching",
    "matching_number",
    "exposed_vertices",
    "deficiency",
    "gallai_edmonds",
    "mu_critical_vertices",
    "mu_report",
    "tutte_berge_bound",
    "certify_maximum",
]


class Matching:
    """A set of pairwise non-incident edges of one graph."""

    __slots__ = ("graph", "edges", "_mate")

    def __init__(self, graph: Graph, edges=()):
        _check_owner(graph, edges)
        mate = [-1] * graph.n
        canon = []
        for e in edges:
            u, v = e
            u, v = graph.vertex(u), graph.vertex(v)
            e = _edge(u, v)
            if e not in graph.edges:
                raise GraphError(f"{graph.edge_label(e)} is not an edge")
            if mate[u] != -1 or mate[v] != -1:
                raise GraphError(f"{graph.edge_label(e)} shares a vertex with another matching edge")
            mate[u], mate[v] = v, u
            canon.append(e)
        self.graph = graph
        self.edges = EdgeSet(canon, graph)
        self._mate = tuple(mate)

    @classmethod
    def _trusted(cls, graph: Graph, edges, mate) -> Matching:
        # internal: edges and mate already consistent and canonical
        obj = cls.__new__(cls)
        obj.graph = graph
        obj.edges = EdgeSet(edges, graph)
        obj._mate = tuple(mate)
        return obj

    @classmethod
    def from_mate(cls, graph: Graph, mate) -> Matching:
        return cls(graph, [(v, w) for v, w in enumerate(mate) if w > v])

    @classmethod
    def _from_search(cls, graph: Graph, mate) -> Matching:
        # internal: mate produced by the search on graph.adj
        return cls._trusted(graph, [(v, w) for v, w in enumerate(mate) if w > v], mate)

    @property
    def mate(self) -> tuple[int, ...]:
        """``mate[v]`` is v's partner, or -1 when v is exposed."""
        return self._mate

    def partner(self, v) -> int | None:
        w = self._mate[self.graph.vertex(v)]
        return None if w == -1 else w

    def saturates(self, v) -> bool:
        return self._mate[self.graph.vertex(v)] != -1

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e):
        u, v = e
        return _edge(self.graph.vertex(u), self.graph.vertex(v)) in self.edges

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.graph == other.graph and self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"Matching({{{', '.join(self.names())}}})"

    def names(self) -> list[str]:
        return self.edges.names()


class _Search:
    """Reusable arrays for single-root blossom searches on one graph."""

    def __init__(self, adj, mate):
        n = len(adj)
        self.adj = adj
        self.mate = mate
        self.parent = [-1] * n
        self.base = list(range(n))
        self.even = bytearray(n)
        self.dead = bytearray(n)
        self.lca_mark = [0] * n
        self.bloss_mark = [0] * n
        self.stamp = 0
        self.touched = []

    def _lca(self, a, b):
        base, mate, parent, mark = self.base, self.mate, self.parent, self.lca_mark
        self.stamp += 1
        s = self.stamp
        while True:
            a = base[a]
            mark[a] = s
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if mark[b] == s:
                return b
            b = parent[mate[b]]

    def _mark_path(self, v, b, child, s):
        base, mate, parent, bm = self.base, self.mate, self.parent, self.bloss_mark
        while base[v] != b:
            bm[base[v]] = s
            bm[base[mate[v]]] = s
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def run(self, root):
        """BFS from exposed ``root``; return the far end of an augmenting path or -1.

        Afterwards ``self.touched`` lists every vertex the tree reached.
        """
        adj, mate, parent, base, even, dead = (
            self.adj, self.mate, self.parent, self.base, self.even, self.dead)
        touched = self.touched = [root]
        even[root] = 1
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in adj[v]:
                if dead[to] or base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = self._lca(v, to)
                    self.stamp += 1
                    s = self.stamp
                    self._mark_path(v, cur, to, s)
                    self._mark_path(to, cur, v, s)
                    bm = self.bloss_mark
                    for i in touched:
                        if bm[base[i]] == s:
                            base[i] = cur
                            if not even[i]:
                                even[i] = 1
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    touched.append(to)
                    if mate[to] == -1:
                        return to
                    w = mate[to]
                    even[w] = 1
                    touched.append(w)
                    queue.append(w)
        return -1

    def augment(self, end):
        mate, parent = self.mate, self.parent
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt

    def path_to(self, end):
        """Augmenting path (root first) ending at ``end``, before augmenting."""
        mate, parent = self.mate, self.parent
        out = [end]
        v = end
        while True:
            pv = parent[v]
            out.append(pv)
            nxt = mate[pv]
            if nxt == -1:
                break
            out.append(nxt)
            v = nxt
        out.reverse()
        return out

    def reset(self):
        parent, base, even = self.parent, self.base, self.even
        for i in self.touched:
            parent[i] = -1
            base[i] = i
            even[i] = 0


def _greedy(adj):
    """Greedy matching: low-degree vertices first, each to its lowest-degree free neighbour."""
    n = len(adj)
    mate = [-1] * n
    deg = [len(a) for a in adj]
    for v in sorted(range(n), key=deg.__getitem__):
        if mate[v] != -1 or not deg[v]:
            continue
        best, bd = -1, n
        for w in adj[v]:
            if mate[w] == -1 and deg[w] < bd:
                best, bd = w, deg[w]
        if best != -1:
            mate[v], mate[best] = best, v
    return mate


def _maximum_mate(adj, mate=None):
    if mate is None:
        mate = _greedy(adj)
    else:
        mate = list(mate)
    # an augmenting path needs two exposed non-isolated vertices
    if sum(1 for v, w in enumerate(mate) if w == -1 and adj[v]) < 2:
        return mate
    search = _Search(adj, mate)
    for root in range(len(adj)):
        if mate[root] != -1 or search.dead[root] or not adj[root]:
            continue
        end = search.run(root)
        if end != -1:
            search.augment(end)
        else:
            for i in search.touched:
                search.dead[i] = 1
        search.reset()
    return mate


def maximum_matching(g: Graph, start: Matching | None = None) -> Matching:
    """A maximum matching of ``g``; ``start`` seeds the search when given.

    >>> from kegraph.generators import cycle
    >>> len(maximum_matching(cycle(5)))
    2
    """
    if start is not None:
        _check_owner(g, start)
        mate = _maximum_mate(g.adj, start.mate)
    else:
        mate = _maximum_mate(g.adj)
    return Matching._from_search(g, mate)


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_maximum_mate(g.adj)) if w > v)


def _as_matching(g, m):
    if isinstance(m, Matching):
        _check_owner(g, m)
        return m
    return Matching(g, m)


def exposed_vertices(g: Graph, m) -> VertexSet:
    """Vertices not saturated by ``m``."""
    m = _as_matching(g, m)
    return VertexSet((v for v, w in enumerate(m.mate) if w == -1), g)


def deficiency(g: Graph) -> int:
    """``n - 2*mu``: the number of vertices any maximum matching leaves exposed."""
    return g.n - 2 * matching_number(g)


@dataclass(frozen=True)
class GallaiEdmonds:
    """Vertex partition from the alternating forest of a maximum matching.

    ``even``: vertices missed by some maximum matching; ``odd``: their
    neighbours outside ``even`` (the Tutte-Berge barrier); ``rest``: the others.
    """

    even: VertexSet
    odd: VertexSet
    rest: VertexSet


def gallai_edmonds(g: Graph, m: Matching | None = None) -> GallaiEdmonds:
    """Grow a Hungarian tree from every exposed vertex of a maximum matching.

    Raises :class:`NotMaximumError` (carrying the path) if ``m`` admits an
    augmenting path.
    """
    if m is None:
        m = maximum_matching(g)
    else:
        m = _as_matching(g, m)
    mate = list(m.mate)
    search = _Search(g.adj, mate)
    even, odd = set(), set()
    for root in range(g.n):
        if mate[root] != -1 or search.dead[root]:
            continue
        end = search.run(root)
        if end != -1:
            raise NotMaximumError("matching admits an augmenting path", search.path_to(end))
        for i in search.touched:
            (even if search.even[i] else odd).add(i)
            search.dead[i] = 1
        search.reset()
    rest = set(g.vertices) - even - odd
    return GallaiEdmonds(VertexSet(even, g), VertexSet(odd, g), VertexSet(rest, g))


def _odd_components(g: Graph, removed) -> int:
    seen = bytearray(g.n)
    for v in removed:
        seen[v] = 1
    odd = 0
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
        odd += size & 1
    return odd


def tutte_berge_bound(g: Graph, barrier) -> int:
    """Upper bound ``(n + |U| - odd(G - U)) / 2`` on the matching number, for any ``U``."""
    barrier = set(barrier)
    return (g.n + len(barrier) - _odd_components(g, barrier)) // 2


def certify_maximum(g: Graph, m: Matching) -> VertexSet:
    """Return a barrier ``U`` whose Tutte-Berge bound equals ``|m|``.

    The check needs only component counting, so it is independent of the
    search that produced ``m``.  Raises :class:`NotMaximumError` otherwise.
    """
    m = _as_matching(g, m)
    ge = gallai_edmonds(g, m)
    bound = tutte_berge_bound(g, ge.odd)
    if bound != len(m):
        raise NotMaximumError(f"barrier bound {bound} differs from matching size {len(m)}")
    return ge.odd


def mu_critical_vertices(g: Graph, method: str = "gallai-edmonds") -> VertexSet:
    """Vertices ``v`` with ``mu(G - v) < mu(G)``.

    ``gallai-edmonds`` uses one forest (v is critical iff every maximum matching
    covers it); ``deletion`` re-solves the matching problem once per vertex.
    """
    if method == "gallai-edmonds":
        ge = gallai_edmonds(g)
        return VertexSet((v for v in g.vertices if v not in ge.even), g)
    if method == "deletion":
        from ..graph import delete_vertices

        mu = matching_number(g)
        return VertexSet(
            (v for v in g.vertices if matching_number(delete_vertices(g, [v])) < mu), g)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class MuReport:
    mu: int
    exposed: VertexSet
    deficiency: int
    mu_critical: VertexSet
    matching: Matching

    def to_json(self) -> dict:
        g = self.matching.graph
        return {
            "mu": self.mu,
            "deficiency": self.deficiency,
            "exposed": g.names(self.exposed),
            "muCritical": g.names(self.mu_critical),
            "matching": [[g.label(u), g.label(v)] for u, v in self.matching],
        }


def mu_report(g: Graph, m: Matching | None = None) -> MuReport:
    if m is None:
        m = maximum_matching(g)
    ge = gallai_edmonds(g, m)
    crit = VertexSet((v for v in g.vertices if v not in ge.even), g)
    exposed = exposed_vertices(g, m)
    return MuReport(len(m), exposed, g.n - 2 * len(m), crit, m)
