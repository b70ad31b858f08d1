"""Immutable simple graphs, vertex/edge sets, text formats and subgraph algebra.

Vertices are the integers ``0..n-1``.  Optional string labels are metadata
only: they never take part in equality, but every operation that accepts
vertices also accepts labels, so fixtures can be queried by name.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .errors import GraphError, GraphMismatchError, ParseError

__all__ = [
    "Graph",
    "VertexSet",
    "EdgeSet",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "write_graph",
    "induced_subgraph",
    "delete_vertices",
    "delete_edges",
    "neighborhood",
    "closed_neighborhood",
    "cut_edges",
    "is_independent",
]

FORMATS = ("edge-list", "dimacs")


def _edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite, undirected, loopless graph without multiple edges.

    >>> g = Graph(3, [(0, 1), (2, 1), (1, 0)])
    >>> g.sorted_edges
    ((0, 1), (1, 2))
    >>> g == Graph(3, [(1, 2), (0, 1)])
    True
    """

    __slots__ = ("n", "edges", "labels", "origin", "_adj", "_masks", "_index",
                 "_sorted", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Iterable[str] | None = None,
                 origin: Iterable[int] | None = None):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        canon = set()
        for e in edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphError(f"edge endpoints must be integers: {e!r}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            canon.add(_edge(u, v))
        self.n = n
        self.edges = frozenset(canon)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be distinct")
        self.labels = labels
        self.origin = tuple(origin) if origin is not None else None
        self._adj = None
        self._masks = None
        self._index = None
        self._sorted = None
        self._hash = None

    # -- basic structure ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.edges))
        return self._sorted

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Ascending neighbor tuples, indexed by vertex."""
        if self._adj is None:
            nbrs = [[] for _ in range(self.n)]
            for u, v in self.sorted_edges:
                nbrs[u].append(v)
                nbrs[v].append(u)
            self._adj = tuple(tuple(sorted(x)) for x in nbrs)
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``w`` set iff ``vw`` is an edge)."""
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = tuple(masks)
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[self.vertex(v)]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        u, v = self.vertex(u), self.vertex(v)
        return u != v and _edge(u, v) in self.edges

    # -- labels ------------------------------------------------------------

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, x) -> int:
        """Resolve a vertex id or a label to a vertex id."""
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return x
            raise GraphError(f"vertex {x} out of range 0..{self.n - 1}")
        if isinstance(x, str) and self.labels is not None:
            if self._index is None:
                self._index = {lab: i for i, lab in enumerate(self.labels)}
            try:
                return self._index[x]
            except KeyError:
                pass
        raise GraphError(f"unknown vertex {x!r}")

    def vset(self, items=()) -> VertexSet:
        """Build a :class:`VertexSet` of this graph from ids and/or labels.

        A plain string is read as a sequence of one-character labels, so
        ``g.vset("abc")`` works for single-letter fixtures.
        """
        if isinstance(items, VertexSet):
            return as_vertex_set(self, items)
        return VertexSet((self.vertex(x) for x in items), self)

    def eset(self, pairs=()) -> EdgeSet:
        """Build an :class:`EdgeSet` from vertex pairs (or two-letter label strings)."""
        out = []
        for p in pairs:
            u, v = p
            e = _edge(self.vertex(u), self.vertex(v))
            if e not in self.edges:
                raise GraphError(f"{self.edge_label(e)} is not an edge")
            out.append(e)
        return EdgeSet(out, self)

    def edge_label(self, e) -> str:
        u, v = e
        a, b = self.label(u), self.label(v)
        if len(a) == 1 and len(b) == 1:
            return a + b
        return f"{a}-{b}"

    def names(self, vertices) -> list[str]:
        return [self.label(v) for v in sorted(vertices)]

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def relabeled(self, labels) -> Graph:
        return Graph(self.n, self.edges, labels, self.origin)


class VertexSet(frozenset):
    """A frozen set of vertex ids tied to the graph it was built for.

    Iteration is in ascending id order.  Set algebra with plain sets works and
    returns plain ``frozenset`` objects.
    """

    __slots__ = ("graph",)

    def __new__(cls, members=(), graph: Graph | None = None):
        obj = super().__new__(cls, members)
        obj.graph = graph
        return obj

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self):
        if self.graph is not None and self.graph.labels is not None:
            return "VertexSet({" + ", ".join(self.graph.names(self)) + "})"
        return f"VertexSet({sorted(frozenset.__iter__(self))})"

    def __reduce__(self):
        return (VertexSet, (list(self), self.graph))

    def names(self) -> list[str]:
        if self.graph is None:
            return [str(v) for v in self]
        return self.graph.names(self)

    @property
    def mask(self) -> int:
        out = 0
        for v in frozenset.__iter__(self):
            out |= 1 << v
        return out


class EdgeSet(frozenset):
    """A frozen set of canonical ``(u, v)`` pairs, ``u < v``, tied to a graph."""

    __slots__ = ("graph",)

    def __new__(cls, members=(), graph: Graph | None = None):
        obj = super().__new__(cls, (_edge(*e) for e in members))
        obj.graph = graph
        return obj

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self):
        if self.graph is not None:
            return "EdgeSet({" + ", ".join(self.graph.edge_label(e) for e in self) + "})"
        return f"EdgeSet({sorted(frozenset.__iter__(self))})"

    def __reduce__(self):
        return (EdgeSet, (list(self), self.graph))

    def names(self) -> list[str]:
        if self.graph is None:
            return [f"{u}-{v}" for u, v in self]
        return [self.graph.edge_label(e) for e in self]


def _check_owner(g: Graph, obj):
    owner = getattr(obj, "graph", None)
    if owner is not None and owner is not g and owner != g:
        raise GraphMismatchError(f"{type(obj).__name__} belongs to a different graph")


def as_vertex_set(g: Graph, a) -> VertexSet:
    """Validate ``a`` against ``g`` and return it as a VertexSet of ``g``."""
    _check_owner(g, a)
    if isinstance(a, VertexSet):
        for v in frozenset.__iter__(a):
            if not (isinstance(v, int) and 0 <= v < g.n):
                raise GraphError(f"vertex {v!r} out of range for {g!r}")
        return a if a.graph is g else VertexSet(a, g)
    if isinstance(a, str):
        a = list(a)
    return VertexSet((g.vertex(x) for x in a), g)


def as_edge_set(g: Graph, f) -> EdgeSet:
    _check_owner(g, f)
    out = []
    for e in f:
        u, v = e
        e = _edge(g.vertex(u), g.vertex(v))
        if e not in g.edges:
            raise GraphError(f"{g.edge_label(e)} is not an edge of {g!r}")
        out.append(e)
    return EdgeSet(out, g)


def is_independent(g: Graph, s) -> bool:
    s = as_vertex_set(g, s)
    masks = g.masks
    sm = s.mask
    return all(not (masks[v] & sm) for v in s)


# -- text formats --------------------------------------------------------------


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _parse_edge_list(text):
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno)
        a, b = _ints(tokens, lineno)
        if n is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be non-negative", lineno)
            n, m = a, b
            continue
        if len(edges) == m:
            raise ParseError(f"more than the {m} edges announced in the header", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}: {a} {b}", lineno)
        edges.append((a, b))
    if n is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def _parse_dimacs(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge n m', got {line!r}", lineno)
            n, _ = _ints(tokens[2:], lineno)
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before the problem line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", lineno)
            a, b = _ints(tokens[1:], lineno)
            if a == b:
                raise ParseError(f"self-loop at vertex {a}", lineno)
            if not (1 <= a <= n and 1 <= b <= n):
                raise ParseError(f"vertex index out of range 1..{n}: {a} {b}", lineno)
            edges.append((a - 1, b - 1))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return Graph(n, edges)


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    """Parse edge-list (0-based, ``n m`` header) or DIMACS (1-based) text.

    Duplicate edges collapse to one; self-loops and out-of-range indices are
    rejected with the offending line number.

    >>> parse_graph("3 3\\n0 1\\n1 2\\n0 2").sorted_edges
    ((0, 1), (0, 2), (1, 2))
    """
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        lines = [f"{g.n} {g.m}"]
        lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    elif format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges)
    else:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def sidecar_path(path) -> Path:
    """``fig1.txt`` -> ``fig1.labels.json``."""
    path = Path(path)
    return path.with_name(path.stem + ".labels.json")


def sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("#", "c ")) or line == "c":
            continue
        return "dimacs" if line.startswith("p ") else "edge-list"
    return "edge-list"


def read_graph(path, format: str | None = None) -> Graph:
    """Read a graph file, picking up the ``.labels.json`` sidecar when present."""
    path = Path(path)
    text = path.read_text()
    g = parse_graph(text, format or sniff_format(text))
    side = sidecar_path(path)
    if side.exists():
        meta = json.loads(side.read_text())
        if meta.get("labels") is not None:
            g = g.relabeled(meta["labels"])
    return g


def write_graph(g: Graph, path, format: str = "edge-list", extra: dict | None = None):
    path = Path(path)
    path.write_text(serialize_graph(g, format))
    if g.labels is not None or extra:
        meta = {"labels": list(g.labels) if g.labels is not None else None}
        meta.update(extra or {})
        sidecar_path(path).write_text(json.dumps(meta, indent=1) + "\n")


# -- subgraphs and neighborhoods ---------------------------------------------


def induced_subgraph(g: Graph, x) -> Graph:
    """``G[X]``, re-indexed in ascending order of the kept vertices.

    ``h.origin[i]`` is the vertex of ``g`` that became vertex ``i`` of ``h``.
    """
    x = as_vertex_set(g, x)
    keep = list(x)
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels, origin=keep)


def delete_vertices(g: Graph, w) -> Graph:
    """``G - W``."""
    w = as_vertex_set(g, w)
    return induced_subgraph(g, VertexSet((v for v in g.vertices if v not in w), g))


def delete_edges(g: Graph, f) -> Graph:
    """``G - F``: same vertices (and labels), edges of ``F`` removed."""
    f = as_edge_set(g, f)
    return Graph(g.n, g.edges - f, g.labels)


def neighborhood(g: Graph, a) -> VertexSet:
    """``N(A)``, the union of the neighborhoods; it may intersect ``A``."""
    a = as_vertex_set(g, a)
    out = set()
    for v in frozenset.__iter__(a):
        out.update(g.adj[v])
    return VertexSet(out, g)


def closed_neighborhood(g: Graph, a) -> VertexSet:
    """``N[A] = A | N(A)``."""
    a = as_vertex_set(g, a)
    return VertexSet(neighborhood(g, a) | a, g)


def cut_edges(g: Graph, a, b) -> EdgeSet:
    """``(A, B)``: the edges with one endpoint in ``A`` and the other in ``B``."""
    a = as_vertex_set(g, a)
    b = as_vertex_set(g, b)
    if a & b:
        raise GraphError(f"cut sides overlap on {sorted(a & b)}")
    small, other = (a, b) if len(a) <= len(b) else (b, a)
    out = []
    for v in frozenset.__iter__(small):
        for w in g.adj[v]:
            if w in other:
                out.append(_edge(v, w))
    return EdgeSet(out, g)
