"""Enumeration of all maximum matchings by edge branching."""

from __future__ import annotations

from collections.abc import Iterator

from ..budget import Budget
from ..graph import Graph
from .engine import Matching, _maximum_mate

__all__ = ["enumerate_maximum_matchings", "maximum_matchings", "maximum_matching_edges"]

# graphs up to this order use the bitmask search
_SMALL = 14


def _mate_of(n, edges):
    mate = [-1] * n
    for u, v in edges:
        mate[u], mate[v] = v, u
    return mate


def maximum_matching_edges(g: Graph, budget: Budget | None = None,
                           mu: int | None = None) -> list[tuple]:
    """Every maximum matching as a sorted tuple of ``(u, v)`` pairs, ascending.

    Lighter than :func:`maximum_matchings` when only the edges are needed;
    ``mu`` skips recomputing the matching number when the caller knows it.
    """
    meter = (budget or Budget()).meter("maximum matchings")
    if g.n <= _SMALL:
        return _enumerate_small(g, meter, mu)
    return sorted(tuple(m.edges) for m in enumerate_maximum_matchings(g, budget))


def _enumerate_small(g, meter, target=None):
    """List every maximum matching as an edge tuple, in ascending order.

    Branch on the lowest remaining vertex: matched to each neighbour in turn,
    then left exposed while fewer than ``n - 2*mu`` vertices are.  Collected
    eagerly (no generator chain) because this is the hot path of the sweeps.
    The deadline is checked at the leaves only; at this order the tree is small.
    """
    masks = g.masks
    if target is None:
        target = sum(1 for v, w in enumerate(_maximum_mate(g.adj)) if w > v)
    room = meter.budget.max_items - meter.count
    edges = []
    out = []

    def rec(r, need, slack):
        if need == 0:
            if len(out) >= room:
                meter.count += len(out)
                meter.charge()  # raises
            out.append(tuple(edges))
            if not len(out) & 63:
                meter.check_deadline()
            return
        low = r & -r
        v = low.bit_length() - 1
        rest = r ^ low
        nb = masks[v] & rest
        while nb:
            w = nb & -nb
            nb ^= w
            edges.append((v, w.bit_length() - 1))
            rec(rest ^ w, need - 1, slack)
            edges.pop()
        if slack:
            rec(rest, need, slack - 1)

    rec((1 << g.n) - 1, target, g.n - 2 * target)
    meter.count += len(out)
    return out


def enumerate_maximum_matchings(g: Graph, budget: Budget | None = None) -> Iterator[Matching]:
    """Yield every maximum matching of ``g`` exactly once.

    Each node of the search holds a maximum matching of the current subgraph
    and branches on its smallest edge ``uv``: either ``uv`` is kept (``u`` and
    ``v`` leave the graph, and the rest of the matching stays maximum there)
    or ``uv`` is deleted (re-augment; prune when the size drops).

    Raises :class:`~kegraph.errors.BudgetExceeded` on the first yield past
    ``budget.max_items`` or once its deadline has passed.
    """
    meter = (budget or Budget()).meter("maximum matchings")
    if g.n <= _SMALL:
        for edges in _enumerate_small(g, meter):
            yield Matching._trusted(g, edges, _mate_of(g.n, edges))
        return
    n = g.n
    mate0 = _maximum_mate(g.adj)
    need0 = sum(1 for v, w in enumerate(mate0) if w > v)
    forced: list[tuple[int, int]] = []

    def adjacency(edges):
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def rec(edges, mate, need):
        meter.check_time()
        if need == 0:
            meter.charge()
            yield Matching(g, forced)
            return
        u = next(v for v in range(n) if mate[v] > v)
        v = mate[u]
        # keep uv
        kept = [e for e in edges if e[0] != u and e[1] != u and e[0] != v and e[1] != v]
        sub = list(mate)
        sub[u] = sub[v] = -1
        forced.append((u, v))
        yield from rec(kept, sub, need - 1)
        forced.pop()
        # drop uv
        rest = [e for e in edges if e != (u, v)]
        sub = _maximum_mate(adjacency(rest), sub)
        if sum(1 for a, b in enumerate(sub) if b > a) == need:
            yield from rec(rest, sub, need)

    yield from rec(list(g.sorted_edges), mate0, need0)


def maximum_matchings(g: Graph, budget: Budget | None = None) -> list[Matching]:
    """All maximum matchings, sorted by their ascending edge lists."""
    return sorted(enumerate_maximum_matchings(g, budget), key=lambda m: tuple(m.edges))
