"""The alternating-reachability exchange used to enlarge an independent set."""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from ..errors import NotMaximumError, PreconditionError
from ..graph import Graph, VertexSet, as_vertex_set, is_independent
from .engine import _as_matching, certify_maximum

__all__ = ["Augmentation", "augment_via_reachable_set"]


class Augmentation(NamedTuple):
    vertices: VertexSet
    independent: bool
    reachable: VertexSet


def augment_via_reachable_set(g: Graph, m, s, x) -> Augmentation:
    """Exchange along alternating paths that start at ``x``.

    Let ``A`` be the matched vertices of ``s`` and ``B = M(A)`` their mates.
    ``S_x`` collects every ``b`` in ``B`` reachable from ``x`` by a path
    ``x, a1, M(a1), a2, M(a2), ..., b`` that uses light edges into ``A`` and
    heavy edges back to ``B``.  The result is

        ``S1 = {x} | S_x | (s - M(S_x))``

    together with a flag telling whether ``S1`` is independent.  When it is,
    ``|S1| = |s| + 1``.

    Parameters
    ----------
    g : Graph
    m : Matching
        A maximum matching with every edge in the cut ``(s, V - s)``.
    s : vertex collection
        An independent set.
    x : vertex
        A vertex outside ``s`` and outside ``B``.

    Raises
    ------
    PreconditionError
        If any of the conditions above fails.

    Examples
    --------
    >>> from kegraph.generators import path
    >>> g = path(3)                      # 0 - 1 - 2
    >>> r = augment_via_reachable_set(g, [(1, 2)], [1], 0)
    >>> sorted(r.vertices), r.independent
    ([0, 2], True)
    """
    m = _as_matching(g, m)
    s = as_vertex_set(g, s)
    x = g.vertex(x)
    if not is_independent(g, s):
        raise PreconditionError("s is not independent")
    try:
        certify_maximum(g, m)
    except NotMaximumError as exc:
        raise PreconditionError(f"matching is not maximum: {exc}") from None
    mate = m.mate
    for u, v in m:
        if (u in s) == (v in s):
            raise PreconditionError(f"matching edge {g.edge_label((u, v))} is not in the cut of s")
    a_side = {v for v in s if mate[v] != -1}
    b_side = {mate[v] for v in a_side}
    if x in s or x in b_side:
        raise PreconditionError(f"{g.label(x)} must lie outside s and outside M(s)")
    reach = set()
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for a in g.adj[v]:
            if a in a_side and a != mate[v]:
                b = mate[a]
                if b not in reach:
                    reach.add(b)
                    queue.append(b)
    used = {mate[b] for b in reach}
    out = VertexSet({x} | reach | (set(s) - used), g)
    return Augmentation(out, is_independent(g, out), VertexSet(reach, g))
