"""Brute-force reference implementations used as test oracles.

Everything here works straight from the definitions on edge lists and
subset bitmasks, and shares no code with the package beyond reading
``g.n`` and ``g.sorted_edges``.
"""

from __future__ import annotations

import itertools


def _adj_masks(g):
    masks = [0] * g.n
    for u, v in g.sorted_edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def independent_masks(g):
    """Every independent set (the empty set included) as a bitmask."""
    masks = _adj_masks(g)
    out = []
    for s in range(1 << g.n):
        if all(not (masks[v] & s) for v in range(g.n) if s >> v & 1):
            out.append(s)
    return out


def members(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def alpha(g):
    return max(bin(s).count("1") for s in independent_masks(g))


def omega(g):
    """Maximum independent sets as sorted vertex lists, lexicographic order."""
    ind = independent_masks(g)
    a = max(bin(s).count("1") for s in ind)
    return sorted(members(s) for s in ind if bin(s).count("1") == a)


def core(g):
    sets = omega(g)
    out = set(range(g.n))
    for s in sets:
        out &= set(s)
    return sorted(out)


def all_matchings(g):
    """Every matching (empty included) as a sorted tuple of edges."""
    edges = list(g.sorted_edges)
    out = []

    def rec(i, used, chosen):
        if i == len(edges):
            out.append(tuple(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append((u, v))
            rec(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    rec(0, 0, [])
    return out


def maximum_matchings(g):
    ms = all_matchings(g)
    k = max(len(m) for m in ms)
    return sorted(m for m in ms if len(m) == k)


def mu(g):
    return max(len(m) for m in all_matchings(g))


def induced(g, keep):
    """(n', edges') of G[keep] re-indexed in ascending order."""
    keep = sorted(keep)
    idx = {v: i for i, v in enumerate(keep)}
    return _Tiny(len(keep), [(idx[u], idx[v]) for u, v in g.sorted_edges if u in idx and v in idx])


class _Tiny:
    def __init__(self, n, edges):
        self.n = n
        self.sorted_edges = tuple(sorted((min(e), max(e)) for e in edges))


def mu_critical(g):
    m = mu(g)
    return sorted(v for v in range(g.n)
                  if mu(induced(g, [w for w in range(g.n) if w != v])) < m)


def _nbr(g, mask):
    masks = _adj_masks(g)
    out = 0
    for v in members(mask):
        out |= masks[v]
    return out


def critical_difference(g):
    return max(bin(s).count("1") - bin(_nbr(g, s)).count("1") for s in independent_masks(g))


def alpha_c(g):
    d = critical_difference(g)
    return max(bin(s).count("1") for s in independent_masks(g)
               if bin(s).count("1") - bin(_nbr(g, s)).count("1") == d)


def is_ke(g):
    return alpha(g) + mu(g) == g.n


def is_bipartite(g):
    color = [-1] * g.n
    masks = _adj_masks(g)
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in members(masks[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def has_augmenting_path(g, matching):
    """Exhaustive search over simple paths between exposed vertices."""
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    masks = _adj_masks(g)
    exposed = [v for v in range(g.n) if v not in mate]

    def walk(v, visited, want_light):
        for w in members(masks[v]):
            if visited >> w & 1:
                continue
            light = mate.get(v) != w
            if light != want_light:
                continue
            if want_light and w not in mate:
                return True
            if walk(w, visited | 1 << w, not want_light):
                return True
        return False

    return any(walk(x, 1 << x, True) for x in exposed)


def labeled_graphs(n):
    """Edge lists of all labeled graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield [pairs[k] for k in range(len(pairs)) if code >> k & 1]
