"""Exact independence computations on bitmask adjacency.

Everything here is exponential in the worst case and meant for desk-scale
graphs: alpha, the family Omega of maximum independent sets, core, the
critical difference ``d`` and the critical independence number ``alpha_c``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .budget import Budget
from .errors import BudgetExceeded, GraphError
from .graph import Graph, VertexSet, as_vertex_set, is_independent

__all__ = [
    "maximum_independent_set",
    "independence_number",
    "enumerate_maximum_independent_sets",
    "maximum_independent_sets",
    "core",
    "critical_difference",
    "is_critical",
    "max_critical_set",
    "critical_independence_number",
    "IndependenceReport",
    "independence_report",
]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover(masks, cand):
    """Greedy partition of ``cand`` into cliques; its size bounds alpha from above."""
    count = 0
    while cand:
        low = cand & -cand
        cand ^= low
        rest = masks[low.bit_length() - 1] & cand
        while rest:
            w = rest & -rest
            cand ^= w
            rest &= masks[w.bit_length() - 1]
            rest &= ~w
        count += 1
    return count


def _alpha_mask(g):
    masks = g.masks
    best = [0, 0]  # size, mask

    def rec(cand, cur, size):
        # vertices with no neighbour left in cand belong to some optimum
        free = 0
        c = cand
        while c:
            low = c & -c
            c ^= low
            if not masks[low.bit_length() - 1] & cand:
                free |= low
        if free:
            cand &= ~free
            cur |= free
            size += free.bit_count()
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, cur
            return
        if size + _clique_cover(masks, cand) <= best[0]:
            return
        # branch on a vertex of largest degree inside cand
        v, deg = -1, -1
        c = cand
        while c:
            low = c & -c
            c ^= low
            u = low.bit_length() - 1
            d = (masks[u] & cand).bit_count()
            if d > deg:
                v, deg = u, d
        bit = 1 << v
        rec(cand & ~bit & ~masks[v], cur | bit, size + 1)
        rec(cand & ~bit, cur, size)

    rec((1 << g.n) - 1, 0, 0)
    return best[1]


def maximum_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set by branch and bound.

    Branches on a vertex of largest remaining degree; isolated candidates are
    taken outright and a greedy clique cover prunes hopeless branches.

    >>> from kegraph.generators import cycle
    >>> len(maximum_independent_set(cycle(5)))
    2
    """
    return VertexSet(_bits(_alpha_mask(g)), g)


def independence_number(g: Graph) -> int:
    return _alpha_mask(g).bit_count()


def _maximum_independent_masks(g, meter, alpha):
    """Bitmasks of all maximum independent sets, in lexicographic order.

    Branch on the lowest candidate (take it first, then skip it) and prune
    with the clique-cover bound.
    """
    masks = g.masks
    out = []

    def rec(cand, cur, size):
        if size == alpha:
            meter.charge()
            out.append(cur)
            return
        meter.check_time()
        room = alpha - size
        if cand.bit_count() < room or _clique_cover(masks, cand) < room:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~low & ~masks[v], cur | low, size + 1)
        rec(cand & ~low, cur, size)

    rec((1 << g.n) - 1, 0, 0)
    return out


def _greedy_independent(masks, n):
    size, cand = 0, (1 << n) - 1
    for v in sorted(range(n), key=lambda v: masks[v].bit_count()):
        if cand >> v & 1:
            size += 1
            cand &= ~masks[v] & ~(1 << v)
    return size


def _omega_search(g, meter):
    """``(alpha, masks of Omega)`` in one pass when alpha is not known yet.

    Same lexicographic branching as :func:`_maximum_independent_masks`, pruned
    against the best size so far; a larger set found later discards the list.
    """
    masks = g.masks
    best = [_greedy_independent(masks, g.n)]
    out = []

    def rec(cand, cur, size):
        if not cand:
            if size > best[0]:
                best[0] = size
                out.clear()
                meter.count = 0
            if size == best[0]:
                meter.charge()
                out.append(cur)
            return
        meter.check_time()
        room = best[0] - size
        if cand.bit_count() < room or _clique_cover(masks, cand) < room:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~low & ~masks[v], cur | low, size + 1)
        rec(cand & ~low, cur, size)

    rec((1 << g.n) - 1, 0, 0)
    return best[0], out


def enumerate_maximum_independent_sets(g: Graph, budget: Budget | None = None,
                                       alpha: int | None = None) -> Iterator[VertexSet]:
    """Yield every maximum independent set once, in lexicographic order of sorted members.

    Raises :class:`~kegraph.errors.BudgetExceeded` past the budget's cap.
    """
    if alpha is None:
        alpha = independence_number(g)
    meter = (budget or Budget()).meter("maximum independent sets")
    for mask in _maximum_independent_masks(g, meter, alpha):
        yield VertexSet(_bits(mask), g)


def maximum_independent_sets(g: Graph, budget: Budget | None = None) -> list[VertexSet]:
    return list(enumerate_maximum_independent_sets(g, budget))


def core(g: Graph, budget: Budget | None = None) -> VertexSet:
    """Intersection of all maximum independent sets (stops once it is empty).

    >>> from kegraph.generators import complete_bipartite
    >>> sorted(core(complete_bipartite(1, 3)))
    [1, 2, 3]
    """
    inter = None
    for s in enumerate_maximum_independent_sets(g, budget):
        inter = s.mask if inter is None else inter & s.mask
        if not inter:
            break
    return VertexSet(_bits(inter or 0), g)


def _critical_search(g, budget):
    """Best ``(|S| - |N(S)|, |S|, S)`` over independent sets, ties broken by larger ``|S|``.

    Depth-first over independent sets with the bound ``value + |cand|``:
    adding a vertex raises ``|S|`` by one and never lowers ``|N(S)|``.
    """
    masks = g.masks
    meter = (budget or Budget()).meter("independent sets (critical search)")
    best = [0, 0, 0]  # value, size, mask  (the empty set gives value 0)

    def rec(cand, cur, nbr, size):
        value = size - nbr.bit_count()
        if value > best[0] or (value == best[0] and size > best[1]):
            best[0], best[1], best[2] = value, size, cur
        room = cand.bit_count()
        if value + room < best[0] or (value + room == best[0] and size + room <= best[1]):
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            meter.charge()
            rec(cand & ~masks[v], cur | low, nbr | masks[v], size + 1)

    rec((1 << g.n) - 1, 0, 0, 0)
    return best


def critical_difference(g: Graph, budget: Budget | None = None) -> int:
    """``d(G) = max |S| - |N(S)|`` over independent ``S``, the empty set included.

    >>> from kegraph.generators import complete_bipartite
    >>> critical_difference(complete_bipartite(1, 3))
    2
    """
    return _critical_search(g, budget)[0]


def is_critical(g: Graph, a, d: int | None = None) -> bool:
    """Whether the independent set ``a`` attains ``d(G)``.

    Raises :class:`~kegraph.errors.GraphError` if ``a`` is not independent.
    """
    a = as_vertex_set(g, a)
    if not is_independent(g, a):
        raise GraphError(f"{a!r} is not independent")
    if d is None:
        d = critical_difference(g)
    nbr = 0
    for v in a:
        nbr |= g.masks[v]
    return len(a) - nbr.bit_count() == d


def max_critical_set(g: Graph, budget: Budget | None = None) -> VertexSet:
    """A critical independent set of largest size ``alpha_c(G)``."""
    return VertexSet(_bits(_critical_search(g, budget)[2]), g)


def critical_independence_number(g: Graph, budget: Budget | None = None) -> int:
    return _critical_search(g, budget)[1]


@dataclass(frozen=True)
class IndependenceReport:
    """alpha, Omega size, core, d and alpha_c; fields whose enumeration ran out are None."""

    alpha: int
    omega_count: int | None
    core: VertexSet | None
    d: int | None
    alpha_c: int | None
    budget_exceeded: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "omegaCount": self.omega_count,
            "core": None if self.core is None else self.core.names(),
            "d": self.d,
            "alphaC": self.alpha_c,
            "budgetExceeded": {
                "omega": "omega" in self.budget_exceeded,
                "critical": "critical" in self.budget_exceeded,
            },
        }


def independence_report(g: Graph, budget: Budget | None = None) -> IndependenceReport:
    alpha = independence_number(g)
    exceeded = []
    try:
        count, inter = 0, (1 << g.n) - 1
        for s in enumerate_maximum_independent_sets(g, budget, alpha):
            count += 1
            inter &= s.mask
        omega_count, core_set = count, VertexSet(_bits(inter), g)
    except BudgetExceeded:
        omega_count = core_set = None
        exceeded.append("omega")
    try:
        d, alpha_c, _ = _critical_search(g, budget)
    except BudgetExceeded:
        d = alpha_c = None
        exceeded.append("critical")
    return IndependenceReport(alpha, omega_count, core_set, d, alpha_c, tuple(exceeded))
