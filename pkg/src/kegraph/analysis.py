"""K-E recognition and executable checks of the structure theorems.

A graph is König-Egerváry (K-E) when ``alpha + mu = n``.  Four recognizers
are provided:

``definition``
    alpha by branch and bound, mu by the blossom algorithm.
``theorem1``
    some maximum independent set ``S`` has every maximum matching inside the
    cut ``(S, V - S)``.
``sterboul``
    no flower and no posy relative to one maximum matching.
``larson``
    ``alpha_c = alpha``.

The checkers return small report objects with a ``status`` of ``"pass"``,
``"fail"``, ``"inapplicable"`` (a precondition such as "is K-E" fails) or
``"indeterminate"`` (an enumeration budget ran out).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget
from .errors import BudgetExceeded, GraphError, RecognizerDisagreement
from .graph import (EdgeSet, Graph, VertexSet, as_vertex_set, closed_neighborhood,
                    delete_vertices, induced_subgraph, is_independent, neighborhood)
from .independence import (_bits, _critical_search, _maximum_independent_masks, _omega_search,
                           independence_number)
from .matching import (Matching, cover_choice, exposed_vertices, find_flower_or_posy,
                       maximum_matching, mu_critical_vertices)
from .matching.enumerate import _mate_of, maximum_matching_edges
from .matching.engine import _as_matching

__all__ = [
    "METHODS",
    "KEReport",
    "Decomposition",
    "Theorem1Violation",
    "Theorem1Report",
    "CheckReport",
    "Analysis",
    "is_ke",
    "check_theorem1",
    "ke_decomposition",
    "check_star_decomposition",
    "check_core_structure",
    "check_prop3",
    "check_saturation_prop",
    "bounds_check",
    "check_identities",
    "CHECKS",
    "run_check",
]

METHODS = ("definition", "theorem1", "sterboul", "larson")


class _lazy:
    """``functools.cached_property`` without its per-instance lock (3.10 takes
    one on every first access); an Analysis is never shared across threads."""

    def __init__(self, fn):
        self.fn = fn
        self.name = fn.__name__
        self.__doc__ = fn.__doc__

    def __get__(self, obj, owner=None):
        if obj is None:
            return self
        value = obj.__dict__[self.name] = self.fn(obj)
        return value


class Analysis:
    """Lazily computed quantities of one graph, shared by the checkers.

    Enumerations honour ``budget``; a :class:`BudgetExceeded` raised while a
    property is computed propagates to the caller.
    """

    def __init__(self, g: Graph, budget: Budget | None = None):
        self.g = g
        self.budget = budget if budget is not None else Budget.start()

    @_lazy
    def matching(self) -> Matching:
        return maximum_matching(self.g)

    @_lazy
    def mu(self) -> int:
        return len(self.matching)

    @_lazy
    def alpha(self) -> int:
        return independence_number(self.g)

    @property
    def is_ke(self) -> bool:
        return self.alpha + self.mu == self.g.n

    @_lazy
    def omega_masks(self) -> list[int]:
        """Bitmasks of the maximum independent sets, lexicographic order."""
        meter = self.budget.meter("maximum independent sets")
        if "alpha" in self.__dict__:
            return _maximum_independent_masks(self.g, meter, self.alpha)
        alpha, out = _omega_search(self.g, meter)
        self.__dict__["alpha"] = alpha
        return out

    @_lazy
    def omega(self) -> list[VertexSet]:
        return [VertexSet(_bits(m), self.g) for m in self.omega_masks]

    @_lazy
    def matching_edges(self) -> list[tuple]:
        """All maximum matchings as sorted edge tuples, in ascending order."""
        return maximum_matching_edges(self.g, self.budget, self.mu)

    @_lazy
    def matchings(self) -> list[Matching]:
        return [Matching(self.g, es) for es in self.matching_edges]

    @_lazy
    def core(self) -> VertexSet:
        inter = (1 << self.g.n) - 1
        for m in self.omega_masks:
            inter &= m
        return VertexSet(_bits(inter), self.g)

    @_lazy
    def critical(self) -> tuple[int, int, int]:
        """``(d, alpha_c, mask of a maximum critical set)``."""
        return tuple(_critical_search(self.g, self.budget))

    @property
    def d(self) -> int:
        return self.critical[0]

    @property
    def alpha_c(self) -> int:
        return self.critical[1]

    @_lazy
    def mu_critical(self) -> VertexSet:
        return mu_critical_vertices(self.g)

    @_lazy
    def witness(self):
        return find_flower_or_posy(self.g, self.matching)

    @_lazy
    def cover(self) -> VertexSet | None:
        return cover_choice(self.g, self.matching)


# -- recognition ---------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """``G = S * H`` with a matching of ``H`` into ``S`` along the cut."""

    s: VertexSet
    h: Graph
    m: EdgeSet

    def to_json(self) -> dict:
        g = self.s.graph
        hv = [g.label(v) for v in self.h.origin]
        return {
            "S": self.s.names(),
            "H": {"vertices": hv,
                  "edges": [[hv[u], hv[v]] for u, v in self.h.sorted_edges]},
            "M": [[g.label(u), g.label(v)] for u, v in self.m],
        }


@dataclass(frozen=True)
class Theorem1Violation:
    matching: Matching
    s: VertexSet
    edge: tuple[int, int]

    def to_json(self) -> dict:
        g = self.s.graph
        return {"matching": [[g.label(u), g.label(v)] for u, v in self.matching],
                "S": self.s.names(),
                "edge": [g.label(self.edge[0]), g.label(self.edge[1])]}


@dataclass
class KEReport:
    """Verdicts of the requested recognizers plus supporting numbers and witnesses.

    A verdict of None means the method was not run or ran out of budget; the
    latter methods are listed in ``indeterminate``.
    """

    n: int
    alpha: int | None
    mu: int
    deficiency: int
    d: int | None = None
    core: VertexSet | None = None
    verdicts: dict = field(default_factory=dict)
    witness: object = None
    decomposition: Decomposition | None = None
    theorem1_violation: Theorem1Violation | None = None
    indeterminate: list = field(default_factory=list)

    @property
    def verdict(self) -> bool | None:
        """The common verdict of every method that reached one, or None."""
        known = {v for v in self.verdicts.values() if v is not None}
        if len(known) != 1:
            return None
        return known.pop()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "mu": self.mu,
            "deficiency": self.deficiency,
            "d": self.d,
            "core": None if self.core is None else self.core.names(),
            "verdicts": {k: self.verdicts.get(k) for k in METHODS},
            "witness": None if self.witness is None else self.witness.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
            "theorem1Violation": (None if self.theorem1_violation is None
                                  else self.theorem1_violation.to_json()),
            "indeterminate": list(self.indeterminate),
        }


def _verdict(ctx, method, report):
    if method == "definition":
        return ctx.is_ke
    if method == "theorem1":
        t1 = check_theorem1(ctx.g, ctx=ctx)
        if t1.status == "indeterminate":
            raise BudgetExceeded("theorem1", 0)
        report.theorem1_violation = t1.violation
        return t1.holds_for_some_s
    if method == "sterboul":
        return ctx.witness is None
    if method == "larson":
        return ctx.alpha_c == ctx.alpha
    raise ValueError(f"unknown method {method!r}; choose from {METHODS + ('all',)}")


def is_ke(g: Graph, method: str = "all", budget: Budget | None = None,
          ctx: Analysis | None = None) -> KEReport:
    """Decide whether ``g`` is K-E with one recognizer, or with all four.

    With ``method="all"`` every recognizer runs and any disagreement between
    those that reach a verdict raises :class:`RecognizerDisagreement`.  A
    recognizer whose enumeration exceeds ``budget`` is listed in
    ``indeterminate`` and its verdict stays None.

    Examples
    --------
    >>> from kegraph.generators import fixture
    >>> r = is_ke(fixture("fig1"))
    >>> r.alpha, r.mu, r.verdict
    (4, 3, True)
    """
    ctx = ctx or Analysis(g, budget)
    methods = METHODS if method == "all" else (method,)
    if method != "all" and method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS + ('all',)}")
    report = KEReport(n=g.n, alpha=None, mu=ctx.mu, deficiency=g.n - 2 * ctx.mu)
    if "theorem1" in methods:
        # Omega is needed anyway; enumerating it first yields alpha for free
        try:
            ctx.omega_masks
        except BudgetExceeded:
            pass
    for meth in methods:
        try:
            report.verdicts[meth] = _verdict(ctx, meth, report)
        except BudgetExceeded:
            report.verdicts[meth] = None
            report.indeterminate.append(meth)
    # alpha is cheap next to enumeration; d and core only when already at hand
    if "definition" in methods or "larson" in methods or "theorem1" in methods:
        report.alpha = ctx.alpha
    elif ctx.cover is not None:
        report.alpha = g.n - ctx.mu
    if "critical" in ctx.__dict__:
        report.d = ctx.d
    if "omega_masks" in ctx.__dict__:
        report.core = ctx.core
    report.witness = ctx.witness
    dec = ke_decomposition(g, ctx=ctx)
    report.decomposition = dec
    known = {v for v in report.verdicts.values() if v is not None}
    if len(known) > 1:
        raise RecognizerDisagreement(report.verdicts, report)
    if known and (dec is not None) != known.pop():
        raise RecognizerDisagreement(dict(report.verdicts, decomposition=dec is not None), report)
    return report


# -- cut characterization ---------------------------------------------------------


@dataclass(frozen=True)
class Theorem1Report:
    """Both quantifier forms of the cut characterization.

    ``holds_for_some_s``
        some ``S`` in Omega has every maximum matching inside ``(S, V - S)``.
    ``holds_for_every_s``
        every ``S`` in Omega has that property.
    ``exists_s_per_matching``
        each maximum matching lies in some cut ``(S, V - S)``, ``S`` depending
        on the matching.  This weaker form does not characterize K-E graphs
        and is reported for information only.
    ``violation``
        the first ``(M, S, edge)`` with ``edge`` in ``M`` but not in the cut,
        scanning ``S`` then ``M`` in lexicographic order; None if there is none.
    """

    holds_for_some_s: bool | None
    holds_for_every_s: bool | None
    exists_s_per_matching: bool | None
    violation: Theorem1Violation | None
    good_s: VertexSet | None
    matchings: int | None
    omega: int | None
    status: str

    @property
    def holds_for_all(self):
        return self.holds_for_every_s

    def to_json(self) -> dict:
        return {
            "property": "theorem1",
            "status": self.status,
            "holdsForSomeS": self.holds_for_some_s,
            "holdsForEveryS": self.holds_for_every_s,
            "existsSPerMatching": self.exists_s_per_matching,
            "violation": None if self.violation is None else self.violation.to_json(),
            "goodS": None if self.good_s is None else self.good_s.names(),
            "matchings": self.matchings,
            "omega": self.omega,
        }


def check_theorem1(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> Theorem1Report:
    """Evaluate the cut characterization by enumerating Omega and all maximum matchings.

    ``status`` is ``"pass"`` when both quantifier forms agree with the
    definition (``alpha + mu = n``), ``"fail"`` otherwise.

    Examples
    --------
    >>> from kegraph.generators import fixture
    >>> r = check_theorem1(fixture("fig22_G3"))
    >>> r.holds_for_some_s, r.violation.matching.names(), r.violation.s.names()
    (False, ['ux', 'zy'], ['u', 'v'])
    """
    ctx = ctx or Analysis(g, budget)
    try:
        smasks, matchings = ctx.omega_masks, ctx.matching_edges
    except BudgetExceeded:
        return Theorem1Report(None, None, None, None, None, None, None, "indeterminate")
    covers = []
    for es in matchings:
        mask = 0
        for u, v in es:
            mask |= (1 << u) | (1 << v)
        covers.append(mask)
    size = ctx.mu
    some_s = None
    violation = None
    # an independent S meets each matching edge at most once, so M lies in
    # the cut iff S meets V(M) in exactly |M| vertices
    for sm in smasks:
        i = next((i for i, c in enumerate(covers) if (sm & c).bit_count() != size), -1)
        if i < 0:
            if some_s is None:
                some_s = VertexSet(_bits(sm), g)
        elif violation is None:
            m = Matching._trusted(g, matchings[i], _mate_of(g.n, matchings[i]))
            edge = next(e for e in m if not (sm >> e[0] | sm >> e[1]) & 1)
            violation = Theorem1Violation(m, VertexSet(_bits(sm), g), edge)
    every_s = violation is None
    per_m = all(any((sm & c).bit_count() == size for sm in smasks) for c in covers)
    ke = ctx.is_ke
    ok = (some_s is not None) == ke and every_s == ke
    return Theorem1Report(some_s is not None, every_s, per_m, violation, some_s,
                          len(matchings), len(smasks), "pass" if ok else "fail")


# -- decomposition ------------------------------------------------------------------


def ke_decomposition(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> Decomposition | None:
    """A certificate ``G = S * H`` for K-E graphs, None otherwise.

    ``S`` holds every vertex left exposed by a maximum matching plus one end
    of each matching edge, chosen so that ``S`` is independent (a 2-SAT
    problem on the matching edges).  Then ``H = G[V - S]`` and the matching
    itself joins ``H`` into ``S``; :func:`check_star_decomposition` verifies
    the certificate without computing alpha.

    >>> from kegraph.generators import cycle
    >>> ke_decomposition(cycle(4)).s.names()
    ['0', '2']
    """
    ctx = ctx or Analysis(g, budget)
    s = ctx.cover
    if s is None:
        return None
    h = delete_vertices(g, s)
    return Decomposition(s, h, ctx.matching.edges)


def check_star_decomposition(g: Graph, s, h: Graph, m) -> bool:
    """Validate ``G = S * H``: ``S`` independent, ``H = G[V - S]``, and ``m``
    a matching inside the cut ``(S, V(H))`` with ``|m| = |V(H)| <= |S|``.
    A valid certificate proves ``g`` is K-E.
    """
    s = as_vertex_set(g, s)
    if not is_independent(g, s):
        return False
    rest = VertexSet((v for v in g.vertices if v not in s), g)
    if h != induced_subgraph(g, rest):
        return False
    try:
        m = _as_matching(g, m)
    except GraphError:
        return False
    if any((u in s) == (v in s) for u, v in m):
        return False
    return len(m) == h.n <= len(s)


# -- checkers with a common report shape ------------------------------------------------


@dataclass
class CheckReport:
    """Outcome of one property check; ``details`` is JSON-ready."""

    property: str
    status: str
    details: dict = field(default_factory=dict)
    note: str = ""

    @property
    def passed(self) -> bool:
        """True unless the check ran and failed (inapplicable counts as passing)."""
        return self.status in ("pass", "inapplicable")

    def to_json(self) -> dict:
        out = {"property": self.property, "status": self.status}
        if self.note:
            out["note"] = self.note
        out.update(self.details)
        return out


def _names(g, vs):
    return [g.label(v) for v in sorted(vs)]


def _indeterminate(name, exc):
    return CheckReport(name, "indeterminate", note=str(exc))


def check_core_structure(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> CheckReport:
    """Matching structure around ``core(G)`` for K-E graphs.

    Checks that every maximum matching matches ``N(core)`` into ``core``,
    that ``H = G - N[core]`` is K-E with a perfect matching, and that every
    maximum matching of ``H`` extends to a maximum matching of ``G`` (the
    extension is built and reported).  Not K-E: ``"inapplicable"``.
    """
    ctx = ctx or Analysis(g, budget)
    name = "theorem2"
    if not ctx.is_ke:
        return CheckReport(name, "inapplicable", note="graph is not K-E")
    try:
        c = ctx.core
        matchings = ctx.matchings
    except BudgetExceeded as exc:
        return _indeterminate(name, exc)
    nc = neighborhood(g, c)
    details = {"core": c.names(), "neighborhood": nc.names(), "matchings": len(matchings)}
    ok = True
    bad = None
    for m in matchings:
        mate = m.mate
        for v in nc:
            if mate[v] == -1 or mate[v] not in c:
                ok, bad = False, (m, v)
                break
        if bad:
            break
    details["matchedIntoCore"] = bad is None
    if bad:
        details["matchedIntoCoreViolation"] = {"matching": bad[0].names(), "vertex": g.label(bad[1])}
    h = delete_vertices(g, closed_neighborhood(g, c))
    hctx = Analysis(h, ctx.budget)
    h_ke = hctx.is_ke
    h_perfect = 2 * hctx.mu == h.n
    details["H"] = {"vertices": [g.label(v) for v in h.origin], "isKE": h_ke, "perfectMatching": h_perfect}
    ok = ok and h_ke and h_perfect
    # N(core) into core, then extend each maximum matching of H by it
    cross = Graph(g.n, [(u, v) for u, v in g.edges if (u in c) != (v in c)])
    into = maximum_matching(cross)
    into_edges = [e for e in into if e[0] in nc or e[1] in nc]
    extends = len(into_edges) == len(nc)
    try:
        h_matchings = hctx.matchings
    except BudgetExceeded as exc:
        return _indeterminate(name, exc)
    example = None
    for mh in h_matchings:
        lifted = [(h.origin[u], h.origin[v]) for u, v in mh]
        try:
            ext = Matching(g, lifted + into_edges)
        except GraphError:
            extends = False
            break
        if len(ext) != ctx.mu:
            extends = False
            break
        if example is None:
            example = ext
    details["extensions"] = extends
    if example is not None:
        details["extensionExample"] = example.names()
    ok = ok and extends
    return CheckReport(name, "pass" if ok else "fail", details)


def check_prop3(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> CheckReport:
    """Exposed vertices lie in ``core`` for every maximum matching, and every
    edge has a mu-critical endpoint.

    Both clauses are evaluated on any graph; the status is ``"inapplicable"``
    when the graph is not K-E, since the implication says nothing then.
    """
    ctx = ctx or Analysis(g, budget)
    name = "prop3"
    try:
        c = ctx.core
        matchings = ctx.matchings
    except BudgetExceeded as exc:
        return _indeterminate(name, exc)
    clause_i = True
    details = {"core": c.names(), "matchings": len(matchings)}
    for m in matchings:
        ex = exposed_vertices(g, m)
        if not ex <= c:
            clause_i = False
            details["exposedViolation"] = {"matching": m.names(),
                                           "vertices": _names(g, ex - c)}
            break
    crit = ctx.mu_critical
    bad_edges = [e for e in g.sorted_edges if e[0] not in crit and e[1] not in crit]
    clause_ii = not bad_edges
    details.update({"exposedInCore": clause_i, "criticalEndpoint": clause_ii,
                    "muCritical": crit.names()})
    if bad_edges:
        details["edgesWithoutCriticalEndpoint"] = [g.edge_label(e) for e in bad_edges]
    if not ctx.is_ke:
        return CheckReport(name, "inapplicable", details, note="graph is not K-E")
    return CheckReport(name, "pass" if clause_i and clause_ii else "fail", details)


def check_saturation_prop(g: Graph, v, budget: Budget | None = None,
                          ctx: Analysis | None = None) -> CheckReport:
    """``v`` in ``core`` iff some maximum matching leaves ``v`` exposed.

    Applies when both ``G`` and ``G - v`` are K-E; otherwise the status is
    ``"inapplicable"``.  The unsaturating matching is reported when found.
    """
    ctx = ctx or Analysis(g, budget)
    v = g.vertex(v)
    name = "saturation"
    details = {"vertex": g.label(v)}
    if not ctx.is_ke:
        return CheckReport(name, "inapplicable", details, note="graph is not K-E")
    gv = delete_vertices(g, [v])
    if not Analysis(gv, ctx.budget).is_ke:
        return CheckReport(name, "inapplicable", details, note=f"G - {g.label(v)} is not K-E")
    try:
        in_core = v in ctx.core
        miss = next((m for m in ctx.matchings if m.mate[v] == -1), None)
    except BudgetExceeded as exc:
        return _indeterminate(name, exc)
    details.update({"inCore": in_core, "unsaturated": miss is not None})
    if miss is not None:
        details["unsaturatingMatching"] = miss.names()
    return CheckReport(name, "pass" if in_core == (miss is not None) else "fail", details)


def bounds_check(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> CheckReport:
    """``floor(n/2) + 1 <= alpha + mu <= n`` (lower bound for ``n >= 1``),
    ``alpha >= mu`` on K-E graphs, and with a perfect matching: K-E iff
    ``alpha = mu``.
    """
    ctx = ctx or Analysis(g, budget)
    n, a, mu = g.n, ctx.alpha, ctx.mu
    checks = {"upper": a + mu <= n}
    if n >= 1:
        checks["lower"] = n // 2 + 1 <= a + mu
    if ctx.is_ke:
        checks["alphaAtLeastMu"] = a >= mu
    if 2 * mu == n:
        checks["perfectMatchingEquivalence"] = ctx.is_ke == (a == mu)
    ok = all(checks.values())
    return CheckReport("bounds", "pass" if ok else "fail",
                       {"n": n, "alpha": a, "mu": mu, "checks": checks})


def check_identities(g: Graph, budget: Budget | None = None, ctx: Analysis | None = None) -> CheckReport:
    """On K-E graphs ``d = alpha - mu = def = |core| - |N(core)|`` and every
    maximum independent set is critical; otherwise some maximum independent
    set is not critical.
    """
    ctx = ctx or Analysis(g, budget)
    try:
        d, c, omega = ctx.d, ctx.core, ctx.omega_masks
    except BudgetExceeded as exc:
        return _indeterminate("identities", exc)
    masks = g.masks
    nc = 0
    for v in c:
        nc |= masks[v]
    non_critical = None
    for s in omega:
        nbr = 0
        for v in _bits(s):
            nbr |= masks[v]
        if s.bit_count() - nbr.bit_count() != d:
            non_critical = VertexSet(_bits(s), g)
            break
    values = {"d": d, "alphaMinusMu": ctx.alpha - ctx.mu, "deficiency": g.n - 2 * ctx.mu,
              "coreMinusNeighborhood": len(c) - nc.bit_count()}
    details = {"values": values, "allOmegaCritical": non_critical is None}
    if non_critical is not None:
        details["nonCritical"] = non_critical.names()
    if ctx.is_ke:
        ok = len(set(values.values())) == 1 and non_critical is None
    else:
        ok = non_critical is not None
    return CheckReport("identities", "pass" if ok else "fail", details)


def _theorem1_check(g, budget=None, ctx=None):
    r = check_theorem1(g, budget, ctx)
    return CheckReport("theorem1", r.status, {k: v for k, v in r.to_json().items()
                                               if k not in ("property", "status")})


def _saturation_all(g, budget=None, ctx=None):
    ctx = ctx or Analysis(g, budget)
    runs = [check_saturation_prop(g, v, ctx=ctx) for v in g.vertices]
    statuses = {r.status for r in runs}
    if "indeterminate" in statuses:
        status = "indeterminate"
    elif "fail" in statuses:
        status = "fail"
    elif statuses <= {"inapplicable"}:
        status = "inapplicable"
    else:
        status = "pass"
    return CheckReport("saturation", status, {"vertices": [r.to_json() for r in runs]})


CHECKS = {
    "theorem1": _theorem1_check,
    "theorem2": check_core_structure,
    "prop3": check_prop3,
    "saturation": _saturation_all,
    "bounds": bounds_check,
    "identities": check_identities,
}


def run_check(g: Graph, prop: str, budget: Budget | None = None,
              ctx: Analysis | None = None) -> list[CheckReport]:
    """Run one named check, or every check for ``prop="all"``."""
    ctx = ctx or Analysis(g, budget)
    names = list(CHECKS) if prop == "all" else [prop]
    out = []
    for name in names:
        try:
            fn = CHECKS[name]
        except KeyError:
            raise ValueError(f"unknown property {name!r}; choose from {', '.join(CHECKS)}, all") from None
        out.append(fn(g, ctx=ctx))
    return out
