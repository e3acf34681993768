"""Trails: finite sink-terminated paths and infinite paths, with the
discrete/continuous split used throughout the trail-module machinery.

A trail is essentially aperiodic when it is finite, or periodic with an
exit-free period, or infinite and never eventually periodic.  The continuous
kind cannot be certified from finite prefixes, so continuous trails here are
aperiodic by construction: branch choices follow the Thue-Morse word, which
is not eventually periodic.
"""

from .errors import ExprError, LpaError, UndecidedError
from .graphs import Path, all_paths, distinguished_paths, no_exit_cycle_at
from .algebra import Monomial

#: default number of prefix letters compared before trail equality gives up
PREFIX_BOUND = 32

FINITE = "finite"
DISCRETE_PERIODIC = "discrete-periodic"
CONTINUOUS = "continuous"
NOT_APERIODIC = "not-essentially-aperiodic"


def thue_morse(n):
    return bin(n).count("1") % 2


class FiniteTrail:
    """A path whose range is a sink (length zero allowed)."""

    __slots__ = ("path",)

    def __init__(self, path):
        if not path.graph.is_sink(path.range_vertex):
            raise LpaError(f"range {path.range_vertex!r} of a finite trail must be a sink")
        self.path = path

    @property
    def graph(self):
        return self.path.graph

    @property
    def source(self):
        return self.path.start

    def head(self, n):
        if n == 0:
            return Path.at_vertex(self.graph, self.source)
        if len(self.path) <= n:
            return self.path
        return self.path.prefix(n)

    def __eq__(self, other):
        return trail_equal(self, other)

    def __hash__(self):
        return hash(("fin", self.path.start, self.path.edges))

    def __repr__(self):
        return f"finite:{self.path!r}"


class PeriodicTrail:
    """head . period . period . ...; the stored presentation may be
    non-minimal, the seed is always the unique minimal one."""

    __slots__ = ("given_head", "given_period", "seed_head", "seed_period")

    def __init__(self, head, period):
        if not period.edges:
            raise LpaError("period must be a nonempty closed path")
        if period.range_vertex != period.start:
            raise LpaError("period is not closed")
        if head.range_vertex != period.start:
            raise LpaError("head must end where the period starts")
        self.given_head = head
        self.given_period = period
        self.seed_head, self.seed_period = _minimal_seed(head, period)

    @property
    def graph(self):
        return self.given_head.graph

    @property
    def source(self):
        return self.given_head.start

    def _edge_at(self, m):
        """1-based edge index into head . period^infinity."""
        he = self.given_head.edges
        pe = self.given_period.edges
        return he[m - 1] if m <= len(he) else pe[(m - len(he) - 1) % len(pe)]

    def head(self, n):
        if n == 0:
            return Path.at_vertex(self.graph, self.source)
        return Path(self.graph, self.source, tuple(self._edge_at(m) for m in range(1, n + 1)))

    def __eq__(self, other):
        return trail_equal(self, other)

    def __hash__(self):
        return hash(("per", self.seed_head.start, self.seed_head.edges, self.seed_period.edges))

    def __repr__(self):
        return f"periodic:{self.seed_head!r}|{self.seed_period!r}"


class ContinuousTrail:
    """Infinite aperiodic trail produced lazily by a named walk strategy.

    The handle is (strategy, origin) plus a derived (prefix, skip) pair kept
    in absorbed canonical form, so handles obtained by composing and
    stripping paths compare consistently.  Only graphs where the walk can
    never reach a sink may host one.
    """

    __slots__ = ("graph", "strategy", "origin", "prefix", "skip")

    def __init__(self, graph, strategy, origin, prefix=(), skip=0):
        if strategy != "thue_morse":
            raise LpaError(f"unknown continuous-trail strategy {strategy!r}")
        self.graph = graph
        self.strategy = strategy
        self.origin = origin
        prefix = tuple(prefix)
        while prefix and skip > 0 and prefix[-1] == self._walk(skip)[skip - 1]:
            prefix = prefix[:-1]
            skip -= 1
        self.prefix = prefix
        self.skip = skip

    def _walk(self, n):
        return _strategy_walk(self.graph, self.origin, n)

    @property
    def source(self):
        if self.prefix:
            return self.graph.source[self.prefix[0]]
        walk = self._walk(self.skip)
        return self.graph.range_[walk[self.skip - 1]] if self.skip else self.origin

    def head(self, n):
        if n == 0:
            return Path.at_vertex(self.graph, self.source)
        need = max(0, n - len(self.prefix))
        walk = self._walk(self.skip + need)
        edges = (self.prefix + walk[self.skip:self.skip + need])[:n]
        return Path(self.graph, self.source, edges)

    def with_prefix(self, path):
        return ContinuousTrail(self.graph, self.strategy, self.origin,
                               path.edges + self.prefix, self.skip)

    def drop(self, n):
        if n <= len(self.prefix):
            return ContinuousTrail(self.graph, self.strategy, self.origin,
                                   self.prefix[n:], self.skip)
        return ContinuousTrail(self.graph, self.strategy, self.origin,
                               (), self.skip + n - len(self.prefix))

    def descriptor(self):
        return (self.strategy, self.origin, self.prefix, self.skip)

    def __eq__(self, other):
        return trail_equal(self, other)

    def __hash__(self):
        return hash(("cont",) + self.descriptor())

    def __repr__(self):
        return f"cont:{self.strategy}@{self.source}"


def _strategy_walk(graph, origin, n):
    """First n edges of the Thue-Morse walk: forced edges are taken as-is; at
    each vertex with several exits the next Thue-Morse letter picks between
    the first two (in sorted edge order)."""
    store = graph.__dict__.setdefault("_tm_walks", {})
    cache = store.setdefault(origin, [])
    cur = graph.range_[cache[-1]] if cache else origin
    branches = sum(1 for e in cache if graph.out_degree(graph.source[e]) > 1)
    while len(cache) < n:
        outs = graph.out_edges(cur)
        if not outs:
            raise LpaError(f"walk from {origin!r} reached sink {cur!r}")
        if len(outs) == 1:
            e = outs[0]
        else:
            e = outs[thue_morse(branches)]
            branches += 1
        cache.append(e)
        cur = graph.range_[e]
    return tuple(cache[:n])


def _primitive_root(edges):
    k = len(edges)
    for d in range(1, k + 1):
        if k % d == 0 and edges == edges[:d] * (k // d):
            return edges[:d]
    return edges


def _minimal_seed(head, period):
    """The unique (alpha, lam) with minimal head-length + period-length
    presenting head.period^infinity."""
    g = head.graph
    he = head.edges
    q = _primitive_root(period.edges)
    k0 = len(q)

    def edge_at(m):
        return he[m - 1] if m <= len(he) else q[(m - len(he) - 1) % k0]

    j = len(he) + 1
    while j >= 2 and edge_at(j - 1) == edge_at(j - 1 + k0):
        j -= 1
    alpha_edges = he[: j - 1]
    lam = Path.from_edges(g, tuple(edge_at(j + i) for i in range(k0)))
    if alpha_edges:
        alpha = Path(g, head.start, alpha_edges)
    else:
        alpha = Path.at_vertex(g, head.start)
    return alpha, lam


def head(trail, n):
    return trail.head(n)


def seed(trail):
    """Minimal (alpha, lam) of a periodic trail."""
    if not isinstance(trail, PeriodicTrail):
        raise LpaError("seed is defined only for periodic trails")
    return trail.seed_head, trail.seed_period


def _period_has_no_exits(lam):
    g = lam.graph
    return all(g.out_degree(g.source[e]) == 1 for e in lam.edges)


def classify(trail):
    if isinstance(trail, FiniteTrail):
        return FINITE
    if isinstance(trail, PeriodicTrail):
        return DISCRETE_PERIODIC if _period_has_no_exits(trail.seed_period) else NOT_APERIODIC
    if isinstance(trail, ContinuousTrail):
        return CONTINUOUS
    raise LpaError(f"not a trail: {trail!r}")


def is_essentially_aperiodic(trail):
    return classify(trail) != NOT_APERIODIC


def essential_head(trail):
    kind = classify(trail)
    if kind == FINITE:
        return trail.path
    if kind == DISCRETE_PERIODIC:
        return trail.seed_head
    raise LpaError(f"essential head undefined for a {kind} trail")


def trail_equal(t1, t2, bound=PREFIX_BOUND):
    """Structural equality for same-kind discrete trails; cross-kind infinite
    comparisons check prefixes up to the bound and refuse to guess beyond."""
    if t1 is t2:
        return True
    if not isinstance(t2, (FiniteTrail, PeriodicTrail, ContinuousTrail)):
        return NotImplemented
    if t1.graph is not t2.graph:
        return False
    if isinstance(t1, FiniteTrail) or isinstance(t2, FiniteTrail):
        if type(t1) is not type(t2):
            return False
        return t1.path == t2.path
    if isinstance(t1, PeriodicTrail) and isinstance(t2, PeriodicTrail):
        return (t1.seed_head, t1.seed_period) == (t2.seed_head, t2.seed_period)
    if isinstance(t1, ContinuousTrail) and isinstance(t2, ContinuousTrail):
        if t1.graph is t2.graph and t1.descriptor() == t2.descriptor():
            return True
    if t1.head(bound) != t2.head(bound):
        return False
    raise UndecidedError(
        f"trail equality undecided after {bound} prefix letters: {t1!r} vs {t2!r}"
    )


def enumerate_discrete(g, max_head_len):
    """All finite trails of length <= max_head_len plus all infinite discrete
    trails whose minimal head is that short; no duplicates."""
    finite = [FiniteTrail(p) for p in all_paths(g, max_head_len)
              if g.is_sink(p.range_vertex)]
    finite.sort(key=lambda t: t.path.sort_key())
    periodic = [PeriodicTrail(alpha, lam)
                for alpha, lam in distinguished_paths(g, max_head_len)]
    return finite + periodic


def find_trail_from(g, v):
    """Some essentially aperiodic trail with source v; always succeeds on a
    finite graph.  Prefers a finite trail, then a periodic one, and falls
    back to the Thue-Morse continuous walk."""
    order = _bfs_paths(g, v)
    for p in order:
        if g.is_sink(p.range_vertex):
            return FiniteTrail(p)
    for p in order:
        lam = no_exit_cycle_at(g, p.range_vertex)
        if lam is not None:
            return PeriodicTrail(p, lam)
    return ContinuousTrail(g, "thue_morse", v)


def _bfs_paths(g, v):
    """One shortest path per reachable vertex, in breadth-first, lexicographic
    order (so the result is deterministic)."""
    seen = {v}
    layer = [Path.at_vertex(g, v)]
    out = list(layer)
    while layer:
        nxt = []
        for p in layer:
            for e in g.out_edges(p.range_vertex):
                w = g.range_[e]
                if w not in seen:
                    seen.add(w)
                    nxt.append(Path(g, p.start, p.edges + (e,)))
        out.extend(nxt)
        layer = nxt
    return out


def diagonal_chain(trail, n):
    """The diagonal monomials of the heads 0..n, consecutive duplicates
    collapsed (finite trails stabilize at their length)."""
    out = []
    for m in range(n + 1):
        h = trail.head(m)
        mono = Monomial(h, h)
        if not out or out[-1] != mono:
            out.append(mono)
    return out


def parse_trail(text, graph):
    """Trail literals: finite:g, finite:a.b, periodic:g|c, cont:thue_morse@v."""
    from .exprs import parse_path

    if ":" not in text:
        raise ExprError(f"bad trail literal {text!r}")
    kind, _, rest = text.partition(":")
    if kind == "finite":
        return FiniteTrail(parse_path(rest, graph))
    if kind == "periodic":
        head_txt, sep, period_txt = rest.partition("|")
        if not sep:
            raise ExprError("periodic trail literal needs head|period")
        return PeriodicTrail(parse_path(head_txt, graph), parse_path(period_txt, graph))
    if kind == "cont":
        strategy, sep, v = rest.partition("@")
        if not sep:
            raise ExprError("continuous trail literal needs strategy@vertex")
        if v not in graph.vertices:
            raise ExprError(f"unknown vertex {v!r}")
        return ContinuousTrail(graph, strategy, v)
    raise ExprError(f"unknown trail kind {kind!r}")
