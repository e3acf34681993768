"""Finite directed multigraphs, paths, cycles, and structural classifiers.

Everything downstream (elements, trails, representations) is built on the
two types here: Graph and Path.  Graphs are immutable after construction and
compare by identity; paths compare structurally within one graph.
"""

import re
from dataclasses import dataclass, field

from .errors import GraphError

_IDENT = re.compile(r"[A-Za-z0-9_]+")
PRIME = "'"


class Graph:
    """Finite directed graph with parallel edges allowed.

    vertices/edges are identifier strings; source and range are total maps
    on edges.  Identifiers must be unique within their own set and must not
    contain the reserved prime character.
    """

    def __init__(self, vertices, edges, source, range_):
        vs = list(vertices)
        es = list(edges)
        if len(set(vs)) != len(vs):
            dup = sorted(v for v in set(vs) if vs.count(v) > 1)[0]
            raise GraphError(f"duplicate vertex identifier {dup!r}")
        if len(set(es)) != len(es):
            dup = sorted(e for e in set(es) if es.count(e) > 1)[0]
            raise GraphError(f"duplicate edge identifier {dup!r}")
        vset = set(vs)
        for e in es:
            if e in vset:
                # cross-set collisions make expressions ambiguous
                raise GraphError(f"identifier {e!r} used as both vertex and edge")
            for endpoint in (source[e], range_[e]):
                if endpoint not in vset:
                    raise GraphError(f"edge {e!r} references undeclared vertex {endpoint!r}")
        self.vertices = tuple(sorted(vs))
        self.edges = tuple(sorted(es))
        self.source = {e: source[e] for e in self.edges}
        self.range_ = {e: range_[e] for e in self.edges}
        self._out = {v: tuple(e for e in self.edges if self.source[e] == v) for v in self.vertices}
        self.sinks = frozenset(v for v in self.vertices if not self._out[v])
        self.regular = frozenset(v for v in self.vertices if self._out[v])

    def out_edges(self, v):
        return self._out[v]

    def out_degree(self, v):
        return len(self._out[v])

    def is_sink(self, v):
        return v in self.sinks

    def vertex(self, v):
        return Path.at_vertex(self, v)

    def path(self, *edges):
        return Path.from_edges(self, edges)

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class Path:
    """A vertex (length 0) or a composable nonempty edge sequence."""

    graph: Graph = field(compare=False)
    start: str
    edges: tuple = ()

    def __post_init__(self):
        g = self.graph
        if self.edges:
            if g.source[self.edges[0]] != self.start:
                raise GraphError("path start does not match first edge source")
            for a, b in zip(self.edges, self.edges[1:]):
                if g.range_[a] != g.source[b]:
                    raise GraphError(f"edges {a!r} and {b!r} do not compose")
        elif self.start not in g.vertices:
            raise GraphError(f"unknown vertex {self.start!r}")

    @staticmethod
    def at_vertex(graph, v):
        return Path(graph, v, ())

    @staticmethod
    def from_edges(graph, edges):
        edges = tuple(edges)
        if not edges:
            raise GraphError("from_edges needs at least one edge; use at_vertex")
        return Path(graph, graph.source[edges[0]], edges)

    def __len__(self):
        return len(self.edges)

    @property
    def source_vertex(self):
        return self.start

    @property
    def range_vertex(self):
        return self.graph.range_[self.edges[-1]] if self.edges else self.start

    def vertex_set(self):
        """All vertices the path touches (source and every edge range)."""
        out = {self.start}
        out.update(self.graph.range_[e] for e in self.edges)
        return out

    def edge_sources(self):
        """The set {s(e_1), ..., s(e_n)}; empty for a vertex path."""
        return {self.graph.source[e] for e in self.edges}

    def concat(self, other):
        """Composition self.other, or None if ranges do not meet."""
        if other.graph is not self.graph:
            raise GraphError("paths from different graphs")
        if self.range_vertex != other.start:
            return None
        if not other.edges:
            return self
        return Path(self.graph, self.start, self.edges + other.edges)

    def is_prefix_of(self, other):
        """self <= other in the prefix order (other = self . rest)."""
        if len(self.edges) > len(other.edges):
            return False
        if not self.edges:
            return self.start == other.start
        return other.edges[: len(self.edges)] == self.edges

    def strip_prefix(self, prefix):
        """The remainder after removing a prefix, or None if not a prefix."""
        if not prefix.is_prefix_of(self):
            return None
        rest = self.edges[len(prefix.edges):]
        if rest:
            return Path(self.graph, self.graph.source[rest[0]], rest)
        return Path.at_vertex(self.graph, self.range_vertex)

    def prefix(self, n):
        if n == 0:
            return Path.at_vertex(self.graph, self.start)
        return Path(self.graph, self.start, self.edges[:n])

    def sort_key(self):
        return (len(self.edges), self.edges, self.start)

    def __repr__(self):
        return ".".join(self.edges) if self.edges else self.start


def parse_graph(text):
    """Parse the graph file format:

        vertices: v1 v2 ...
        edges: e1: v1 -> v2
               e2: v2 -> v2
    """
    vertices, edges, source, range_ = [], [], {}, {}
    mode = None

    def parse_edge(decl, lineno):
        m = re.fullmatch(
            r"\s*([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\s*", decl
        )
        if not m:
            if PRIME in decl:
                raise GraphError("the prime character is reserved", line=lineno)
            raise GraphError(f"bad edge declaration {decl.strip()!r}", line=lineno)
        name, s, r = m.groups()
        edges.append(name)
        source[name] = s
        range_[name] = r

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            rest = line[len("vertices:"):].split()
            for v in rest:
                if not _IDENT.fullmatch(v):
                    raise GraphError(f"bad vertex identifier {v!r}", line=lineno)
            vertices.extend(rest)
            mode = "vertices"
        elif line.startswith("edges:"):
            rest = line[len("edges:"):].strip()
            if rest:
                parse_edge(rest, lineno)
            mode = "edges"
        elif mode == "edges":
            parse_edge(line, lineno)
        else:
            raise GraphError(f"unexpected line {line!r}", line=lineno)
    return Graph(vertices, edges, source, range_)


def vertex_classes(g):
    """(sinks, regular): emitters of no edges vs emitters of at least one."""
    return set(g.sinks), set(g.regular)


@dataclass(frozen=True)
class CycleInfo:
    cycle: Path
    exits: tuple  # (index, edge) pairs with s(edge) = s(cycle.edges[index])

    @property
    def has_exit(self):
        return bool(self.exits)


def _exits(cycle):
    g = cycle.graph
    out = []
    for i, e in enumerate(cycle.edges):
        for f in g.out_edges(g.source[e]):
            if f != e:
                out.append((i, f))
    return tuple(out)


def cycles(g):
    """All cycles, one representative per rotation class, based at the
    lexicographically least vertex of the cycle.  Deterministic order."""
    found = []

    def dfs(base, current, trail, visited):
        for e in g.out_edges(current):
            w = g.range_[e]
            if w == base:
                cycle = Path(g, base, tuple(trail + [e]))
                found.append(CycleInfo(cycle, _exits(cycle)))
            elif w not in visited and w > base:
                dfs(base, w, trail + [e], visited | {w})

    for base in g.vertices:  # already sorted
        dfs(base, base, [], {base})
    return found


def condition_L(g):
    """Every cycle has an exit."""
    return all(c.has_exit for c in cycles(g))


def no_exit_cycle_at(g, v):
    """The cycle without exits based at v, if one exists (it is then unique:
    every vertex on it has out-degree exactly 1, so the walk is forced)."""
    cur, walk = v, []
    for _ in range(len(g.vertices)):
        outs = g.out_edges(cur)
        if len(outs) != 1:
            return None
        walk.append(outs[0])
        cur = g.range_[outs[0]]
        if cur == v:
            return Path(g, v, tuple(walk))
    return None


def all_paths(g, max_len):
    """All paths of length <= max_len, shortest first, deterministic."""
    layer = [Path.at_vertex(g, v) for v in g.vertices]
    out = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for e in g.out_edges(p.range_vertex):
                nxt.append(Path(g, p.start, p.edges + (e,)))
        out.extend(nxt)
        layer = nxt
        if not layer:
            break
    return out


def paths_from(g, v, length):
    """All paths with source v of exactly the given length."""
    layer = [Path.at_vertex(g, v)]
    for _ in range(length):
        layer = [
            Path(g, p.start, p.edges + (e,))
            for p in layer
            for e in g.out_edges(p.range_vertex)
        ]
    return layer


def distinguished_paths(g, max_len):
    """All pairs (alpha, lam) with l(alpha) <= max_len where lam is a cycle
    without exits based at r(alpha) and lam avoids all of alpha's edge
    sources.  Includes the distinguished vertices as the l=0 pairs."""
    based = []
    for info in cycles(g):
        if info.has_exit:
            continue
        edges = info.cycle.edges
        for i in range(len(edges)):
            rot = edges[i:] + edges[:i]
            based.append(Path(g, g.source[rot[0]], rot))
    pairs = []
    for lam in based:
        lam_vertices = lam.vertex_set()
        for alpha in all_paths(g, max_len):
            if alpha.range_vertex != lam.start:
                continue
            if alpha.edge_sources() & lam_vertices:
                continue
            pairs.append((alpha, lam))
    pairs.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return pairs


def sink_split(g):
    """The sink-split graph: one primed sink v' per regular vertex v, and one
    primed edge e' per edge whose range is regular (running to r(e)')."""
    vertices = list(g.vertices) + [v + PRIME for v in sorted(g.regular)]
    edges = list(g.edges)
    source = dict(g.source)
    range_ = dict(g.range_)
    for e in g.edges:
        if g.range_[e] in g.regular:
            ep = e + PRIME
            edges.append(ep)
            source[ep] = g.source[e]
            range_[ep] = g.range_[e] + PRIME
    return Graph(vertices, edges, source, range_)


@dataclass(frozen=True)
class CommutativeShape:
    verdict: str  # "commutative" | "non-commutative"
    components: tuple = ()  # ("isolated-vertex", v) or ("isolated-loop", v, e)
    witness: tuple = None  # (edge, reason) on the non-commutative verdict

    @property
    def commutative(self):
        return self.verdict == "commutative"


def shape_classify(g):
    """Commutative exactly when r = s as maps and both are injective, i.e. the
    graph is a disjoint union of isolated vertices and isolated loops."""
    for e in g.edges:
        if g.source[e] != g.range_[e]:
            return CommutativeShape("non-commutative", witness=(e, "r != s"))
    for v in g.vertices:
        outs = g.out_edges(v)
        if len(outs) > 1:
            return CommutativeShape(
                "non-commutative", witness=(outs[1], f"s not injective at {v!r}")
            )
    components = []
    for v in g.vertices:
        outs = g.out_edges(v)
        if outs:
            components.append(("isolated-loop", v, outs[0]))
        else:
            components.append(("isolated-vertex", v))
    return CommutativeShape("commutative", components=tuple(components))
