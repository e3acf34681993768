"""Shared builders for the test suite: the six standard graphs, seeded
random graphs, and random elements/vectors."""

from lpa import Graph, LeavittAlgebra, all_paths, parse_graph

SIX_GRAPH_TEXTS = {
    "loop": "vertices: v\nedges: c: v -> v",
    "rose2": "vertices: v\nedges: e: v -> v\n f: v -> v",
    "line3": "vertices: v1 v2 v3\nedges: a: v1 -> v2\n b: v2 -> v3",
    "sink": "vertices: u w\nedges: g: u -> w",
    "lasso": "vertices: u v\nedges: g: u -> v\n c: v -> v",
    "exit": "vertices: v w\nedges: c: v -> v\n d: v -> w",
}


def six_graphs():
    return {name: parse_graph(text) for name, text in SIX_GRAPH_TEXTS.items()}


def line_graph(n):
    """n vertices in a row, n-1 edges; its algebra is the n x n matrix ring."""
    vs = [f"v{i}" for i in range(1, n + 1)]
    es = [f"e{i}" for i in range(1, n)]
    return Graph(vs, es, {f"e{i}": f"v{i}" for i in range(1, n)},
                 {f"e{i}": f"v{i+1}" for i in range(1, n)})


def random_graph(rng, max_vertices=6, max_edges=None):
    nv = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    if max_edges is None:
        max_edges = min(2 * nv, 8)
    ne = rng.randint(0, max_edges)
    src, tgt = {}, {}
    es = []
    for i in range(ne):
        name = f"e{i}"
        es.append(name)
        src[name] = rng.choice(vs)
        tgt[name] = rng.choice(vs)
    return Graph(vs, es, src, tgt)


def paths_by_range(g, max_len):
    grouped = {}
    for p in all_paths(g, max_len):
        grouped.setdefault(p.range_vertex, []).append(p)
    return grouped


def random_element(rng, algebra, max_terms=4, max_path_len=3, coeff_span=3):
    """A random spanning-set combination (not normalized)."""
    grouped = paths_by_range(algebra.graph, max_path_len)
    x = algebra.zero()
    for _ in range(rng.randint(1, max_terms)):
        group = grouped[rng.choice(sorted(grouped))]
        a = rng.choice(group)
        b = rng.choice(group)
        c = rng.choice([k for k in range(-coeff_span, coeff_span + 1) if k])
        x = x + algebra.mono(a, b).scale(c)
    return x


def random_nonzero_element(rng, algebra, **kw):
    for _ in range(50):
        x = random_element(rng, algebra, **kw)
        if not x.is_zero():
            return x
    raise AssertionError("could not sample a nonzero element")


def algebra_over(g, ring):
    return LeavittAlgebra(g, ring)
