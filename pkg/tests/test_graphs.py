import random

import pytest

from lpa import (GraphError, Path, all_paths, sink_split, condition_L, cycles,
                 distinguished_paths, no_exit_cycle_at, parse_graph,
                 shape_classify, vertex_classes)

from helpers import random_graph


def test_parse_loop_and_sink(graphs):
    g = graphs["loop"]
    assert g.vertices == ("v",) and g.edges == ("c",)
    assert g.source["c"] == "v" and g.range_["c"] == "v"
    s = graphs["sink"]
    assert s.source["g"] == "u" and s.range_["g"] == "w"


def test_parse_errors():
    with pytest.raises(GraphError, match="u"):
        parse_graph("edges: g: u -> w")  # u, w undeclared
    with pytest.raises(GraphError, match="line 1"):
        parse_graph("huh?")
    with pytest.raises(GraphError, match="duplicate"):
        parse_graph("vertices: v v")
    with pytest.raises(GraphError, match="duplicate"):
        parse_graph("vertices: u w\nedges: g: u -> w\n g: w -> u")
    with pytest.raises(GraphError, match="reserved"):
        parse_graph("vertices: u w\nedges: g': u -> w")
    with pytest.raises(GraphError, match="both vertex and edge"):
        parse_graph("vertices: v\nedges: v: v -> v")


def test_parse_multiline_edges():
    g = parse_graph("""
    vertices: a b
    edges: e1: a -> b
           e2: b -> b
    """)
    assert g.edges == ("e1", "e2")


def test_vertex_classes(graphs):
    assert vertex_classes(graphs["sink"]) == ({"w"}, {"u"})
    assert vertex_classes(graphs["loop"]) == (set(), {"v"})
    assert vertex_classes(graphs["lasso"]) == (set(), {"u", "v"})


def test_cycles_and_condition_L(graphs):
    loop = cycles(graphs["loop"])
    assert len(loop) == 1 and loop[0].cycle.edges == ("c",) and not loop[0].exits
    assert not condition_L(graphs["loop"])

    withexit = cycles(graphs["exit"])
    assert len(withexit) == 1
    assert ("d" in [e for _, e in withexit[0].exits])
    assert condition_L(graphs["exit"])

    assert cycles(graphs["line3"]) == []
    assert condition_L(graphs["line3"])  # vacuous

    rose = cycles(graphs["rose2"])
    assert len(rose) == 2 and all(c.has_exit for c in rose)


def test_cycles_canonical_base():
    g = parse_graph("vertices: a b\nedges: e1: b -> a\n e2: a -> b")
    cs = cycles(g)
    assert len(cs) == 1
    assert cs[0].cycle.start == "a"  # least vertex of the rotation class


def _distinguished_oracle(g, max_len):
    """Independent enumeration: try every path and every rotation of every
    exit-free cycle against the definition directly."""
    out = set()
    rotations = []
    for info in cycles(g):
        if info.exits:
            continue
        edges = info.cycle.edges
        for i in range(len(edges)):
            rot = edges[i:] + edges[:i]
            rotations.append(Path.from_edges(g, rot))
    for lam in rotations:
        for alpha in all_paths(g, max_len):
            if alpha.range_vertex != lam.start:
                continue
            if {g.source[e] for e in alpha.edges} & lam.vertex_set():
                continue
            out.add((alpha.start, alpha.edges, lam.edges))
    return out


@pytest.mark.parametrize("name,max_len", [("loop", 2), ("lasso", 1), ("exit", 3),
                                          ("sink", 2), ("rose2", 2), ("line3", 2)])
def test_distinguished_paths_against_oracle(graphs, name, max_len):
    g = graphs[name]
    got = {(a.start, a.edges, lam.edges) for a, lam in distinguished_paths(g, max_len)}
    assert got == _distinguished_oracle(g, max_len)


def test_distinguished_paths_examples(graphs):
    pairs = distinguished_paths(graphs["loop"], 2)
    assert [(repr(a), repr(lam)) for a, lam in pairs] == [("v", "c")]
    pairs = distinguished_paths(graphs["lasso"], 1)
    assert [(repr(a), repr(lam)) for a, lam in pairs] == [("v", "c"), ("g", "c")]
    assert distinguished_paths(graphs["exit"], 5) == []


def test_no_exit_cycle_at(graphs):
    lam = no_exit_cycle_at(graphs["lasso"], "v")
    assert lam.edges == ("c",)
    assert no_exit_cycle_at(graphs["lasso"], "u") is None
    assert no_exit_cycle_at(graphs["exit"], "v") is None


def test_build_F_examples(graphs):
    f = sink_split(graphs["loop"])
    assert set(f.vertices) == {"v", "v'"} and set(f.edges) == {"c", "c'"}
    assert f.range_["c'"] == "v'" and f.source["c'"] == "v"
    assert f.is_sink("v'")

    f = sink_split(graphs["sink"])
    # u is regular but nothing ranges at u, so u' is an isolated sink
    assert set(f.vertices) == {"u", "w", "u'"} and set(f.edges) == {"g"}

    assert condition_L(sink_split(graphs["loop"]))


def test_build_F_regular_vertices_preserved():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, max_vertices=8)
        f = sink_split(g)
        assert g.regular == {v for v in f.regular if not v.endswith("'")}
        assert f.regular == g.regular  # primed vertices are all sinks
        assert condition_L(f)


def test_shape_classify_examples(graphs):
    shape = shape_classify(graphs["loop"])
    assert shape.commutative and shape.components == (("isolated-loop", "v", "c"),)

    shape = shape_classify(graphs["rose2"])
    assert not shape.commutative and shape.witness[0] in ("e", "f")

    g = parse_graph("vertices: a b z\nedges: l: z -> z")
    shape = shape_classify(g)
    assert shape.commutative and len(shape.components) == 3


def test_shape_classify_matches_definition():
    rng = random.Random(9)
    for _ in range(60):
        g = random_graph(rng)
        expected = all(g.source[e] == g.range_[e] for e in g.edges) and all(
            g.out_degree(v) <= 1 for v in g.vertices)
        assert shape_classify(g).commutative == expected


def test_path_prefix_operations(graphs):
    g = graphs["line3"]
    ab = Path.from_edges(g, ("a", "b"))
    a = Path.from_edges(g, ("a",))
    v1 = Path.at_vertex(g, "v1")
    assert a.is_prefix_of(ab) and v1.is_prefix_of(ab)
    assert not ab.is_prefix_of(a)
    assert ab.strip_prefix(a).edges == ("b",)
    assert ab.strip_prefix(v1) == ab
    assert a.concat(ab.strip_prefix(a)) == ab
    assert a.concat(v1) is None  # ranges do not meet
    assert len(v1) == 0 and len(ab) == 2
    assert ab.range_vertex == "v3" and ab.source_vertex == "v1"


def test_path_validation(graphs):
    g = graphs["line3"]
    with pytest.raises(GraphError):
        Path.from_edges(g, ("b", "a"))
    with pytest.raises(GraphError):
        Path.at_vertex(g, "nope")
