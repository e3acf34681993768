"""Command-line front end.  Every verb prints a deterministic text report
(machine-readable verdicts on VERDICT: lines) or, with --json, a structured
mirror of the same data.  Exit codes: 0 success, 1 domain error, 2 usage."""

import argparse
import json
import os
import random
import sys

from .algebra import LeavittAlgebra
from .trailmodule import act
from .core import (classify_generator, core_project, diagonal_commutant_witness,
                   disc_decomposition, in_core)
from .errors import LpaError
from .exprs import format_element, parse_expr
from .graphs import sink_split, parse_graph, shape_classify
from .rings import ring_make
from .trails import classify, enumerate_discrete, find_trail_from, parse_trail
from .uniqueness import (check_conditions, cohn_check, hom_apply, parse_system,
                         reduce_search)


def _load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _algebra(args):
    g = _load_graph(args.graph)
    ring = ring_make(args.ring)
    special = None
    if getattr(args, "special_edges", None):
        special = {}
        for chunk in args.special_edges.split(","):
            v, _, e = chunk.partition(":")
            if not e:
                raise LpaError("--special-edges expects v:e[,w:f...]")
            special[v.strip()] = e.strip()
    return LeavittAlgebra(g, ring, special)


def _load_system(args, transform=None):
    with open(args.system, encoding="utf-8") as fh:
        return parse_system(fh.read(), os.path.dirname(args.system) or ".", transform)


def _parse_vector(text, algebra):
    """Vector literals: 3*periodic:g|c@0 - finite:g@2 (terms separated by
    spaced + or -)."""
    from .trailmodule import ModuleVector, vec

    total = ModuleVector(algebra, {})
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].strip()
    chunks = []
    current = text
    while True:
        plus = current.find(" + ")
        minus = current.find(" - ")
        cut = min(x for x in (plus, minus) if x >= 0) if max(plus, minus) >= 0 else -1
        if cut < 0:
            chunks.append((sign, current.strip()))
            break
        chunks.append((sign, current[:cut].strip()))
        sign = 1 if current[cut:cut + 3] == " + " else -1
        current = current[cut + 3:]
    for s, chunk in chunks:
        body, at, deg = chunk.rpartition("@")
        if not at:
            raise LpaError(f"vector term {chunk!r} needs @degree")
        coeff_txt, star, trail_txt = body.partition("*")
        if star and ":" not in coeff_txt:
            coeff = algebra.ring.parse(coeff_txt)
        else:
            coeff, trail_txt = algebra.ring.one, body
        trail = parse_trail(trail_txt, algebra.graph)
        term = vec(algebra, trail, int(deg)).scale(coeff)
        total = total + (term if s > 0 else -term)
    return total


# -- verb handlers: each returns (text_lines, json_dict) ----------------------


def cmd_normal_form(args):
    alg = _algebra(args)
    nf = parse_expr(args.expr, alg).normal_form()
    s = format_element(nf)
    return [s], {"normal_form": s}


def cmd_mul(args):
    alg = _algebra(args)
    x = parse_expr(args.left, alg)
    y = parse_expr(args.right, alg)
    nf = (x * y).normal_form()
    s = format_element(nf)
    return [s], {"product": s}


def cmd_expand_vertex(args):
    alg = _algebra(args)
    x = alg.expand_vertex(args.vertex, args.depth)
    s = format_element(x)
    ok = x.equiv(alg.vertex(args.vertex))
    return [s, f"VERDICT: {'consistent' if ok else 'INCONSISTENT'}"], {
        "expansion": s, "equals_vertex": ok}


def cmd_classify_generator(args):
    alg = _algebra(args)
    x = parse_expr(args.expr, alg)
    if len(x.terms) != 1:
        raise LpaError("classify-generator needs a single monomial expression")
    (m, c), = x.terms.items()
    if c != alg.ring.one:
        raise LpaError("classify-generator needs coefficient 1")
    kind = classify_generator(m)
    return [f"VERDICT: {kind}"], {"class": kind}


def cmd_core_project(args):
    alg = _algebra(args)
    x = parse_expr(args.expr, alg)
    s = format_element(core_project(x).normal_form())
    return [s], {"core_projection": s}


def cmd_witness(args):
    alg = _algebra(args)
    x = parse_expr(args.expr, alg)
    if in_core(x):
        return ["VERDICT: in-core"], {"verdict": "in-core"}
    w = diagonal_commutant_witness(x, args.max_len)
    if w is None:
        line = f"VERDICT: inconclusive at bound {args.max_len}"
        return [line], {"verdict": "inconclusive", "bound": args.max_len}
    return [f"witness: {w!r}", "VERDICT: not-in-core"], {
        "verdict": "not-in-core", "witness": repr(w)}


def cmd_check_commutative(args):
    g = _load_graph(args.graph)
    shape = shape_classify(g)
    lines = [f"VERDICT: {shape.verdict}"]
    data = {"verdict": shape.verdict}
    if shape.commutative:
        comp_lines = [" ".join(c) for c in shape.components]
        lines += [f"component: {c}" for c in comp_lines]
        data["components"] = comp_lines
    else:
        e, reason = shape.witness
        lines.append(f"witness: edge {e} ({reason})")
        data["witness"] = {"edge": e, "reason": reason}
    return lines, data


def cmd_decompose(args):
    g = _load_graph(args.graph)
    report = disc_decomposition(g, args.max_len)
    ring_name = args.ring
    lines = [f"finite summand: {t!r}" for t in report.finite_summands]
    lines += [f"laurent summand: {t!r}" for t in report.infinite_summands]
    lines.append(f"discrete part: {report.summary(ring_name)}")
    lines.append(f"VERDICT: {'complete' if report.complete else 'partial (bounded enumeration)'}")
    return lines, {
        "finite": [repr(t) for t in report.finite_summands],
        "laurent": [repr(t) for t in report.infinite_summands],
        "complete": report.complete,
    }


def cmd_trails(args):
    g = _load_graph(args.graph)
    if args.source:
        t = find_trail_from(g, args.source)
        return [f"{t!r} [{classify(t)}]"], {"trail": repr(t), "class": classify(t)}
    out = enumerate_discrete(g, args.max_len)
    lines = [f"{t!r} [{classify(t)}]" for t in out]
    return lines, {"trails": [repr(t) for t in out]}


def cmd_ap_apply(args):
    alg = _algebra(args)
    x = parse_expr(args.expr, alg)
    m = _parse_vector(args.vec, alg)
    result = act(x, m)
    return [repr(result)], {"vector": repr(result)}


def cmd_ck_validate(args):
    sysm = _load_system(args)
    report = sysm.validate()
    lines = [f"violation: {v}" for v in report.violations]
    lines.append(f"VERDICT: {'valid' if report.ok else 'invalid'}")
    return lines, {"valid": report.ok, "violations": list(report.violations)}


def cmd_hom_apply(args):
    sysm = _load_system(args)
    alg = LeavittAlgebra(sysm.graph, sysm.ring)
    x = parse_expr(args.expr, alg)
    image = hom_apply(sysm, x)
    s = sysm.target.show(image)
    return [s], {"image": s}


def cmd_reduce(args):
    alg = _algebra(args)
    a = parse_expr(args.expr, alg)
    cert = reduce_search(a, args.max_len)
    if cert is None:
        return [f"VERDICT: inconclusive at bound {args.max_len}"], {
            "verdict": "inconclusive", "bound": args.max_len}
    ok = cert.replays(a)
    lines = [f"mu: {cert.mu!r}", f"nu: {cert.nu!r}", f"kind: {cert.kind}",
             f"value: {format_element(cert.outcome_element(alg).normal_form())}",
             f"replay: {'exact' if ok else 'MISMATCH'}",
             "VERDICT: certificate"]
    return lines, {
        "verdict": "certificate", "mu": repr(cert.mu), "nu": repr(cert.nu),
        "kind": cert.kind, "replay": ok,
    }


def _uniqueness_samples(sysm, seed):
    if seed is None or sysm.ring.finite:
        return None
    rng = random.Random(seed)
    _, base = sysm.ring.nonzero_samples()
    extra = [sysm.ring.from_int(rng.randint(1, 99)) for _ in range(4)]
    return base + [r for r in extra if not sysm.ring.is_zero(r)]


def cmd_uniqueness(args):
    sysm = _load_system(args)
    report = check_conditions(sysm, args.degree_bound,
                              _uniqueness_samples(sysm, args.seed))
    return report.lines(sysm.ring), _report_json(report, sysm.ring)


def cmd_cohn_check(args):
    sysm = _load_system(args, transform=sink_split)
    report = cohn_check(sysm, args.degree_bound, _uniqueness_samples(sysm, args.seed))
    return report.lines(sysm.ring), _report_json(report, sysm.ring)


def _report_json(report, ring):
    from .rings import LaurentRing

    data = {
        "verdict": report.verdict,
        "condition_a": {
            "passed": report.condition_a.passed,
            "exhaustive": report.condition_a.exhaustive,
        },
        "condition_b": [],
        "condition_L": report.graph_condition_L,
        "graded": report.graded,
    }
    for b in report.condition_b:
        entry = {"vertex": b.vertex, "passed": b.passed, "degree_bound": b.degree_bound}
        if b.annihilator is not None:
            entry["annihilator"] = LaurentRing(ring).show(b.annihilator)
        data["condition_b"].append(entry)
    return data


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="lpa",
        description="Exact computer algebra for Leavitt and Cohn path algebras.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler):
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    def with_ring(p):
        p.add_argument("--ring", default="Z", help="Z, Z/4, Q, Laurent(Q)")
        p.add_argument("--special-edges", default=None,
                       help="override the special edge per vertex: v:e,w:f")
        return p

    p = with_ring(add("normal-form", cmd_normal_form))
    p.add_argument("graph")
    p.add_argument("expr")

    p = with_ring(add("mul", cmd_mul))
    p.add_argument("graph")
    p.add_argument("left")
    p.add_argument("right")

    p = with_ring(add("expand-vertex", cmd_expand_vertex))
    p.add_argument("graph")
    p.add_argument("vertex")
    p.add_argument("depth", type=int)

    p = with_ring(add("classify-generator", cmd_classify_generator))
    p.add_argument("graph")
    p.add_argument("expr")

    p = with_ring(add("core-project", cmd_core_project))
    p.add_argument("graph")
    p.add_argument("expr")

    p = with_ring(add("witness", cmd_witness))
    p.add_argument("graph")
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=4)

    p = add("check-commutative", cmd_check_commutative)
    p.add_argument("graph")

    p = add("decompose", cmd_decompose)
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--ring", default="R")

    p = add("trails", cmd_trails)
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--from", dest="source", default=None,
                   help="find one essentially aperiodic trail from this vertex")

    p = with_ring(add("ap-apply", cmd_ap_apply))
    p.add_argument("graph")
    p.add_argument("--expr", required=True)
    p.add_argument("--vec", required=True)

    p = add("ck-validate", cmd_ck_validate)
    p.add_argument("system")

    p = add("hom-apply", cmd_hom_apply)
    p.add_argument("system")
    p.add_argument("expr")

    p = with_ring(add("reduce", cmd_reduce))
    p.add_argument("graph")
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=6)

    p = add("uniqueness", cmd_uniqueness)
    p.add_argument("system")
    p.add_argument("--degree-bound", type=int, default=4)
    p.add_argument("--seed", type=int, default=None,
                   help="extra random coefficient samples for condition (a)")

    p = add("cohn-check", cmd_cohn_check)
    p.add_argument("system")
    p.add_argument("--degree-bound", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)

    args = parser.parse_args(argv)
    try:
        lines, data = args.handler(args)
    except LpaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
