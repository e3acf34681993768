"""The commutative core: normal-generator classification, the projection
onto the core, cycle-power calculus, corners over discrete trails, and the
direct-sum decomposition of the discrete part."""

from dataclasses import dataclass

from .algebra import Monomial
from .errors import LpaError
from .graphs import Path, all_paths, no_exit_cycle_at, shape_classify
from .rings import LaurentPoly, LaurentRing
from .trails import (DISCRETE_PERIODIC, FINITE, classify, enumerate_discrete,
                     essential_head)

DIAGONAL = "diagonal"
NORMAL_UP = "normal-up"
NORMAL_DOWN = "normal-down"
NON_NORMAL = "non-normal"


def _forced_closed(path):
    """True when every vertex the path leaves has out-degree 1, i.e. the path
    is a power of a cycle without exits."""
    g = path.graph
    return all(g.out_degree(g.source[e]) == 1 for e in path.edges)


def classify_generator(m):
    """diagonal / normal-up / normal-down / non-normal for a generator
    alpha.beta*.  The normal ones are exactly: equal legs, or comparable legs
    whose difference is a power of a cycle without exits."""
    alpha, beta = m.alpha, m.beta
    if alpha == beta:
        return DIAGONAL
    if beta.is_prefix_of(alpha):
        return NORMAL_UP if _forced_closed(alpha.strip_prefix(beta)) else NON_NORMAL
    if alpha.is_prefix_of(beta):
        return NORMAL_DOWN if _forced_closed(beta.strip_prefix(alpha)) else NON_NORMAL
    return NON_NORMAL


def is_normal(x):
    """x x* = x* x, decided exactly via normal forms."""
    return (x * x.star()).equiv(x.star() * x)


def core_project(x):
    """The conditional expectation onto the core: normalize, then keep the
    terms whose generators classify as normal."""
    nf = x.normal_form()
    kept = {m: c for m, c in nf.terms.items() if classify_generator(m) != NON_NORMAL}
    return x.algebra.element(kept)


def in_core(x):
    return core_project(x).equiv(x)


def diagonal_commutant_witness(x, max_len):
    """A path a with a.a* not commuting with x, searched in path order up to
    max_len.  None means either x is in the core, or the bound was too small
    (callers distinguish the two via in_core)."""
    if in_core(x):
        return None
    alg = x.algebra
    for a in all_paths(alg.graph, max_len):
        p = alg.mono(a, a)
        if not (x * p).equiv(p * x):
            return a
    return None


def _distinguished_cycle(alpha):
    """The cycle without exits based at r(alpha), if alpha is distinguished."""
    lam = no_exit_cycle_at(alpha.graph, alpha.range_vertex)
    if lam is None:
        raise LpaError(f"{alpha!r} is not distinguished: no exit-free cycle at its range")
    if alpha.edge_sources() & lam.vertex_set():
        raise LpaError(f"{alpha!r} is not distinguished: its cycle revisits the head")
    return lam


def cycle_power(algebra, alpha, n):
    """The invertible core generator alpha lam^n alpha* (n may be negative;
    n = 0 gives the unit alpha.alpha* of the corner)."""
    lam = _distinguished_cycle(alpha)
    if n == 0:
        return algebra.mono(alpha, alpha)
    power = Path(alpha.graph, lam.start, lam.edges * abs(n))
    long_leg = alpha.concat(power)
    if n > 0:
        return algebra.mono(long_leg, alpha)
    return algebra.mono(alpha, long_leg)


def laurent_to_corner(algebra, p, alpha):
    """Laurent polynomial into the cycle-power subalgebra, x^k acting as the k-th power."""
    if not isinstance(p, LaurentPoly):
        raise LpaError("laurent_to_corner expects a Laurent element")
    _distinguished_cycle(alpha)
    x = algebra.zero()
    for exp, c in p.terms:
        x = x + cycle_power(algebra, alpha, exp).scale(c)
    return x


def corner_to_laurent(algebra, x, alpha):
    """Exact inverse on the cycle-power subalgebra; raises if x is not in it."""
    lam = _distinguished_cycle(alpha)
    step = len(lam)
    nf = x.normal_form()
    laurent = LaurentRing(algebra.ring)
    result = laurent.zero
    for n, part in nf.graded_parts().items():
        if n % step != 0:
            raise LpaError("element has a degree outside the cycle-power subalgebra")
        k = n // step
        target = cycle_power(algebra, alpha, k).normal_form()
        anchor, anchor_int = next(iter(target.sorted_terms()))
        coeff = part.terms.get(anchor)
        if coeff is None:
            raise LpaError("element is not in the cycle-power subalgebra")
        if anchor_int == algebra.ring.neg(algebra.ring.one):
            coeff = algebra.ring.neg(coeff)
        if not part.equiv(target.scale(coeff)):
            raise LpaError("element is not in the cycle-power subalgebra")
        result = laurent.add(result, laurent.monomial(k, coeff))
    return result


def corner_project(x, trail):
    """Compress x into the corner of a discrete trail: h h* x h h* with h the
    essential head.  The result provably equals core_project(x) . h h*; both
    sides are computed and compared as an internal consistency check."""
    kind = classify(trail)
    if kind not in (FINITE, DISCRETE_PERIODIC):
        raise LpaError(f"corner projection needs a discrete trail, got {kind}")
    alg = x.algebra
    h = essential_head(trail)
    p = alg.mono(h, h)
    left = (p * x * p).normal_form()
    right = (core_project(x) * p).normal_form()
    if not left.equiv(right):
        raise LpaError("corner identity violated; the rewriting engine is inconsistent")
    return left


@dataclass(frozen=True)
class DecompositionReport:
    """Summands of the discrete part: one coefficient-ring copy per finite
    trail, one Laurent-ring copy per infinite discrete trail.  complete means
    the graph is commutative-shaped, so this is the whole algebra."""

    finite_summands: tuple
    infinite_summands: tuple
    complete: bool

    def summary(self, ring_name="R"):
        parts = [f"{len(self.finite_summands)} x {ring_name}",
                 f"{len(self.infinite_summands)} x {ring_name}[x,x^-1]"]
        return " + ".join(parts)


def disc_decomposition(g, max_head_len):
    trails = enumerate_discrete(g, max_head_len)
    finite = tuple(t for t in trails if classify(t) == FINITE)
    infinite = tuple(t for t in trails if classify(t) == DISCRETE_PERIODIC)
    return DecompositionReport(finite, infinite, shape_classify(g).commutative)


def core_generators(algebra, max_len):
    """All normal generators with both legs of length <= max_len."""
    out = []
    by_range = {}
    for p in all_paths(algebra.graph, max_len):
        by_range.setdefault(p.range_vertex, []).append(p)
    for group in by_range.values():
        for a in group:
            for b in group:
                m = Monomial(a, b)
                if classify_generator(m) != NON_NORMAL:
                    out.append(m)
    out.sort(key=Monomial.sort_key)
    return out
