"""The representation on the trail module and its averaging expectation.

Vectors are finite combinations of symbols (trail, degree); an algebra
element acts by prepending its alpha leg after stripping its beta leg, with
the degree shifted by the term's graded degree.  Everything is exact; the
only bounded comparison is equality against continuous trails, which fails
loudly (UndecidedError) instead of guessing.
"""

from .core import core_project
from .errors import LpaError, MismatchError
from .graphs import Path
from .trails import (ContinuousTrail, FiniteTrail, PeriodicTrail,
                     is_essentially_aperiodic, trail_equal)


class ModuleVector:
    """Finite combination of unit vectors xi(trail, n) over the algebra's
    coefficient ring.  Keys must be essentially aperiodic trails."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        clean = {}
        for (trail, n), c in terms.items():
            if algebra.ring.is_zero(c):
                continue
            if not is_essentially_aperiodic(trail):
                raise LpaError(f"{trail!r} is not essentially aperiodic")
            clean[(trail, n)] = c
        self.terms = clean

    def is_structurally_zero(self):
        return not self.terms

    def __add__(self, other):
        if other.algebra is not self.algebra:
            _check_vector(self.algebra, other)
        ring = self.algebra.ring
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = ring.add(acc.get(key, ring.zero), c)
        return ModuleVector(self.algebra, acc)

    def __neg__(self):
        ring = self.algebra.ring
        return ModuleVector(self.algebra, {k: ring.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r):
        ring = self.algebra.ring
        if isinstance(r, int):
            r = ring.from_int(r)
        return ModuleVector(self.algebra, {k: ring.mul(r, c) for k, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    __hash__ = None

    def support(self):
        """The distinct trails carrying this vector."""
        out = []
        for trail, _ in self.terms:
            if not any(trail_equal(trail, t) for t in out):
                out.append(trail)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], repr(kv[0][0])))

    def __repr__(self):
        from .exprs import _coefficient_atoms

        if not self.terms:
            return "0"
        pieces = []
        for (trail, n), c in self.sorted_terms():
            body = f"{trail!r}@{n}"
            for sign, lit in _coefficient_atoms(self.algebra.ring, c):
                pieces.append((sign, body if lit == "1" else f"{lit}*{body}"))
        out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out


def _check_vector(algebra, v):
    if not (v.algebra is algebra
            or (v.algebra.graph is algebra.graph and v.algebra.ring == algebra.ring)):
        raise MismatchError("vector from an incompatible context")


def vec(algebra, trail, n):
    """Unit vector; rejects trails outside the essentially aperiodic set."""
    return ModuleVector(algebra, {(trail, n): algebra.ring.one})


def _trail_drop(trail, k):
    """The trail after removing its length-k head (k already verified to be a
    valid prefix length)."""
    if k == 0:
        return trail
    g = trail.graph
    if isinstance(trail, FiniteTrail):
        return FiniteTrail(trail.path.strip_prefix(trail.path.prefix(k)))
    if isinstance(trail, ContinuousTrail):
        return trail.drop(k)
    he = trail.given_head.edges
    if k <= len(he):
        rest = he[k:]
        start = trail.given_head.prefix(k).range_vertex
        head = Path(g, start, rest) if rest else Path.at_vertex(g, start)
        return PeriodicTrail(head, trail.given_period)
    pe = trail.given_period.edges
    m = (k - len(he)) % len(pe)
    rotated = Path.from_edges(g, pe[m:] + pe[:m])
    return PeriodicTrail(Path.at_vertex(g, rotated.start), rotated)


def _trail_prepend(trail, path):
    """The concatenated trail path.trail (ranges already known to meet)."""
    if not path.edges:
        return trail
    if isinstance(trail, FiniteTrail):
        return FiniteTrail(path.concat(trail.path))
    if isinstance(trail, ContinuousTrail):
        return trail.with_prefix(path)
    head = path.concat(trail.given_head)
    return PeriodicTrail(head, trail.given_period)


def act(x, m):
    """Apply an algebra element to a module vector (normal form first)."""
    if x.algebra.graph is not m.algebra.graph or x.algebra.ring != m.algebra.ring:
        raise MismatchError("element and vector live over different contexts")
    alg = m.algebra
    ring = alg.ring
    acc = {}
    for mono, c in x.normal_form().terms.items():
        lb, la = len(mono.beta), len(mono.alpha)
        for (trail, n), d in m.terms.items():
            if trail.head(lb) != mono.beta:
                continue
            stripped = _trail_drop(trail, lb)
            if mono.alpha.range_vertex != stripped.source:
                continue
            new_trail = _trail_prepend(stripped, mono.alpha)
            key = (new_trail, n - lb + la)
            acc[key] = ring.add(acc.get(key, ring.zero), ring.mul(c, d))
    return ModuleVector(alg, acc)


def prefix_project(path, m):
    """Keep the terms whose trail extends the given path."""
    kept = {(t, n): c for (t, n), c in m.terms.items()
            if t.head(len(path)) == path}
    return ModuleVector(m.algebra, kept)


def trail_project(trail, m):
    """Keep the terms carried by exactly this trail (loud when undecidable)."""
    kept = {(t, n): c for (t, n), c in m.terms.items() if trail_equal(t, trail)}
    return ModuleVector(m.algebra, kept)


def averaged_act(x, m):
    """The trail-diagonal part of the action: for each trail in the support,
    project, act, project back, and add up.  Exact because finitely many
    trail projections already cover m."""
    total = ModuleVector(m.algebra, {})
    for trail in m.support():
        total = total + trail_project(trail, act(x, trail_project(trail, m)))
    return total


def diagonal_scalar(x, trail):
    """The scalar by which a diagonal element acts on a trail: the sum of the
    coefficients of its prefixes.  Defined only on diagonal elements."""
    nf = x.normal_form()
    ring = x.algebra.ring
    total = ring.zero
    for mono, c in nf.terms.items():
        if not mono.is_diagonal:
            raise LpaError("diagonal_scalar needs a diagonal element")
        if trail.head(len(mono.alpha)) == mono.alpha:
            total = ring.add(total, c)
    return total


def check_expectation_square(x, m):
    """Projection then representation equals representation then averaging."""
    return act(core_project(x), m) == averaged_act(x, m)
