"""Exact element arithmetic in the path algebra of a graph.

Elements are R-linear combinations of monomials alpha.beta* (the beta side
acts reversed and starred) with r(alpha) = r(beta).  Products follow the
standard generator calculus; equality is decided by rewriting to the
canonical basis determined by one chosen special edge per regular vertex.
"""

from dataclasses import dataclass

from .errors import LpaError, MismatchError
from .graphs import Path, all_paths, paths_from


@dataclass(frozen=True)
class Monomial:
    """A spanning-set generator alpha.beta* with r(alpha) = r(beta)."""

    alpha: Path
    beta: Path

    @property
    def degree(self):
        return len(self.alpha) - len(self.beta)

    @property
    def is_diagonal(self):
        return self.alpha == self.beta

    def star(self):
        return Monomial(self.beta, self.alpha)

    def sort_key(self):
        return (self.degree, len(self.alpha), self.alpha.edges, self.beta.edges,
                self.alpha.start, self.beta.start)

    def __repr__(self):
        a, b = self.alpha, self.beta
        if not b.edges:
            return repr(a)
        ghost = ".".join(e + "*" for e in reversed(b.edges))
        if not a.edges:
            return ghost
        return f"{a!r}.{ghost}"


class LeavittAlgebra:
    """Context object fixing graph, coefficient ring and special-edge choice.

    All element operations are pure; the context is immutable after
    construction and safe to share.
    """

    def __init__(self, graph, ring, special_edges=None):
        self.graph = graph
        self.ring = ring
        if special_edges is None:
            special_edges = {v: graph.out_edges(v)[0] for v in graph.regular}
        else:
            special_edges = dict(special_edges)
            for v in graph.regular:
                e = special_edges.get(v)
                if e is None:
                    special_edges[v] = graph.out_edges(v)[0]
                elif e not in graph.out_edges(v):
                    raise LpaError(f"special edge {e!r} does not start at {v!r}")
        self.special = special_edges
        self._nf_cache = {}

    # -- construction ------------------------------------------------------

    def element(self, terms):
        return Element(self, {m: c for m, c in terms.items() if not self.ring.is_zero(c)})

    def zero(self):
        return Element(self, {})

    def mono(self, alpha, beta):
        """The generator alpha.beta*, or zero when the ranges differ."""
        if alpha.graph is not self.graph or beta.graph is not self.graph:
            raise MismatchError("paths from a different graph")
        if alpha.range_vertex != beta.range_vertex:
            return self.zero()
        return Element(self, {Monomial(alpha, beta): self.ring.one})

    def vertex(self, v):
        p = Path.at_vertex(self.graph, v)
        return self.mono(p, p)

    def edge(self, e):
        p = Path.from_edges(self.graph, (e,))
        return self.mono(p, Path.at_vertex(self.graph, p.range_vertex))

    def ghost(self, e):
        return self.edge(e).star()

    def path_elem(self, path):
        return self.mono(path, Path.at_vertex(self.graph, path.range_vertex))

    def one(self):
        x = self.zero()
        for v in self.graph.vertices:
            x = x + self.vertex(v)
        return x

    def _check(self, x):
        if x.algebra is not self and not (
            x.algebra.graph is self.graph
            and x.algebra.ring == self.ring
            and x.algebra.special == self.special
        ):
            raise MismatchError("element from an incompatible algebra context")

    # -- normal form -------------------------------------------------------

    def is_basis_monomial(self, m):
        """Basis predicate: alpha and beta may not both end in the same
        special edge (that configuration is the one the rewrite removes)."""
        if not m.alpha.edges or not m.beta.edges:
            return True
        e = m.alpha.edges[-1]
        if m.beta.edges[-1] != e:
            return True
        return self.special[self.graph.source[e]] != e

    def _rewrite_step(self, m):
        """One application of the vertex relation at the shared special last
        edge: (a.g)(b.g)* -> a.b* - sum over the other edges f at that vertex
        of (a.f)(b.f)*.  Returns [(monomial, +-1), ...]."""
        e = m.alpha.edges[-1]
        v = self.graph.source[e]
        a = m.alpha.prefix(len(m.alpha) - 1)
        b = m.beta.prefix(len(m.beta) - 1)
        out = [(Monomial(a, b), 1)]
        for f in self.graph.out_edges(v):
            if f != e:
                out.append(
                    (Monomial(Path(self.graph, a.start, a.edges + (f,)),
                              Path(self.graph, b.start, b.edges + (f,))), -1)
                )
        return out

    def _reduce_monomial(self, m):
        """Integer-coefficient expansion of m over basis monomials, memoized.
        Terminates: the non-basis part strictly shrinks in length each step."""
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        if self.is_basis_monomial(m):
            result = {m: 1}
        else:
            result = {}
            for m2, sign in self._rewrite_step(m):
                for mb, k in self._reduce_monomial(m2).items():
                    result[mb] = result.get(mb, 0) + sign * k
            result = {mb: k for mb, k in result.items() if k}
        self._nf_cache[m] = result
        return result

    def normal_form(self, x, strategy="recursive"):
        """Canonical form: equal elements have identical term mappings."""
        self._check(x)
        if x.canonical:
            return x
        ring = self.ring
        if strategy == "recursive":
            acc = {}
            for m, c in x.terms.items():
                for mb, k in self._reduce_monomial(m).items():
                    prev = acc.get(mb, ring.zero)
                    acc[mb] = ring.add(prev, ring.mul(c, ring.from_int(k)))
            return self.element(acc)
        if strategy == "queue":
            acc = {}
            work = list(x.terms.items())
            while work:
                m, c = work.pop(0)
                if self.is_basis_monomial(m):
                    prev = acc.get(m, ring.zero)
                    acc[m] = ring.add(prev, c)
                else:
                    for m2, sign in self._rewrite_step(m):
                        work.append((m2, c if sign == 1 else ring.neg(c)))
            return self.element(acc)
        raise LpaError(f"unknown rewrite strategy {strategy!r}")

    def eq(self, x, y):
        return self.normal_form(x - y).is_structurally_zero()

    def is_zero(self, x):
        return self.normal_form(x).is_structurally_zero()

    # -- derived operations --------------------------------------------------

    def expand_vertex(self, v, k):
        """The vertex as a sum of diagonal monomials: all paths of length k
        from v plus the shorter sink-terminated ones."""
        if v not in self.graph.vertices:
            raise LpaError(f"unknown vertex {v!r}")
        x = self.zero()
        for p in paths_from(self.graph, v, k):
            x = x + self.mono(p, p)
        for n in range(k):
            for p in paths_from(self.graph, v, n):
                if self.graph.is_sink(p.range_vertex):
                    x = x + self.mono(p, p)
        return x

    def basis_monomials(self, max_len):
        """All basis monomials with both path lengths <= max_len, sorted."""
        by_range = {}
        for p in all_paths(self.graph, max_len):
            by_range.setdefault(p.range_vertex, []).append(p)
        out = []
        for group in by_range.values():
            for a in group:
                for b in group:
                    m = Monomial(a, b)
                    if self.is_basis_monomial(m):
                        out.append(m)
        out.sort(key=Monomial.sort_key)
        return out

    def __repr__(self):
        return f"LeavittAlgebra({self.graph!r}, {self.ring!r})"


class Element:
    """Finite R-linear combination of monomials.  Immutable by convention;
    products are never auto-normalized, so pre-reduction spanning
    representatives stay observable until normal_form / eq force them."""

    __slots__ = ("algebra", "terms", "canonical")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = dict(terms)
        self.canonical = all(algebra.is_basis_monomial(m) for m in self.terms)

    def is_structurally_zero(self):
        return not self.terms

    def __add__(self, other):
        self.algebra._check(other)
        ring = self.algebra.ring
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = ring.add(acc.get(m, ring.zero), c)
        return self.algebra.element(acc)

    def __neg__(self):
        ring = self.algebra.ring
        return self.algebra.element({m: ring.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        self.algebra._check(other)
        ring = self.algebra.ring
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                if m is None:
                    continue
                acc[m] = ring.add(acc.get(m, ring.zero), ring.mul(c1, c2))
        return self.algebra.element(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, r):
        ring = self.algebra.ring
        if isinstance(r, int):
            r = ring.from_int(r)
        return self.algebra.element({m: ring.mul(r, c) for m, c in self.terms.items()})

    def star(self):
        """The R-linear involution: swap the two path legs termwise."""
        return self.algebra.element({m.star(): c for m, c in self.terms.items()})

    def normal_form(self, strategy="recursive"):
        return self.algebra.normal_form(self, strategy)

    def equiv(self, other):
        """Equality in the algebra (via normal forms)."""
        return self.algebra.eq(self, other)

    def is_zero(self):
        return self.algebra.is_zero(self)

    def graded_parts(self):
        """Split by degree l(alpha) - l(beta); the parts sum back to self."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(m.degree, {})[m] = c
        return {n: self.algebra.element(t) for n, t in sorted(parts.items())}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def __repr__(self):
        from .exprs import format_element

        return format_element(self)

    __hash__ = None


def _mono_mul(m1, m2):
    """Generator product: (a.b*)(m.n*) collapses along the comparable middle
    pair, or vanishes when b and m are incomparable in the prefix order."""
    beta, mu = m1.beta, m2.alpha
    if beta.is_prefix_of(mu):
        rest = mu.strip_prefix(beta)
        return Monomial(m1.alpha.concat(rest), m2.beta)
    if mu.is_prefix_of(beta):
        rest = beta.strip_prefix(mu)
        return Monomial(m1.alpha, m2.beta.concat(rest))
    return None
