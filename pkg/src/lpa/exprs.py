"""Element expression grammar and the canonical printer.

Grammar:  element := term ((+|-) term)*
          term    := coeff '*'? factor ('.' factor)*   (coeff optional)
          factor  := identifier '*'?
Star binds tighter than '.', coefficients use the active ring's literal
syntax (2, -3, 1/2, x, x^-1, 2x^3).  Graph identifiers shadow ring literals;
an identifier that names both an edge and a vertex resolves to the edge.
"""

import re

from .errors import ExprError
from .graphs import Path
from .rings import LaurentRing

_TOKEN = re.compile(r"\s*([A-Za-z0-9_']+|[*.+\-/^])")


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprError(f"bad character {text[pos:].strip()[0]!r} in expression")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, algebra, factor_eval):
        self.tokens = tokens
        self.i = 0
        self.algebra = algebra
        self.factor_eval = factor_eval

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def _is_graph_ident(self, tok):
        g = self.algebra.graph
        return tok in g.source or tok in g.vertices

    def _coefficient(self):
        """Assemble a ring literal from the upcoming tokens, or None if the
        term starts directly with a graph identifier."""
        tok = self.peek()
        if tok is None or tok in "*.+-/^":
            return None
        if self._is_graph_ident(tok):
            return None
        lit = self.take()
        if self.peek() == "/":
            self.take()
            denom = self.take()
            if denom is None or not denom.isdigit():
                raise ExprError("bad fraction literal")
            lit += "/" + denom
        elif self.peek() == "^":
            self.take()
            exp = self.take()
            if exp == "-":
                exp += self.take() or ""
            if exp is None or not re.fullmatch(r"-?\d+", exp):
                raise ExprError("bad exponent in coefficient literal")
            lit += "^" + exp
        try:
            return self.algebra.ring.parse(lit)
        except ExprError:
            raise ExprError(f"unknown identifier or coefficient {lit!r}") from None

    def _factor(self):
        tok = self.take()
        if tok is None or not re.fullmatch(r"[A-Za-z0-9_']+", tok):
            raise ExprError(f"expected identifier, got {tok!r}")
        starred = False
        if self.peek() == "*":
            self.take()
            starred = True
        return self.factor_eval(tok, starred)

    def _term(self):
        coeff = self._coefficient()
        if coeff is not None and self.peek() == "*":
            self.take()
        value = self._factor()
        while self.peek() == ".":
            self.take()
            value = value * self._factor()
        if coeff is not None:
            value = value.scale(coeff)
        return value

    def parse(self):
        negate = False
        if self.peek() in ("+", "-"):
            negate = self.take() == "-"
        result = self._term()
        if negate:
            result = -result
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self._term()
            result = result + term if op == "+" else result - term
        if self.peek() is not None:
            raise ExprError(f"trailing input at token {self.peek()!r}")
        return result


def default_factor_eval(algebra):
    g = algebra.graph

    def ev(ident, starred):
        if ident in g.source:
            return algebra.ghost(ident) if starred else algebra.edge(ident)
        if ident in g.vertices:
            return algebra.vertex(ident)  # vertices are self-adjoint
        raise ExprError(f"unknown identifier {ident!r}")

    return ev


def parse_expr(text, algebra, factor_eval=None):
    """Parse an element expression over the given algebra context.

    factor_eval(ident, starred) -> Element overrides how bare generator
    symbols are interpreted (used for the Cohn embedding)."""
    if text.strip() == "0":
        return algebra.zero()
    tokens = _tokenize(text)
    if not tokens:
        raise ExprError("empty expression")
    if factor_eval is None:
        factor_eval = default_factor_eval(algebra)
    return _Parser(tokens, algebra, factor_eval).parse()


def parse_path(text, graph):
    """A dot-joined edge sequence, or a single vertex identifier."""
    names = [n for n in text.split(".") if n]
    if not names:
        raise ExprError("empty path literal")
    if len(names) == 1 and names[0] not in graph.source:
        if names[0] in graph.vertices:
            return Path.at_vertex(graph, names[0])
        raise ExprError(f"unknown identifier {names[0]!r}")
    for n in names:
        if n not in graph.source:
            raise ExprError(f"unknown edge {n!r}")
    return Path.from_edges(graph, names)


def _mono_str(m):
    a, b = m.alpha, m.beta
    if not b.edges:
        return ".".join(a.edges) if a.edges else a.start
    ghost = ".".join(e + "*" for e in reversed(b.edges))
    if not a.edges:
        return ghost
    return ".".join(a.edges) + "." + ghost


def _coefficient_atoms(ring, c):
    """Decompose a coefficient into printable (sign, literal) atoms; Laurent
    coefficients split termwise so that output stays inside the grammar."""
    if isinstance(ring, LaurentRing):
        atoms = []
        for exp, base_c in sorted(c.terms, reverse=True):
            for sign, lit in _coefficient_atoms(ring.base, base_c):
                if exp == 0:
                    atoms.append((sign, lit))
                else:
                    x = "x" if exp == 1 else f"x^{exp}"
                    atoms.append((sign, x if lit == "1" else lit + x))
        return atoms
    shown = ring.show(c)
    if shown.startswith("-"):
        return [(-1, shown[1:])]
    return [(1, shown)]


def format_element(x):
    """Canonical text form: terms ordered by degree then path order; printing
    then re-parsing yields an equal element."""
    if not x.terms:
        return "0"
    ring = x.algebra.ring
    pieces = []
    for m, c in x.sorted_terms():
        ms = _mono_str(m)
        for sign, lit in _coefficient_atoms(ring, c):
            body = ms if lit == "1" else f"{lit}*{ms}"
            pieces.append((sign, body))
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out
