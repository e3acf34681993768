"""Exact arithmetic over commutative unital coefficient rings.

Supported kinds: integers, integers mod n (n >= 2, zero divisors allowed),
rationals, and Laurent extensions R[x, x^-1] of any supported ring.  Every
ring has decidable exact equality; no floating point anywhere.
"""

import re
from fractions import Fraction

from .errors import ExprError, LpaError


class Ring:
    """Abstract commutative unital ring with exact element equality.

    Elements are plain immutable Python values (int, Fraction, LaurentPoly);
    all arithmetic goes through the ring object so that modular reduction and
    Laurent convolution happen in one place.
    """

    finite = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, k):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero

    def conjugate(self, a):
        """The involution used by uniqueness targets; identity except on Laurent rings."""
        return a

    def parse(self, text):
        """Parse a single coefficient literal in this ring's syntax."""
        raise NotImplementedError

    def show(self, a):
        raise NotImplementedError

    def nonzero_samples(self, limit=8):
        """(exhaustive, samples): all nonzero elements for finite rings, a fixed
        deterministic sample list otherwise."""
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class IntegerRing(Ring):
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return k

    def parse(self, text):
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ExprError(f"not an integer literal: {text!r}")
        return int(text)

    def show(self, a):
        return str(a)

    def nonzero_samples(self, limit=8):
        return False, [1, -1, 2, 3, 5, -2][:limit]

    def __repr__(self):
        return "Z"


class ModRing(Ring):
    """Integers mod n; n need not be prime, so zero divisors occur (2*2=0 mod 4)."""

    finite = True

    def __init__(self, n):
        if not isinstance(n, int) or n < 2:
            raise LpaError(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n

    zero = 0

    @property
    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def from_int(self, k):
        return k % self.n

    def parse(self, text):
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ExprError(f"not an integer literal: {text!r}")
        return int(text) % self.n

    def show(self, a):
        return str(a % self.n)

    def nonzero_samples(self, limit=None):
        return True, list(range(1, self.n))

    def _key(self):
        return (self.n,)

    def __repr__(self):
        return f"Z/{self.n}"


class RationalRing(Ring):
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return Fraction(k)

    def parse(self, text):
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ExprError(f"not a rational literal: {text!r}")
        return Fraction(text)

    def show(self, a):
        return str(a)

    def nonzero_samples(self, limit=8):
        samples = [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3, 4)]
        return False, samples[:limit]

    def __repr__(self):
        return "Q"


class LaurentPoly:
    """Immutable sparse Laurent polynomial: sorted tuple of (exponent, coefficient).

    Zero coefficients are dropped at construction, so equality and hashing are
    structural.  Arithmetic lives on LaurentRing, which knows the base ring.
    """

    __slots__ = ("terms",)

    def __init__(self, pairs, base=None):
        acc = {}
        for exp, coeff in pairs:
            if exp in acc:
                if base is None:
                    raise LpaError("duplicate exponent needs a base ring to merge")
                coeff = base.add(acc[exp], coeff)
            acc[exp] = coeff
        if base is not None:
            acc = {e: c for e, c in acc.items() if not base.is_zero(c)}
        else:
            acc = {e: c for e, c in acc.items() if c != 0 and c != Fraction(0)}
        self.terms = tuple(sorted(acc.items()))

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"LaurentPoly({list(self.terms)})"


class LaurentRing(Ring):
    """Laurent extension base[x, x^-1] with the conjugation x -> x^-1."""

    def __init__(self, base):
        self.base = base

    @property
    def zero(self):
        return LaurentPoly(())

    @property
    def one(self):
        return LaurentPoly(((0, self.base.one),), self.base)

    def monomial(self, exp, coeff=None):
        if coeff is None:
            coeff = self.base.one
        return LaurentPoly(((exp, coeff),), self.base)

    def add(self, a, b):
        return LaurentPoly(list(a.terms) + list(b.terms), self.base)

    def mul(self, a, b):
        pairs = []
        for ea, ca in a.terms:
            for eb, cb in b.terms:
                pairs.append((ea + eb, self.base.mul(ca, cb)))
        return LaurentPoly(pairs, self.base)

    def neg(self, a):
        return LaurentPoly([(e, self.base.neg(c)) for e, c in a.terms], self.base)

    def from_int(self, k):
        return LaurentPoly(((0, self.base.from_int(k)),), self.base)

    def from_base(self, c):
        return LaurentPoly(((0, c),), self.base)

    def conjugate(self, a):
        """Negate every exponent (and conjugate coefficients, for nested Laurent bases)."""
        return LaurentPoly(
            [(-e, self.base.conjugate(c)) for e, c in a.terms], self.base
        )

    def degrees(self, a):
        return [e for e, _ in a.terms]

    def coefficient(self, a, exp):
        for e, c in a.terms:
            if e == exp:
                return c
        return self.base.zero

    def is_monomial(self, a):
        return len(a.terms) == 1

    def parse(self, text):
        m = re.fullmatch(
            r"(?P<c>[+-]?\d+(?:/\d+)?|[+-])?(?P<x>x(\^(?P<e>[+-]?\d+))?)?", text
        )
        if not m or (m.group("c") is None and m.group("x") is None):
            raise ExprError(f"not a Laurent literal: {text!r}")
        c = m.group("c")
        if c in ("+", "-"):
            if m.group("x") is None:
                raise ExprError(f"not a Laurent literal: {text!r}")
            coeff = self.base.from_int(1 if c == "+" else -1)
        elif c is not None:
            coeff = self.base.parse(c)
        else:
            coeff = self.base.one
        exp = 0
        if m.group("x") is not None:
            exp = int(m.group("e")) if m.group("e") is not None else 1
        return LaurentPoly(((exp, coeff),), self.base)

    def show(self, a):
        if not a.terms:
            return "0"
        parts = []
        for exp, coeff in sorted(a.terms, reverse=True):
            cs = self.base.show(coeff)
            if exp == 0:
                parts.append(cs)
            else:
                xs = "x" if exp == 1 else f"x^{exp}"
                parts.append(xs if cs == "1" else f"-{xs}" if cs == "-1" else f"{cs}{xs}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def nonzero_samples(self, limit=8):
        _, base_samples = self.base.nonzero_samples(limit)
        samples = [self.from_base(c) for c in base_samples[:3]]
        samples += [self.monomial(1), self.monomial(-1)]
        return False, samples[:limit]

    def _key(self):
        return (self.base,)

    def __repr__(self):
        return f"Laurent({self.base!r})"


def laurent_conjugate(ring, p):
    """Exponent negation k -> -k on a Laurent element; an involution."""
    if not isinstance(ring, LaurentRing):
        raise LpaError("laurent_conjugate needs a Laurent ring")
    return ring.conjugate(p)


def ring_make(spec):
    """Build a ring from a descriptor string: Z, Z/4, Q, Laurent(Q), Laurent(Z/6)."""
    spec = spec.strip()
    if spec == "Z":
        return IntegerRing()
    if spec == "Q":
        return RationalRing()
    m = re.fullmatch(r"Z/(\d+)", spec)
    if m:
        return ModRing(int(m.group(1)))
    m = re.fullmatch(r"Laurent\((.+)\)", spec)
    if m:
        return LaurentRing(ring_make(m.group(1)))
    raise LpaError(f"unknown ring spec: {spec!r}")
