"""Text formats for rings, ring elements, polynomials and series.

Rings::

    Z            the integers
    Z/12         integers mod 12
    F5           the prime field F_5
    F2[a,b]/(a^2,a*b,b^2)    monomial quotient; also F2[a,b]/(a,b)^2
    F5[u,v], Q[u,v]          polynomial rings (graded coefficient rings)

Polynomials are ordinary expressions such as ``(a)*s + (b)*t`` in which ring
variables and algebra variables may both appear.  Series append
``+ O(x^N)`` and optionally ``tail {c1, c2}``.  Whitespace is ignored and
names are case-sensitive.  The ``text()`` methods of rings and elements emit
the canonical form accepted here.
"""

from __future__ import annotations

import re

from .errors import NonPrimeModulus, ParseError, UnknownVariable
from .linalg import Field
from .rings import (
    Integers,
    Modular,
    MonomialQuotient,
    PrimeField,
    Ring,
    is_prime,
    minimalize,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        elif m.group(3) is not None and not m.group(3).isspace():
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.next()
        if tok[1] != value:
            self.error(f"expected {value!r}", tok)
        return tok

    def accept(self, value) -> bool:
        if self.peek()[1] == value and self.peek()[0] == "op":
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        tok = self.next()
        if tok[0] != "num":
            self.error("expected an integer", tok)
        return sign * tok[1]

    def done(self):
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")


# ---------------------------------------------------------------- rings


def _ideal_items(P: _Parser, variables):
    """Monomial generators of ``( item, ... )^k``."""
    P.expect("(")
    gens = []
    while True:
        if P.peek()[1] == "(":
            gens.extend(_ideal_items(P, variables))
        else:
            gens.append(_monomial(P, variables))
        if not P.accept(","):
            break
    P.expect(")")
    if P.accept("^"):
        k = P.integer()
        if k < 1:
            P.error("ideal power must be positive")
        powers = [(0,) * len(variables)]
        for _ in range(k):
            powers = [tuple(a + b for a, b in zip(x, g)) for x in powers for g in gens]
        gens = powers
    return list(minimalize(gens))


def _monomial(P: _Parser, variables):
    exp = [0] * len(variables)
    while True:
        tok = P.next()
        if tok[0] == "num" and tok[1] == 1:
            pass
        elif tok[0] == "name":
            if tok[1] not in variables:
                raise ParseError(f"unknown variable {tok[1]!r}", P.text, tok[2])
            e = P.integer() if P.accept("^") else 1
            if e < 0:
                P.error("negative exponent in a relation")
            exp[variables.index(tok[1])] += e
        else:
            P.error("expected a monomial", tok)
        if not P.accept("*"):
            return tuple(exp)


def _prime(P: _Parser, tok, name: str) -> int:
    digits = name[1:]
    if not digits.isdigit():
        P.error(f"unknown ring {name!r}", tok)
    p = int(digits)
    if not is_prime(p):
        raise ParseError(f"{p} is not prime", P.text, tok[2])
    return p


def parse_ring(text: str) -> Ring:
    """Ring from its text form; see the module docstring for the grammar."""
    P = _Parser(text)
    tok = P.next()
    if tok[0] != "name":
        P.error("expected a ring name", tok)
    name = tok[1]
    if name == "Z":
        if P.accept("/"):
            at = P.peek()
            n = P.integer()
            if n < 2:
                P.error("modulus must be at least 2", at)
            P.done()
            return Modular(n)
        P.done()
        return Integers()
    if name == "Q":
        field = Field(0)
    elif name.startswith("F"):
        field = Field(_prime(P, tok, name))
    else:
        P.error(f"unknown ring {name!r}", tok)
    if P.peek()[1] != "[":
        P.done()
        if field.p == 0:
            P.error("Q is not supported as a base ring on its own")
        return PrimeField(field.p)
    P.expect("[")
    variables = []
    while True:
        t = P.next()
        if t[0] != "name":
            P.error("expected a variable name", t)
        if t[1] in variables:
            P.error(f"duplicate variable {t[1]!r}", t)
        variables.append(t[1])
        if not P.accept(","):
            break
    P.expect("]")
    if not P.accept("/"):
        P.done()
        from .graded import GradedPolyRing

        return GradedPolyRing(field, variables)
    if field.p == 0:
        P.error("quotients are only supported over prime fields")
    rels = _ideal_items(P, variables)
    P.done()
    try:
        return MonomialQuotient(field.p, variables, rels)
    except NonPrimeModulus as exc:
        raise ParseError(str(exc), text, 0) from exc


# ------------------------------------------------------------ expressions


class _Raw:
    """Laurent-style polynomial over a ring, used only while parsing."""

    __slots__ = ("ring", "n", "terms")

    def __init__(self, ring, n, terms):
        self.ring = ring
        self.n = n
        self.terms = {e: c for e, c in terms.items() if not ring.is_zero(c)}

    @classmethod
    def const(cls, ring, n, c):
        return cls(ring, n, {(0,) * n: c})

    def __add__(self, other):
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = R.add(out[e], c) if e in out else c
        return _Raw(R, self.n, out)

    def __neg__(self):
        return _Raw(self.ring, self.n, {e: self.ring.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        R = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = R.mul(c1, c2)
                out[e] = R.add(out[e], c) if e in out else c
        return _Raw(R, self.n, out)

    def power(self, k, P, tok):
        if k < 0:
            if len(self.terms) != 1 or next(iter(self.terms.values())) != self.ring.one:
                P.error("negative powers are only allowed on monomials", tok)
            (e, c), = self.terms.items()
            return _Raw(self.ring, self.n, {tuple(x * k for x in e): c})
        out = _Raw.const(self.ring, self.n, self.ring.one)
        for _ in range(k):
            out = out * self
        return out


def _ring_atom(ring, name):
    if hasattr(ring, "gen") and name in getattr(ring, "variables", ()):
        return ring.gen(name)
    return None


class _ExprParser(_Parser):
    def __init__(self, text, ring, algebra_vars=()):
        super().__init__(text)
        self.ring = ring
        self.vars = tuple(algebra_vars)
        self.n = len(self.vars)

    def expr(self):
        out = self.term()
        while True:
            if self.accept("+"):
                out = out + self.term()
            elif self.peek()[1] == "-" and self.peek()[0] == "op":
                self.next()
                out = out + (-self.term())
            else:
                return out

    def term(self):
        out = self.unary()
        while True:
            if self.accept("*"):
                out = out * self.unary()
            elif self.peek()[1] == "/" and self.peek()[0] == "op":
                tok = self.next()
                out = out * self.inverse(self.unary(), tok)
            else:
                return out

    def inverse(self, raw, tok):
        """Inverse of a constant: exact over Q, modular for units of Z/n."""
        R = self.ring
        zero_exp = (0,) * self.n
        if set(raw.terms) - {zero_exp}:
            self.error("can only divide by a constant", tok)
        c = raw.terms.get(zero_exp, R.zero)
        field = getattr(R, "field", None)
        if isinstance(c, tuple) and field is not None and len(c) == 1 and not any(c[0][0]):
            if field.p == 0 or c[0][1] % field.p:
                return _Raw.const(R, self.n, R.coerce(field.inv(c[0][1])))
        elif isinstance(c, int) and isinstance(R, Modular) and R.is_unit(c):
            return _Raw.const(R, self.n, pow(c, -1, R.n))
        self.error("division by a non-invertible constant", tok)

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if self.accept("^"):
            if self.accept("("):
                k = self.integer()
                self.expect(")")
            else:
                k = self.integer()
            return base.power(k, self, tok)
        return base

    def atom(self):
        tok = self.next()
        R, n = self.ring, self.n
        if tok[0] == "num":
            return _Raw.const(R, n, R.coerce(tok[1]))
        if tok[0] == "name":
            name = tok[1]
            if name in self.vars:
                e = tuple(1 if v == name else 0 for v in self.vars)
                return _Raw(R, n, {e: R.one})
            g = _ring_atom(R, name)
            if g is not None:
                return _Raw.const(R, n, g)
            raise UnknownVariable(f"unknown variable {name!r} (line 1, column {tok[2] + 1})")
        if tok[1] == "(":
            out = self.expr()
            self.expect(")")
            return out
        self.error("expected an expression", tok)


def parse_element(text: str, ring: Ring):
    """Ring element from an expression in the ring's variables."""
    P = _ExprParser(text, ring)
    raw = P.expr()
    P.done()
    return raw.terms.get((), ring.zero)


def parse_poly(text: str, algebra):
    """Element of ``algebra`` (a :class:`~ohmrush.algebra.PolyAlgebra`) from text."""
    from .algebra import PolyElement

    P = _ExprParser(text, algebra.ring, algebra.variables)
    raw = P.expr()
    P.done()
    return PolyElement(algebra, raw.terms)


_SERIES = re.compile(
    r"^(?P<head>.*?)\+\s*O\(\s*(?P<var>[A-Za-z_]\w*)\s*\^\s*(?P<order>\d+)\s*\)"
    r"\s*(?:tail\s*\{(?P<tail>[^}]*)\})?\s*$",
    re.S,
)


def parse_series(text: str, algebra):
    """Series ``head + O(x^N) tail {c, ...}`` over ``algebra``."""
    from .algebra import SeriesElement

    m = _SERIES.match(text)
    if m is None:
        raise ParseError("expected '<head> + O(x^N)' with an optional tail", text, len(text))
    head = parse_poly(m.group("head"), algebra)
    tail = []
    if m.group("tail") and m.group("tail").strip():
        offset = m.start("tail")
        for part in _split_top(m.group("tail")):
            try:
                tail.append(parse_element(part, algebra.ring))
            except ParseError as exc:
                raise ParseError(str(exc), text, offset) from exc
    return SeriesElement(head, int(m.group("order")), tail)


def _split_top(s: str):
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p for p in parts if p.strip()]


def emit_ring(ring: Ring) -> str:
    return ring.text()


def emit(obj) -> str:
    """Canonical text of a ring, polynomial, series or ideal."""
    return obj.text()
