"""Homogeneous ideals of K[u_1..u_r], compared one degree at a time.

The degree-d piece of an ideal generated by homogeneous g_1..g_k is spanned
by the products m*g_i with deg m = d - deg g_i, so each piece is a finite
linear-algebra problem over K.  No Groebner bases are involved.

Two ideals generated in degrees <= D coincide as soon as their pieces agree
in every degree <= D (each is generated by pieces the other contains), so
``==`` on :class:`HomogeneousIdeal` is an exact test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, UnknownVariable
from .linalg import Field, in_span, rref
from .rings import Ring, graded_key, monomial_text, monomials_of_degree


class GradedPolyRing(Ring):
    """K[u_1..u_r] with K = F_p or Q; elements are sorted (monomial, coef) tuples."""

    def __init__(self, field: Field, variables):
        self.field = field
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.zero = ()
        self.one = (((0,) * self.nvars, field.one()),)

    @property
    def key(self):
        return ("K[]", self.field.p, self.variables)

    def text(self):
        return f"{self.field.name}[{','.join(self.variables)}]"

    def _canon(self, terms: dict):
        f = self.field
        items = [(m, f.coerce(c)) for m, c in terms.items()]
        items = [(m, c) for m, c in items if c]
        items.sort(key=lambda mc: graded_key(mc[0]))
        return tuple(items)

    def coerce(self, x):
        if isinstance(x, tuple):
            return x
        if isinstance(x, dict):
            return self._canon(x)
        return self._canon({(0,) * self.nvars: x})

    def gen(self, name: str):
        if name not in self.variables:
            raise UnknownVariable(name)
        m = tuple(1 if v == name else 0 for v in self.variables)
        return ((m, self.field.one()),)

    def monomial(self, m, coef=1):
        return self._canon({tuple(m): coef})

    def add(self, x, y):
        out = dict(x)
        for m, c in y:
            out[m] = out.get(m, 0) + c
        return self._canon(out)

    def neg(self, x):
        return self._canon({m: -c for m, c in x})

    def mul(self, x, y):
        f = self.field
        out = {}
        for m1, c1 in x:
            for m2, c2 in y:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = f.add(out.get(m, f.zero()), f.mul(c1, c2))
        return self._canon(out)

    def is_unit(self, x) -> bool:
        return len(x) == 1 and sum(x[0][0]) == 0

    def is_zero_divisor(self, x) -> bool:
        return not x

    def degree(self, x) -> int:
        return max(sum(m) for m, _ in x)

    def is_homogeneous(self, x) -> bool:
        return len({sum(m) for m, _ in x}) <= 1

    def element_text(self, x) -> str:
        if not x:
            return "0"
        terms = []
        for m, c in sorted(x, key=lambda mc: graded_key(mc[0])):
            mono = monomial_text(m, self.variables)
            cs = str(c)
            if mono == "1":
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def ideal(self, gens) -> HomogeneousIdeal:
        return HomogeneousIdeal(self, gens)

    def unit_ideal(self) -> HomogeneousIdeal:
        return HomogeneousIdeal(self, [self.one])


class HomogeneousIdeal:
    """Ideal of K[u_1..u_r] given by homogeneous generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: GradedPolyRing, gens):
        gens = [ring.coerce(g) for g in gens]
        gens = [g for g in gens if g]
        for g in gens:
            if not ring.is_homogeneous(g):
                raise ValueError(f"{ring.element_text(g)} is not homogeneous")
        self.ring = ring
        self.gens = tuple(dict.fromkeys(gens))

    def __repr__(self):
        return f"HomogeneousIdeal({self.text()} in {self.ring.text()})"

    @property
    def degrees(self):
        return [self.ring.degree(g) for g in self.gens]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def _check(self, other):
        if self.ring.field != other.ring.field:
            raise FieldMismatch(f"{self.ring.field.name} vs {other.ring.field.name}")
        if self.ring.variables != other.ring.variables:
            raise FieldMismatch("different variables")

    def __add__(self, other):
        self._check(other)
        return HomogeneousIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        R = self.ring
        return HomogeneousIdeal(R, [R.mul(a, b) for a in self.gens for b in other.gens])

    def __pow__(self, k: int):
        out = self.ring.unit_ideal()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HomogeneousIdeal):
            return NotImplemented
        D = max(self.max_degree, other.max_degree)
        return graded_equal_up_to(self, other, D)

    __hash__ = None

    def __ge__(self, other):
        return graded_contains_up_to(self, other, other.max_degree)

    def __le__(self, other):
        return other >= self

    def generators(self):
        return list(self.gens)

    def text(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.ring.element_text(g) for g in self.gens) + ")"

    def to_json(self):
        return [self.ring.element_text(g) for g in self.gens]


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    monomials: tuple
    basis: tuple
    pivots: tuple
    field: Field = Field(0)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        return in_span(vector, self.basis, self.pivots, self.field)


def _vector(x, index, length, field):
    v = [field.zero()] * length
    for m, c in x:
        v[index[m]] = c
    return tuple(v)


def graded_piece(I: HomogeneousIdeal, d: int) -> GradedPiece:
    """Echelon basis of the degree-d component of I."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    R = I.ring
    mons = tuple(monomials_of_degree(R.nvars, d))
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in I.gens:
        e = R.degree(g)
        if e > d:
            continue
        for m in monomials_of_degree(R.nvars, d - e):
            rows.append(_vector(R.mul(((m, R.field.one()),), g), index, len(mons), R.field))
    basis, pivots = rref(rows, R.field)
    return GradedPiece(d, mons, tuple(basis), tuple(pivots), R.field)


def graded_contains_up_to(I: HomogeneousIdeal, J: HomogeneousIdeal, D: int) -> bool:
    """True iff J_d is inside I_d for every d <= D."""
    I._check(J)
    for d in range(D + 1):
        pi = graded_piece(I, d)
        pj = graded_piece(J, d)
        if pj.dimension > pi.dimension:
            return False
        if any(not pi.contains(v) for v in pj.basis):
            return False
    return True


def graded_equal_up_to(I: HomogeneousIdeal, J: HomogeneousIdeal, D: int) -> bool:
    """True iff I_d = J_d for every d <= D."""
    I._check(J)
    for d in range(D + 1):
        if graded_piece(I, d).basis != graded_piece(J, d).basis:
            return False
    return True


def piece_dimensions(I: HomogeneousIdeal, D: int) -> list[int]:
    return [graded_piece(I, d).dimension for d in range(D + 1)]


def polynomial_ring(field, variables) -> GradedPolyRing:
    """``polynomial_ring(5, "uv")`` is F_5[u,v]; ``polynomial_ring(0, ...)`` is Q[...]."""
    if not isinstance(field, Field):
        field = Field(field)
    return GradedPolyRing(field, tuple(variables))
