"""Finitely generated ideals of the base rings as canonical values.

Representations (the ``key`` of an :class:`Ideal`):

* Z: the nonnegative generator.
* Z/n and F_p: the divisor d of n with I = (d); d = n is the zero ideal.
* monomial quotients: the reduced echelon basis of I as an F_p-subspace,
  columns in the ring's degree-lexicographic standard-monomial order.

Equality of ideals is equality of keys.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotLocal, RingMismatch
from .linalg import in_span, nullspace, rref
from .rings import Integers, Modular, MonomialQuotient, Ring


class Ideal:
    __slots__ = ("ring", "key")

    def __init__(self, ring: Ring, key):
        self.ring = ring
        self.key = key

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.key == other.key

    def __hash__(self):
        return hash((self.ring.key, self.key))

    def __repr__(self):
        return f"Ideal({self.text()} in {self.ring.text()})"

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, k: int):
        return ideal_power(self, k)

    def __le__(self, other):
        return ideal_contains(other, self)

    def __ge__(self, other):
        return ideal_contains(self, other)

    def __contains__(self, x):
        return contains_element(self, x)

    @property
    def is_zero(self) -> bool:
        ring = self.ring
        if isinstance(ring, Modular):
            return self.key == ring.n
        if isinstance(ring, Integers):
            return self.key == 0
        return not self.key

    @property
    def is_unit(self) -> bool:
        ring = self.ring
        if isinstance(ring, MonomialQuotient):
            return len(self.key) == ring.dim
        return self.key == 1

    @property
    def basis(self):
        """Echelon basis rows (monomial quotients) or the single generator."""
        if isinstance(self.ring, MonomialQuotient):
            return list(self.key)
        return [] if self.is_zero else [self.key]

    @property
    def dimension(self) -> int:
        """F_p-dimension for monomial quotients; log_p of the size for Z/p^k."""
        ring = self.ring
        if isinstance(ring, MonomialQuotient):
            return len(self.key)
        if isinstance(ring, Modular):
            return _length(ring.n // self.key)
        raise NotImplementedError("ideals of Z are infinite")

    def generators(self):
        """A small generating set: minimal in local rings."""
        ring = self.ring
        if isinstance(ring, MonomialQuotient):
            return minimal_generators(self)
        return self.basis

    def text(self) -> str:
        gens = self.generators()
        return "(" + ", ".join(self.ring.element_text(g) for g in gens) + ")" if gens else "(0)"

    def to_json(self):
        return [self.ring.element_text(g) for g in self.generators()]

    def elements(self):
        """Every element of a finite ideal (used by exhaustive oracles)."""
        ring = self.ring
        if isinstance(ring, Modular):
            return sorted(set(range(0, ring.n, self.key)))
        if isinstance(ring, MonomialQuotient):
            import itertools

            out = set()
            rows = self.key
            for coeffs in itertools.product(range(ring.p), repeat=len(rows)):
                v = ring.zero
                for c, r in zip(coeffs, rows):
                    if c:
                        v = ring.add(v, ring.scale(c, r))
                out.add(v)
            return sorted(out)
        raise NotImplementedError("ideals of Z are infinite")


def _length(m: int) -> int:
    # number of prime factors of m counted with multiplicity
    out = 0
    d = 2
    while m > 1:
        while m % d == 0:
            m //= d
            out += 1
        d += 1
    return out


def _check_same(*ideals):
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise RingMismatch(f"{ring.text()} vs {I.ring.text()}")
    return ring


@lru_cache(maxsize=200_000)
def _mq_close(ring: MonomialQuotient, gens: tuple) -> tuple:
    field = ring.field
    rows, _ = rref(gens, field)
    gens_of_ring = [ring.gen(v) for v in ring.variables]
    while True:
        new = list(rows)
        for r in rows:
            for y in gens_of_ring:
                new.append(ring.mul(r, y))
        nxt, _ = rref(new, field)
        if len(nxt) == len(rows):
            return tuple(nxt)
        rows = nxt


def ideal_span(ring: Ring, gens=()) -> Ideal:
    """Smallest ideal containing ``gens``; empty ``gens`` give the zero ideal."""
    gens = [ring.coerce(g) if not isinstance(g, tuple) else g for g in gens]
    if isinstance(ring, Integers):
        d = 0
        for g in gens:
            d = math.gcd(d, g)
        return Ideal(ring, d)
    if isinstance(ring, Modular):
        d = ring.n
        for g in gens:
            d = math.gcd(d, g)
        return Ideal(ring, d)
    if isinstance(ring, MonomialQuotient):
        nonzero = tuple(sorted(set(g for g in gens if any(g))))
        if not nonzero:
            return Ideal(ring, ())
        return Ideal(ring, _mq_close(ring, nonzero))
    if hasattr(ring, "ideal"):
        return ring.ideal(gens)
    raise TypeError(f"no ideal arithmetic for {ring!r}")


def zero_ideal(ring: Ring) -> Ideal:
    return ideal_span(ring, [])


def unit_ideal(ring: Ring) -> Ideal:
    return ideal_span(ring, [ring.one])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same(I, J)
    if isinstance(ring, MonomialQuotient):
        rows, _ = rref(list(I.key) + list(J.key), ring.field)
        return Ideal(ring, tuple(rows))
    return Ideal(ring, math.gcd(I.key, J.key))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same(I, J)
    if isinstance(ring, Integers):
        return Ideal(ring, I.key * J.key)
    if isinstance(ring, Modular):
        return Ideal(ring, math.gcd(I.key * J.key, ring.n))
    prods = [ring.mul(a, b) for a in I.key for b in J.key]
    return ideal_span(ring, prods)


def ideal_power(I: Ideal, k: int) -> Ideal:
    out = unit_ideal(I.ring)
    for _ in range(k):
        out = ideal_product(out, I)
    return out


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_same(I, J)
    return I.key == J.key


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is contained in I."""
    ring = _check_same(I, J)
    if isinstance(ring, MonomialQuotient):
        return ideal_sum(I, J).key == I.key
    if I.key == 0:
        return J.key == 0
    return J.key % I.key == 0


def contains_element(I: Ideal, x) -> bool:
    ring = I.ring
    if isinstance(ring, MonomialQuotient):
        if not I.key:
            return not any(x)
        pivots = [next(i for i, c in enumerate(r) if c) for r in I.key]
        return in_span(x, I.key, pivots, ring.field)
    if I.key == 0:
        return x == 0
    return x % I.key == 0


def annihilator(I: Ideal) -> Ideal:
    """{z : z*g = 0 for every g in I}."""
    ring = I.ring
    if isinstance(ring, Integers):
        return Ideal(ring, 1 if I.key == 0 else 0)
    if isinstance(ring, Modular):
        return Ideal(ring, ring.n // I.key)
    if not I.key:
        return unit_ideal(ring)
    eqs = []
    for v in I.key:
        eqs.extend(ring.multiplication_matrix(v))
    kernel = nullspace(eqs, ring.dim, ring.field)
    rows, _ = rref(kernel, ring.field)
    return Ideal(ring, tuple(rows))


def _require_local(ring: Ring):
    if isinstance(ring, Integers) or not getattr(ring, "is_local", False):
        raise NotLocal(f"{ring.text()} is not local")


def maximal_ideal(ring: Ring) -> Ideal:
    _require_local(ring)
    if isinstance(ring, Modular):
        return Ideal(ring, ring.residue_characteristic)
    return ideal_span(ring, [ring.gen(v) for v in ring.variables])


def socle(ring: Ring) -> Ideal:
    """ann(m) of an artinian local ring."""
    return annihilator(maximal_ideal(ring))


def socle_dimension(ring: Ring) -> int:
    """Length of the socle, i.e. its dimension over the residue field."""
    S = socle(ring)
    if isinstance(ring, Modular):
        return 0 if S.is_zero else 1
    return S.dimension


def min_generators(I: Ideal) -> int:
    """Minimal number of generators: dim I/mI (or 0/1 over Z)."""
    ring = I.ring
    if isinstance(ring, Integers):
        return 0 if I.key == 0 else 1
    _require_local(ring)
    if isinstance(ring, Modular):
        return 0 if I.is_zero else 1
    mI = ideal_product(maximal_ideal(ring), I)
    return len(I.key) - len(mI.key)


def minimal_generators(I: Ideal):
    """Elements of the echelon basis whose images form a basis of I/mI."""
    ring = I.ring
    if not isinstance(ring, MonomialQuotient):
        return I.basis
    mI = ideal_product(maximal_ideal(ring), I)
    chosen = []
    current = list(mI.key)
    rank = len(rref(current, ring.field)[0])
    for row in I.key:
        trial = current + [row]
        r = len(rref(trial, ring.field)[0])
        if r > rank:
            chosen.append(row)
            current, rank = trial, r
    return chosen


def is_principal(I: Ideal) -> bool:
    return min_generators(I) <= 1


def is_gorenstein(ring: Ring) -> bool:
    """Artinian local ring with one-dimensional socle."""
    return socle_dimension(ring) == 1


def double_annihilator_closed(I: Ideal) -> bool:
    _require_local(I.ring)
    return annihilator(annihilator(I)) == I


def ideal_image(I: Ideal, target: Ring, project) -> Ideal:
    """Image of I under a surjection ``project`` onto ``target``."""
    return ideal_span(target, [project(g) for g in I.basis])


def cyclic_ideals(ring: Ring):
    """Every principal ideal of a finite ring, each listed once."""
    seen = {}
    for x in ring.elements():
        I = ideal_span(ring, [x])
        seen.setdefault(I.key, I)
    return list(seen.values())
