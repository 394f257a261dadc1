"""Elements of free-basis algebras over a base ring R.

:class:`PolyAlgebra` covers R[x_1..x_n] and, when given an
:class:`AffineSemigroup`, the semigroup algebra R[G] for a finitely generated
pointed subsemigroup G of Z^d.  In both cases the monomials form a free
R-basis, so the content of an element is the ideal of its coefficients.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from scipy.optimize import linprog

from .errors import SemigroupMismatch
from .rings import Ring, graded_key, monomial_text


class AffineSemigroup:
    """Subsemigroup of Z^d generated by finitely many nonzero vectors.

    Such a semigroup is automatically commutative, cancellative and
    torsion-free.  It must also be pointed (no nonzero element whose negative
    is in it), which is certified by a positive grading ``weights`` with
    ``weights . g >= 1`` on every generator.
    """

    def __init__(self, generators):
        gens = [tuple(int(c) for c in g) for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        dims = {len(g) for g in gens}
        if len(dims) != 1:
            raise ValueError("generators have different lengths")
        if any(not any(g) for g in gens):
            raise ValueError("zero generator")
        self.generators = tuple(dict.fromkeys(gens))
        self.rank = dims.pop()
        self.weights = self._find_grading()
        self._contains = lru_cache(maxsize=None)(self._contains_uncached)

    def __eq__(self, other):
        return isinstance(other, AffineSemigroup) and other.generators == self.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"AffineSemigroup({list(self.generators)})"

    def _find_grading(self):
        G = np.array(self.generators, dtype=float)
        ones = np.ones(self.rank)
        if (G @ ones >= 1).all():
            return ones
        res = linprog(np.zeros(self.rank), A_ub=-G, b_ub=-np.ones(len(G)),
                      bounds=[(None, None)] * self.rank, method="highs")
        if res.status != 0:
            raise ValueError("semigroup is not pointed (contains a unit other than 0)")
        return res.x

    def weight(self, v) -> float:
        return float(np.dot(self.weights, v))

    def _contains_uncached(self, v) -> bool:
        if not any(v):
            return True
        if self.weight(v) < 1 - 1e-9:
            return False
        return any(self._contains(tuple(a - b for a, b in zip(v, g)))
                   for g in self.generators)

    def contains(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.rank:
            return False
        return self._contains(v)

    def level_map(self, k: int) -> dict:
        """Each sum of at most k generators mapped to the fewest generators needed."""
        level = {(0,) * self.rank: 0}
        frontier = [(0,) * self.rank]
        for step in range(1, k + 1):
            nxt = []
            for v in frontier:
                for g in self.generators:
                    w = tuple(a + b for a, b in zip(v, g))
                    if w not in level:
                        level[w] = step
                        nxt.append(w)
            frontier = nxt
        return level

    def elements_up_to(self, k: int):
        """Sums of at most k generators, by level then reverse-lex."""
        level = self.level_map(k)
        return sorted(level, key=lambda v: (level[v], tuple(-e for e in v)))


class PolyAlgebra:
    """R[x_1..x_n] (``semigroup=None``) or R[G] for an affine semigroup G."""

    def __init__(self, ring: Ring, variables, semigroup: AffineSemigroup | None = None):
        self.ring = ring
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.semigroup = semigroup
        if semigroup is not None and semigroup.rank != self.nvars:
            raise ValueError("semigroup rank must match the number of variables")

    def __eq__(self, other):
        return (isinstance(other, PolyAlgebra) and self.ring == other.ring
                and self.variables == other.variables and self.semigroup == other.semigroup)

    def __hash__(self):
        return hash((self.ring, self.variables, self.semigroup))

    def __repr__(self):
        return f"PolyAlgebra({self.ring.text()}, {list(self.variables)})"

    def valid_exponent(self, e) -> bool:
        if len(e) != self.nvars:
            return False
        if self.semigroup is None:
            return all(isinstance(c, int) and c >= 0 for c in e)
        return self.semigroup.contains(e)

    def monomial_key(self, e):
        return graded_key(e)

    def __call__(self, terms=None) -> PolyElement:
        return PolyElement(self, terms or {})

    def zero(self) -> PolyElement:
        return PolyElement(self, {})

    def one(self) -> PolyElement:
        return self.const(self.ring.one)

    def const(self, c) -> PolyElement:
        return PolyElement(self, {(0,) * self.nvars: self.ring.coerce(c) if not isinstance(c, tuple) else c})

    def var(self, name: str) -> PolyElement:
        i = self.variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return PolyElement(self, {e: self.ring.one})

    def monomial(self, e, coef=None) -> PolyElement:
        return PolyElement(self, {tuple(e): self.ring.one if coef is None else coef})

    def monomials_up_to(self, degree: int, kind: str = "total"):
        """Candidate support for bounded searches, in degree-lexicographic order.

        ``kind="total"`` bounds the total degree (or, for a semigroup, the
        number of generators summed); ``kind="box"`` bounds each exponent.
        """
        if self.semigroup is not None:
            if kind != "total":
                raise ValueError("semigroup algebras only support total-degree bounds")
            return self.semigroup.elements_up_to(degree)
        if kind == "box":
            mons = list(itertools.product(range(degree + 1), repeat=self.nvars))
        elif kind == "total":
            mons = [e for e in itertools.product(range(degree + 1), repeat=self.nvars)
                    if sum(e) <= degree]
        else:
            raise ValueError(f"unknown bound kind {kind!r}")
        return sorted(mons, key=graded_key)

    def levels(self, monomials, degree: int):
        """Layer index of each monomial: total degree, or generator count for R[G]."""
        if self.semigroup is None:
            return [sum(e) for e in monomials]
        top = self.semigroup.level_map(degree)
        return [top[e] for e in monomials]


class PolyElement:
    """Finite R-combination of monomials; zero coefficients are never stored."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PolyAlgebra, terms):
        ring = algebra.ring
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if not algebra.valid_exponent(e):
                raise SemigroupMismatch(f"exponent {e} is not in the declared monoid")
            if not ring.is_zero(c):
                clean[e] = c
        self.algebra = algebra
        self.terms = dict(sorted(clean.items(), key=lambda ec: algebra.monomial_key(ec[0])))

    @property
    def ring(self) -> Ring:
        return self.algebra.ring

    def __eq__(self, other):
        if not isinstance(other, PolyElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, tuple(self.terms.items())))

    def __repr__(self):
        return f"PolyElement({self.text()})"

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficients(self):
        return list(self.terms.values())

    def support(self):
        return list(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if self.algebra != other.algebra:
            raise SemigroupMismatch("operands live in different algebras")

    def __add__(self, other):
        self._check(other)
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = R.add(out[e], c) if e in out else c
        return PolyElement(self.algebra, out)

    def __neg__(self):
        R = self.ring
        return PolyElement(self.algebra, {e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyElement):
            return poly_mul(self, other)
        return self.scale(other)

    def scale(self, a) -> PolyElement:
        """a*f for a in the base ring."""
        R = self.ring
        return PolyElement(self.algebra, {e: R.mul(a, c) for e, c in self.terms.items()})

    def map_coefficients(self, algebra: PolyAlgebra, fn) -> PolyElement:
        """Apply a ring map to every coefficient, landing in ``algebra``."""
        return PolyElement(algebra, {e: fn(c) for e, c in self.terms.items()})

    def text(self) -> str:
        if not self.terms:
            return "0"
        R = self.ring
        names = self.algebra.variables
        parts = []
        for e, c in self.terms.items():
            mono = _exp_text(e, names)
            coef = f"({R.element_text(c)})"
            parts.append(coef if mono == "1" else f"{coef}*{mono}")
        return " + ".join(parts)


def _exp_text(e, names):
    if all(x >= 0 for x in e):
        return monomial_text(e, names)
    parts = []
    for n, x in zip(names, e):
        if x == 1:
            parts.append(n)
        elif x:
            parts.append(f"{n}^{x}" if x > 0 else f"{n}^({x})")
    return "*".join(parts) if parts else "1"


def poly_mul(f: PolyElement, g: PolyElement) -> PolyElement:
    """Convolution product; exponents add componentwise."""
    f._check(g)
    R = f.ring
    out = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            c = R.mul(c1, c2)
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = R.add(out[e], c) if e in out else c
    return PolyElement(f.algebra, out)


class SeriesElement:
    """Power series known exactly below ``order`` plus a declared tail.

    ``head`` holds every term of total degree < ``order``; ``tail`` lists
    ring elements occurring as coefficients in degrees >= ``order``.  Only the
    ideal they generate matters for content.
    """

    __slots__ = ("head", "order", "tail")

    def __init__(self, head: PolyElement, order: int, tail=()):
        if head.algebra.semigroup is not None:
            raise ValueError("series are defined over N^n only")
        if any(sum(e) >= order for e in head.terms):
            raise ValueError("head has terms at or beyond the truncation order")
        R = head.ring
        self.head = head
        self.order = order
        self.tail = tuple(dict.fromkeys(t for t in tail if not R.is_zero(t)))

    @property
    def algebra(self) -> PolyAlgebra:
        return self.head.algebra

    @property
    def ring(self) -> Ring:
        return self.head.ring

    def __repr__(self):
        return f"SeriesElement({self.text()})"

    def text(self) -> str:
        R = self.ring
        var = self.algebra.variables[0] if self.algebra.nvars == 1 else "x"
        out = f"{self.head.text()} + O({var}^{self.order})"
        if self.tail:
            out += " tail {" + ", ".join(R.element_text(t) for t in self.tail) + "}"
        return out

    def __mul__(self, other):
        return series_mul(self, other)


def series_mul(a: SeriesElement, b: SeriesElement) -> SeriesElement:
    """Product of two series with empty tails, truncated at the smaller order."""
    if a.tail or b.tail:
        raise ValueError("series multiplication needs operands with empty tails")
    order = min(a.order, b.order)
    prod = poly_mul(a.head, b.head)
    head = PolyElement(prod.algebra, {e: c for e, c in prod.terms.items() if sum(e) < order})
    return SeriesElement(head, order)
