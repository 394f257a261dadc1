"""Concretely presented base rings and their exact arithmetic.

Four presentations are supported:

* ``PrimeField(p)``: F_p, elements are ints in ``[0, p)``.
* ``Integers()``: Z, elements are Python ints.
* ``Modular(n)``: Z/n, elements are ints in ``[0, n)``.
* ``MonomialQuotient(p, vars, J)``: F_p[vars]/J for a monomial ideal J of
  finite colength.  Elements are coefficient tuples indexed by the standard
  monomials (those outside J), ordered degree-lexicographically.

Elements are plain hashable values, so two elements are equal iff their
representations are equal.  All arithmetic goes through the ring object.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import (
    BudgetExceeded,
    InfiniteColength,
    NonPrimeModulus,
    UnknownVariable,
    UnsupportedRing,
)
from .linalg import Field, nullspace

DEFAULT_ELEMENT_BUDGET = 2**20
TABLE_BASIS_LIMIT = 64

Monomial = tuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, smallest prime first."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def graded_key(m: Monomial):
    """Sort key for degree-lexicographic order (1, a, b, a^2, ab, b^2, ...)."""
    return (sum(m), tuple(-e for e in m))


def divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree d, in degree-lexicographic order."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


def monomial_text(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(gens) -> tuple:
    """Minimal monomial generating set, degree-lexicographically sorted."""
    gens = sorted(set(tuple(g) for g in gens), key=graded_key)
    out = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class RingSpec:
    """Declarative description of a base ring.

    ``kind`` is one of ``"prime_field"``, ``"integers"``, ``"modular"``,
    ``"monomial_quotient"``.
    """

    kind: str
    p: int = 0
    n: int = 0
    variables: tuple = ()
    relations: tuple = field(default=())

    @classmethod
    def prime_field(cls, p):
        return cls("prime_field", p=p)

    @classmethod
    def integers(cls):
        return cls("integers")

    @classmethod
    def modular(cls, n):
        return cls("modular", n=n)

    @classmethod
    def monomial_quotient(cls, p, variables, relations):
        return cls("monomial_quotient", p=p, variables=tuple(variables),
                   relations=tuple(tuple(r) for r in relations))


def make_ring(spec):
    """Build a ring from a :class:`RingSpec` or a ring-grammar string."""
    if isinstance(spec, str):
        from .grammar import parse_ring

        return parse_ring(spec)
    if spec.kind == "prime_field":
        return PrimeField(spec.p)
    if spec.kind == "integers":
        return Integers()
    if spec.kind == "modular":
        return Modular(spec.n)
    if spec.kind == "monomial_quotient":
        return MonomialQuotient(spec.p, spec.variables, spec.relations)
    raise ValueError(f"unknown ring kind {spec.kind!r}")


class Ring:
    """Common interface.  Subclasses fill in the arithmetic."""

    is_finite = False
    variables: tuple = ()

    def __repr__(self):
        return f"<{type(self).__name__} {self.text()}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def pow(self, x, e: int):
        out = self.one
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def is_zero(self, x) -> bool:
        return x == self.zero

    def sum(self, xs):
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out

    def size(self) -> int:
        raise UnsupportedRing(f"{self.text()} is infinite")

    def elements(self, budget: int = DEFAULT_ELEMENT_BUDGET):
        size = self.size()
        if size > budget:
            raise BudgetExceeded(f"{self.text()} has {size} elements (budget {budget})")
        return self._elements()

    @cached_property
    def tables(self):
        """Lazily built lookup tables for exhaustive searches (finite rings)."""
        from .tables import FiniteRingTables

        return FiniteRingTables(self)


class Modular(Ring):
    """Z/n."""

    is_finite = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.n = n
        self.zero = 0
        self.one = 1

    @property
    def key(self):
        return ("Z/", self.n)

    @property
    def spec(self):
        return RingSpec.modular(self.n)

    def text(self):
        return f"Z/{self.n}"

    def coerce(self, x):
        return int(x) % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return -x % self.n

    def mul(self, x, y):
        return x * y % self.n

    def size(self):
        return self.n

    def _elements(self):
        return list(range(self.n))

    def element_text(self, x) -> str:
        return str(x)

    def is_unit(self, x) -> bool:
        return math.gcd(x, self.n) == 1

    def is_zero_divisor(self, x) -> bool:
        return math.gcd(x, self.n) != 1

    @property
    def is_local(self) -> bool:
        return len(factorize(self.n)) == 1

    @property
    def residue_characteristic(self) -> int:
        return factorize(self.n)[0][0]

    def quotient(self, d: int):
        """Z/n -> Z/gcd(d, n), returning ``(ring, projection)``."""
        d = math.gcd(d, self.n)
        if d == 1:
            raise ValueError("quotient by the unit ideal is the zero ring")
        target = PrimeField(d) if (d == self.n and isinstance(self, PrimeField)) else Modular(d)
        return target, (lambda x: x % d)


class PrimeField(Modular):
    """F_p; arithmetic is that of Z/p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        super().__init__(p)
        self.p = p

    @property
    def key(self):
        return ("F", self.n)

    @property
    def spec(self):
        return RingSpec.prime_field(self.n)

    def text(self):
        return f"F{self.n}"


class Integers(Ring):
    """Z.  Ideals are represented by their nonnegative generator."""

    key = ("Z",)
    zero = 0
    one = 1

    @property
    def spec(self):
        return RingSpec.integers()

    def text(self):
        return "Z"

    def coerce(self, x):
        return int(x)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def element_text(self, x) -> str:
        return str(x)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def is_zero_divisor(self, x) -> bool:
        return x == 0

    is_local = False


class MonomialQuotient(Ring):
    """F_p[y_1..y_m]/J with J a monomial ideal containing a power of every y_i."""

    is_finite = True

    def __init__(self, p: int, variables, relations):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.field = Field(p)
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        nv = len(self.variables)
        rels = [tuple(r) for r in relations]
        for r in rels:
            if len(r) != nv:
                raise ValueError("relation exponent length does not match variables")
        self.relations = minimalize(rels)
        bounds = []
        for i in range(nv):
            pure = [r[i] for r in self.relations
                    if all(e == 0 for j, e in enumerate(r) if j != i) and r[i] > 0]
            if not pure:
                raise InfiniteColength(
                    f"no pure power of {self.variables[i]} among the relations")
            bounds.append(min(pure))
        if any(all(e == 0 for e in r) for r in self.relations):
            raise ValueError("relations contain 1; the quotient is the zero ring")
        basis = [m for m in itertools.product(*(range(b) for b in bounds))
                 if not self.in_relations(m)]
        basis.sort(key=graded_key)
        self.basis = tuple(basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.zero = (0,) * self.dim
        self.one = tuple(1 if i == 0 else 0 for i in range(self.dim))
        self._triples = None
        if self.dim <= TABLE_BASIS_LIMIT:
            self._triples = self._build_triples()

    @property
    def key(self):
        return ("MQ", self.p, self.variables, self.relations)

    @property
    def spec(self):
        return RingSpec.monomial_quotient(self.p, self.variables, self.relations)

    def text(self):
        rels = ",".join(monomial_text(r, self.variables) for r in self.relations)
        return f"F{self.p}[{','.join(self.variables)}]/({rels})"

    def in_relations(self, m: Monomial) -> bool:
        return any(divides(r, m) for r in self.relations)

    def _product_index(self, i, j):
        m = tuple(a + b for a, b in zip(self.basis[i], self.basis[j]))
        return self.index.get(m, -1)

    def _build_triples(self):
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                k = self._product_index(i, j)
                if k >= 0:
                    out.append((i, j, k))
        return tuple(out)

    def coerce(self, x):
        if isinstance(x, tuple):
            if len(x) != self.dim:
                raise ValueError("coefficient vector has wrong length")
            return tuple(c % self.p for c in x)
        return tuple((int(x) % self.p) if i == 0 else 0 for i in range(self.dim))

    def add(self, x, y):
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def neg(self, x):
        p = self.p
        return tuple(-a % p for a in x)

    def scale(self, c: int, x):
        p = self.p
        return tuple(c * a % p for a in x)

    def mul(self, x, y):
        p = self.p
        out = [0] * self.dim
        if self._triples is not None:
            for i, j, k in self._triples:
                a = x[i]
                if a:
                    b = y[j]
                    if b:
                        out[k] += a * b
        else:
            nx = [i for i, a in enumerate(x) if a]
            ny = [j for j, b in enumerate(y) if b]
            for i in nx:
                for j in ny:
                    k = self._product_index(i, j)
                    if k >= 0:
                        out[k] += x[i] * y[j]
        return tuple(c % p for c in out)

    def monomial(self, m: Monomial, coef: int = 1):
        """Image of ``coef * y^m``; zero when m lies in J."""
        m = tuple(m)
        if len(m) != len(self.variables):
            raise ValueError("exponent length does not match variables")
        k = self.index.get(m)
        if k is None:
            return self.zero
        out = [0] * self.dim
        out[k] = coef % self.p
        return tuple(out)

    def gen(self, name: str):
        if name not in self.variables:
            raise UnknownVariable(name)
        m = tuple(1 if v == name else 0 for v in self.variables)
        return self.monomial(m)

    def size(self):
        return self.p**self.dim

    def _elements(self):
        return list(itertools.product(range(self.p), repeat=self.dim))

    def element_text(self, x) -> str:
        terms = []
        for c, m in zip(x, self.basis):
            if not c:
                continue
            mono = monomial_text(m, self.variables)
            if mono == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    is_local = True

    @property
    def residue_characteristic(self) -> int:
        return self.p

    def is_unit(self, x) -> bool:
        return x[0] != 0

    def multiplication_matrix(self, x):
        """Matrix (rows = output coords) of ``z -> x*z``."""
        cols = [self.mul(x, e) for e in self.unit_vectors]
        return [tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim)]

    @cached_property
    def unit_vectors(self):
        return tuple(tuple(1 if i == j else 0 for i in range(self.dim))
                     for j in range(self.dim))

    def is_zero_divisor(self, x) -> bool:
        return bool(nullspace(self.multiplication_matrix(x), self.dim, self.field))

    @cached_property
    def loewy_length(self) -> int:
        """Least N with m^N = 0."""
        return max(sum(m) for m in self.basis) + 1

    def quotient(self, extra_relations):
        """Quotient by further monomials; returns ``(ring, projection)``."""
        target = MonomialQuotient(self.p, self.variables,
                                  tuple(self.relations) + tuple(tuple(r) for r in extra_relations))
        keep = [(i, target.index[m]) for i, m in enumerate(self.basis) if m in target.index]

        def project(x):
            out = [0] * target.dim
            for i, j in keep:
                out[j] = x[i]
            return tuple(out)

        return target, project

    def quotient_by_max_power(self, j: int):
        """R/m^j."""
        if j < 1:
            raise ValueError("need j >= 1")
        return self.quotient(monomials_of_degree(len(self.variables), j))

    def normal_form(self, expr):
        """Reduce a formal polynomial ``{exponent tuple: int}`` into the ring."""
        out = [0] * self.dim
        for m, c in expr.items():
            k = self.index.get(tuple(m))
            if k is not None:
                out[k] += c
        return tuple(c % self.p for c in out)


def normal_form(expr, ring: Ring):
    """Canonical element of ``ring`` for ``expr``.

    ``expr`` is an int, a ring-grammar string such as ``"a*b + 1"``, or for
    monomial quotients a mapping from exponent tuples to integer coefficients.
    """
    if isinstance(expr, str):
        from .grammar import parse_element

        return parse_element(expr, ring)
    if isinstance(expr, dict):
        if not isinstance(ring, MonomialQuotient):
            if any(any(m) for m in expr):
                raise UnknownVariable(f"{ring.text()} has no variables")
            return ring.coerce(sum(expr.values()))
        return ring.normal_form(expr)
    return ring.coerce(expr)


def is_zero_divisor(r, ring: Ring) -> bool:
    """True iff some nonzero s has r*s = 0."""
    return ring.is_zero_divisor(r)


def is_unit(r, ring: Ring) -> bool:
    return ring.is_unit(r)


@dataclass(frozen=True)
class LocalFactor:
    """One factor Z/p^k of the Chinese-remainder splitting of Z/n."""

    p: int
    k: int
    n: int
    idempotent: int

    @property
    def order(self) -> int:
        return self.p**self.k

    @cached_property
    def ring(self) -> Modular:
        return Modular(self.order)

    def project(self, x: int) -> int:
        return x % self.order


@lru_cache(maxsize=None)
def _crt(n: int):
    factors = []
    for p, k in factorize(n):
        q = p**k
        rest = n // q
        # e = 1 mod q, 0 mod rest
        e = rest * pow(rest, -1, q) % n if rest > 1 else 1 % n
        factors.append(LocalFactor(p, k, n, e))
    return tuple(factors)


def crt_decompose(ring: Modular) -> list[LocalFactor]:
    """Split Z/n into its local factors Z/p^k."""
    if not isinstance(ring, Modular):
        raise UnsupportedRing("CRT decomposition needs Z/n")
    return list(_crt(ring.n))


def crt_reconstruct(factors, residues) -> int:
    """Element of Z/n with the given images in each factor."""
    n = factors[0].n
    return sum(f.idempotent * r for f, r in zip(factors, residues)) % n
