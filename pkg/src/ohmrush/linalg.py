"""Exact row reduction over F_p and the rationals.

Vectors are plain tuples; matrices are lists of rows.  Matrices here are
small (a few dozen columns), so pure Python beats numpy's object arrays.
"""

from __future__ import annotations

from fractions import Fraction


class Field:
    """Coefficient field: ``Field(p)`` is F_p for prime p, ``Field(0)`` is Q."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        self.p = p

    def __repr__(self):
        return f"Field({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    def coerce(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if self.p:
            return pow(x, -1, self.p)
        return 1 / x

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.p else x - y

    def mul(self, x, y):
        return (x * y) % self.p if self.p else x * y

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)


def rref(rows, field: Field):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``.

    Zero rows are dropped, so ``len(rows)`` is the rank.  The result depends
    only on the row space, which makes it a canonical key for subspaces.
    """
    p = field.p
    m = [list(r) for r in rows if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        if p:
            m[r] = [x * inv % p for x in m[r]]
        else:
            m[r] = [x * inv for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                if p:
                    m[i] = [(a - factor * b) % p for a, b in zip(m[i], row)]
                else:
                    m[i] = [a - factor * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[0])


def nullspace(matrix, ncols: int, field: Field):
    """Basis of ``{x : matrix @ x = 0}`` for a matrix with ``ncols`` columns."""
    reduced, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for row, pc in zip(reduced, pivots):
            if row[fc]:
                v[pc] = field.sub(field.zero(), row[fc])
        basis.append(tuple(v))
    return basis


def in_span(vector, basis_rref, pivots, field: Field) -> bool:
    """Membership test against a basis already in reduced echelon form."""
    v = list(vector)
    for row, pc in zip(basis_rref, pivots):
        if v[pc]:
            factor = v[pc]
            v = [field.sub(a, field.mul(factor, b)) for a, b in zip(v, row)]
    return not any(v)
