from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.matrices import DomainMatrix

from ohmrush import (
    FieldMismatch,
    HomogeneousIdeal,
    graded_contains_up_to,
    graded_equal_up_to,
    graded_piece,
    polynomial_ring,
)
from ohmrush.rings import monomials_of_degree


def ring_and_gens(p):
    P = polynomial_ring(p, "uv")
    u, v = P.gen("u"), P.gen("v")
    return P, u, v


def sympy_piece_rank(P, gens, d):
    """Rank of the degree-d piece computed with sympy polynomials and DomainMatrix."""
    syms = sympy.symbols(P.variables)
    dom = sympy.QQ if P.field.p == 0 else sympy.GF(P.field.p)
    mons = monomials_of_degree(P.nvars, d)
    rows = []
    for g in gens:
        expr = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                   * sympy.prod(s**e for s, e in zip(syms, m)) for m, c in g)
        e = P.degree(g)
        if e > d:
            continue
        for m in monomials_of_degree(P.nvars, d - e):
            prod = sympy.Poly(expr * sympy.prod(s**k for s, k in zip(syms, m)), *syms)
            coeffs = dict(zip(prod.monoms(), prod.coeffs()))
            rows.append([dom.convert(coeffs.get(mm, 0)) for mm in mons])
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(mons)), dom).rank()


@pytest.mark.parametrize("p", [5, 0])
def test_piece_examples(p):
    P, u, v = ring_and_gens(p)
    m2 = HomogeneousIdeal(P, [u, v]) ** 2
    assert graded_piece(m2, 2).dimension == 3
    J = HomogeneousIdeal(P, [P.mul(u, v), P.add(P.mul(u, u), P.mul(v, v))])
    assert graded_piece(J, 2).dimension == 2
    assert graded_piece(J, 1).dimension == 0 and graded_piece(J, 0).dimension == 0
    assert not graded_equal_up_to(m2, J, 2)
    assert graded_equal_up_to(J, J, 5)
    m3 = HomogeneousIdeal(P, [u, v]) ** 3
    assert graded_equal_up_to(m3, HomogeneousIdeal(P, [u, v]) * J, 3)
    assert graded_piece(m3, 3).dimension == 4
    assert graded_contains_up_to(m2, J, 3) and not graded_contains_up_to(J, m2, 2)


def test_h_branch_piece():
    P, u, v = ring_and_gens(5)
    K = HomogeneousIdeal(P, [P.mul(u, v), P.mul(v, v)])
    assert graded_piece(K, 2).dimension == 2
    assert not graded_contains_up_to(K, HomogeneousIdeal(P, [P.mul(u, u)]), 2)


def test_field_mismatch_and_homogeneity():
    P5, u5, _ = ring_and_gens(5)
    PQ, uQ, _ = ring_and_gens(0)
    with pytest.raises(FieldMismatch):
        graded_equal_up_to(HomogeneousIdeal(P5, [u5]), HomogeneousIdeal(PQ, [uQ]), 2)
    with pytest.raises(ValueError):
        HomogeneousIdeal(P5, [P5.add(u5, P5.one)])
    assert HomogeneousIdeal(P5, [P5.zero, u5]).gens == (u5,)


def _homogeneous(draw, P, max_deg):
    d = draw(st.integers(0, max_deg))
    mons = monomials_of_degree(P.nvars, d)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(mons), max_size=len(mons)))
    return P.coerce(dict(zip(mons, coeffs)))


@st.composite
def ideal_pairs(draw):
    nv = draw(st.integers(1, 3))
    p = draw(st.sampled_from([2, 3, 5, 0]))
    P = polynomial_ring(p, "uvw"[:nv])
    I = HomogeneousIdeal(P, [_homogeneous(draw, P, 3) for _ in range(draw(st.integers(1, 3)))])
    J = HomogeneousIdeal(P, [_homogeneous(draw, P, 2) for _ in range(draw(st.integers(1, 2)))])
    return P, I, J


@settings(max_examples=100, deadline=None)
@given(ideal_pairs())
def test_piece_matches_sympy_oracle(data):
    P, I, J = data
    for d in range(6):
        assert graded_piece(I, d).dimension == sympy_piece_rank(P, I.gens, d)


@settings(max_examples=100, deadline=None)
@given(ideal_pairs())
def test_product_piece_is_span_of_piece_products(data):
    P, I, J = data
    IJ = I * J
    for d in range(6):
        prods = []
        for i in range(d + 1):
            pi, pj = graded_piece(I, i), graded_piece(J, d - i)
            for x in pi.basis:
                for y in pj.basis:
                    xe = tuple((m, c) for m, c in zip(pi.monomials, x) if c)
                    ye = tuple((m, c) for m, c in zip(pj.monomials, y) if c)
                    prods.append(P.mul(P.coerce(dict(xe)), P.coerce(dict(ye))))
        span = HomogeneousIdeal(P, prods)
        assert graded_piece(IJ, d).basis == graded_piece(span, d).basis


@settings(max_examples=100, deadline=None)
@given(ideal_pairs())
def test_piece_dimensions_monotone_under_containment(data):
    P, I, J = data
    big = I + J
    assert graded_contains_up_to(big, I, 5)
    for d in range(6):
        assert graded_piece(I, d).dimension <= graded_piece(big, d).dimension
