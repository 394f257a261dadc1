import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ohmrush import (
    Integers,
    Modular,
    MonomialQuotient,
    ParseError,
    PolyAlgebra,
    PolyElement,
    PrimeField,
    UnknownVariable,
    emit,
    parse_element,
    parse_poly,
    parse_ring,
    parse_series,
)
from ohmrush.graded import GradedPolyRing


@pytest.mark.parametrize("text,canonical,size", [
    ("F2[a,b]/(a^2,a*b,b^2)", "F2[a,b]/(a^2,a*b,b^2)", 8),
    ("F2[a,b]/(a,b)^2", "F2[a,b]/(a^2,a*b,b^2)", 8),
    (" F2 [ a , b ] / ( b^2 , a^2 ) ", "F2[a,b]/(a^2,b^2)", 16),
    ("F2[a,b]/(a^2,a^3*b,b^2,a*b)", "F2[a,b]/(a^2,a*b,b^2)", 8),
    ("Z/4", "Z/4", 4),
    ("F5", "F5", 5),
    ("F3[a,b,c]/(a,b,c)^2", "F3[a,b,c]/(a^2,a*b,a*c,b^2,b*c,c^2)", 81),
])
def test_ring_roundtrip(text, canonical, size):
    R = parse_ring(text)
    assert emit(R) == canonical
    assert parse_ring(emit(R)) == R
    assert R.size() == size


def test_ring_kinds():
    assert isinstance(parse_ring("Z"), Integers)
    assert isinstance(parse_ring("Z/12"), Modular)
    assert isinstance(parse_ring("F7"), PrimeField)
    assert isinstance(parse_ring("F2[a]/(a^3)"), MonomialQuotient)
    assert isinstance(parse_ring("Q[u,v]"), GradedPolyRing)
    assert parse_ring("F5[u,v]").text() == "F5[u,v]"


@pytest.mark.parametrize("text,line,col", [
    ("F4[a]", 1, 1),
    ("Z/1", 1, 3),
    ("G2", 1, 1),
    ("F2[a,b]/(a^2,c)", 1, 14),
    ("F2[a,a]/(a)", 1, 6),
    ("F2[a]/(a^2", 1, 11),
    ("Z/4 x", 1, 5),
    ("F2[a]\n/(a^2)+", 2, 7),
])
def test_ring_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_ring(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_case_sensitive():
    with pytest.raises(ParseError):
        parse_ring("z/4")
    R = parse_ring("F2[a,A]/(a^2,A^2)")
    assert R.size() == 16


def test_poly_parse():
    R = parse_ring("F2[a,b]/(a^2,a*b,b^2)")
    A = PolyAlgebra(R, ("s", "t"))
    f = parse_poly("(a)*s + (b)*t", A)
    assert f == PolyElement(A, {(1, 0): R.gen("a"), (0, 1): R.gen("b")})
    assert emit(f) == "(a)*s + (b)*t"
    assert parse_poly("a*s + b*t + a*b*s", A) == f
    assert parse_poly("-(a+1)*(s - t)^2", A) == parse_poly("(1+a)*s^2 + (1+a)*t^2", A)
    with pytest.raises(UnknownVariable):
        parse_poly("c*s", A)
    with pytest.raises(ParseError):
        parse_poly("a*s +", A)
    assert parse_element("a*a + 1", R) == R.one


def test_laurent_exponents_for_semigroups():
    from ohmrush import AffineSemigroup

    S = AffineSemigroup([(1, -1), (0, 1)])
    A = PolyAlgebra(Modular(4), ("y", "z"), S)
    f = parse_poly("2*y*z^(-1) + z", A)
    assert f.terms == {(1, -1): 2, (0, 1): 1}
    assert parse_poly(f.text(), A) == f
    with pytest.raises(ParseError):
        parse_poly("(y+z)^(-1)", A)


def test_series_roundtrip():
    R = parse_ring("F2[a,b]/(a,b)^2")
    A = PolyAlgebra(R, ("x",))
    s = parse_series("a*x + O(x^2) tail {b}", A)
    assert s.order == 2 and s.tail == (R.gen("b"),)
    assert emit(s) == "(a)*x + O(x^2) tail {b}"
    assert parse_series(emit(s), A).text() == s.text()
    with pytest.raises(ParseError):
        parse_series("a*x", A)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_poly_roundtrip_property(data):
    text = data.draw(st.sampled_from(["Z/8", "Z", "F2[a,b]/(a^2,b^2)", "F3[a]/(a^2)", "F5[u,v]", "Q[u,v]"]))
    R = parse_ring(text)
    A = PolyAlgebra(R, ("s", "t"))
    mons = A.monomials_up_to(2)
    terms = {}
    for m in mons:
        if isinstance(R, (Integers, Modular)):
            terms[m] = R.coerce(data.draw(st.integers(-20, 20)))
        elif isinstance(R, MonomialQuotient):
            terms[m] = tuple(data.draw(st.integers(0, R.p - 1)) for _ in range(R.dim))
        else:
            u, v = R.gen("u"), R.gen("v")
            c1, c2 = data.draw(st.integers(-3, 3)), data.draw(st.fractions(max_denominator=4))
            terms[m] = R.add(R.mul(R.coerce(c1), u), R.mul(R.coerce(c2), v))
    f = PolyElement(A, terms)
    assert parse_poly(emit(f), A) == f
