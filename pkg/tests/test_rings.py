import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ohmrush import (
    InfiniteColength,
    Integers,
    Modular,
    MonomialQuotient,
    NonPrimeModulus,
    RingSpec,
    UnknownVariable,
    crt_decompose,
    crt_reconstruct,
    is_unit,
    is_zero_divisor,
    make_ring,
    normal_form,
)
from ohmrush.rings import factorize, is_prime

from .conftest import SMALL_RINGS


def test_make_ring_examples():
    R = make_ring(RingSpec.monomial_quotient(2, "ab", [(2, 0), (1, 1), (0, 2)]))
    assert R.basis == ((0, 0), (1, 0), (0, 1))
    assert R.size() == 8
    assert make_ring(RingSpec.modular(4)).size() == 4
    with pytest.raises(InfiniteColength):
        make_ring(RingSpec.monomial_quotient(2, "ab", [(2, 0)]))
    with pytest.raises(NonPrimeModulus):
        make_ring(RingSpec.prime_field(4))
    assert make_ring(RingSpec.integers()) == Integers()


def test_spec_roundtrip():
    for text in SMALL_RINGS:
        R = make_ring(text)
        assert make_ring(R.spec) == R


def test_normal_form_examples():
    R = make_ring("F2[a,b]/(a^2,a*b,b^2)")
    assert normal_form("a*a", R) == R.zero
    S = make_ring("F2[a,b]/(a^2,b^2)")
    assert normal_form("a*b", S) == S.monomial((1, 1))
    assert normal_form(7, Modular(4)) == 3
    assert normal_form({(1, 1): 3, (0, 0): 1}, S) == normal_form("1 + a*b", S)
    with pytest.raises(UnknownVariable):
        normal_form("c", R)


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20), max_size=8))
def test_normal_form_idempotent(expr):
    R = make_ring("F3[a,b]/(a^3,a*b^2,b^3)")
    x = normal_form(expr, R)
    as_dict = {m: c for m, c in zip(R.basis, x)}
    assert normal_form(as_dict, R) == x


def test_zero_divisor_examples():
    assert is_zero_divisor(2, Modular(4))
    R = make_ring("F2[a,b]/(a,b)^2")
    assert is_zero_divisor(R.gen("a"), R)
    assert not is_zero_divisor(5, Integers())
    assert is_zero_divisor(0, Integers())
    assert is_unit(-1, Integers()) and not is_unit(2, Integers())


@pytest.mark.parametrize("text", SMALL_RINGS + ["F2[a,b,c]/(a,b,c)^2", "F5"])
def test_unit_xor_zero_divisor(text):
    R = make_ring(text)
    els = R.elements()
    for r in els:
        if R.is_zero(r):
            continue
        # brute force oracle for zero divisors
        zd = any(not R.is_zero(s) and R.is_zero(R.mul(r, s)) for s in els)
        assert is_zero_divisor(r, R) == zd
        assert is_unit(r, R) != zd


@pytest.mark.parametrize("text", SMALL_RINGS + ["F2[a,b,c]/(a,b,c)^2"])
def test_ring_axioms_exhaustive(text):
    R = make_ring(text)
    els = R.elements()
    assert len(els) <= 256
    add, mul = R.add, R.mul
    for x, y in itertools.product(els, repeat=2):
        assert add(x, y) == add(y, x)
        assert mul(x, y) == mul(y, x)
    for x, y, z in itertools.product(els, repeat=3):
        assert add(add(x, y), z) == add(x, add(y, z))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    for x in els:
        assert mul(x, R.one) == x
        assert add(x, R.neg(x)) == R.zero


def test_crt_examples():
    assert [f.ring.text() for f in crt_decompose(Modular(12))] == ["Z/4", "Z/3"]
    assert [f.ring.text() for f in crt_decompose(Modular(4))] == ["Z/4"]
    assert [f.ring.text() for f in crt_decompose(Modular(30))] == ["Z/2", "Z/3", "Z/5"]


@pytest.mark.parametrize("n", range(2, 65))
def test_crt_reconstruction_exhaustive(n):
    factors = crt_decompose(Modular(n))
    order = 1
    for f in factors:
        order *= f.order
    assert order == n
    for x in range(n):
        assert crt_reconstruct(factors, [f.project(x) for f in factors]) == x
    # projections are ring homomorphisms on the generator 1 and on products
    for f in factors:
        assert f.project(1) == 1 % f.order
        assert f.project((n - 1) * (n - 1) % n) == f.project(n - 1) ** 2 % f.order
        assert f.idempotent * f.idempotent % n == f.idempotent


def test_factorize_and_primes():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_loewy_and_quotients():
    R = make_ring("F2[a,b]/(a^2,b^2)")
    assert R.loewy_length == 3
    S, proj = R.quotient_by_max_power(2)
    assert S.size() == 8
    assert proj(R.gen("a")) == S.gen("a")
    assert proj(R.monomial((1, 1))) == S.zero
    assert isinstance(S, MonomialQuotient)
