"""Shared fixtures and brute-force oracles.

The oracles here work on raw element sets and never touch the echelon or
divisor-lattice machinery they are used to check.
"""

import itertools

import pytest

from ohmrush import PolyAlgebra, PolyElement, parse_ring

SMALL_RINGS = [
    "Z/4",
    "Z/8",
    "Z/9",
    "Z/12",
    "F2[a,b]/(a,b)^2",
    "F2[a,b]/(a^2,b^2)",
    "F3[a]/(a^2)",
    "F2[a]/(a^3)",
]

LOCAL_RINGS = [r for r in SMALL_RINGS if r != "Z/12"]


@pytest.fixture(params=SMALL_RINGS)
def small_ring(request):
    return parse_ring(request.param)


@pytest.fixture(params=LOCAL_RINGS)
def local_ring(request):
    return parse_ring(request.param)


def closure(ring, gens):
    """Smallest subset containing 0 and gens closed under + and R-multiples."""
    els = ring.elements()
    out = {ring.zero}
    frontier = set()
    for g in gens:
        for r in els:
            frontier.add(ring.mul(r, g))
    while frontier:
        out |= frontier
        fresh = set()
        for x in frontier:
            for y in list(out):
                z = ring.add(x, y)
                if z not in out:
                    fresh.add(z)
        frontier = fresh
    return frozenset(out)


def ann_oracle(ring, subset):
    return frozenset(z for z in ring.elements() if all(ring.is_zero(ring.mul(z, g)) for g in subset))


def all_polys(ring, variables, degree):
    A = PolyAlgebra(ring, variables)
    mons = A.monomials_up_to(degree)
    for cs in itertools.product(ring.elements(), repeat=len(mons)):
        yield PolyElement(A, dict(zip(mons, cs)))
