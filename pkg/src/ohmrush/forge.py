"""Explicit constructions: a Gaussian element with two-generated content over
a non-Gorenstein artinian ring, and a non-Gaussian element over K[u,v]."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import PolyAlgebra, PolyElement, poly_mul
from .content import (
    CHUNK,
    DEFAULT_SEARCH_BUDGET,
    GaussianReport,
    PairCheck,
    _digits,
    content,
    dedekind_mertens_exponent,
    gaussian_pair_check,
    gaussian_witness_search,
)
from .errors import InvariantViolation, IsGorenstein
from .graded import HomogeneousIdeal, graded_contains_up_to, graded_piece, polynomial_ring
from .ideals import ideal_product, maximal_ideal, min_generators, socle, socle_dimension
from .linalg import Field


@dataclass
class NongorRecord:
    f: PolyElement
    x: object
    y: object
    mu: int
    report: GaussianReport
    unit_branch: int = 0
    nonunit_branch: int = 0
    branches_hold: bool = True

    def to_dict(self):
        R = self.f.ring
        return {
            "ring": R.text(),
            "f": self.f.text(),
            "socle_pair": [R.element_text(self.x), R.element_text(self.y)],
            "content": content(self.f).to_json(),
            "mu": self.mu,
            "search": self.report.to_dict(),
            "unit_content_cofactors": self.unit_branch,
            "nonunit_content_cofactors": self.nonunit_branch,
            "branches_hold": self.branches_hold,
        }


def forge_nongor_gaussian(ring, degree_bound: int = 1, bound_kind: str = "box"):
    """Build f = x*s + y*t from two independent socle elements and verify it.

    Returns ``(f, record)``.  The record carries mu(c(f)) = 2, an exhaustive
    bounded witness search (expected: nothing found), and a cofactor-by-
    cofactor check of the two cases c(g) = R, where c(fg) = c(f), and
    c(g) inside m, where c(fg) = 0.
    """
    if socle_dimension(ring) < 2:
        raise IsGorenstein(f"{ring.text()} has a one-dimensional socle")
    x, y = socle(ring).basis[:2]
    A = PolyAlgebra(ring, ("s", "t"))
    f = A.var("s").scale(x) + A.var("t").scale(y)
    cf = content(f)
    if not ideal_product(maximal_ideal(ring), cf).is_zero:
        raise InvariantViolation("m * c(f) is not zero for socle generators")
    mu = min_generators(cf)
    report = gaussian_witness_search(f, degree_bound, bound_kind=bound_kind)
    record = NongorRecord(f, x, y, mu, report)
    _check_branches(record, degree_bound, bound_kind)
    return f, record


def _check_branches(record: NongorRecord, degree_bound, bound_kind, budget=DEFAULT_SEARCH_BUDGET):
    f = record.f
    T = f.ring.tables
    mons = f.algebra.monomials_up_to(degree_bound, bound_kind)
    q, k = T.size, len(mons)
    total = min(q**k, budget)
    f_terms = [(e, T.index[c]) for e, c in f.terms.items()]
    cf = T.index_of(content(f))
    ok = True
    for start in range(0, total, CHUNK):
        G = _digits(start, min(start + CHUNK, total), q, k)
        cg, cfg = T.batch_contents(f_terms, mons, G)
        unit = cg == T.unit_ideal
        ok &= bool((cfg[unit] == cf).all())
        rest = ~unit
        ok &= bool(((cfg[rest] == T.zero_ideal) & (T.iprod[cf, cg[rest]] == T.zero_ideal)).all())
        record.unit_branch += int(unit.sum())
        record.nonunit_branch += int(rest.sum())
    record.branches_hold = ok


@dataclass
class NonGaussCertificate:
    field: Field
    f: PolyElement
    g: PolyElement
    check: PairCheck
    degree2_dims: tuple
    a2_in_ab_a2b2: bool
    a2_in_ab_b2: bool
    b2_in_ab_a2: bool
    dm_exponent: int | None
    notes: list = field(default_factory=list)

    @property
    def h_branch_applicable(self) -> bool:
        return self.a2_in_ab_b2 or self.b2_in_ab_a2

    def to_dict(self):
        R = self.f.ring
        return {
            "field": self.field.name,
            "coefficient_ring": R.text(),
            "f": self.f.text(),
            "g": self.g.text(),
            "fg": poly_mul(self.f, self.g).text(),
            "product_of_contents": self.check.product_of_contents.to_json(),
            "content_of_product": self.check.content_of_product.to_json(),
            "degree": 2,
            "dimensions": list(self.degree2_dims),
            "gaussian": self.check.holds,
            "a^2 in (ab, a^2+b^2)": self.a2_in_ab_a2b2,
            "a^2 in (ab, b^2)": self.a2_in_ab_b2,
            "b^2 in (ab, a^2)": self.b2_in_ab_a2,
            "h_template": "(a - gamma*b)*s - b*t",
            "h_branch": "applicable" if self.h_branch_applicable else "not-applicable",
            "dedekind_mertens_exponent": self.dm_exponent,
            "notes": list(self.notes),
            "replay": f"ohmrush forge nongauss --field {self.field.name}",
        }


def forge_nongauss_pair(field=5):
    """f = u*s + v*t and g = v*s + u*t over K[u,v], K = F_p or Q (``field=0``).

    Returns ``(f, g, certificate)`` where the certificate records that
    c(f)c(g) = (u,v)^2 and c(fg) = (uv, u^2+v^2) differ in degree 2.
    """
    K = field if isinstance(field, Field) else Field(field)
    P = polynomial_ring(K, ("u", "v"))
    u, v = P.gen("u"), P.gen("v")
    A = PolyAlgebra(P, ("s", "t"))
    s, t = A.var("s"), A.var("t")
    f = s.scale(u) + t.scale(v)
    g = s.scale(v) + t.scale(u)
    check = gaussian_pair_check(f, g)
    dims = (graded_piece(check.product_of_contents, 2).dimension,
            graded_piece(check.content_of_product, 2).dimension)
    uu, uv, vv = P.mul(u, u), P.mul(u, v), P.mul(v, v)
    a2 = HomogeneousIdeal(P, [uu])
    b2 = HomogeneousIdeal(P, [vv])
    cert = NonGaussCertificate(
        K, f, g, check, dims,
        a2_in_ab_a2b2=graded_contains_up_to(HomogeneousIdeal(P, [uv, P.add(uu, vv)]), a2, 2),
        a2_in_ab_b2=graded_contains_up_to(HomogeneousIdeal(P, [uv, vv]), a2, 2),
        b2_in_ab_a2=graded_contains_up_to(HomogeneousIdeal(P, [uv, uu]), b2, 2),
        dm_exponent=dedekind_mertens_exponent(f, g),
    )
    cert.notes.append("ideals are homogeneous, so the strict containment survives "
                      "localization at (u,v)")
    return f, g, cert
