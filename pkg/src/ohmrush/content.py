"""Ohm-Rush content over free-basis algebras, and the Gaussian property.

For the algebras in :mod:`ohmrush.algebra` the monomials are a free basis of
S over R, so the content c(f) is the ideal generated by the coefficients of
f.  An element f is Gaussian when c(fg) = c(f)c(g) for every g; the
containment c(fg) <= c(f)c(g) always holds and is asserted on every product
computed here.

Gaussianness quantifies over infinitely many g, so searches are one-sided: a
witness is a proof of failure, while ``holds_up_to_bound`` only says that no
g within the stated bound is a witness.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import PolyAlgebra, PolyElement, SeriesElement, poly_mul
from .errors import BudgetExceeded, ConfigError, InvariantViolation, NotLocal
from .ideals import (
    annihilator,
    ideal_image,
    ideal_span,
    maximal_ideal,
)
from .rings import Integers, Modular, MonomialQuotient, factorize, monomials_of_degree

DEFAULT_DEGREE_BOUND = 2
DEFAULT_SEARCH_BUDGET = 2**22
DEFAULT_SAMPLES = 4096
DEFAULT_COEFFICIENT_BOUND = 2
CHUNK = 1 << 15

WORKERS_ENV = "OHMRUSH_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def content(f):
    """Ideal of R generated by the coefficients of f (and the tail, for series)."""
    if isinstance(f, SeriesElement):
        return ideal_span(f.ring, f.head.coefficients() + list(f.tail))
    return ideal_span(f.ring, f.coefficients())


@dataclass
class PairCheck:
    """Outcome of comparing c(f)c(g) with c(fg) for one pair."""

    holds: bool
    product_of_contents: object
    content_of_product: object

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {
            "holds": self.holds,
            "product_of_contents": self.product_of_contents.to_json(),
            "content_of_product": self.content_of_product.to_json(),
        }


def gaussian_pair_check(f: PolyElement, g: PolyElement) -> PairCheck:
    """Decide c(fg) = c(f)c(g) exactly for one pair."""
    fg = poly_mul(f, g)
    lhs = content(f) * content(g)
    rhs = content(fg)
    if not lhs >= rhs:
        raise InvariantViolation(f"c(fg) not inside c(f)c(g) for f={f.text()}, g={g.text()}")
    return PairCheck(lhs == rhs, lhs, rhs)


@dataclass
class GaussianReport:
    status: str  # holds_up_to_bound | witness_found | inconclusive
    f: PolyElement
    mode: str
    degree_bound: int
    bound_kind: str
    budget: int
    enumerated: int
    candidates_total: int | None = None
    seed: int | None = None
    witness: PolyElement | None = None
    product_of_contents: object = None
    content_of_product: object = None
    reason: str = ""

    def to_dict(self):
        out = {
            "status": self.status,
            "f": self.f.text(),
            "mode": self.mode,
            "degree_bound": self.degree_bound,
            "bound_kind": self.bound_kind,
            "budget": self.budget,
            "enumerated": self.enumerated,
            "candidates_total": self.candidates_total,
            "seed": self.seed,
        }
        if self.witness is not None:
            out["witness"] = self.witness.text()
            out["product_of_contents"] = self.product_of_contents.to_json()
            out["content_of_product"] = self.content_of_product.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


def _digits(start: int, stop: int, q: int, k: int) -> np.ndarray:
    r = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = r % q
        r //= q
    return out


def _scan_chunk(T, f_terms, cf, mons, new_cols, start, stop, q):
    """First failing row in ``[start, stop)`` of a layer, and the layer rank."""
    G = _digits(start, stop, q, len(mons))
    mask = (G[:, new_cols] != 0).any(axis=1) if new_cols is not None else np.ones(len(G), bool)
    cg, cfg = T.batch_contents(f_terms, mons, G)
    lhs = T.iprod[cf, cg]
    if (T.isum[cfg, lhs] != lhs).any():
        raise InvariantViolation("c(fg) not inside c(f)c(g) in a batch evaluation")
    bad = np.flatnonzero(mask & (lhs != cfg))
    if len(bad):
        first = int(bad[0])
        return first, G[first], int(mask[: first + 1].sum()), int(mask.sum())
    return None, None, 0, int(mask.sum())


def _layers(algebra: PolyAlgebra, degree_bound: int, bound_kind: str):
    mons = algebra.monomials_up_to(degree_bound, bound_kind)
    levels = algebra.levels(mons, degree_bound)
    for L in sorted(set(levels)):
        layer = [m for m, lv in zip(mons, levels) if lv <= L]
        new = [i for i, m in enumerate(layer) if levels[mons.index(m)] == L]
        yield L, layer, (None if L == min(levels) else new)


def gaussian_witness_search(
    f: PolyElement,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    *,
    bound_kind: str = "total",
    mode: str = "exhaustive",
    seed: int | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND,
    workers: int | None = None,
) -> GaussianReport:
    """Look for g with c(fg) != c(f)c(g) among bounded cofactors.

    Cofactors are enumerated layer by layer (degree 0, then those of degree
    exactly 1, ...), and inside a layer coefficient-lexicographically with
    monomials in degree-lexicographic order, so the reported witness is the
    first in that order no matter how many workers run.  Over Z the
    coefficients range over ``[-coefficient_bound, coefficient_bound]``.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ConfigError(f"unknown mode {mode!r}")
    if mode == "sampled" and seed is None:
        raise ConfigError("sampled mode needs a seed")
    workers = workers or default_workers()
    report = GaussianReport("inconclusive", f, mode, degree_bound, bound_kind, budget, 0, seed=seed)
    if f.is_zero:
        report.status = "holds_up_to_bound"
        report.reason = "f = 0"
        return report
    ring = f.ring
    try:
        T = ring.tables
    except (BudgetExceeded, AttributeError):
        T = None
    if T is None:
        return _python_search(f, report, coefficient_bound, samples)
    if mode == "sampled":
        return _sampled_search(f, T, report, samples)

    q = T.size
    f_terms = [(e, T.index[c]) for e, c in f.terms.items()]
    cf = T.index_of(content(f))
    all_mons = f.algebra.monomials_up_to(degree_bound, bound_kind)
    report.candidates_total = q ** len(all_mons)
    enumerated = 0
    scanned = 0
    for _, mons, new in _layers(f.algebra, degree_bound, bound_kind):
        k = len(mons)
        total = q**k
        # the row cap depends only on the budget, never on the worker count
        limit = min(total, budget - scanned)
        starts = list(range(0, limit, CHUNK))
        for w in range(0, len(starts), workers):
            wave = starts[w:w + workers]
            args = [(T, f_terms, cf, mons, new, s, min(s + CHUNK, limit), q) for s in wave]
            if workers > 1 and len(wave) > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(lambda a: _scan_chunk(*a), args))
            else:
                results = [_scan_chunk(*a) for a in args]
            for first, row, rank, seen in results:
                if first is not None:
                    report.enumerated = enumerated + rank
                    return _finish_witness(report, f, mons, [T.elements[int(i)] for i in row])
                enumerated += seen
        scanned += limit
        if limit < total:
            report.enumerated = enumerated
            report.reason = f"budget of {budget} rows exhausted in the layer with {k} monomials"
            return report
    report.enumerated = enumerated
    report.status = "holds_up_to_bound"
    return report


def _finish_witness(report, f, mons, coeffs):
    g = PolyElement(f.algebra, dict(zip(mons, coeffs)))
    check = gaussian_pair_check(f, g)
    if check.holds:
        raise InvariantViolation(f"table search and exact check disagree on g={g.text()}")
    report.status = "witness_found"
    report.witness = g
    report.product_of_contents = check.product_of_contents
    report.content_of_product = check.content_of_product
    return report


def _sampled_search(f, T, report, samples):
    rng = np.random.default_rng(report.seed)
    mons = f.algebra.monomials_up_to(report.degree_bound, report.bound_kind)
    q = T.size
    report.candidates_total = q ** len(mons)
    f_terms = [(e, T.index[c]) for e, c in f.terms.items()]
    cf = T.index_of(content(f))
    n = min(samples, report.budget)
    G = rng.integers(0, q, size=(n, len(mons)))
    for s in range(0, n, CHUNK):
        block = G[s:s + CHUNK]
        cg, cfg = T.batch_contents(f_terms, mons, block)
        lhs = T.iprod[cf, cg]
        if (T.isum[cfg, lhs] != lhs).any():
            raise InvariantViolation("c(fg) not inside c(f)c(g) in a batch evaluation")
        bad = np.flatnonzero(lhs != cfg)
        if len(bad):
            report.enumerated = s + int(bad[0]) + 1
            return _finish_witness(report, f, mons, T.decode_row(block[bad[0]]))
    report.enumerated = n
    report.reason = "sampled mode cannot certify a bound"
    return report


def _python_search(f, report, coefficient_bound, samples):
    """Slow path for rings without lookup tables (Z and large finite rings)."""
    ring = f.ring
    if isinstance(ring, Integers):
        values = [0]
        for c in range(1, coefficient_bound + 1):
            values += [c, -c]
    elif ring.is_finite and ring.size() <= report.budget:
        values = ring.elements()
    else:
        report.reason = f"no finite coefficient range for {ring.text()}"
        return report
    q = len(values)
    all_mons = f.algebra.monomials_up_to(report.degree_bound, report.bound_kind)
    report.candidates_total = q ** len(all_mons)
    if report.mode == "sampled":
        rng = np.random.default_rng(report.seed)
        n = min(samples, report.budget)
        rows = rng.integers(0, q, size=(n, len(all_mons)))
        for i, row in enumerate(rows):
            g = PolyElement(f.algebra, {m: values[int(d)] for m, d in zip(all_mons, row)})
            if not gaussian_pair_check(f, g).holds:
                report.enumerated = i + 1
                return _finish_witness(report, f, all_mons, [values[int(d)] for d in row])
        report.enumerated = n
        report.reason = "sampled mode cannot certify a bound"
        return report
    enumerated = 0
    for _, mons, new in _layers(f.algebra, report.degree_bound, report.bound_kind):
        for digits in itertools.product(range(q), repeat=len(mons)):
            if new is not None and not any(digits[i] for i in new):
                continue
            if enumerated >= report.budget:
                report.enumerated = enumerated
                report.reason = f"budget {report.budget} exhausted"
                return report
            enumerated += 1
            coeffs = [values[d] for d in digits]
            g = PolyElement(f.algebra, dict(zip(mons, coeffs)))
            if not gaussian_pair_check(f, g).holds:
                report.enumerated = enumerated
                return _finish_witness(report, f, mons, coeffs)
    report.enumerated = enumerated
    report.status = "holds_up_to_bound"
    return report


def dedekind_mertens_exponent(f, g, k_max: int = 8) -> int | None:
    """Least k <= k_max with c(f)^k c(g) = c(f)^(k-1) c(fg), or None."""
    cf, cg, cfg = content(f), content(g), content(poly_mul(f, g))
    power = cf ** 0
    for k in range(1, k_max + 1):
        nxt = power * cf
        if nxt * cg == power * cfg:
            return k
        power = nxt
    return None


def is_regular_element(f: PolyElement) -> bool:
    """f is a non-zero-divisor of S iff ann(c(f)) = 0 (R Noetherian)."""
    c = content(f)
    if not hasattr(c, "key"):
        return not c.is_zero
    return annihilator(c).is_zero


def content_transport_check(law: str, f: PolyElement, *, g=None, a=None,
                            factor=None, quotient=None) -> bool:
    """Check one transport law for c on a concrete instance.

    ``law`` is one of:

    * ``"a"``: c(f+g) inside c(f)+c(g)
    * ``"b"``: c(fg) inside c(f)c(g)
    * ``"c"``: c(af) = a c(f)
    * ``"d"``: content commutes with projecting Z/n onto a local factor
      (``factor`` is a :class:`~ohmrush.rings.LocalFactor`)
    * ``"e"``: content of the image in (R/I)[x] is (c(f)+I)/I; ``quotient`` is
      an int d (I = (d) in Z/n) or a list of exponent tuples (monomial I)
    """
    ring = f.ring
    if law == "a":
        return (content(f) + content(g)) >= content(f + g)
    if law == "b":
        return (content(f) * content(g)) >= content(poly_mul(f, g))
    if law == "c":
        return content(f.scale(a)) == ideal_span(ring, [a]) * content(f)
    if law == "d":
        target = factor.ring
        alg = PolyAlgebra(target, f.algebra.variables)
        image = f.map_coefficients(alg, factor.project)
        return content(image) == ideal_image(content(f), target, factor.project)
    if law == "e":
        if isinstance(ring, Modular):
            target, project = ring.quotient(quotient)
            I = ideal_span(ring, [quotient])
        elif isinstance(ring, MonomialQuotient):
            target, project = ring.quotient(quotient)
            I = ideal_span(ring, [ring.monomial(m) for m in quotient])
        else:
            raise ValueError(f"no quotient maps for {ring.text()}")
        alg = PolyAlgebra(target, f.algebra.variables)
        image = f.map_coefficients(alg, project)
        return content(image) == ideal_image(content(f) + I, target, project)
    raise ValueError(f"unknown law {law!r}")


def loewy_length(ring) -> int:
    """Least N with m^N = 0 in a finite local ring."""
    if isinstance(ring, MonomialQuotient):
        return ring.loewy_length
    if isinstance(ring, Modular) and ring.is_local:
        return factorize(ring.n)[0][1]
    raise NotLocal(f"{ring.text()} is not a finite local ring")


def quotient_by_max_power(ring, j: int):
    """(R/m^j, projection) for a finite local ring."""
    if isinstance(ring, MonomialQuotient):
        return ring.quotient(monomials_of_degree(len(ring.variables), j))
    if isinstance(ring, Modular):
        p = maximal_ideal(ring).key
        return ring.quotient(p**j)
    raise NotLocal(f"{ring.text()} is not a finite local ring")


@dataclass
class ChainCheck:
    holds_in_ring: bool
    holds_at_level: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.holds_in_ring == all(self.holds_at_level)

    def __bool__(self):
        return self.consistent


def quotient_chain_gaussian_check(f: PolyElement, g: PolyElement) -> ChainCheck:
    """Compare c(fg) = c(f)c(g) in R with the same identity in every R/m^j, j <= N."""
    ring = f.ring
    N = loewy_length(ring)
    out = ChainCheck(gaussian_pair_check(f, g).holds)
    for j in range(1, N + 1):
        target, project = quotient_by_max_power(ring, j)
        alg = PolyAlgebra(target, f.algebra.variables)
        fb = f.map_coefficients(alg, project)
        gb = g.map_coefficients(alg, project)
        out.holds_at_level.append(gaussian_pair_check(fb, gb).holds)
    return out


def series_content(s: SeriesElement):
    """``(c(s), k)`` with k the least truncation order whose partial content is c(s).

    Truncation order k keeps the coefficients of total degree < k; the tail
    becomes visible at order ``s.order + 1``.
    """
    ring = s.ring
    final = content(s)
    by_degree = {}
    for e, c in s.head.terms.items():
        by_degree.setdefault(sum(e), []).append(c)
    seen = []
    for k in range(s.order + 1):
        if k:
            seen.extend(by_degree.get(k - 1, []))
        if ideal_span(ring, seen) == final:
            return final, k
    return final, s.order + 1
