"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""
import math
import time

import numpy as np
import pytest

from ohmrush import (
    PolyAlgebra,
    PolyElement,
    ScenarioConfig,
    content,
    dedekind_mertens_exponent,
    double_annihilator_closed,
    forge_nongauss_pair,
    gaussian_pair_check,
    ideal_span,
    parse_poly,
    parse_ring,
    run_scenario,
    socle_dimension,
)
from ohmrush.forge import forge_nongor_gaussian
from ohmrush.ideals import cyclic_ideals
from ohmrush.scenarios import CLASSIFIER_PANEL, SCENARIOS, principal_content_sweep

# rings for the principal-content sweep, with the number of variables used
SWEEP_PANEL = (
    ("Z/4", 1), ("Z/4", 2), ("Z/8", 1), ("Z/9", 1),
    ("F2[a,b]/(a,b)^2", 1), ("F2[a,b]/(a^2,b^2)", 1), ("F3[a]/(a^2)", 1),
)


def verdict(n, what, ok, elapsed, limit=None):
    timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {what} [{timing}]"
    print(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_gauss_over_z():
    def run():
        rng = np.random.default_rng(2024)
        A = PolyAlgebra(parse_ring("Z"), ("x",))
        bad = 0
        for _ in range(10_000):
            fc = [int(v) for v in rng.integers(-9, 10, size=int(rng.integers(1, 6)))]
            gc = [int(v) for v in rng.integers(-9, 10, size=int(rng.integers(1, 6)))]
            f = PolyElement(A, {(i,): c for i, c in enumerate(fc)})
            g = PolyElement(A, {(i,): c for i, c in enumerate(gc)})
            fg = f * g
            lhs = math.gcd(0, *fg.coefficients())
            rhs = math.gcd(*fc) * math.gcd(*gc)
            if lhs != rhs or gaussian_pair_check(f, g).holds is not True:
                bad += 1
        return bad

    bad, dt = timed(run)
    ok = bad == 0 and dt < 5
    assert verdict(1, f"Gauss over Z, 10^4 pairs, {bad} failures", ok, dt, 5)


def test_criterion_2_nongauss_certificate():
    def run():
        return [forge_nongauss_pair(p) for p in (5, 0)]

    out, dt = timed(run)
    ok = dt < 1
    for f, g, cert in out:
        d = cert.to_dict()
        ok &= d["dimensions"] == [3, 2] and d["gaussian"] is False
        ok &= gaussian_pair_check(f, g).holds is False
    ok &= [c.to_dict() for *_, c in out] == [forge_nongauss_pair(p)[2].to_dict() for p in (5, 0)]
    assert verdict(2, "degree-2 dimensions (3, 2) over F5 and Q, not Gaussian", ok, dt, 1)


def test_criterion_3_nongor_forge():
    (f, rec), dt = timed(lambda: forge_nongor_gaussian(parse_ring("F2[a,b]/(a,b)^2")))
    ok = (rec.mu == 2 and rec.report.status == "holds_up_to_bound"
          and rec.report.enumerated == 4096 and rec.branches_hold
          and rec.unit_branch + rec.nonunit_branch == 4096 and dt < 2)
    assert verdict(3, f"forged {f.text()} Gaussian on 4096 cofactors, both branches", ok, dt, 2)


def test_criterion_4_witness_sweep():
    def run():
        big = run_scenario(ScenarioConfig("gorenstein-witness-sweep", ring="F2[a,b]/(a^2,b^2)"))
        z4 = run_scenario(ScenarioConfig("gorenstein-witness-sweep", ring="Z/4"))
        return big, z4

    (big, z4), dt = timed(run)
    ok = (big.ok and big.passed >= 100 and not big.inconclusive
          and all(c["status"] == "witness_found" for c in big.checks)
          and [c["kind"] for c in z4.checks] == ["vacuous"] and dt < 30)
    assert verdict(4, f"{big.passed} targets witnessed, {len(big.inconclusive)} inconclusive, Z/4 vacuous",
                   ok, dt, 30)


def test_criterion_5_principal_content_holds():
    def run():
        counts = {}
        for text, n in SWEEP_PANEL:
            reps = principal_content_sweep(parse_ring(text), nvars=n, degree_bound=2, workers=4)
            counts[(text, n)] = (len(reps), sum(r.status == "holds_up_to_bound" for r in reps),
                                 sum(r.status == "witness_found" for r in reps))
        return counts

    counts, dt = timed(run)
    ok = dt < 30 and all(total > 0 and held == total and found == 0 for total, held, found in counts.values())
    total = sum(v[0] for v in counts.values())
    assert verdict(5, f"{total} principal-content f hold over {len(counts)} ring setups", ok, dt, 30)


def test_criterion_6_classifier_panel():
    def run():
        return [(text, socle_dimension(parse_ring(text)) == 1, expected) for text, expected in CLASSIFIER_PANEL]

    rows, dt = timed(run)
    ok = dt < 1 and all(got == exp for _, got, exp in rows) and len(rows) == 7
    assert verdict(6, "socle classification matches the expected list", ok, dt, 1)


def test_criterion_7_double_annihilator():
    def run():
        closed = {}
        for text, expected in CLASSIFIER_PANEL:
            if expected:
                R = parse_ring(text)
                closed[text] = all(double_annihilator_closed(I) for I in cyclic_ideals(R))
        R = parse_ring("F2[a,b]/(a,b)^2")
        fails = not double_annihilator_closed(ideal_span(R, [R.gen("a")]))
        return closed, fails

    (closed, fails), dt = timed(run)
    ok = dt < 2 and len(closed) == 4 and all(closed.values()) and fails
    assert verdict(7, "ann(ann(I)) = I on Gorenstein rings, fails for (a) in (a,b)^2", ok, dt, 2)


def test_criterion_8_dedekind_mertens():
    def run():
        ks = []
        for text, fs, gs in [("Z/4", "1 + 2*x", "2 + 2*x"), ("Z/4", "2", "x + 1"),
                             ("F2[a,b]/(a^2,b^2)", "1 + a*x", "a + b*x"),
                             ("F3[a]/(a^2)", "a + x", "a + a*x")]:
            A = PolyAlgebra(parse_ring(text), ("x",))
            f, g = parse_poly(fs, A), parse_poly(gs, A)
            unit = content(f).is_unit or content(g).is_unit
            ks.append((unit, dedekind_mertens_exponent(f, g)))
        pairs = [forge_nongauss_pair(p) for p in (5, 0)]
        return ks, [dedekind_mertens_exponent(f, g) for f, g, _ in pairs]

    (ks, graded), dt = timed(run)
    ok = dt < 1 and all(k == 1 for unit, k in ks if unit) and graded == [2, 2]
    assert verdict(8, f"k = 1 on unit-content cases, k = {graded} on the graded pair", ok, dt, 1)


def test_criterion_9_transport_laws():
    rep, dt = timed(lambda: run_scenario(ScenarioConfig("transport-suite", samples=1000)))
    applicable = [c for c in rep.checks if c["applicable"]]
    ok = (rep.ok and not rep.inconclusive and dt < 5
          and all(c["instances"] == 1000 and not c["failures"] for c in applicable))
    assert verdict(9, f"{len(applicable)} law/ring pairs x 1000 instances exact", ok, dt, 5)


@pytest.mark.parametrize("name", SCENARIOS)
def test_criterion_10_determinism(name):
    def run():
        return [run_scenario(ScenarioConfig(name), workers=w).to_json() for w in (1, 8)]

    (a, b), dt = timed(run)
    assert verdict(10, f"{name} byte-identical for 1 and 8 workers", a == b, dt)
