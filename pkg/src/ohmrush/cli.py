"""Command-line front end.

    ohmrush ring info --ring 'F2[a,b]/(a,b)^2'
    ohmrush content --ring Z/8 --vars x --f '2 + 4*x'
    ohmrush gaussian check --ring 'F2[a,b]/(a^2,b^2)' --vars s,t --f 'a*s + b*t' --g 'a*s + b*t'
    ohmrush gaussian search --ring 'F2[a,b]/(a^2,b^2)' --vars s,t --f 'a*s + b*t'
    ohmrush forge nongor --ring 'F2[a,b]/(a,b)^2'
    ohmrush forge nongauss --field F5
    ohmrush scenario run gorenstein-witness-sweep --out report.json

Results are JSON on stdout (or in ``--out``).  ``scenario run`` prints a
one-line summary and exits 1 only if a theorem-predicted verdict was
contradicted.  The worker count comes from ``--workers`` or OHMRUSH_WORKERS.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import PolyAlgebra
from .content import (
    DEFAULT_SEARCH_BUDGET,
    WORKERS_ENV,
    content,
    gaussian_pair_check,
    gaussian_witness_search,
    is_regular_element,
    loewy_length,
    series_content,
)
from .errors import OhmRushError, ParseError
from .forge import forge_nongauss_pair, forge_nongor_gaussian
from .grammar import parse_poly, parse_ring, parse_series
from .graded import GradedPolyRing
from .ideals import is_gorenstein, maximal_ideal, min_generators, socle, socle_dimension
from .rings import Integers, Modular, MonomialQuotient, PrimeField, crt_decompose
from .scenarios import SCENARIOS, ScenarioConfig, run_scenario, variable_names


def _vars(text: str):
    text = text.strip()
    if text.isdigit():
        return variable_names(int(text))
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise argparse.ArgumentTypeError("need at least one variable")
    return names


def _emit(obj, out):
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ring_info(args):
    R = parse_ring(args.ring)
    info = {"ring": R.text()}
    if isinstance(R, Integers):
        info.update(finite=False, local=False)
    elif isinstance(R, GradedPolyRing):
        info.update(finite=False, local=False, field=R.field.name, variables=list(R.variables))
    else:
        info.update(finite=True, size=R.size())
        local = R.is_local if isinstance(R, Modular) else True
        info["local"] = local
        if isinstance(R, MonomialQuotient):
            info["basis"] = [R.element_text(R.monomial(m)) for m in R.basis]
        if isinstance(R, Modular):
            info["crt_factors"] = [f.ring.text() for f in crt_decompose(R)]
        if local:
            info.update(
                maximal_ideal=maximal_ideal(R).to_json(),
                socle=socle(R).to_json(),
                socle_dimension=socle_dimension(R),
                gorenstein=is_gorenstein(R),
                loewy_length=loewy_length(R),
            )
    _emit(info, args.out)


def _algebra(args):
    return PolyAlgebra(parse_ring(args.ring), args.vars)


def _content(args):
    A = _algebra(args)
    if "O(" in args.f:
        s = parse_series(args.f, A)
        I, k = series_content(s)
        out = {"series": s.text(), "content": I.to_json(), "stabilization_index": k}
    else:
        f = parse_poly(args.f, A)
        I = content(f)
        out = {"f": f.text(), "content": I.to_json()}
        if not isinstance(A.ring, GradedPolyRing):
            out["regular"] = is_regular_element(f)
            if isinstance(A.ring, MonomialQuotient) or (isinstance(A.ring, Modular) and A.ring.is_local):
                out["mu"] = min_generators(I)
    _emit(out, args.out)


def _gaussian_check(args):
    A = _algebra(args)
    f, g = parse_poly(args.f, A), parse_poly(args.g, A)
    out = {"ring": A.ring.text(), "f": f.text(), "g": g.text(), **gaussian_pair_check(f, g).to_dict()}
    _emit(out, args.out)


def _gaussian_search(args):
    A = _algebra(args)
    f = parse_poly(args.f, A)
    r = gaussian_witness_search(f, args.degree_bound, bound_kind=args.bound_kind, mode=args.mode,
                                seed=args.seed, budget=args.budget, samples=args.samples,
                                workers=args.workers)
    _emit({"ring": A.ring.text(), **r.to_dict()}, args.out)


def _forge_nongor(args):
    f, rec = forge_nongor_gaussian(parse_ring(args.ring), args.degree_bound, args.bound_kind)
    _emit(rec.to_dict(), args.out)


def _forge_nongauss(args):
    name = args.field.strip()
    if name == "Q":
        p = 0
    else:
        R = parse_ring(name)
        if not isinstance(R, PrimeField):
            raise ParseError(f"expected F_p or Q, got {name!r}", name, 0)
        p = R.n
    f, g, cert = forge_nongauss_pair(p)
    _emit(cert.to_dict(), args.out)


def _scenario_run(args):
    data = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    data.setdefault("scenario", args.name)
    if args.name and data["scenario"] != args.name:
        raise OhmRushError(f"config is for {data['scenario']!r}, not {args.name!r}")
    for key in ("ring", "degree_bound", "mode", "seed", "samples", "budget"):
        val = getattr(args, key)
        if val is not None:
            data[key] = val
    if args.vars is not None:
        data["nvars"] = len(args.vars)
    if args.semigroup is not None:
        data["semigroup"] = json.loads(args.semigroup)
    cfg = ScenarioConfig.from_dict(data)
    cfg.out = args.out
    report = run_scenario(cfg, workers=args.workers)
    if not args.out:
        sys.stdout.write(report.to_json())
        print(report.summary(), file=sys.stderr)
    else:
        print(report.summary())
    for i in report.contradictions:
        print(f"CONTRADICTION in check {i}: {json.dumps(report.checks[i], sort_keys=True)[:400]}",
              file=sys.stderr)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ohmrush", description="Ohm-Rush content and Gaussian checks.")
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker threads for searches (default: ${WORKERS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ring=True, vars=True, out=True):
        if ring:
            sp.add_argument("--ring", required=True, help="ring, e.g. 'F2[a,b]/(a,b)^2', Z/4, Z")
        if vars:
            sp.add_argument("--vars", type=_vars, default=("s", "t"),
                            help="algebra variables: a count or a comma list (default s,t)")
        if out:
            sp.add_argument("--out", default=None, help="write JSON here instead of stdout")

    ring = sub.add_parser("ring").add_subparsers(dest="action", required=True)
    sp = ring.add_parser("info", help="size, basis, socle and classification of a ring")
    common(sp, vars=False)
    sp.set_defaults(func=_ring_info)

    sp = sub.add_parser("content", help="content ideal of a polynomial or series")
    common(sp)
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=_content)

    gauss = sub.add_parser("gaussian").add_subparsers(dest="action", required=True)
    sp = gauss.add_parser("check", help="decide c(fg) = c(f)c(g) for one pair")
    common(sp)
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.set_defaults(func=_gaussian_check)
    sp = gauss.add_parser("search", help="bounded search for a cofactor g with c(fg) != c(f)c(g)")
    common(sp)
    sp.add_argument("--f", required=True)
    sp.add_argument("--degree-bound", type=int, default=2)
    sp.add_argument("--bound-kind", choices=["total", "box"], default="total")
    sp.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    sp.add_argument("--samples", type=int, default=4096)
    sp.set_defaults(func=_gaussian_search)

    forge = sub.add_parser("forge").add_subparsers(dest="action", required=True)
    sp = forge.add_parser("nongor", help="Gaussian element with two-generated content")
    common(sp, vars=False)
    sp.add_argument("--degree-bound", type=int, default=1)
    sp.add_argument("--bound-kind", choices=["total", "box"], default="box")
    sp.set_defaults(func=_forge_nongor)
    sp = forge.add_parser("nongauss", help="non-Gaussian pair over K[u,v] with its certificate")
    common(sp, ring=False, vars=False)
    sp.add_argument("--field", default="F5", help="F_p or Q")
    sp.set_defaults(func=_forge_nongauss)

    scen = sub.add_parser("scenario").add_subparsers(dest="action", required=True)
    sp = scen.add_parser("run", help="run a named scenario and write its report")
    sp.add_argument("name", choices=SCENARIOS)
    sp.add_argument("--config", default=None, help="JSON config file")
    sp.add_argument("--ring", default=None)
    sp.add_argument("--vars", type=_vars, default=None)
    sp.add_argument("--semigroup", default=None, help="JSON list of generator vectors")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--mode", choices=["exhaustive", "sampled"], default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_scenario_run)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OhmRushError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
