"""Command-line workbench.

Subcommands: gin, check, froeberg, lexseg, bound, hilbert, gb, survey.
Exit codes: 0 success, 1 mathematical failure (inconclusive majority,
budget exhaustion, inadmissible Hilbert function), 2 usage error.
All output is JSON with pinned key order; fixed seeds give byte-identical
output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from itertools import product
from pathlib import Path

from .fields import QQ, field_by_name
from .generic import (GF32003, InconclusiveSampling, generic_templates,
                      gin_by_sampling, gin_parametric)
from .groebner import (Budget, BudgetExceeded, buchberger, reduce_basis)
from .ideals import MonomialIdeal, hilbert_series, maxdeg, minimalize
from .orders import mono_str, order_by_name
from .poly import Ring, poly_from_json, poly_to_json
from .props import is_borel_fixed, is_lexsegment, is_weakly_revlex
from .series import (InadmissibleHilbertFunction, SeriesWindow,
                     froeberg_series, lexsegment_of_froeberg,
                     lexsegment_of_hf)

SCHEMA = 1

CSV_COLUMNS = ["n", "s", "degrees", "order", "route", "gin", "is_lexsegment",
               "is_weakly_revlex", "is_borel_fixed", "maxdeg_gin",
               "maxgbdeg_bound", "seeds", "agreement", "runtime_ms", "error"]


def emit(obj):
    print(json.dumps(obj, indent=2))


def _parse_degrees(text):
    return tuple(int(d) for d in text.split(","))


def _ideal_json(J, with_strings=True):
    out = J.to_json()
    if with_strings:
        out["gens_str"] = [mono_str(g) for g in J.gens]
    return out


def _load_ideal(path):
    with open(path) as fh:
        return MonomialIdeal.from_json(json.load(fh))


# ---------------------------------------------------------------------------
# subcommands

def cmd_gin(args):
    field = field_by_name(args.field)
    main_order = order_by_name(args.order)
    t_order = order_by_name(args.t_order)
    inst = generic_templates(args.n, _parse_degrees(args.degrees), field,
                             main_order, t_order)
    budget = Budget(ms=args.budget_ms, max_pairs=args.max_pairs)
    try:
        if args.route == "sample":
            result = gin_by_sampling(inst, trials=args.trials, seed=args.seed,
                                     bound=args.bound, budget=budget)
        else:
            result = gin_parametric(inst, budget=budget)
    except (InconclusiveSampling, BudgetExceeded) as exc:
        emit({"schema": SCHEMA, "error": type(exc).__name__, "detail": str(exc)})
        return 1
    out = result.to_json()
    out["ideal"]["gens_str"] = [mono_str(g) for g in result.ideal.gens]
    emit(out)
    return 0


def cmd_check(args):
    J = _load_ideal(args.ideal)
    if args.property == "lexsegment":
        verdict = is_lexsegment(J)
    elif args.property == "weakly-revlex":
        verdict = is_weakly_revlex(J)
    else:
        verdict = is_borel_fixed(J, args.p)
    emit(verdict.to_json(args.property))
    return 0


def cmd_froeberg(args):
    series = froeberg_series(args.n, _parse_degrees(args.degrees), args.horizon)
    emit(series.to_json())
    return 0


def cmd_lexseg(args):
    try:
        if args.hf_file:
            with open(args.hf_file) as fh:
                hf = SeriesWindow.from_json(json.load(fh))
            J, uncertain = lexsegment_of_hf(args.n, hf, args.horizon)
        else:
            J, uncertain = lexsegment_of_froeberg(args.n,
                                                  _parse_degrees(args.degrees),
                                                  args.horizon)
    except InadmissibleHilbertFunction as exc:
        emit({"schema": SCHEMA, "error": "InadmissibleHilbertFunction",
              "detail": str(exc)})
        return 1
    out = _ideal_json(J)
    out["horizon_uncertain"] = uncertain
    emit(out)
    return 0


def cmd_bound(args):
    try:
        J, uncertain = lexsegment_of_froeberg(args.n,
                                              _parse_degrees(args.degrees),
                                              args.horizon)
    except InadmissibleHilbertFunction as exc:
        emit({"schema": SCHEMA, "error": "InadmissibleHilbertFunction",
              "detail": str(exc)})
        return 1
    emit({"bound": maxdeg(J) if J.gens else 0, "horizon_uncertain": uncertain})
    return 0


def cmd_hilbert(args):
    J = _load_ideal(args.ideal)
    emit({"coeffs": hilbert_series(J, args.horizon)})
    return 0


def cmd_gb(args):
    with open(args.polys) as fh:
        data = json.load(fh)
    n = int(data["n"])
    field = field_by_name(data.get("field", "Q"))
    ring = Ring(field, tuple(f"x{i + 1}" for i in range(n)))
    order = order_by_name(args.order)
    polys = [poly_from_json(ring, order, p) for p in data["polys"]]
    budget = Budget(ms=args.budget_ms, max_pairs=args.max_pairs)
    try:
        gb = reduce_basis(buchberger(polys, order, budget))
    except BudgetExceeded as exc:
        emit({"schema": SCHEMA, "error": "BudgetExceeded", "detail": str(exc)})
        return 1
    emit({
        "schema": SCHEMA,
        "order": args.order,
        "basis": [poly_to_json(g) for g in gb.generators],
        "basis_str": [str(g) for g in gb.generators],
        "initial_ideal": _ideal_json(minimalize(n, gb.lead_monomials())),
    })
    return 0


# ---------------------------------------------------------------------------
# survey

def survey_row(n, degrees, order_name, route, seed, trials, field, budget_ms):
    """One SurveyRow as a plain dict; per-case failures land in 'error'."""
    t0 = time.perf_counter()
    row = {
        "schema": SCHEMA, "n": n, "s": len(degrees),
        "degrees": list(degrees), "order": order_name, "route": route,
    }
    try:
        inst = generic_templates(n, degrees, field, order_by_name(order_name))
        budget = Budget(ms=budget_ms)
        if route == "sample":
            res = gin_by_sampling(inst, trials=trials, seed=seed, budget=budget)
            row["seeds"] = list(res.seeds)
            row["agreement"] = res.agreement
            row["u_generic"] = list(res.u_generic)
        else:
            res = gin_parametric(inst, budget=budget)
            row["seeds"] = []
            row["agreement"] = None
        J = res.ideal
        bound_ideal, _ = lexsegment_of_froeberg(n, degrees)
        row["gin"] = _ideal_json(J, with_strings=False)
        row["is_lexsegment"] = is_lexsegment(J).holds
        row["is_weakly_revlex"] = is_weakly_revlex(J).holds
        row["is_borel_fixed"] = is_borel_fixed(J, field.char).holds
        row["maxdeg_gin"] = maxdeg(J) if J.gens else 0
        row["maxgbdeg_bound"] = maxdeg(bound_ideal) if bound_ideal.gens else 0
        row["error"] = None
    except (InconclusiveSampling, BudgetExceeded,
            InadmissibleHilbertFunction) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    row["runtime_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return row


def _row_key(row):
    return (row["n"], tuple(row["degrees"]), row["order"], row["route"],
            tuple(row.get("seeds", [])))


def cmd_survey(args):
    field = field_by_name(args.field)
    cases = []
    for case in args.case:
        n, s, dmin, dmax = (int(x) for x in case.split(":"))
        for degrees in product(range(dmin, dmax + 1), repeat=s):
            cases.append((n, degrees))
    out = Path(args.out)
    jsonl = out.with_suffix(".jsonl")
    existing = {}
    if jsonl.exists():
        with open(jsonl) as fh:
            for line in fh:
                r = json.loads(line)
                existing[_row_key(r)] = r
    rows = []
    with open(jsonl, "a") as fh:
        for n, degrees in cases:
            row = survey_row(n, degrees, args.order, args.route, args.seed,
                             args.trials, field, args.budget_ms)
            key = _row_key(row)
            if key in existing:
                rows.append(existing[key])
                continue
            fh.write(json.dumps(row) + "\n")
            existing[key] = row
            rows.append(row)
    with open(out.with_suffix(".csv"), "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            flat = dict(row)
            flat["degrees"] = ",".join(str(d) for d in row["degrees"])
            flat["seeds"] = ";".join(str(s) for s in row.get("seeds", []))
            if row.get("error") is None:
                flat["gin"] = ";".join(
                    mono_str(tuple(g)) for g in row["gin"]["gens"])
            writer.writerow(flat)
    emit({"schema": SCHEMA, "cases": len(rows),
          "failures": sum(1 for r in rows if r.get("error"))})
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="ginlab",
                                 description="Initial ideals of generic ideals")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common_budget(p):
        p.add_argument("--budget-ms", type=float, default=None)
        p.add_argument("--max-pairs", type=int, default=None)

    p = sub.add_parser("gin", help="initial ideal of generic ideals")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", "--degrees", required=True)
    p.add_argument("--order", choices=["lex", "degrevlex"], default="lex")
    p.add_argument("--t-order", choices=["lex", "deglex", "degrevlex"],
                   default="degrevlex")
    p.add_argument("--route", choices=["sample", "parametric"], default="sample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--field", default="F32003")
    p.add_argument("--bound", type=int, default=None,
                   help="coefficient bound for sampling")
    common_budget(p)
    p.set_defaults(func=cmd_gin)

    p = sub.add_parser("check", help="classify a monomial ideal")
    p.add_argument("ideal", help="ideal JSON file")
    p.add_argument("--property", choices=["lexsegment", "weakly-revlex", "borel"],
                   required=True)
    p.add_argument("-p", type=int, default=0, help="characteristic for borel")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("froeberg", help="bracket series")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", "--degrees", required=True)
    p.add_argument("--horizon", type=int, default=None)
    p.set_defaults(func=cmd_froeberg)

    p = sub.add_parser("lexseg", help="lexsegment ideal of a Hilbert function")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", "--degrees", default=None)
    p.add_argument("--hf-file", default=None)
    p.add_argument("--horizon", type=int, default=None)
    p.set_defaults(func=cmd_lexseg)

    p = sub.add_parser("bound", help="maxGBdeg bound via the lexsegment ideal")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", "--degrees", required=True)
    p.add_argument("--horizon", type=int, default=None)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("hilbert", help="Hilbert series of a monomial ideal")
    p.add_argument("ideal")
    p.add_argument("--horizon", type=int, default=None)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gb", help="reduced Groebner basis of explicit input")
    p.add_argument("polys", help="polynomial system JSON file")
    p.add_argument("--order", choices=["lex", "deglex", "degrevlex"],
                   default="degrevlex")
    common_budget(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("survey", help="verdict table over a parameter grid")
    p.add_argument("--case", action="append", required=True,
                   help="n:s:dmin:dmax (repeatable)")
    p.add_argument("--order", choices=["lex", "degrevlex"], default="lex")
    p.add_argument("--route", choices=["sample", "parametric"], default="sample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--field", default="F32003")
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_survey)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.cmd == "lexseg" and not (args.degrees or args.hf_file):
        build_parser().error("lexseg needs -d or --hf-file")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
