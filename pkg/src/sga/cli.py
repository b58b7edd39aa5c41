"""Command-line interface.

    sga list                                   catalog as JSON
    sga eval      --potential ID --params ...  potential curve to CSV
    sga spectrum  --potential ID ...           raw two-grid solve, JSON report
    sga verify    --potential ID ...           full verification report
    sga algebra-check --q --delta ...          residual table, JSON
    sga export    --in report.json --format csv --out report.csv

Exit codes: 0 success, 2 validation error, 3 numeric non-convergence,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .catalog import catalog_listing, make_potential
from .errors import NumericsError, ValidationError
from .profiles import load_tabulated_csv, make_profile
from .reports import dumps_canonical
from .solver import Grid, OrderingParams, refine
from .verify import (export_curve, export_report, run_algebra_check,
                     run_verification, total_potential)
from .catalog import bound_threshold


def _parse_params(text):
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if not item:
            continue
        k, _, v = item.partition("=")
        if not _:
            raise ValidationError(f"bad parameter item {item!r}; expected name=value")
        out[k.strip()] = float(v)
    return out


def _parse_profile(spec: str):
    """constant | exponential:beta=1 | rational-arctan | tabulated:file=PATH
    with optional :anchor=x0/mu0 segment."""
    parts = spec.split(":")
    kind = parts[0]
    kv = {}
    for seg in parts[1:]:
        k, _, v = seg.partition("=")
        kv[k] = v
    anchor = (0.0, 0.0)
    if "anchor" in kv:
        a, _, b = kv.pop("anchor").partition("/")
        anchor = (float(a), float(b))
    if kind == "tabulated":
        if "file" not in kv:
            raise ValidationError("tabulated profile needs :file=PATH")
        return load_tabulated_csv(kv["file"], anchor=(anchor[0], anchor[1]))
    params = [float(v) for k, v in kv.items() if k != "file"]
    return make_profile(kind, params or None, anchor=anchor)


def _parse_triple(text, name):
    vals = [float(v) for v in text.split(",")]
    if len(vals) != 3:
        raise ValidationError(f"--{name} expects three comma-separated numbers")
    return vals


def _write(doc, out_path):
    payload = dumps_canonical(doc) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(payload)
    else:
        with open(out_path, "w") as fh:
            fh.write(payload)


def build_parser():
    ap = argparse.ArgumentParser(prog="sga", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="catalog listing as JSON").add_argument(
        "--out", default="-")

    pe = sub.add_parser("eval", help="evaluate a potential on a mu range")
    pe.add_argument("--potential", required=True)
    pe.add_argument("--params", default="")
    pe.add_argument("--mu", required=True, help="lo,hi,count")
    pe.add_argument("--profile", default="constant")
    pe.add_argument("--out", required=True)

    ps = sub.add_parser("spectrum", help="two-grid eigenvalue solve")
    ps.add_argument("--potential", required=True)
    ps.add_argument("--params", default="")
    ps.add_argument("--profile", default="constant")
    ps.add_argument("--ordering", default="0,-1,0", help="eta,eps,rho")
    ps.add_argument("--grid", required=True, help="x_lo,x_hi,N")
    ps.add_argument("--k", type=int, default=6)
    ps.add_argument("--out", default="-")

    pv = sub.add_parser("verify", help="full verification run")
    pv.add_argument("--potential", required=True)
    pv.add_argument("--params", default="")
    pv.add_argument("--profile", default="constant")
    pv.add_argument("--ordering", default="0,-1,0")
    pv.add_argument("--mu-window", required=True, help="mu_lo,mu_hi")
    pv.add_argument("--N", type=int, default=2000)
    pv.add_argument("--k", type=int, default=6)
    pv.add_argument("--compare-ordering", action="append", default=[],
                    help="extra eta,eps,rho (repeatable)")
    pv.add_argument("--compare-profile", action="append", default=[],
                    help="extra profile spec (repeatable)")
    pv.add_argument("--out", default="-")
    pv.add_argument("--format", choices=("json", "csv"), default="json")

    pa = sub.add_parser("algebra-check", help="structure/commutator residual table")
    pa.add_argument("--q", type=float, required=True)
    pa.add_argument("--b", type=int, default=1)
    pa.add_argument("--delta", type=float, required=True)
    pa.add_argument("--profile", default="constant")
    pa.add_argument("--y", default="exponential:alpha=1", help="form:alpha=A")
    pa.add_argument("--window", default="0.5,5.0,400", help="x_lo,x_hi,n")
    pa.add_argument("--out", default="-")

    px = sub.add_parser("export", help="re-export a JSON report")
    px.add_argument("--in", dest="inp", required=True)
    px.add_argument("--format", choices=("json", "csv"), required=True)
    px.add_argument("--out", required=True)
    return ap


def _cmd_list(args):
    _write(catalog_listing(), args.out)


def _cmd_eval(args):
    model = make_potential(args.potential, _parse_params(args.params))
    lo, hi, n = _parse_triple(args.mu, "mu")
    profile = _parse_profile(args.profile)
    export_curve(model, profile, np.linspace(lo, hi, int(n)), args.out)


def _cmd_spectrum(args):
    model = make_potential(args.potential, _parse_params(args.params))
    profile = _parse_profile(args.profile)
    eta, eps, rho = _parse_triple(args.ordering, "ordering")
    lo, hi, N = _parse_triple(args.grid, "grid")
    ordering = OrderingParams(eta, eps, rho)
    rep = refine(profile, total_potential(model, profile, ordering), ordering,
                 Grid(lo, hi, int(N)), args.k,
                 bound_threshold=bound_threshold(model), is_complex=model.is_complex)
    _write(rep.to_json(), args.out)


def _cmd_verify(args):
    profile = _parse_profile(args.profile)
    eta, eps, rho = _parse_triple(args.ordering, "ordering")
    lo, _, hi = args.mu_window.partition(",")
    comp_ord = [OrderingParams(*_parse_triple(t, "compare-ordering"))
                for t in args.compare_ordering]
    comp_prof = [(spec, _parse_profile(spec)) for spec in args.compare_profile]
    rep = run_verification(
        args.potential, _parse_params(args.params), profile,
        OrderingParams(eta, eps, rho), (float(lo), float(hi)), N=args.N, k=args.k,
        compare_orderings=comp_ord, compare_profiles=comp_prof,
    )
    if args.format == "json" and args.out in (None, "-"):
        _write(rep.to_json(), args.out)
    else:
        export_report(rep, args.format, args.out)


def _cmd_algebra_check(args):
    profile = _parse_profile(args.profile)
    form, _, rest = args.y.partition(":")
    alpha = 1.0
    for seg in rest.split(","):
        k, _, v = seg.partition("=")
        if k == "alpha":
            alpha = float(v)
    lo, hi, n = _parse_triple(args.window, "window")
    table = run_algebra_check(args.q, args.b, args.delta, profile,
                              y_spec=(form, alpha), window=(lo, hi), n=int(n))
    _write(table, args.out)


def _cmd_export(args):
    try:
        with open(args.inp) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"input is not valid JSON: {exc}")
    export_report(doc, args.format, args.out)


_DISPATCH = {
    "list": _cmd_list,
    "eval": _cmd_eval,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "algebra-check": _cmd_algebra_check,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _DISPATCH[args.command](args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericsError as exc:
        print(f"numeric error: {exc} {exc.diagnostics}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
