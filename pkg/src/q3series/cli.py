"""Command-line front end: expansion, counting, table inspection, verification.

Output is deterministic: identical invocations produce byte-identical
bytes on stdout.  JSON carries oversized integers as decimal strings.
Exit codes: 0 all checks passed, 1 some check failed, 2 usage or config
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .counts import CountingFunction, Kind, count_series
from .eta import EtaQuotientSpec, eta_quotient
from .hmatrix import m_entry
from .report import FAIL, PASS
from .vectors import Family, family_vector, valuation_bound
from .verifier import SuiteConfig, run_suite, verify_congruence, verify_gf_identity
from .arith3 import pi3

_JSON_KW = dict(sort_keys=True, separators=(",", ":"))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, **_JSON_KW) + "\n")


def _coeff_str(series, lo, hi) -> list[str]:
    return [str(series.coeff(e)) for e in range(lo, hi)]


def _cmd_expand(args) -> int:
    spec = EtaQuotientSpec.parse(args.spec)
    series = eta_quotient(spec, args.order)
    lo = series.offset if series.offset < 0 else 0
    values = _coeff_str(series, lo, args.order)
    if args.format == "csv":
        sys.stdout.write(",".join(values) + "\n")
    elif args.format == "json":
        _emit_json({"spec": str(spec), "first_exponent": lo, "order": args.order,
                    "coefficients": values})
    else:
        for e, v in zip(range(lo, args.order), values):
            sys.stdout.write(f"q^{e}\t{v}\n")
    return 0


_KINDS = {k.value: k for k in Kind}


def _cmd_count(args) -> int:
    kind = _KINDS[args.kind]
    fn = CountingFunction(kind, args.ell if kind is not Kind.P3 else None)
    if not 0 <= args.nmin <= args.nmax:
        raise ValueError("need 0 <= nmin <= nmax")
    series = count_series(fn, args.nmax + 1)
    values = _coeff_str(series, args.nmin, args.nmax + 1)
    if args.format == "csv":
        sys.stdout.write(",".join(values) + "\n")
    elif args.format == "json":
        _emit_json({"function": fn.label(), "first_n": args.nmin, "values": values})
    else:
        for n, v in enumerate(values, start=args.nmin):
            sys.stdout.write(f"{n}\t{v}\n")
    return 0


def _cmd_mtable(args) -> int:
    rows = [[m_entry(i, j) for j in range(1, args.jmax + 1)] for i in range(1, args.imax + 1)]
    if args.format == "json":
        _emit_json({"imax": args.imax, "jmax": args.jmax,
                    "rows": [[str(v) for v in row] for row in rows]})
    else:
        for row in rows:
            sys.stdout.write(",".join(str(v) for v in row) + "\n")
    return 0


def _cmd_vector(args) -> int:
    family = Family(args.family)
    vec = family_vector(family, args.alpha, args.mu, args.jmax)
    entries = []
    for j in range(1, args.jmax + 1):
        v = vec.value(j)
        entries.append({
            "j": j,
            "value": str(v),
            "valuation": None if v == 0 else pi3(v).value,
            "bound": valuation_bound(family, args.alpha, args.mu, j),
        })
    _emit_json({"family": family.value, "alpha": args.alpha, "mu": args.mu,
                "entries": entries})
    return 0


def _case_params(args) -> dict:
    params = {}
    for name in ("alpha", "beta", "ell", "p", "k", "m"):
        v = getattr(args, name, None)
        if v is not None:
            params[name] = v
    return params


def _finish_report(rep, fmt) -> int:
    if fmt == "json":
        _emit_json(rep.to_dict())
    else:
        d = rep.to_dict()
        sys.stdout.write(f"{d['case']} {json.dumps(d['params'], **_JSON_KW)}: {d['status']}\n")
        for f in d["failures"][:10]:
            sys.stdout.write(f"  counterexample {json.dumps(f, **_JSON_KW)}\n")
    if rep.status == FAIL and not rep.extras.get("conjecture"):
        return 1
    return 0


def _cmd_verify_congruence(args) -> int:
    rep = verify_congruence(args.case, _case_params(args), args.nmax)
    return _finish_report(rep, args.format)


def _cmd_verify_identity(args) -> int:
    rep = verify_gf_identity(args.id, _case_params(args), args.terms, args.mode)
    return _finish_report(rep, args.format)


def default_suite_config() -> SuiteConfig:
    with resources.files("q3series").joinpath("data/suite_default.json").open() as fh:
        return SuiteConfig.from_json(fh.read())


def _cmd_verify_suite(args) -> int:
    if args.config:
        with open(args.config) as fh:
            cfg = SuiteConfig.from_json(fh.read())
    else:
        cfg = default_suite_config()
    threads = args.threads or int(os.environ.get("Q3SERIES_THREADS", "0")) or cfg.threads
    cfg.threads = threads
    suite = run_suite(cfg)
    if args.format == "json":
        _emit_json(suite.to_dict())
    else:
        for rep in suite.reports:
            sys.stdout.write(
                f"{rep.case} {json.dumps(rep.params, sort_keys=True, default=str)}: {rep.status}\n")
        sys.stdout.write(f"overall: {suite.status}\n")
    return 0 if suite.status == PASS else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="q3series",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an eta-quotient given in the grammar q^s * E(r)^e * ...")
    p.add_argument("--spec", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("count", help="coefficients of a counting function")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--nmin", type=int, default=0)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("mtable", help="print a block of the huffing coefficient table")
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_mtable)

    p = sub.add_parser("vector", help="print one coefficient vector with valuations")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--jmax", type=int, default=6)
    p.set_defaults(func=_cmd_vector)

    v = sub.add_parser("verify", help="verification commands")
    vsub = v.add_subparsers(dest="verify_command", required=True)

    p = vsub.add_parser("congruence", help="check one congruence case")
    p.add_argument("--case", required=True)
    for name in ("alpha", "beta", "ell", "p", "k", "m"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify_congruence)

    p = vsub.add_parser("identity", help="check one generating-function identity")
    p.add_argument("--id", required=True)
    for name in ("alpha", "beta", "ell"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--terms", type=int, default=30)
    p.add_argument("--mode", choices=("exact", "mod", "auto"), default="auto")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify_identity)

    p = vsub.add_parser("suite", help="run the full catalog over configured grids")
    p.add_argument("--config", help="path to a suite config JSON (default: packaged grids)")
    p.add_argument("--threads", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
