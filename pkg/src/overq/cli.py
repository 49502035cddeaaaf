"""Command-line front end.

Exit codes: 0 success / all identities pass, 1 an identity failed,
2 usage error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from overq import enumeration as en
from overq import harness
from overq.errors import BudgetExceeded, DomainError, OutOfRange
from overq.qbinomial import Method, gaussian, over_limit, over_qbinomial, over_term, qtrinomial
from overq.series import (
    INFINITY,
    QSeries,
    XQSeries,
    format_qseries,
    format_xqseries,
    qs_invert,
    qs_product_modular,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

COMPUTE_OBJECTS = (
    "gaussian", "qtrinomial", "overq", "overterm", "overlimit", "rankgf", "D", "C", "g", "S", "product",
)
ENUM_OBJECTS = ("box", "gap", "congruence", "regular4")
SUITES = tuple(harness.SUITES) + ("all",)

_REQUIRED = {
    "gaussian": ("M", "N"),
    "qtrinomial": ("a", "b", "c"),
    "overq": ("M", "N"),
    "overterm": ("M", "N", "k"),
    "overlimit": ("j", "T"),
    "rankgf": ("m", "T"),
    "D": ("N", "X", "T"),
    "C": ("N", "X", "T"),
    "g": ("N", "X", "T"),
    "S": ("N", "X", "T"),
    "product": ("residues", "modulus", "T"),
}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    selector: str
    params: dict[str, Any] = field(default_factory=dict)
    format: str = "text"
    budget: str | None = None
    method: str = "closed"
    invert: bool = False
    ascii: bool = False
    details: bool = False


def _residues(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--budget", help="raise enumeration guards (integer or 'unlimited')")
        for name in ("M", "N", "a", "b", "c", "k", "j", "m", "X", "n", "nmax", "weight",
                     "Mmax", "Nmax", "mmax", "Tpad"):
            p.add_argument(f"--{name}", type=int)

    pc = sub.add_parser("compute", help="print one object")
    pc.add_argument("selector", choices=COMPUTE_OBJECTS)
    common(pc, ("text", "json", "csv"))
    pc.add_argument("--T", type=int)
    pc.add_argument("--residues", type=_residues)
    pc.add_argument("--modulus", type=int)
    pc.add_argument("--invert", action="store_true", help="print 1/product")
    pc.add_argument("--method", choices=[m.value for m in Method], default="closed")

    pe = sub.add_parser("enum", help="enumerate overpartitions")
    pe.add_argument("selector", choices=ENUM_OBJECTS)
    common(pe, ("text", "json", "csv"))
    pe.add_argument("--ascii", action="store_true", help="write overlined parts as 3'")

    pv = sub.add_parser("verify", help="run identity checks")
    pv.add_argument("selector", choices=SUITES)
    common(pv, ("text", "json"))
    pv.add_argument("--T", type=int)
    pv.add_argument("--details", action="store_true", help="print report info fields")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CliConfig:
    argv = list(sys.argv[1:] if argv is None else argv)
    # N may be "inf" for series selectors; argparse sees it as int otherwise
    n_inf = False
    if "--N" in argv:
        i = argv.index("--N")
        if i + 1 < len(argv) and argv[i + 1].lower() in ("inf", "infinity"):
            n_inf = True
            argv = argv[:i] + argv[i + 2:]
    ns = build_parser().parse_args(argv)
    params = {
        k: v
        for k, v in vars(ns).items()
        if v is not None and k not in ("command", "selector", "format", "budget", "method",
                                       "invert", "ascii", "details")
    }
    if n_inf:
        params["N"] = INFINITY
    return CliConfig(
        command=ns.command,
        selector=ns.selector,
        params=params,
        format=ns.format,
        budget=ns.budget,
        method=getattr(ns, "method", "closed"),
        invert=getattr(ns, "invert", False),
        ascii=getattr(ns, "ascii", False),
        details=getattr(ns, "details", False),
    )


def _need(cfg: CliConfig, *names: str) -> list:
    missing = [n for n in names if n not in cfg.params]
    if missing:
        raise UsageError(f"{cfg.command} {cfg.selector}: missing --{', --'.join(missing)}")
    return [cfg.params[n] for n in names]


# ---------------------------------------------------------------------------
# output


def _emit_series(s: QSeries | XQSeries, fmt: str, exact: bool, out) -> None:
    if fmt == "json":
        json.dump(s.to_json(), out)
        out.write("\n")
    elif fmt == "csv":
        if isinstance(s, XQSeries):
            out.write("x,q,coeff\n")
            for (a, b), c in s.coeffs.items():
                out.write(f"{a},{b},{c}\n")
        else:
            out.write("q,coeff\n")
            for e, c in s.coeffs.items():
                out.write(f"{e},{c}\n")
    else:
        if isinstance(s, XQSeries):
            out.write(format_xqseries(s, big_o=True) + "\n")
        else:
            out.write(format_qseries(s, big_o=not exact) + "\n")


def run_compute(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    sel = cfg.selector
    vals = _need(cfg, *_REQUIRED[sel])
    if sel != "product" and any(isinstance(v, int) and v < 0 for v in vals):
        raise UsageError("parameters must be non-negative")
    exact = sel in ("gaussian", "qtrinomial", "overq", "overterm")
    if "N" in _REQUIRED[sel] and sel not in ("D", "C", "g", "S") and cfg.params["N"] == INFINITY:
        raise UsageError("N=inf is only meaningful for D, C, g and S")
    if sel == "gaussian":
        s = gaussian(*vals)
    elif sel == "qtrinomial":
        s = qtrinomial(*vals)
    elif sel == "overq":
        s = over_qbinomial(*vals, method=cfg.method)
    elif sel == "overterm":
        s = over_term(*vals)
    elif sel == "overlimit":
        s = over_limit(*vals)
    elif sel == "rankgf":
        s = harness.rank_gf(*vals)
    elif sel == "product":
        residues, modulus, T = vals
        s = qs_product_modular(residues, modulus, T)
        if cfg.invert:
            s = qs_invert(s)
    else:
        N, X, T = vals
        if sel != "S" and N != INFINITY and N < 0:
            raise UsageError("N must be non-negative")
        if sel == "S" and N != INFINITY and N < 1:
            raise UsageError("S needs N >= 1")
        builder = {"D": harness.D_series, "C": harness.C_series,
                   "g": harness.g_series, "S": harness.sylvester_S}[sel]
        s = builder(N, X, T)
    _emit_series(s, cfg.format, exact, out)
    return EXIT_OK


def run_enum(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    sel = cfg.selector
    show = (lambda o: o.ascii()) if cfg.ascii else str
    if sel == "box":
        M, N = _need(cfg, "M", "N")
        if M < 0 or N < 0:
            raise UsageError("box dimensions must be non-negative")
        weight = cfg.params.get("weight")
        if cfg.format == "csv":
            table = en.box_counts(M, N, budget=cfg.budget)
            if weight is not None:
                table = en.CountTable(("n",), {(weight,): table[weight]})
            out.write(table.to_csv())
            return EXIT_OK
        items = en.enum_overpartitions_box(M, N, budget=cfg.budget)
        if weight is not None:
            items = [o for o in items if o.weight == weight]
    else:
        if "n" in cfg.params:
            n = cfg.params["n"]
            if n < 0:
                raise UsageError("n must be non-negative")
            if n > en.budget_limits(cfg.budget)[1]:
                raise BudgetExceeded(f"n={n} exceeds the brute-force budget")
            if cfg.format == "csv":
                counts = en.gap_congruence_counts(n, budget=cfg.budget)
                key = {"gap": "A", "congruence": "B", "regular4": "C"}[sel]
                out.write(en.CountTable(("n",), {(n,): counts[key][n]}).to_csv())
                return EXIT_OK
            items = list(en.FAMILIES[sel](n))
        elif "nmax" in cfg.params:
            nmax = cfg.params["nmax"]
            if nmax < 0:
                raise UsageError("nmax must be non-negative")
            counts = en.gap_congruence_counts(nmax, budget=cfg.budget)
            key = {"gap": "A", "congruence": "B", "regular4": "C"}[sel]
            if cfg.format == "json":
                json.dump({str(n): counts[key][n] for n in range(nmax + 1)}, out)
                out.write("\n")
            else:
                out.write(counts[key].to_csv())
            return EXIT_OK
        else:
            raise UsageError(f"enum {sel}: give --n (listing) or --nmax (counts)")
    if cfg.format == "json":
        json.dump({"count": len(items), "items": [o.ascii() for o in items]}, out)
        out.write("\n")
    elif cfg.format == "csv":
        # listing as CSV: one row per overpartition
        out.write("weight,parts,overlines,overpartition\n")
        for o in items:
            out.write(f"{o.weight},{o.length},{o.overline_count},{o.ascii()}\n")
    else:
        for o in items:
            out.write(show(o) + "\n")
    return EXIT_OK


_SUITE_PARAMS = {
    "overg": ("Mmax", "Nmax"),
    "pascal": ("Mmax", "Nmax"),
    "limit": ("T",),
    "parts": ("X", "T", "nmax"),
    "tau": ("nmax",),
    "sylvester": ("X", "T"),
    "rank": ("mmax", "T", "nmax"),
    "key": ("X", "Tpad"),
    "rr": ("nmax", "T"),
}


def _suite_kwargs(cfg: CliConfig) -> dict[str, Any]:
    sel = cfg.selector
    p = cfg.params
    kwargs = {k: p[k] for k in _SUITE_PARAMS.get(sel, ()) if k in p}
    for k, v in kwargs.items():
        if v < 0:
            raise UsageError(f"--{k} must be non-negative")
    if sel == "key":
        if "N" in p:
            kwargs["N_list"] = [p["N"]]
        elif "Nmax" in p:
            kwargs["N_list"] = range(2, p["Nmax"] + 1)
        for N in kwargs.get("N_list", ()):
            if N == INFINITY or N < 2:
                raise UsageError("verify key needs N >= 2")
    if sel in ("parts", "sylvester"):
        if "N" in p:
            if p["N"] == INFINITY or p["N"] < 1:
                raise UsageError(f"verify {sel} needs N >= 1")
            kwargs["N_max"] = p["N"]
        elif "Nmax" in p:
            kwargs["N_max"] = p["Nmax"]
    return kwargs


def _report_line(r: harness.VerificationReport) -> str:
    params = " ".join(f"{k}={v if not isinstance(v, range) else list(v)}" for k, v in r.params.items())
    line = f"{r.status} {r.identity} {params} ({r.elapsed * 1000:.1f} ms)"
    if r.first_failure:
        f = r.first_failure
        line += (f"\n  first failure at x^{f['x']} q^{f['q']}: lhs={f['lhs']} rhs={f['rhs']}"
                 f" [{r.info.get('check')}] {r.info.get('cell', '')}")
    return line


def run_verify(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.budget is not None:
        os.environ["OVERQ_BUDGET"] = cfg.budget
    if cfg.selector == "all":
        reports = harness.run_suite("all")
    else:
        kwargs = _suite_kwargs(cfg)
        reports = harness.run_suite(cfg.selector, **kwargs)
    for r in reports:
        r.params = {k: (list(v) if isinstance(v, range) else v) for k, v in r.params.items()}
    if cfg.format == "json":
        json.dump([r.to_json() for r in reports], out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            out.write(_report_line(r) + "\n")
            if r.identity == "rr" and (cfg.selector == "rr" or cfg.details):
                for n, a, b, c in r.info["table"]:
                    out.write(f"  n={n}: A={a} B={b} C={c}\n")
            elif cfg.details:
                for k, v in r.info.items():
                    out.write(f"  {k}: {v}\n")
        passed = sum(r.passed for r in reports)
        out.write(f"{passed}/{len(reports)} identities verified\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    runner = {"compute": run_compute, "enum": run_enum, "verify": run_verify}[cfg.command]
    try:
        return runner(cfg)
    except (UsageError, DomainError, OutOfRange, ValueError) as exc:
        print(f"overq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"overq: budget exceeded: {exc} (raise with --budget or OVERQ_BUDGET)", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
