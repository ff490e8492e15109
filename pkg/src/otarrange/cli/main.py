"""``arr`` command line entry point."""
import argparse
import json
import sys

from ..arrmat import ArrangementError, circuits, lattice_of, poincare, supersolvable_chain
from ..errors import UnknownCatalogName
from ..exactcore import format_rational
from .catalog import FIXED, catalog, names, resolve
from .report import CHECKS, run_report


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_flats(text):
    """'all' or label groups like '1,2,4;3'."""
    if text in (None, "all"):
        return "all"
    return [tuple(g.split(",")) for g in text.split(";") if g]


def build_parser():
    p = _Parser(prog="arr", description="Exact checks for hyperplane arrangements and their Orlik-Terao ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", "-D", type=int, default=None, help="degree bound D")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--flats", default="all", help="'all' or label groups, e.g. '1,2,4;3'")
    common.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = sub.add_parser("load", parents=[common], help="validate an arrangement JSON file")
    s.add_argument("path")
    s = sub.add_parser("catalog", parents=[common], help="list catalog names or print one entry")
    s.add_argument("name", nargs="?")
    for name in ("info", "circuits", "flats", "poincare"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("arrangement", help="catalog name or JSON path")
    s = sub.add_parser("check", parents=[common], help="run named checks")
    s.add_argument("checks", help="comma-separated: " + ",".join(CHECKS))
    s.add_argument("arrangement")
    s = sub.add_parser("report", parents=[common], help="run every check")
    s.add_argument("arrangement")
    return p


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_load(args):
    from ..arrmat import load

    A = load(args.path)
    _emit(args, A.summary(), f"ok: n={A.n} rank={A.rank}")
    return 0


def cmd_catalog(args):
    if not args.name:
        rows = [{"name": n, "provenance": FIXED[n].provenance if n in FIXED else "parametric"}
                for n in names()]
        _emit(args, rows, "\n".join(f"{r['name']:<18} {r['provenance']}" for r in rows))
        return 0
    A = catalog(args.name)
    data = A.to_json()
    data["provenance"] = A.provenance
    text = "\n".join(" ".join(format_rational(x) for x in r) for r in A.rows)
    _emit(args, data, text)
    return 0


def cmd_info(args):
    A = resolve(args.arrangement)
    lat = lattice_of(A)
    pi, ppi = poincare(A)
    ss = supersolvable_chain(A)
    data = {
        **A.summary(),
        "pi": str(pi),
        "pi_projective": str(ppi),
        "flats_by_rank": [len(lv) for lv in lat.levels],
        "circuits": len(circuits(A)),
        "supersolvable": ss is not None,
        "exponents": ss[1] if ss else None,
    }
    _emit(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return 0


def cmd_circuits(args):
    A = resolve(args.arrangement)
    rows = [
        {"support": [A.labels[i] for i in c.support], "coeffs": [format_rational(x) for x in c.coeffs]}
        for c in circuits(A)
    ]
    text = "\n".join(
        "{" + ",".join(r["support"]) + "}  " + " ".join(r["coeffs"]) for r in rows
    )
    _emit(args, rows, text)
    return 0


def cmd_flats(args):
    A = resolve(args.arrangement)
    lat = lattice_of(A)
    rows = [
        {"rank": f.rank, "hyperplanes": [A.labels[i] for i in f.indices], "mobius": lat.mobius[f.mask]}
        for f in lat
    ]
    text = "\n".join(f"{r['rank']}  {{{','.join(r['hyperplanes'])}}}  mu={r['mobius']}" for r in rows)
    _emit(args, rows, text)
    return 0


def cmd_poincare(args):
    A = resolve(args.arrangement)
    pi, ppi = poincare(A)
    _emit(args, {"pi": list(map(int, pi.coeffs)), "text": str(pi)}, str(pi))
    return 0


def _render(report):
    lines = [f"{report['arrangement']['name']}: pi = {report['arrangement']['pi']}"]
    for r in report["checks"]:
        inp = r.get("inputs", {})
        where = inp.get("flat") or inp.get("hyperplane") or inp.get("priority") or inp.get("key") or ""
        if r["status"] == "ok":
            lines.append(f"{r['check']:<17} {str(where):<28} {r['verdict']}")
        else:
            lines.append(f"{r['check']:<17} {str(where):<28} {r['status'].upper()}: {r['error']}")
    s = report["summary"]
    lines.append(f"{s['tasks']} tasks, {s['invariant_violations']} invariant violations, {s['errors']} errors")
    return "\n".join(lines)


def _run(args, checks):
    A = resolve(args.arrangement)
    report, code = run_report(A, checks, args.degree, args.seed, parse_flats(args.flats), args.jobs)
    _emit(args, report, _render(report))
    return code


def cmd_check(args):
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise UsageError(f"unknown check(s) {', '.join(bad)}; known: {', '.join(CHECKS)}")
    return _run(args, checks)


def cmd_report(args):
    return _run(args, CHECKS)


COMMANDS = {
    "load": cmd_load,
    "catalog": cmd_catalog,
    "info": cmd_info,
    "circuits": cmd_circuits,
    "flats": cmd_flats,
    "poincare": cmd_poincare,
    "check": cmd_check,
    "report": cmd_report,
}


def main(argv=None):
    """Exit codes: 0 ok, 1 usage or input error, 2 a theorem-backed check failed."""
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"arr: usage error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ArrangementError, UnknownCatalogName, ValueError) as exc:
        print(f"arr: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
