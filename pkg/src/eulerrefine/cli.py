"""Command line front end.

    eulerrefine map delta "17,16,14,10,7,4,2,1"
    eulerrefine map phi "15,12,10,9,8,6,6,4,1" --params "N=2,A=1,2,3"
    eulerrefine table 7
    eulerrefine enumerate "AO2:N=4,A=1,3" 8 --count
    eulerrefine verify all --max-n 26 --order 30
    eulerrefine series E4.5 --order 10

Partitions are written ``17,16,14`` or with caret multiplicities
``3^2,5^3,9^2,13,19``.  Results go to stdout, progress to stderr.

Exit codes: 0 ok, 1 mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections as bj
from .families import SELECTORS, SpecError, iter_family, parse_spec, stat_tuple
from .partition import Partition, format_partition, parse_partition, statistics
from .qseries import format_monomial, load_manifest, series_equal
from .verify import SUITES, run_suite

OK, MISMATCH, INVALID = 0, 1, 2

MAPS = ("varphi", "varphi_inv", "psi", "psi_inv", "phi", "phi_inv", "delta", "delta_inv")


class InvalidInput(Exception):
    pass


def partition_record(p: Partition) -> dict:
    return {
        "parts": list(p),
        "text": format_partition(p, compact=True),
        "weight": p.weight,
        "stats": statistics(p).short(),
    }


def parse_params(text: str | None) -> bj.InsertionParams:
    if not text:
        return bj.EULER_PARAMS
    spec = parse_spec(f"C1:{text}")
    return bj.InsertionParams(spec.half_modulus, spec.residues)


# -- commands ----------------------------------------------------------------

def cmd_map(name: str, partition_text: str, params_text: str | None = None) -> tuple[int, dict]:
    try:
        p = parse_partition(partition_text)
        params = parse_params(params_text)
    except ValueError as e:
        raise InvalidInput(str(e)) from None
    funcs = {
        "varphi": bj.varphi,
        "varphi_inv": bj.varphi_inv,
        "psi": bj.psi,
        "psi_inv": bj.psi_inv,
        "phi": lambda x: bj.Phi(x, params),
        "phi_inv": lambda x: bj.Phi_inv(x, params),
        "delta": bj.delta,
        "delta_inv": bj.delta_inv,
    }
    if name not in funcs:
        raise InvalidInput(f"unknown map {name!r}; choose from {', '.join(MAPS)}")
    try:
        out = funcs[name](p)
        payload = {"map": name, "input": partition_record(p), "output": partition_record(out)}
        if name == "delta":
            a, b, _ = bj.delta_trace(p)
            payload["intermediates"] = {"varphi": partition_record(a), "phi": partition_record(b)}
        elif name == "delta_inv":
            b = bj.psi(p)
            payload["intermediates"] = {"psi": partition_record(b),
                                        "phi_inv": partition_record(bj.Phi_inv(b))}
        if name in ("phi", "phi_inv"):
            payload["params"] = {"N": params.half_modulus, "A": list(params.residues)}
    except bj.DomainError as e:
        raise InvalidInput(str(e)) from None
    return OK, payload


def render_map(payload: dict) -> str:
    def line(label, rec):
        return f"{label:<10}{','.join(map(str, rec['parts'])) or '()'}  [{rec['text'] or '()'}]"

    rows = [f"map {payload['map']}", line("input", payload["input"])]
    for key, rec in payload.get("intermediates", {}).items():
        rows.append(line(key, rec))
    rows.append(line("output", payload["output"]))
    rows.append("stats in:  " + " ".join(f"{k}={v}" for k, v in payload["input"]["stats"].items()))
    rows.append("stats out: " + " ".join(f"{k}={v}" for k, v in payload["output"]["stats"].items()))
    return "\n".join(rows)


def cmd_table(n: int) -> tuple[int, dict]:
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    rows = []
    for lam in iter_family(parse_spec("D"), n):
        mu = bj.delta(lam)
        sl, sm = statistics(lam), statistics(mu)
        rows.append({
            "lambda": format_partition(lam, compact=True),
            "lo": sl.odd_parts,
            "la": sl.alt_sum,
            "mu": format_partition(mu, compact=True),
            "no": sm.odd_mult_parts,
            "l": sm.length,
            "check": sl.odd_parts == sm.odd_mult_parts and sl.alt_sum == sm.length,
        })
    status = OK if all(r["check"] for r in rows) else MISMATCH
    return status, {"n": n, "rows": rows}


def render_table(payload: dict) -> str:
    head = f"{'lambda in D(%d)' % payload['n']:<22}{'lo':>4}{'la':>4}   {'mu = delta(lambda)':<24}{'no':>4}{'l':>4}  ok"
    out = [head]
    for r in payload["rows"]:
        lam = f"({r['lambda']})"
        mu = f"({r['mu']})"
        out.append(f"{lam:<22}{r['lo']:>4}{r['la']:>4}   {mu:<24}{r['no']:>4}{r['l']:>4}  "
                   f"{'yes' if r['check'] else 'NO'}")
    return "\n".join(out)


def cmd_enumerate(spec_text: str, n: int, stats: Sequence[str] = (), count_only: bool = False):
    try:
        spec = parse_spec(spec_text)
    except SpecError as e:
        raise InvalidInput(str(e)) from None
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    bad = [s for s in stats if s not in SELECTORS]
    if bad:
        raise InvalidInput(f"unknown statistic {bad[0]!r}; choose from {', '.join(SELECTORS)}")
    members = list(iter_family(spec, n))
    payload = {"family": str(spec), "n": n, "count": len(members)}
    if not count_only:
        try:
            payload["members"] = [
                {"parts": list(p), **({"stats": dict(zip(stats, stat_tuple(p, stats)))} if stats else {})}
                for p in members
            ]
        except ValueError as e:
            raise InvalidInput(str(e)) from None
    return OK, payload


def render_enumerate(payload: dict) -> str:
    out = [f"{payload['family']} n={payload['n']}: {payload['count']} partitions"]
    for m in payload.get("members", []):
        text = ",".join(map(str, m["parts"])) or "()"
        if "stats" in m:
            text += "  " + " ".join(f"{k}={v}" for k, v in m["stats"].items())
        out.append(text)
    return "\n".join(out)


def cmd_verify(suite: str, max_n: int = 26, order: int = 30, progress=None) -> tuple[int, dict]:
    if suite not in SUITES + ("all",):
        raise InvalidInput(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    if max_n < 0 or order < 0:
        raise InvalidInput("bounds must be nonnegative")
    results = []
    for name in (SUITES if suite == "all" else (suite,)):
        if progress:
            progress(f"running {name} ...")
        results += run_suite(name, max_n, order)
    status = OK if all(r.ok for r in results) else MISMATCH
    return status, {
        "suite": suite,
        "max_n": max_n,
        "order": order,
        "checks": [
            {"suite": r.suite, "name": r.name, "checks": r.checks, "ok": r.ok, "witness": r.witness}
            for r in results
        ],
    }


def render_verify(payload: dict) -> str:
    out = []
    for c in payload["checks"]:
        status = "ok" if c["ok"] else "MISMATCH"
        out.append(f"[{status}] {c['suite']}/{c['name']}: {c['checks']} checks")
        if not c["ok"]:
            out.append(f"    witness: {c['witness']}")
    total = sum(c["checks"] for c in payload["checks"])
    bad = sum(not c["ok"] for c in payload["checks"])
    out.append(f"{len(payload['checks'])} identities/properties, {total} checks, {bad} mismatches")
    return "\n".join(out)


def cmd_series(ident: str, side: str = "both", order: int | None = None) -> tuple[int, dict]:
    manifest = load_manifest()
    if ident not in manifest:
        raise InvalidInput(f"unknown identity {ident!r}; choose from {', '.join(manifest)}")
    if order is not None and order < 0:
        raise InvalidInput("order must be nonnegative")
    entry = manifest[ident]
    Q = entry.order if order is None else order
    lhs, rhs = entry.sides(Q)
    cmp = series_equal(lhs, rhs)
    sides = {"lhs": lhs, "rhs": rhs} if side == "both" else {side: {"lhs": lhs, "rhs": rhs}[side]}
    payload = {
        "id": ident,
        "title": entry.title,
        "grading": entry.grading,
        "order": Q,
        "equal": bool(cmp),
        "sides": {
            name: [
                {"grade": g, "terms": {format_monomial(m): c for m, c in sorted(s.terms.get(g, {}).items(), reverse=True)}}
                for g in range(Q + 1)
            ]
            for name, s in sides.items()
        },
    }
    if not cmp:
        payload["discrepancy"] = cmp.describe()
    return (OK if cmp else MISMATCH), payload


def render_series(payload: dict) -> str:
    out = [f"{payload['id']}: {payload['title']} ({payload['grading']}-graded to {payload['order']})"]
    for name, grades in payload["sides"].items():
        out.append(f"{name}:")
        for g in grades:
            terms = " + ".join(k if c == 1 else f"{c}*{k}" for k, c in g["terms"].items()) or "0"
            out.append(f"  [{g['grade']}] {terms}")
    out.append("sides agree" if payload["equal"] else f"MISMATCH: {payload['discrepancy']}")
    return "\n".join(out)


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerrefine", description=__doc__.split("\n\n")[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("map", help="apply one of the bijections")
    p.add_argument("name", choices=MAPS)
    p.add_argument("partition", help='e.g. "17,16,14,10,7,4,2,1" or "1,3,7^2,9,15"')
    p.add_argument("--params", help='insertion parameters for phi/phi_inv, e.g. "N=2,A=1,2,3"')
    add_json(p)

    p = sub.add_parser("table", help="rows (lambda, lo, la, delta(lambda), no, l) over D(n)")
    p.add_argument("n", type=int)
    add_json(p)

    p = sub.add_parser("enumerate", help="list a partition family")
    p.add_argument("spec", help='e.g. D, O, A1, "AO1:N=4,A=1,3", "B1:N=3,Arep=1,Anon=2"')
    p.add_argument("n", type=int)
    p.add_argument("--stats", default="", help=f"comma separated, from {','.join(SELECTORS)}")
    p.add_argument("--count", action="store_true", help="print the count only")
    add_json(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("max_n_pos", nargs="?", type=int, metavar="MAX_N")
    p.add_argument("order_pos", nargs="?", type=int, metavar="Q")
    p.add_argument("--max-n", type=int)
    p.add_argument("--order", type=int)
    add_json(p)

    p = sub.add_parser("series", help="print both sides of a catalogued identity")
    p.add_argument("identity")
    p.add_argument("--side", choices=("lhs", "rhs", "both"), default="both")
    p.add_argument("--order", type=int)
    add_json(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = args.json
    try:
        if args.command == "map":
            status, payload = cmd_map(args.name, args.partition, args.params)
            render = render_map
        elif args.command == "table":
            status, payload = cmd_table(args.n)
            render = render_table
        elif args.command == "enumerate":
            stats = [s for s in args.stats.replace(" ", "").split(",") if s]
            status, payload = cmd_enumerate(args.spec, args.n, stats, args.count)
            render = render_enumerate
        elif args.command == "verify":
            max_n = args.max_n if args.max_n is not None else (
                args.max_n_pos if args.max_n_pos is not None else 26)
            order = args.order if args.order is not None else (
                args.order_pos if args.order_pos is not None else 30)
            status, payload = cmd_verify(args.suite, max_n, order,
                                         progress=lambda m: print(m, file=sys.stderr))
            render = render_verify
        else:
            status, payload = cmd_series(args.identity, args.side, args.order)
            render = render_series
    except InvalidInput as e:
        if as_json:
            print(json.dumps({"status": "invalid-input", "error": str(e)}, sort_keys=True))
        else:
            print(f"invalid input: {e}", file=sys.stderr)
        return INVALID
    if as_json:
        doc = {"status": "ok" if status == OK else "mismatch", **payload}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(render(payload))
    return status


if __name__ == "__main__":
    sys.exit(main())
