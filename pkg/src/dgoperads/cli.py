"""Command-line driver: every check and table as a reproducible, machine-readable run.

Exit codes: 0 when every check passes (conjectural passes included), 1 when
any check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, checks
from .koszul import DUAL_PAIRS, FROZEN_CONVENTIONS
from .morphisms import ROWS, SQUARES
from .operad import TAU
from .series import TABLE_ENTRIES
from .tables import KOSZUL_FORM, format_table, table_report

SCHEMA_VERSION = 1
THREADS_ENV = "DGOPERADS_THREADS"


class UsageError(Exception):
    pass


def conventions() -> dict:
    return {
        "action": "left; τ(3)=2, τ(2)=1, τ(1)=3",
        "tau": {str(k): v for k, v in sorted(TAU.items())},
        "pairing_symmetric": FROZEN_CONVENTIONS[True].describe(),
        "pairing_nonsymmetric": FROZEN_CONVENTIONS[False].describe(),
        "koszul_inverse_form": KOSZUL_FORM,
        "series": "sum dim P^k(n) (-t)^k x^n/n! (symmetric), without n! (nonsymmetric)",
    }


# ---------------------------------------------------------------------------
# running checks


def _call(task):
    fn, args = task
    return getattr(checks, fn)(*args)


def run_tasks(tasks: list[tuple[str, tuple]], threads: int) -> list:
    """Run ``(function name, args)`` tasks; results keep the order of ``tasks``."""
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_call, tasks))
    return [_call(t) for t in tasks]


def report(results: list) -> dict:
    return {"tool": "dgoperads", "version": __version__, "schema": SCHEMA_VERSION,
            "conventions": conventions(), "checks": [r.as_dict() for r in results]}


def _emit(results: list, json_out: str | None) -> int:
    for r in results:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        print(f"{r.status:<17} {r.check} {params}".rstrip())
    if json_out:
        text = json.dumps(report(results), ensure_ascii=False, indent=2, sort_keys=False)
        if json_out == "-":
            print(text)
        else:
            with open(json_out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return 1 if any(r.failed for r in results) else 0


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    name, N = args.operad, args.max_arity
    if name not in checks.VERIFIABLE:
        raise UsageError(f"unknown operad {name!r}; choose from {', '.join(checks.VERIFIABLE)}")
    if N < 1:
        raise UsageError("--max-arity must be at least 1")
    tasks = []
    if name in checks.EXPLICIT:
        tasks.append(("axioms", (name, N)))
        tasks.append(("relations_hold", (name,)))
    elif name == "trias":
        tasks.append(("relations_hold", (name,)))
    tasks.append(("presentation_dims", (name, N)))
    tasks.append(("differential_on_quotient", (name, min(N, 4))))
    return _emit(run_tasks(tasks, args.threads), args.json)


def cmd_homology(args) -> int:
    if args.operad not in checks.VERIFIABLE:
        raise UsageError(f"unknown operad {args.operad!r}; choose from {', '.join(checks.VERIFIABLE)}")
    if args.arity < 1:
        raise UsageError("--arity must be at least 1")
    res = checks.homology_check(args.operad, args.arity)
    code = _emit([res], args.json)
    for k, r in sorted(res.actual["ranks"].items()):
        tors = res.actual["torsion"].get(k, [])
        tail = "".join(f" ⊕ Z/{t}" for t in tors)
        print(f"  H_{k} = Z^{r}{tail}")
    return code


def cmd_table(args) -> int:
    N = args.max_arity
    if N is not None and N < 1:
        raise UsageError("--max-arity must be at least 1")
    rep = table_report(N)
    print(format_table(rep))
    if args.csv:
        fh = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="", encoding="utf-8")
        try:
            w = csv.writer(fh)
            w.writerow(["operad", "n", "k", "dim"])
            w.writerows(rep.rows())
        finally:
            if fh is not sys.stdout:
                fh.close()
    tasks = [("table_entry", (e, N)) for e in TABLE_ENTRIES]
    tasks += [("suspension_roundtrip", (min(N or 7, 7),)), ("distributive_law", (6,)),
              ("koszul_inverse", (5,)), ("manin_dimensions", (min(N or 7, 7),))]
    return _emit(run_tasks(tasks, args.threads), args.json)


def cmd_dual(args) -> int:
    pairs = list(DUAL_PAIRS) if args.pair == "all" else [args.pair]
    for p in pairs:
        if p not in DUAL_PAIRS:
            raise UsageError(f"unknown pair {p!r}; choose from {', '.join(DUAL_PAIRS)} or all")
    return _emit(run_tasks([("duality", (p,)) for p in pairs], args.threads), args.json)


def cmd_morphisms(args) -> int:
    tasks = [("morphism_check", (m,)) for m in checks.ALL_MORPHISMS]
    if args.squares:
        tasks += [("square_check", (i,)) for i in range(len(SQUARES))]
    if args.degree_zero:
        tasks.append(("degree_zero", (args.max_arity,)))
    return _emit(run_tasks(tasks, args.threads), args.json)


def cmd_exactness(args) -> int:
    rows = list(ROWS) if args.row == 0 else [args.row]
    if any(r not in ROWS for r in rows):
        raise UsageError(f"--row must be one of {sorted(ROWS)} (0 for all)")
    if args.max_arity < 2:
        raise UsageError("--max-arity must be at least 2")
    return _emit(run_tasks([("exactness", (r, args.max_arity)) for r in rows], args.threads),
                 args.json)


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    env_threads = os.environ.get(THREADS_ENV)
    default_threads = int(env_threads) if env_threads and env_threads.isdigit() else 1
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=default_threads,
                        help=f"worker processes for independent checks (default 1, or ${THREADS_ENV})")
    common.add_argument("--json", help="write the JSON report to this path ('-' for stdout)")
    p = _Parser(prog="dgoperads", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common], help="axioms, relations, presentation dimensions, differential")
    v.add_argument("operad")
    v.add_argument("--max-arity", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("homology", parents=[common], help="integral homology of one component")
    h.add_argument("operad")
    h.add_argument("--arity", type=int, required=True)
    h.set_defaults(func=cmd_homology)

    t = sub.add_parser("table", parents=[common], help="generating-series table: computed against closed forms")
    t.add_argument("--max-arity", type=int)
    t.add_argument("--csv")
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("dual", parents=[common], help="weight-two Koszul duality of a listed pair")
    d.add_argument("pair", help=f"{', '.join(DUAL_PAIRS)} or all")
    d.set_defaults(func=cmd_dual)

    m = sub.add_parser("morphisms", parents=[common], help="generator-image morphisms of the diagram")
    m.add_argument("--squares", action="store_true", help="also check every drawn square")
    m.add_argument("--degree-zero", action="store_true", help="also check degree-zero identifications")
    m.add_argument("--max-arity", type=int, default=5)
    m.set_defaults(func=cmd_morphisms)

    e = sub.add_parser("exactness", parents=[common], help="row exactness of the diagram")
    e.add_argument("--row", type=int, required=True, help="1 to 5, or 0 for all")
    e.add_argument("--max-arity", type=int, default=4)
    e.set_defaults(func=cmd_exactness)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"dgoperads: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
