"""``envlat`` command-line front end.

Data goes to standard output, diagnostics to standard error.  Exit codes:
0 success, 1 argument or input error, 2 verification failure (JSON report on
standard error), 3 resource-cap refusal.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from contextlib import contextmanager

from . import report
from .classify import classify_record
from .counting import d_seq, d_via_enumeration, d_via_gf, gf_identity_check
from .dynkin import DynkinDiagram, NodeSet, parse_diagram
from .envlattice import Idempotent, enumerate_lattice, is_essential_lambda, rank_cap
from .errors import EnvlatError, InvalidInputError, ResourceLimitError
from .renner import count_R1, count_R1_breakdown, rank1_orbit_poset
from .weyl import enumerate_weyl

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse variant that raises instead of exiting, so ``run`` owns the exit code."""

    def error(self, message):
        raise InvalidInputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="envlat", description="Cross-section lattices of enveloping monoids.")
    p.add_argument("--cap-weyl", type=int, help="largest Weyl group order to enumerate")
    p.add_argument("--cap-rank", type=int, help="largest diagram rank for lattice enumeration")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lat = sub.add_parser("lattice", help="enumerate the cross-section lattice")
    lat.add_argument("diagram")
    fmt = lat.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    lat.add_argument("--figure", metavar="PATH", help="also draw the Hasse diagram to PATH")
    lat.set_defaults(format="json")

    cls = sub.add_parser("classify", help="classify every element (or one)")
    cls.add_argument("diagram")
    cls.add_argument("--element", metavar="SPEC", help='an element such as "I=1,2;J=1"')

    cnt = sub.add_parser("count", help="orbit counts d_n for type A")
    cnt.add_argument("--max-n", type=int, required=True)
    cnt.add_argument("--method", choices=["rec", "gf", "enum", "all"], default="rec")
    cnt.add_argument("--check", action="store_true", help="run triple agreement and the series identity")
    cnt.add_argument("--figure", metavar="PATH", help="also plot d_n and e_n to PATH")

    ren = sub.add_parser("renner", help="rank-one Renner combinatorics")
    rsub = ren.add_subparsers(dest="renner_command", required=True, parser_class=_Parser)
    r1 = rsub.add_parser("rank1", help="the poset WeW for e = e_{S, S-{s}} as DOT")
    r1.add_argument("diagram")
    r1.add_argument("--s", type=int, required=True, dest="node")
    r1.add_argument("--full-j", action="store_true", help="use e_{S-{s}, S} instead")
    rc = rsub.add_parser("r1count", help="|R_1| with the per-idempotent breakdown")
    rc.add_argument("diagram")

    ver = sub.add_parser("verify", help="run invariant checks (or the acceptance suite with 'all')")
    ver.add_argument("target", help="a diagram such as A3, or 'all'")
    ver.add_argument("--max-rank", type=int, default=5)
    return p


ELEMENT_RE = re.compile(r"^\s*I\s*=\s*([\d,\s]*);\s*J\s*=\s*([\d,\s]*)$", re.IGNORECASE)


def parse_element(d: DynkinDiagram, spec: str) -> Idempotent:
    m = ELEMENT_RE.match(spec)
    if not m:
        raise InvalidInputError(f"element spec {spec!r} is not of the form 'I=1,2;J=1'")

    def nodes(text: str) -> NodeSet:
        items = [t.strip() for t in text.split(",") if t.strip()]
        return d.subset(int(t) for t in items)

    e = Idempotent(nodes(m.group(1)), nodes(m.group(2)))
    if not is_essential_lambda(d, e.I, e.J):
        raise InvalidInputError(f"{e} is not an essential pair of {d.name}")
    return e


@contextmanager
def _caps(args):
    saved = {k: os.environ.get(k) for k in ("ENVLAT_CAP_WEYL", "ENVLAT_CAP_RANK")}
    try:
        if args.cap_weyl is not None:
            os.environ["ENVLAT_CAP_WEYL"] = str(args.cap_weyl)
        if args.cap_rank is not None:
            os.environ["ENVLAT_CAP_RANK"] = str(args.cap_rank)
        yield
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


def _cmd_lattice(args, out) -> int:
    L = enumerate_lattice(parse_diagram(args.diagram))
    out.write(report.lattice_dot(L) if args.format == "dot" else report.dumps(report.lattice_json(L)) + "\n")
    if args.figure:
        report.plot_hasse(L, args.figure)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    d = parse_diagram(args.diagram)
    L = enumerate_lattice(d)
    elements = [parse_element(d, args.element)] if args.element else L.elements
    payload = {"diagram": d.name, "records": [classify_record(L, e) for e in elements]}
    out.write(report.dumps(report.envelope("classify", payload)) + "\n")
    return EXIT_OK


def _cmd_count(args, out, err) -> int:
    if args.max_n < 0:
        raise InvalidInputError("--max-n must be non-negative")
    if args.method in ("enum", "all") and args.max_n > rank_cap():
        raise ResourceLimitError(f"enumeration up to A_{args.max_n} exceeds the rank cap {rank_cap()}")
    methods = {"rec": d_seq, "gf": d_via_gf, "enum": d_via_enumeration}
    chosen = list(methods) if args.method == "all" else [args.method]
    rows, failures = [], []
    check_all = args.check or args.method == "all"
    for n in range(args.max_n + 1):
        values = {m: methods[m](n) for m in chosen}
        if args.check and args.method != "all" and n <= rank_cap():
            values.update({m: methods[m](n) for m in methods if m not in values})
        d = values[chosen[0]]
        if check_all and len(set(values.values())) != 1:
            failures.append({"n": n, "values": values})
        rows.append({"n": n, "d": d, "e": d - 2**n if n else 0})
    if args.check and not gf_identity_check(args.max_n):
        failures.append({"check": "generating-function identity", "order": args.max_n})
    payload = {"method": args.method, "rows": rows}
    out.write(report.dumps(report.envelope("count", payload)) + "\n")
    if args.figure:
        report.plot_counts(rows, args.figure)
    if failures:
        err.write(report.dumps(report.envelope("failure", {"failures": failures})) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_renner(args, out) -> int:
    d = parse_diagram(args.diagram)
    W = enumerate_weyl(d)
    if args.renner_command == "rank1":
        if args.node not in range(1, d.rank + 1):
            raise InvalidInputError(f"node {args.node} is not in 1..{d.rank}")
        S, s = d.nodes, d.subset([args.node])
        e = Idempotent(S - s, S) if args.full_j else Idempotent(S, S - s)
        P = rank1_orbit_poset(W, e)
        name = f"W{e.label()}W in {d.name}"
        out.write(report.poset_dot(name, [P.label(p) for p in P.pairs], P.covers()))
        return EXIT_OK
    breakdown = count_R1_breakdown(W)
    direct = sum(n for _, n in breakdown)
    payload = {
        "diagram": d.name,
        "direct": direct,
        "formula": count_R1(d) if d.rank >= 2 else None,
        "breakdown": [{"I": list(e.I), "J": list(e.J), "size": n} for e, n in breakdown],
    }
    out.write(report.dumps(report.envelope("r1count", payload)) + "\n")
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    from . import verify

    if args.target.lower() == "all":
        results = verify.run_acceptance()
    else:
        results = verify.run_diagram(parse_diagram(args.target), max_rank=args.max_rank)
    for r in results:
        # timings stay off stdout so that it is reproducible byte for byte
        out.write(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}\n")
    failed = [r.to_json() for r in results if not r.passed]
    if failed:
        err.write(report.dumps(report.envelope("failure", {"failures": failed})) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        with _caps(args):
            if args.command == "lattice":
                return _cmd_lattice(args, out)
            if args.command == "classify":
                return _cmd_classify(args, out)
            if args.command == "count":
                return _cmd_count(args, out, err)
            if args.command == "renner":
                return _cmd_renner(args, out)
            return _cmd_verify(args, out, err)
    except ResourceLimitError as exc:
        err.write(f"envlat: {exc}\n")
        return EXIT_CAP
    except (EnvlatError, ValueError) as exc:
        err.write(f"envlat: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
