"""Command-line interface.

Exit codes: 0 ok, 1 parse or usage error, 2 validation failure,
3 internal invariant breach (a direct theorem failed).
"""

from __future__ import annotations

import argparse
import sys

from . import operators as ops
from .documents import (
    FIXTURE_NAMES,
    emit_report,
    fixture_document,
    parse_families,
    parse_space,
    read_document,
    render_table,
)
from .errors import (
    DocumentError,
    InvariantBreach,
    PrimalAxiomError,
    PrimalTopError,
    TopologyAxiomError,
)
from .primal import enumerate_primals, validate_primal
from .sets import Universe
from .theorems import CATALOG, Strategy, check_theorem, run_sweep
from .topology import enumerate_topologies, is_regular_space, is_t1_space, validate_topology

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BREACH = 0, 1, 2, 3

COMPUTE_OPERATORS = ("diamond", "diamond-r", "cl", "cl-r", "tau", "tau-r", "tau-delta", "ro", "base")
_TABLE_OPS = {"diamond": "diamond", "diamond-r": "diamond_R", "cl": "cl_diamond", "cl-r": "cl_diamond_R"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _output(body: dict, fmt: str) -> None:
    text = emit_report(body) if fmt == "machine" else render_table(body)
    sys.stdout.write(text)


def _error_body(exc: PrimalTopError) -> dict:
    return {
        "kind": exc.kind,
        "message": str(exc),
        "witness": [str(w) for w in exc.witness],
    }


def _document(args) -> dict:
    if args.fixture:
        return fixture_document(args.fixture)
    if not args.input:
        raise UsageError("one of --input or --fixture is required")
    return read_document(args.input)


def cmd_validate(args) -> int:
    doc = _document(args)
    _, top, prim = parse_families(doc)
    name = doc.get("name")
    checks = []
    error = None
    for axiom, fn, fam in (("topology", validate_topology, top), ("primal", validate_primal, prim)):
        try:
            fn(fam)
            checks.append({"axiom": axiom, "status": "ok"})
        except (TopologyAxiomError, PrimalAxiomError) as exc:
            checks.append({"axiom": axiom, "status": exc.kind})
            error = error or _error_body(exc)
    body = {"command": "validate", "space": name, "valid": error is None,
            "checks": checks, "error": error}
    _output(body, args.format)
    return EXIT_OK if error is None else EXIT_INVALID


def cmd_compute(args) -> int:
    space = parse_space(_document(args))
    u = space.universe
    a = u.parse(args.set) if args.set is not None else None
    body = {"command": "compute", "space": space.name, "operator": args.operator,
            "set": str(a) if a is not None else None}
    if args.operator in _TABLE_OPS:
        table = ops.operator_table(space, _TABLE_OPS[args.operator])
        if a is None:
            body["table"] = [{"set": str(s), "value": str(v)} for s, v in table.items()]
        else:
            body["value"] = str(table[a])
    else:
        fam = {
            "tau": ops.tau_diamond,
            "tau-r": ops.tau_diamond_R,
            "tau-delta": lambda s: s.topology.delta_open,
            "ro": lambda s: s.topology.regular_open,
            "base": ops.base_family,
        }[args.operator](space)
        body["family"] = fam.render()
        if a is not None:
            body["member"] = a in fam
    _output(body, args.format)
    return EXIT_OK


def _theorem_ids(selection: str | None) -> list[str]:
    if selection is None or selection == "all":
        return list(CATALOG)
    ids = [s.strip() for s in selection.split(",") if s.strip()]
    unknown = [i for i in ids if i not in CATALOG]
    if unknown:
        raise UsageError(f"unknown theorem id(s): {', '.join(unknown)}")
    return ids


def cmd_check(args) -> int:
    space = parse_space(_document(args))
    ids = _theorem_ids(args.theorems)
    reports = [check_theorem(i, space, limit=args.max_witnesses) for i in ids]
    rep = ops.induced_report(space)
    summary = {
        "tau": rep.tau.render(),
        "tau_delta": rep.tau_delta.render(),
        "tau_diamond_R": rep.tau_diamond_R.render(),
        "tau_diamond": rep.tau_diamond.render(),
        "base": rep.base.render(),
        "tau_diamond_R_is_powerset": len(rep.tau_diamond_R) == space.universe.full + 1,
        "regular": is_regular_space(space.topology),
        "t1": is_t1_space(space.topology),
    }
    ok = all(r.ok for r in reports)
    body = {"command": "check", "space": space.name, "summary": summary,
            "reports": [r.to_dict(args.timing) for r in reports], "ok": ok}
    _output(body, args.format)
    return EXIT_OK if ok else EXIT_BREACH


def cmd_sweep(args) -> int:
    if args.strategy == "sampled":
        if args.seed is None:
            raise UsageError("--seed is required for the sampled strategy")
        strategy = Strategy.sampled(args.k, args.seed)
    else:
        strategy = Strategy.exhaustive()
    ids = _theorem_ids(args.theorems)
    reports = run_sweep(ids, args.n, strategy, limit=args.max_witnesses)
    ok = all(r.ok for r in reports)
    body = {"command": "sweep", "n": args.n, "strategy": strategy.label(), "seed": strategy.seed,
            "reports": [r.to_dict(args.timing) for r in reports], "ok": ok}
    _output(body, args.format)
    return EXIT_OK if ok else EXIT_BREACH


def cmd_enumerate(args) -> int:
    gen = enumerate_topologies if args.what == "topologies" else enumerate_primals
    counts = {}
    items = []
    for n in range(1, args.n + 1):
        found = list(gen(Universe.of_size(n)))
        counts[str(n)] = len(found)
        if args.list and n == args.n:
            fams = [f.opens if args.what == "topologies" else f.family for f in found]
            items = [f.render() for f in fams]
    body = {"command": "enumerate", "what": args.what, "counts": counts}
    if args.list:
        body["items"] = items
    _output(body, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="primaltop", description="Primal topological spaces on finite sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, space=True):
        if space:
            sp.add_argument("--input", help="space document (JSON)")
            sp.add_argument("--fixture", choices=FIXTURE_NAMES, help="bundled example space")
        sp.add_argument("--format", choices=("machine", "table"), default="table")

    sp = sub.add_parser("validate", help="check the topology and primal axioms")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("compute", help="evaluate an operator or induced family")
    common(sp)
    sp.add_argument("--operator", required=True, choices=COMPUTE_OPERATORS)
    sp.add_argument("--set", help='subset such as "{b,c}" or "b,c"; omit for the full table')
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("check", help="run theorem checks on one space")
    common(sp)
    sp.add_argument("--theorems", default="all", help="comma-separated ids or 'all'")
    sp.add_argument("--max-witnesses", type=int, default=None)
    sp.add_argument("--timing", action="store_true", help="include elapsed times")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("sweep", help="run theorem checks over all spaces on n points")
    common(sp, space=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--strategy", choices=("exhaustive", "sampled"), default="exhaustive")
    sp.add_argument("--k", type=int, default=1000, help="sample size for --strategy sampled")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--theorems", default="all")
    sp.add_argument("--max-witnesses", type=int, default=5)
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("enumerate", help="count topologies or primals on 1..n points")
    common(sp, space=False)
    sp.add_argument("what", choices=("topologies", "primals"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--list", action="store_true", help="also list the families for n")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (TopologyAxiomError, PrimalAxiomError) as exc:
        _output({"command": "error", **_error_body(exc)}, args.format)
        return EXIT_INVALID
    except InvariantBreach as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (UsageError, DocumentError, PrimalTopError, ValueError) as exc:
        print(f"primaltop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
