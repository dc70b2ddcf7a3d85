"""Command-line interface: ``python -m wqt <command> ...``.

Exit codes
    0  success
    1  usage, parse or precondition error
    2  the expansion failed (defective monomials were produced)
    3  the expansion was truncated by a cap
    4  a checking stage (certificate, t -> 1 limit, catalog) reported a problem
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import engine as _engine
from .cartan import LieType, build_root_data
from .catalog import catalog, compare, is_covered
from .errors import WqtError
from .limit import specialize_t1, weight_multiset, weight_sum
from .monomial import Monomial, parse_monomial, render_monomial
from .verifier import verify_cancellation

EXIT_OK, EXIT_ERROR, EXIT_FAILED, EXIT_TRUNCATED, EXIT_CHECK = 0, 1, 2, 3, 4
_STATUS_EXIT = {
    _engine.COMPLETED: EXIT_OK,
    _engine.FAILED: EXIT_FAILED,
    _engine.TRUNCATED: EXIT_TRUNCATED,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2, which means "Failed" here
        raise _UsageError(f"{self.prog}: {message}")


def _default_seed() -> int:
    raw = os.environ.get("WQT_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"WQT_SEED must be an integer, got {raw!r}") from exc


def _add_expansion_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-height", type=int, default=256, metavar="H",
                   help="stop with status Truncated beyond this height (default 256)")
    p.add_argument("--max-monomials", type=int, default=200_000, metavar="M",
                   help="stop with status Truncated beyond this many monomials (default 200000)")
    p.add_argument("--no-path-check", action="store_true",
                   help="skip the coefficient cross-check on monomials reached twice")
    p.add_argument("--seed", type=int, default=None, metavar="S",
                   help="seed for randomized coefficient identity tests (default: $WQT_SEED or 0)")
    p.add_argument("--json", type=Path, default=None, metavar="PATH",
                   help="write the expansion as JSON")
    p.add_argument("--dot", type=Path, default=None, metavar="PATH",
                   help="write the monomial graph in Graphviz DOT format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wqt", description="Monomial expansion of fields with exact (q,t) coefficients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("run", help="expand from a dominant monomial")
    p.add_argument("--type", required=True, metavar="XN", help="Lie type with rank, e.g. A1, B3, G2")
    p.add_argument("--start", required=True, metavar="MONOMIAL",
                   help='start monomial, e.g. "Y[1](q^0 t^0) * Y[1](q^-2 t^0)"')
    _add_expansion_flags(p)

    p = sub.add_parser("fundamental", help="expand from Y_node(z), then certify, specialize and compare")
    p.add_argument("--type", required=True, metavar="XN", help="Lie type with rank, e.g. C3")
    p.add_argument("--node", required=True, type=int, metavar="I", help="node carrying the start variable")
    _add_expansion_flags(p)

    p = sub.add_parser("verify", help="check the screening-cancellation certificate of a saved expansion")
    p.add_argument("--json", required=True, type=Path, metavar="PATH", help="expansion written by 'run'")
    p.add_argument("--seed", type=int, default=None, metavar="S", help="seed for identity tests")

    p = sub.add_parser("limit", help="print the t -> 1 specialization of a saved expansion")
    p.add_argument("--json", required=True, type=Path, metavar="PATH", help="expansion written by 'run'")
    p.add_argument("--seed", type=int, default=None, metavar="S", help="seed for q-independence tests")

    p = sub.add_parser("catalog", help="print the closed-form monomial set of a fundamental field")
    p.add_argument("--type", required=True, metavar="XN", help="Lie type with rank, e.g. C2")
    p.add_argument("--node", required=True, type=int, metavar="I", help="node of the fundamental field")
    p.add_argument("--json", type=Path, default=None, metavar="PATH", help="write the set as JSON")
    return parser


def _config(args) -> _engine.ExpansionConfig:
    seed = args.seed if args.seed is not None else _default_seed()
    return _engine.ExpansionConfig(
        max_height=args.max_height,
        max_monomials=args.max_monomials,
        check_path_independence=not args.no_path_check,
        equality_seed=seed,
    )


def _write_outputs(fe: _engine.FieldExpansion, args) -> None:
    if args.json is not None:
        args.json.write_text(_engine.to_json(fe))
    if args.dot is not None:
        args.dot.write_text(_engine.to_dot(fe))


def _report_run(fe: _engine.FieldExpansion, out) -> None:
    print(f"status: {fe.status}", file=out)
    print(f"monomials: {len(fe.table)}", file=out)
    print(f"edges: {len(fe.edges)}", file=out)
    if fe.cap:
        print(f"cap: {fe.cap}", file=out)
    for w in fe.witnesses:
        print(f"witness [{', '.join(w.defects)}]: {render_monomial(w.monomial)}", file=out)


def cmd_run(args, out=None) -> int:
    out = out or sys.stdout
    rd = build_root_data(LieType.parse(args.type))
    start = parse_monomial(args.start)
    fe = _engine.expand(rd, start, _config(args))
    _write_outputs(fe, args)
    _report_run(fe, out)
    return _STATUS_EXIT[fe.status]


def cmd_fundamental(args, out=None) -> int:
    out = out or sys.stdout
    lt = LieType.parse(args.type)
    rd = build_root_data(lt)
    rd.check_node(args.node)
    cfg = _config(args)
    fe = _engine.expand(rd, Monomial.Y(args.node), cfg)
    _write_outputs(fe, args)
    _report_run(fe, out)
    if fe.status != _engine.COMPLETED:
        return _STATUS_EXIT[fe.status]
    code = EXIT_OK

    report = verify_cancellation(fe, seed=cfg.equality_seed)
    print(f"certificate: {len(report.pairings)} pairings, {len(report.violations)} violations", file=out)
    if report.violations:
        code = EXIT_CHECK

    try:
        qc = specialize_t1(fe, seed=cfg.equality_seed)
        weights = weight_multiset(qc)
        unit = all(c == 1 for c in qc.terms.values())
        print(f"t->1: {len(qc)} terms, all coefficients 1: {unit}, weight sum: {weight_sum(weights)}", file=out)
    except (WqtError, ValueError) as exc:
        print(f"t->1: {exc}", file=out)
        code = EXIT_CHECK

    if is_covered(lt, args.node):
        cmp = compare(fe, catalog(lt, args.node))
        print(
            f"catalog: {'match' if cmp.match else 'MISMATCH'} "
            f"(only in field: {len(cmp.only_in_field)}, only in catalog: {len(cmp.only_in_catalog)})",
            file=out,
        )
        if not cmp.match:
            code = EXIT_CHECK
    else:
        print("catalog: not covered", file=out)
    return code


def _load(path: Path) -> _engine.FieldExpansion:
    try:
        text = path.read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    return _engine.from_json(text)


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    fe = _load(args.json)
    report = verify_cancellation(fe, seed=args.seed if args.seed is not None else _default_seed())
    print(json.dumps(report.to_dict(fe.ordered()), sort_keys=True), file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_limit(args, out=None) -> int:
    out = out or sys.stdout
    fe = _load(args.json)
    qc = specialize_t1(fe, seed=args.seed if args.seed is not None else _default_seed())
    print(qc.render(), file=out)
    try:
        weights = weight_multiset(qc)
    except ValueError as exc:
        print(f"weights: unavailable ({exc})", file=out)
        return EXIT_OK
    listing = ", ".join(f"{w}x{k}" if k != 1 else f"{w}" for w, k in sorted(weights.items(), reverse=True))
    print(f"weights: {listing}", file=out)
    print(f"weight sum: {weight_sum(weights)}", file=out)
    return EXIT_OK


def cmd_catalog(args, out=None) -> int:
    out = out or sys.stdout
    entry = catalog(LieType.parse(args.type), args.node)
    ordered = sorted(entry.monomials, key=Monomial.sort_key)
    for m in ordered:
        print(render_monomial(m), file=out)
    print(f"monomials: {len(ordered)}", file=out)
    if args.json is not None:
        doc = {
            "lie_type": entry.lie_type.series,
            "rank": entry.lie_type.rank,
            "node": entry.node,
            "monomials": [{"m": _engine.encode_monomial(m)} for m in ordered],
        }
        args.json.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    return EXIT_OK


_COMMANDS = {
    "run": cmd_run,
    "fundamental": cmd_fundamental,
    "verify": cmd_verify,
    "limit": cmd_limit,
    "catalog": cmd_catalog,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    except WqtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
