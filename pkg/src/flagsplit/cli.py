"""Command-line entry point: ``flagsplit <command> TYPE [options]``.

Every command prints either plain text or one JSON document (``--format
structured``) that echoes its inputs and the tool version.  Output depends
only on the arguments.

Exit codes: 0 success, 1 verification failure, 2 parse or input error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .action import PINNED_CONVENTION, build_action
from .bundled import bundled_text
from .coinvariant import ConsistencyError, SteenrodUnknown, build_algebra
from .groupring import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    GroupRingParseError,
    IdempotentSystem,
    format_gr,
    parse_gr,
    read_systems,
    search_idempotents,
    verify_system,
    write_systems,
)
from .rootweyl import PINNED_LABELING, RootDatumError, build_root_datum, canonical_type, enumerate_weyl
from .splitting import SplittingError, dual_pairs, unit_system, wedge_report

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not _is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _document(command: str, args, result: dict) -> dict:
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format", "command")}
    return {
        "tool": "flagsplit",
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "conventions": {"action": PINNED_CONVENTION, "labeling": {t: list(v) for t, v in sorted(PINNED_LABELING.items())}},
        "result": result,
    }


def _emit(args, command: str, result: dict, text: str) -> None:
    if args.format == "structured":
        print(json.dumps(_document(command, args, result), indent=2, sort_keys=True))
    else:
        print(text)


def _load_systems(args, alg) -> list[IdempotentSystem]:
    if getattr(args, "bundled", False) and getattr(args, "file", None):
        raise InputError("--bundled and --file are mutually exclusive")
    if getattr(args, "bundled", False):
        try:
            text = bundled_text(args.type, args.prime)
        except FileNotFoundError as exc:
            raise InputError(str(exc)) from exc
    elif getattr(args, "file", None):
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    else:
        return [unit_system(alg)]
    systems = read_systems(text, args.prime, alg.W)
    if not systems:
        raise InputError("no idempotent system in input")
    return systems


# -- commands --------------------------------------------------------------------------


def cmd_weyl(args) -> int:
    W = enumerate_weyl(build_root_datum(args.type))
    ranks = W.poincare_ranks()
    edges = [(str(v), str(w)) for v, w in W.hasse_edges()]
    result = {
        "type": W.datum.type_tag,
        "order": len(W),
        "ranks": ranks,
        "w0": str(W.w0),
        "hasse_edges": [list(e) for e in edges],
    }
    lines = [
        f"type {W.datum.type_tag}",
        f"order {len(W)}",
        "ranks {" + ",".join(map(str, ranks)) + "}",
        f"w0 {W.w0}",
        f"Bruhat covers ({len(edges)}):",
    ]
    lines += [f"  {v} < {w}" for v, w in edges]
    _emit(args, "weyl", result, "\n".join(lines))
    return EXIT_OK


def _steenrod_table(alg) -> tuple[list, list[str]]:
    name = "Sq^2" if alg.p == 2 else "P^1"
    rows, lines = [], []
    try:
        alg.steenrod_matrices
    except ConsistencyError as exc:
        return [], [f"{name}: unavailable ({exc})"]
    for w in sorted(alg.W, key=lambda e: (e.length, e.word)):
        try:
            value = str(alg.steenrod(alg.sigma(w)))
        except SteenrodUnknown:
            value = None
        rows.append({"class": str(w), "value": value})
        lines.append(f"  {name}(s[{w}]) = {value if value is not None else 'unknown'}")
    return rows, [f"{name} table:"] + lines


def cmd_cohomology(args) -> int:
    p = args.prime or 0
    alg = build_algebra(args.type, p)
    W = alg.W
    order = sorted(W, key=lambda e: (e.length, e.word))
    reps = {str(w): str(alg.model.reps[w.index]) for w in order}
    gens = [W.generator(i) for i in range(1, W.rank + 1)]
    chevalley = []
    for g in gens:
        for w in order:
            if w.length < alg.N:
                chevalley.append({"left": str(g), "right": str(w), "product": str(alg.multiply(alg.sigma(g), alg.sigma(w)))})
    powers = []
    for g in gens:
        x = alg.sigma(g)
        for n in range(2, alg.N + 1):
            powers.append({"class": str(g), "exponent": n, "value": str(alg.power(x, n))})
    field = "Q" if p == 0 else f"F_{p}"
    lines = [f"H*(G/T; {field}) for type {alg.datum.type_tag}", "dims {" + ",".join(str(alg.dim(k)) for k in range(alg.N + 1)) + "}", "Schubert representatives:"]
    lines += [f"  s[{w}] -> {r}" for w, r in reps.items()]
    lines.append("Chevalley table:")
    lines += [f"  s[{c['left']}] * s[{c['right']}] = {c['product']}" for c in chevalley]
    lines.append("powers of degree-2 classes:")
    lines += [f"  s[{c['class']}]^{c['exponent']} = {c['value']}" for c in powers]
    result = {"type": alg.datum.type_tag, "prime": p, "dims": [alg.dim(k) for k in range(alg.N + 1)], "representatives": reps, "chevalley": chevalley, "powers": powers}
    if p:
        rows, slines = _steenrod_table(alg)
        result["steenrod"] = rows
        lines += slines
    _emit(args, "cohomology", result, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    alg = build_algebra(args.type, args.prime)
    action = build_action(alg)
    systems = _load_systems(args, alg)
    reports, lines, ok = [], [], True
    for n, s in enumerate(systems, 1):
        rep = verify_system(s.elements, alg, action)
        ok &= rep["pass"]
        reports.append({"system": [{"name": a, "element": format_gr(e)} for a, e in zip(s.names, s.elements)], "report": rep})
        lines.append(f"system {n} ({len(s)} elements): {'PASS' if rep['pass'] else 'FAIL'}")
        for level in ("ring_level", "operator_level"):
            cond = ", ".join(f"{k} {'ok' if v else 'FAILS'}" for k, v in rep[level].items())
            lines.append(f"  {level.replace('_', ' ')}: {cond}")
    _emit(args, "verify", {"systems": reports, "pass": ok}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_search(args) -> int:
    alg = build_algebra(args.type, args.prime)
    span = [parse_gr(t, args.prime, alg.W) for t in args.span]
    found = search_idempotents(span, args.prime, max_results=args.max_results, budget=args.budget)
    header = f"{alg.datum.type_tag} p={args.prime} span: " + ", ".join(format_gr(g) for g in span)
    result = {
        "systems": [[{"name": a, "element": format_gr(e)} for a, e in zip(s.names, s.elements)] for s in found],
    }
    _emit(args, "search", result, write_systems(found, header=header).rstrip("\n"))
    return EXIT_OK


def cmd_decompose(args) -> int:
    alg = build_algebra(args.type, args.prime)
    systems = _load_systems(args, alg)
    if len(systems) > 1:
        raise InputError("decompose takes a single system; the input has several")
    try:
        report = wedge_report(args.type, args.prime, systems[0], adams=args.adams, assume_top_cell_splits=args.assume_top_cell_splits)
    except SplittingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.format == "structured":
        print(json.dumps(_document("decompose", args, report.to_dict(alg)), indent=2, sort_keys=True))
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_dualpairs(args) -> int:
    alg = build_algebra(args.type, args.prime)
    action = build_action(alg)
    systems = _load_systems(args, alg)
    if len(systems) > 1:
        raise InputError("dualpairs takes a single system; the input has several")
    system = systems[0]
    if not verify_system(system.elements, alg, action)["pass"]:
        print("error: idempotent system fails verification", file=sys.stderr)
        return EXIT_VERIFY
    pairs = dual_pairs(system.elements, alg, action)
    named = [(system.names[i - 1], system.names[j - 1]) for i, j in pairs]
    result = {"pairs": [list(p) for p in pairs], "named": [list(n) for n in named]}
    text = "\n".join(f"({a}, {b})" for a, b in named) if named else "no dual pairs"
    _emit(args, "dualpairs", result, text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagsplit", description="Mod-p stable splittings of flag manifolds G/T.")
    parser.add_argument("--version", action="version", version=f"flagsplit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("type", help="root system: A1..A6, B2/C2, G2 (SU(n) and Sp(2) are accepted)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_prime(p, required=True):
        p.add_argument("-p", "--prime", type=_prime, required=required)

    def with_source(p):
        p.add_argument("--bundled", action="store_true", help="use the published system for this type and prime")
        p.add_argument("--file", help="idempotent file (one element per line, blank lines separate systems)")

    p = sub.add_parser("weyl", parents=[common], help="Weyl group order, ranks, longest element, Bruhat covers")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("cohomology", parents=[common], help="Schubert representatives, products, Steenrod table")
    with_prime(p, required=False)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", parents=[common], help="check idempotent conditions in F_p[W] and on H*(G/T)")
    with_prime(p)
    with_source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exhaustive idempotent search over a span")
    with_prime(p)
    p.add_argument("--span", nargs="+", required=True, help="group ring elements spanning the search space")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-results", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("decompose", parents=[common], help="wedge decomposition of the suspension")
    with_prime(p)
    with_source(p)
    p.add_argument("--adams", action="store_true", help="split each summand by degree mod p - 1")
    p.add_argument("--assume-top-cell-splits", action="store_true", help="split off an unattached top cell")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dualpairs", parents=[common], help="pairs of summands exchanged by Poincare duality")
    with_prime(p)
    with_source(p)
    p.set_defaults(func=cmd_dualpairs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        args.type = canonical_type(args.type)
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GroupRingParseError, InputError, RootDatumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
