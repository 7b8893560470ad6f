"""Command-line front end: ``dominocells <subcommand> [flags]``.

Exit codes: 0 success, 1 domain error (bad word, operator not applicable,
invalid tableau), 2 a verification check failed, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cells as cellmod
from .cycles import (
    CycleError,
    classify,
    cycle,
    cycles,
    extended_cycle,
    is_cycle_boxed,
    move_through,
    move_through_pair,
    special_form,
)
from .insertion import TableauPair, rs_inverse, rs_map
from .operators import NotApplicableError, OperatorDescriptor, apply_op, apply_op_tableau, applicable_ops, in_domain, lambda_set
from .render import render_ascii
from .signed_perm import SignedPermutation
from .tableau import DominoTableau, InvalidTableauError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _word(args) -> SignedPermutation:
    if args.word is None:
        raise UsageError("--word is required")
    return SignedPermutation.parse(args.word)


def _pair_from_input(args) -> TableauPair:
    """The pair given by --word/--rank, or read as JSON from --input or stdin."""
    if getattr(args, "word", None) is not None:
        return rs_map(_word(args), args.rank)
    source = args.input
    text = sys.stdin.read() if source in (None, "-") else open(source, encoding="utf-8").read()
    try:
        return TableauPair.from_json(json.loads(text))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read a tableau pair: {exc}") from exc


def _pick(p: TableauPair, side: str) -> DominoTableau:
    return p.left if side == "left" else p.right


def _pair_text(p: TableauPair, fmt: str) -> str:
    if fmt == "json":
        return _dump(p.to_json())
    return f"T1:\n{render_ascii(p.left)}\n\nT2:\n{render_ascii(p.right)}\n"


def _tableau_text(T: DominoTableau, fmt: str) -> str:
    return _dump(T.to_json()) if fmt == "json" else render_ascii(T) + "\n"


# -- subcommands ----------------------------------------------------------


def cmd_rs(args) -> int:
    _emit(args, _pair_text(rs_map(_word(args), args.rank), args.format))
    return EXIT_OK


def cmd_inverse_rs(args) -> int:
    p = _pair_from_input(args)
    _emit(args, f"{rs_inverse(p)}\n")
    return EXIT_OK


def _cycle_record(T: DominoTableau, c) -> dict:
    cls = classify(T, c)
    return {
        "labels": sorted(c),
        "kind": cls.kind.value,
        "back": list(cls.back) if cls.back else None,
        "front": list(cls.front) if cls.front else None,
        "boxed": is_cycle_boxed(T, c),
    }


def cmd_cycles(args) -> int:
    T = _pick(_pair_from_input(args), args.side)
    records = [_cycle_record(T, c) for c in cycles(T)]
    if args.format == "json":
        _emit(args, _dump({"rank": T.rank, "side": args.side, "cycles": records}))
    else:
        lines = [f"{' '.join(map(str, r['labels']))}: {r['kind']}" + (" boxed" if r["boxed"] else "") for r in records]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_mt(args) -> int:
    p = _pair_from_input(args)
    if args.extended:
        b = extended_cycle(p, args.label, args.side)
        q = move_through_pair(p, b)
        if args.format == "json":
            data = q.to_json()
            data["moved"] = {"left": sorted(b.in_left), "right": sorted(b.in_right)}
            _emit(args, _dump(data))
        else:
            _emit(args, _pair_text(q, "ascii"))
        return EXIT_OK
    T = _pick(p, args.side)
    S, cls = move_through(T, cycle(args.label, T))
    if args.format == "json":
        data = S.to_json()
        data["cycle"] = _cycle_record(T, cycle(args.label, T))
        _emit(args, _dump(data))
    else:
        _emit(args, _tableau_text(S, "ascii"))
    return EXIT_OK


def cmd_special(args) -> int:
    T = _pick(_pair_from_input(args), args.side)
    _emit(args, _tableau_text(special_form(T), args.format))
    return EXIT_OK


def cmd_ops(args) -> int:
    w = _word(args)
    if args.apply is None:
        ops = applicable_ops(w, args.rank)
        if args.format == "json":
            _emit(args, _dump({"word": str(w), "rank": args.rank, "ops": [str(op) for op in ops]}))
        else:
            _emit(args, "".join(f"{op}\n" for op in ops))
        return EXIT_OK
    op = OperatorDescriptor.parse(args.apply)
    if not in_domain(op, w):
        raise NotApplicableError(f"{op} is not applicable to {w}")
    v = apply_op(op, w)
    status = EXIT_OK
    result = {"word": str(w), "rank": args.rank, "op": str(op), "image": str(v)}
    if args.check_tableau:
        if op not in lambda_set(w.n, args.rank):
            raise NotApplicableError(f"{op} has no tableau action in rank {args.rank}")
        expected = rs_map(v, args.rank)
        try:
            got = apply_op_tableau(op, rs_map(w, args.rank))
            agree = got == expected
        except NotApplicableError:
            agree = False
        result["tableau_check"] = "PASS" if agree else "FAIL"
        if not agree:
            status = EXIT_VERIFY
    if args.format == "json":
        _emit(args, _dump(result))
    else:
        line = str(v) + (f"  tableau check {result['tableau_check']}" if args.check_tableau else "")
        _emit(args, line + "\n")
    return status


def cmd_cells(args) -> int:
    if args.kind == "operators":
        part = cellmod.operator_components(args.n, args.rank, cap=args.cap)
    elif args.kind == "irreducible":
        part = cellmod.partition_irreducible(args.n, args.rank, args.side, args.jobs, args.cap)
    else:
        part = cellmod.partition_reducible(args.n, args.rank, args.side, args.jobs, args.cap)
    if args.format == "json":
        _emit(args, _dump(part.to_json()))
    else:
        _emit(args, "".join(" ".join(f"({w})" for w in b) + "\n" for b in part.blocks))
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.dot:
        _emit(args, cellmod.operator_graph_dot(args.n, args.rank, cap=args.cap))
        return EXIT_OK
    edges = cellmod.operator_edges(args.n, args.rank, cap=args.cap)
    data = {"n": args.n, "rank": args.rank, "edges": [[str(w), str(op), str(v)] for w, op, v in edges]}
    _emit(args, _dump(data))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "parabolic" and args.m is not None:
        reports = [cellmod.verify_parabolic(args.n, args.m, args.rank, args.jobs, args.cap)]
    else:
        reports = cellmod.run_suite(args.suite, args.n, args.rank, args.jobs, args.cap)
    lines = [rep.summary() for rep in reports]
    failed = [rep for rep in reports if not rep.ok]
    text = "\n".join(lines) + "\n"
    if failed:
        text += _dump([rep.to_json() for rep in failed])
    _emit(args, text)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_render(args) -> int:
    p = _pair_from_input(args)
    if args.side == "both":
        _emit(args, _pair_text(p, "ascii"))
    else:
        _emit(args, render_ascii(_pick(p, args.side)) + "\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", "-r", type=int, default=0, help="tableau rank r (default 0)")
    common.add_argument("--format", choices=("json", "ascii"), default="json")
    common.add_argument("--out", "-o", help="write output here instead of stdout")
    common.add_argument("--jobs", "-j", type=int, default=1, help="worker processes for enumeration")

    word = argparse.ArgumentParser(add_help=False)
    word.add_argument("--word", "-w", help='signed permutation, e.g. "4,-3,-2,1"')

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--word", "-w", help='signed permutation, e.g. "4,-3,-2,1"')
    source.add_argument("--input", "-i", help="tableau pair JSON (default stdin) when no --word")

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--n", "-n", type=int, required=True, help="size of W_n")
    group.add_argument("--cap", type=int, default=cellmod.DEFAULT_CAP, help="largest n allowed (max 6)")

    side = argparse.ArgumentParser(add_help=False)
    side.add_argument("--side", choices=("left", "right"), default="left")

    parser = _Parser(prog="dominocells", description="Rank-r domino tableaux and combinatorial cells of W_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rs", parents=[common, word], help="tableau pair G_r(w)")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("inverse-rs", parents=[common, source], help="recover w from a tableau pair")
    p.set_defaults(func=cmd_inverse_rs)

    p = sub.add_parser("cycles", parents=[common, source, side], help="cycles of one tableau")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("mt", parents=[common, source, side], help="move through the cycle containing a label")
    p.add_argument("--label", "-k", type=int, required=True)
    p.add_argument("--extended", action="store_true", help="move the extended cycle pair instead")
    p.set_defaults(func=cmd_mt)

    p = sub.add_parser("special", parents=[common, source, side], help="somewhat-special form S(T)")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("ops", parents=[common, word], help="list or apply operators")
    p.add_argument("--apply", "-a", help='descriptor, e.g. "InSwap(3)" or "knuth:1"')
    p.add_argument("--check-tableau", action="store_true", help="cross-check the tableau-level action")
    p.set_defaults(func=cmd_ops)

    p = sub.add_parser("cells", parents=[common, group, side], help="partition W_n into cells")
    p.add_argument("--kind", choices=("irreducible", "reducible", "operators"), default="reducible")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("graph", parents=[common, group], help="operator graph on W_n")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", parents=[common, group], help="run a verification suite")
    p.add_argument("--suite", choices=cellmod.SUITES + ("all",), default="all")
    p.add_argument("--m", type=int, help="parabolic suite: only this m")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common, source], help="ASCII drawing of a pair")
    p.add_argument("--side", choices=("left", "right", "both"), default="both")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.rank < 0:
        parser.error("--rank must be non-negative")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (NotApplicableError, CycleError, InvalidTableauError, ValueError, KeyError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"dominocells: {msg}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
