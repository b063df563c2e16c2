"""Command-line interface.

Subcommands: assign, game, bargain, pipeline.  Exit codes: 0 success,
1 input error (bad arguments, unreadable files, malformed or mis-sized
input), 2 enumeration-size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .assignment import Objective
from .commands import Side, cmd_assign, cmd_bargain, cmd_game, cmd_pipeline
from .core import MatchGamesError, SizeTooLarge
from .formats import (
    BimatrixFile,
    MarketFile,
    RenderMode,
    Report,
    parse_bimatrix,
    parse_market,
    render_report,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIZE = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the CLI contract reserves
    # 2 for size-cap errors, so reroute usage problems through exit code 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=[mode.value for mode in RenderMode],
        default=RenderMode.TEXT.value,
        help="report rendering: human text or machine-readable JSON",
    )
    common.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")

    parser = _Parser(prog="matchgames", description="Solvers for bilateral assignment markets.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    assign = sub.add_parser("assign", parents=[common], help="solve one side's optimal assignment")
    assign.add_argument("--market", required=True, metavar="FILE")
    assign.add_argument("--side", required=True, choices=[s.value for s in Side])
    assign.add_argument("--minimize", action="store_true", help="minimize instead of maximize")

    game = sub.add_parser("game", parents=[common], help="situation table, compromise set, equilibria")
    game.add_argument("--market", required=True, metavar="FILE")

    bargain = sub.add_parser("bargain", parents=[common], help="maximin threats and Nash arbitration")
    bargain.add_argument("--game", required=True, metavar="FILE")
    bargain.add_argument(
        "--disagreement",
        nargs=2,
        metavar=("V1", "V2"),
        help="skip the maximin step and use this disagreement point",
    )

    pipeline = sub.add_parser("pipeline", parents=[common], help="assign both sides, diagnose, bargain")
    pipeline.add_argument("--market", required=True, metavar="FILE")
    pipeline.add_argument("--union-game", required=True, metavar="FILE")

    return parser


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _load_market(path: str) -> MarketFile:
    return parse_market(_read(path))


def _load_bimatrix(path: str) -> BimatrixFile:
    return parse_bimatrix(_read(path))


def _run(args: argparse.Namespace) -> Report:
    if args.subcommand == "assign":
        objective = Objective.MINIMIZE if args.minimize else Objective.MAXIMIZE
        return cmd_assign(_load_market(args.market), Side(args.side), objective)
    if args.subcommand == "game":
        return cmd_game(_load_market(args.market))
    if args.subcommand == "bargain":
        override = tuple(args.disagreement) if args.disagreement else None
        return cmd_bargain(_load_bimatrix(args.game), override)
    if args.subcommand == "pipeline":
        return cmd_pipeline(_load_market(args.market), _load_bimatrix(args.union_game))
    raise _UsageError(f"unknown subcommand {args.subcommand!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        report = _run(args)
    except _UsageError as exc:
        print(f"matchgames: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeTooLarge as exc:
        print(f"matchgames: error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except MatchGamesError as exc:
        print(f"matchgames: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rendered = render_report(report, RenderMode(args.output))
    if args.out:
        try:
            Path(args.out).write_text(rendered)
        except OSError as exc:
            print(f"matchgames: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(rendered)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
