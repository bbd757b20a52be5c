"""Command line front end.

Subcommands: rank (replay a log and print the ranking), seeger
(per-series evaluation table), sweep (replay over a parameter grid),
timeseries (rating trajectories), simulate (generate a synthetic log),
validate (parse a log and report problems).  Tabular output is CSV on
stdout unless --output names a file; --svg additionally renders a
figure where supported.  Exit codes: 0 success, 1 data errors, 2 usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import replace

from .config import EngineSettings, load_config
from .elo import FixedK, FixedStart
from .errors import DomainError, IngestError, SkatEloError
from .ingest import group_series, parse_games, serialize_games
from .pipeline import replay
from .report import (
    DEFAULT_SWEEP_GRID,
    ranking,
    seeger_table,
    sweep,
    timeseries,
    write_ranking,
    write_seeger,
    write_sweep,
    write_timeseries,
)
from .simulate import SimConfig, generate_tournament


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except SkatEloError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skatelo",
        description="Series scoring and chance-corrected ratings for three-player Skat.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    rank = commands.add_parser("rank", help="replay a game log and print the ranking")
    _add_io_flags(rank)
    _add_engine_flags(rank)
    rank.set_defaults(run=cmd_rank)

    seeger = commands.add_parser("seeger", help="per-series evaluation table")
    _add_io_flags(seeger)
    seeger.set_defaults(run=cmd_seeger)

    sweep_cmd = commands.add_parser("sweep", help="replay over a grid of switch/K settings")
    _add_io_flags(sweep_cmd)
    _add_engine_flags(sweep_cmd)
    sweep_cmd.add_argument(
        "--grid",
        default="default",
        help='grid points "i1,i2,k;..." with i1/i2 in {0,1}, or "default" (16 points)',
    )
    sweep_cmd.add_argument("--svg", metavar="FILE", help="also render a spread figure")
    sweep_cmd.set_defaults(run=cmd_sweep)

    series_cmd = commands.add_parser("timeseries", help="rating trajectories after each update")
    _add_io_flags(series_cmd)
    _add_engine_flags(series_cmd)
    series_cmd.add_argument("--players", help="comma-separated player ids (default: everyone)")
    series_cmd.add_argument(
        "--mode",
        choices=("contracted", "expanded"),
        default="contracted",
        help="one row per update ordinal, or per global series with carry-forward",
    )
    series_cmd.add_argument("--svg", metavar="FILE", help="also render a line chart")
    series_cmd.set_defaults(run=cmd_timeseries)

    simulate = commands.add_parser("simulate", help="generate a synthetic tournament log")
    simulate.add_argument("--seed", type=int, required=True, help="generator seed")
    simulate.add_argument("--player-count", type=int, default=9)
    simulate.add_argument("--series-count", type=int, default=100)
    simulate.add_argument("--games-per-series", type=int, default=36)
    simulate.add_argument("--chance-share", type=float, default=0.5, help="luck share in [0, 1]")
    simulate.add_argument("--fold-prob", type=float, default=0.05)
    simulate.add_argument("--output", default="-", metavar="FILE", help="log destination, - for stdout")
    simulate.add_argument(
        "--replay",
        action="store_true",
        help="also replay the generated log and print the ranking to stdout",
    )
    _add_engine_flags(simulate)
    simulate.set_defaults(run=cmd_simulate)

    validate = commands.add_parser("validate", help="parse a log and report problems")
    validate.add_argument("--input", default="-", metavar="FILE", help="game log, - for stdin")
    validate.set_defaults(run=cmd_validate)

    return parser


def _add_io_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", default="-", metavar="FILE", help="game log, - for stdin")
    sub.add_argument("--output", default="-", metavar="FILE", help="CSV destination, - for stdout")


def _add_engine_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="FILE", help="INI configuration file")
    sub.add_argument("--k", type=float, help="volatility factor (overrides the config file)")
    sub.add_argument("--start", type=float, help="start rating for new players")
    sub.add_argument(
        "--chance-hand",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="divide game values by the clipped win-probability ratio",
    )
    sub.add_argument(
        "--chance-flat",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="replace game values with the population mean first",
    )
    sub.add_argument(
        "--opponent-factor",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="divide declarer values by the clipped opponent rating ratio",
    )


def _settings(args: argparse.Namespace) -> EngineSettings:
    """Command line over config file over defaults."""
    settings = load_config(args.config) if args.config else EngineSettings()
    cfg = settings.elo
    if args.k is not None:
        cfg = replace(cfg, k_policy=FixedK(args.k))
    if args.start is not None:
        cfg = replace(cfg, start_policy=FixedStart(args.start))
    if args.chance_hand is not None:
        cfg = replace(cfg, chance_hand=args.chance_hand)
    if args.chance_flat is not None:
        cfg = replace(cfg, chance_flat=args.chance_flat)
    if args.opponent_factor is not None:
        cfg = replace(cfg, opponent_factor=args.opponent_factor)
    return EngineSettings(elo=cfg, tables=settings.tables)


def _read_games(args: argparse.Namespace):
    if args.input == "-":
        return parse_games(sys.stdin, source="<stdin>")
    try:
        handle = open(args.input, "r", encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read {args.input}: {exc}") from exc
    with handle:
        return parse_games(handle, source=args.input)


def _read_series(args: argparse.Namespace):
    """Read, report skipped lines on stderr, and group."""
    games, report = _read_games(args)
    for line_no, reason in report.skipped:
        print(f"{report.source}: line {line_no}: skipped: {reason}", file=sys.stderr)
    return group_series(games), report


@contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def parse_grid(text: str) -> tuple[tuple[bool, bool, float], ...]:
    """Parse "i1,i2,k;..." sweep points; "default" is the built-in grid."""
    if text == "default":
        return DEFAULT_SWEEP_GRID
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 3:
            raise DomainError(f"grid point {chunk!r} is not of the form i1,i2,k")
        if parts[0] not in ("0", "1") or parts[1] not in ("0", "1"):
            raise DomainError(f"grid point {chunk!r}: switches must be 0 or 1")
        try:
            k = float(parts[2])
        except ValueError:
            raise DomainError(f"grid point {chunk!r}: k is not a number") from None
        points.append((parts[0] == "1", parts[1] == "1", k))
    if not points:
        raise DomainError("empty sweep grid")
    return tuple(points)


def cmd_rank(args: argparse.Namespace) -> int:
    series, _ = _read_series(args)
    settings = _settings(args)
    ledger = replay(series, settings.elo)
    with _open_output(args.output) as out:
        write_ranking(out, ranking(ledger))
    return 0


def cmd_seeger(args: argparse.Namespace) -> int:
    series, _ = _read_series(args)
    with _open_output(args.output) as out:
        write_seeger(out, seeger_table(series))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    series, _ = _read_series(args)
    settings = _settings(args)
    report = sweep(series, parse_grid(args.grid), settings.elo)
    with _open_output(args.output) as out:
        write_sweep(out, report)
    if args.svg:
        from .figures import render_sweep

        render_sweep(report, args.svg)
    return 0


def cmd_timeseries(args: argparse.Namespace) -> int:
    series, _ = _read_series(args)
    settings = _settings(args)
    ledger = replay(series, settings.elo)
    players = [p.strip() for p in args.players.split(",")] if args.players else None
    header, rows = timeseries(ledger, players, args.mode)
    with _open_output(args.output) as out:
        write_timeseries(out, header, rows)
    if args.svg:
        from .figures import render_timeseries

        xlabel = "update" if args.mode == "contracted" else "series"
        render_timeseries(header, rows, args.svg, xlabel=xlabel)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.replay and args.output == "-":
        print(
            "usage error: --replay prints the ranking to stdout, so --output must name a file",
            file=sys.stderr,
        )
        return 2
    config = SimConfig(
        player_count=args.player_count,
        series_count=args.series_count,
        seed=args.seed,
        chance_share=args.chance_share,
        games_per_series=args.games_per_series,
        fold_prob=args.fold_prob,
    )
    series_list = generate_tournament(config)
    games = [game for series in series_list for game in series.games]
    with _open_output(args.output) as out:
        serialize_games(games, out)
    if args.replay:
        ledger = replay(series_list, _settings(args).elo)
        write_ranking(sys.stdout, ranking(ledger))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    games, report = _read_games(args)
    series = group_series(games)
    print(report.summary())
    print(f"grouped into {len(series)} series")
    return 0


if __name__ == "__main__":
    sys.exit(main())
