"""Reading and writing the v1 line-delimited game-log format.

A log is UTF-8 text: a header line ``v1`` followed by one JSON object
per line.  Each object carries table_id, game_seq, players (exactly 3),
game_type (a contract code, or the string "folded"), and for played
games declarer, base_value and won; win_prob is optional and accepted
either in percent or as a fraction in [0, 1].  Blank lines are ignored.

A bad record line is skipped and reported with its line number; a
missing or wrong header is fatal, as are grouping contradictions
(a table whose player triple changes, or a repeated game number).
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import IO

from .errors import IngestError
from .model import GameRecord, GameType, SeriesRecord

FORMAT_HEADER = "v1"

_KNOWN_FIELDS = {
    "table_id",
    "game_seq",
    "players",
    "declarer",
    "game_type",
    "base_value",
    "won",
    "win_prob",
}

_VALID_TYPE_CODES = {int(t) for t in GameType}


@dataclass
class IngestReport:
    """What happened while reading one log."""

    source: str = "<stream>"
    lines_read: int = 0
    game_count: int = 0
    folded_count: int = 0
    skipped: list[tuple[int, str]] = field(default_factory=list)
    warnings: list[tuple[int, str]] = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            f"{self.source}: {self.game_count} games "
            f"({self.folded_count} folded), {len(self.skipped)} skipped"
        ]
        for line_no, reason in self.skipped:
            lines.append(f"  line {line_no}: skipped: {reason}")
        for line_no, reason in self.warnings:
            lines.append(f"  line {line_no}: warning: {reason}")
        return "\n".join(lines)


def parse_games(stream: IO, source: str = "<stream>") -> tuple[list[GameRecord], IngestReport]:
    """Parse a v1 log into game records plus a skip/warning report.

    ``stream`` may be text or binary; binary input is decoded as UTF-8.
    Only structural problems raise; a malformed record line is skipped
    and reported.
    """
    if isinstance(stream, (io.RawIOBase, io.BufferedIOBase)) or "b" in getattr(stream, "mode", ""):
        stream = io.TextIOWrapper(stream, encoding="utf-8")
    report = IngestReport(source=source)
    games: list[GameRecord] = []

    header = stream.readline()
    if header.strip() != FORMAT_HEADER:
        raise IngestError(
            f"{source}: expected header {FORMAT_HEADER!r} on line 1, got {header.strip()!r}"
        )

    for line_no, raw in enumerate(stream, start=2):
        line = raw.strip()
        if not line:
            continue
        report.lines_read += 1
        try:
            game = _parse_line(line, report, line_no)
        except _LineError as exc:
            report.skipped.append((line_no, str(exc)))
            continue
        games.append(game)
        report.game_count += 1
        if game.folded:
            report.folded_count += 1
    return games, report


class _LineError(ValueError):
    """Internal: one record line is unusable (leads to a skip, not a raise)."""


def _need(obj: dict, key: str):
    if key not in obj:
        raise _LineError(f"missing field {key!r}")
    return obj[key]


def _as_int(value, key: str) -> int:
    # bool is an int subclass; a JSON true/false here is still a type error
    if isinstance(value, bool) or not isinstance(value, int):
        raise _LineError(f"{key} must be an integer, got {value!r}")
    return value


def _parse_line(line: str, report: IngestReport, line_no: int) -> GameRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise _LineError(f"invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise _LineError("record is not a JSON object")

    extra = set(obj) - _KNOWN_FIELDS
    if extra:
        report.warnings.append((line_no, f"ignoring unknown fields: {', '.join(sorted(extra))}"))

    table_id = _need(obj, "table_id")
    if not isinstance(table_id, str) or not table_id:
        raise _LineError(f"table_id must be a non-empty string, got {table_id!r}")
    game_seq = _as_int(_need(obj, "game_seq"), "game_seq")

    players = _need(obj, "players")
    if not isinstance(players, list) or len(players) != 3:
        count = len(players) if isinstance(players, list) else players
        raise _LineError(f"expected 3 players, got {count!r}")
    if not all(isinstance(p, str) for p in players):
        raise _LineError("player ids must be strings")

    raw_type = _need(obj, "game_type")
    if raw_type == "folded":
        game_type = GameType.FOLDED
    elif isinstance(raw_type, int) and not isinstance(raw_type, bool) and raw_type in _VALID_TYPE_CODES:
        game_type = GameType(raw_type)
    else:
        raise _LineError(f"unknown game_type {raw_type!r}")

    declarer = obj.get("declarer")
    if declarer is not None:
        declarer = _as_int(declarer, "declarer")
    base_value = obj.get("base_value", 0)
    base_value = _as_int(base_value, "base_value") if base_value is not None else 0
    won = obj.get("won")
    if won is not None and not isinstance(won, bool):
        raise _LineError(f"won must be a boolean, got {won!r}")

    win_prob = obj.get("win_prob")
    if win_prob is not None:
        if isinstance(win_prob, bool) or not isinstance(win_prob, (int, float)):
            raise _LineError(f"win_prob must be a number, got {win_prob!r}")
        win_prob = float(win_prob)
        if 0.0 <= win_prob <= 1.0:
            win_prob *= 100.0  # fractions are accepted and scaled to percent

    try:
        return GameRecord(
            table_id=table_id,
            game_seq=game_seq,
            players=tuple(players),
            game_type=game_type,
            declarer=declarer,
            base_value=base_value,
            won=won,
            win_prob=win_prob,
        )
    except ValueError as exc:
        raise _LineError(str(exc)) from None


def group_series(games: list[GameRecord]) -> list[SeriesRecord]:
    """Group parsed games into per-table series.

    Tables come out in first-appearance order, games within a table
    sorted by game_seq.  The grouped result is independent of the input
    line order up to that emission order.  A table whose player triple
    changes, or that repeats a game number, is a data error.
    """
    by_table: dict[str, list[GameRecord]] = {}
    for game in games:
        by_table.setdefault(game.table_id, []).append(game)

    series_list: list[SeriesRecord] = []
    for table_id, group in by_table.items():
        players = group[0].players
        for game in group:
            if game.players != players:
                raise IngestError(
                    f"table {table_id}: inconsistent player triple "
                    f"({game.players} vs {players})"
                )
        group.sort(key=lambda g: g.game_seq)
        for earlier, later in zip(group, group[1:]):
            if earlier.game_seq == later.game_seq:
                raise IngestError(f"table {table_id}: duplicate game_seq {later.game_seq}")
        series_list.append(SeriesRecord(table_id=table_id, players=players, games=tuple(group)))
    return series_list


def game_to_line(game: GameRecord) -> str:
    """One game as its v1 JSON line."""
    obj: dict = {
        "table_id": game.table_id,
        "game_seq": game.game_seq,
        "players": list(game.players),
    }
    if game.folded:
        obj["game_type"] = "folded"
    else:
        obj["game_type"] = int(game.game_type)
        obj["declarer"] = game.declarer
        obj["base_value"] = game.base_value
        obj["won"] = game.won
    if game.win_prob is not None:
        obj["win_prob"] = game.win_prob
    return json.dumps(obj, separators=(",", ":"))


def serialize_games(games: list[GameRecord], stream: IO) -> None:
    """Write games as a v1 log; the inverse of :func:`parse_games`."""
    stream.write(FORMAT_HEADER + "\n")
    for game in games:
        stream.write(game_to_line(game) + "\n")
