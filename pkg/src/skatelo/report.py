"""Rankings, score tables, parameter sweeps and time-series exports.

Everything here is pure: reports are computed from a ledger or a series
list and written as CSV with a fixed column order and "\\n" line ends,
so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from typing import IO

from .chance import WinProbEstimator
from .elo import EloConfig, FixedK
from .errors import DomainError, SkatEloError
from .model import PlayerId, SeriesRecord, seeger_score, series_profile
from .pipeline import RatingLedger, replay

# Grid of (chance_hand, chance_flat, K) points swept by default.
DEFAULT_SWEEP_GRID: tuple[tuple[bool, bool, float], ...] = tuple(
    (i1, i2, k)
    for i1 in (False, True)
    for i2 in (False, True)
    for k in (0.01, 0.02, 0.04, 0.08)
)


def _writer(stream: IO):
    return csv.writer(stream, lineterminator="\n")


def ranking(ledger: RatingLedger) -> list[tuple[int, PlayerId, float, int]]:
    """Players ordered by rating, then by series played, then by id."""
    entries = sorted(
        ledger.ratings.items(), key=lambda kv: (-kv[1].value, -kv[1].series_played, kv[0])
    )
    return [
        (position, player, rating.value, rating.series_played)
        for position, (player, rating) in enumerate(entries, start=1)
    ]


def write_ranking(stream: IO, rows: Iterable[tuple[int, PlayerId, float, int]]) -> None:
    out = _writer(stream)
    out.writerow(["rank", "player", "rating", "series"])
    for rank, player, rating, series in rows:
        out.writerow([rank, player, f"{rating:.2f}", series])


def seeger_table(series_list: Iterable[SeriesRecord]) -> list[tuple[str, PlayerId, int, int, int, int]]:
    """Per-series evaluation rows: table, player, wins, losses, value, score."""
    rows = []
    for series in series_list:
        profile = series_profile(series)
        scores = seeger_score(profile)
        for seat, player in enumerate(series.players):
            tally = profile.tallies[seat]
            rows.append(
                (series.table_id, player, tally.wins, tally.losses, tally.value_sum, scores[seat])
            )
    return rows


def write_seeger(stream: IO, rows: Iterable[tuple[str, PlayerId, int, int, int, int]]) -> None:
    out = _writer(stream)
    out.writerow(["table_id", "player", "wins", "losses", "value", "score"])
    for row in rows:
        out.writerow(list(row))


def average_scores(series_list: Iterable[SeriesRecord]) -> list[tuple[PlayerId, int, float, float]]:
    """Average evaluation per game and rescaled to a 36-game series.

    Rows are (player, games, avg_per_game, avg_per_36), best first.
    The per-36 column is computed from the unrounded per-game average.
    """
    totals: dict[PlayerId, int] = {}
    games: dict[PlayerId, int] = {}
    for series in series_list:
        scores = seeger_score(series_profile(series))
        for seat, player in enumerate(series.players):
            totals[player] = totals.get(player, 0) + scores[seat]
            games[player] = games.get(player, 0) + len(series.games)
    rows = []
    for player, total in totals.items():
        count = games[player]
        if count == 0:
            continue
        per_game = total / count
        rows.append((player, count, per_game, per_game * 36.0))
    rows.sort(key=lambda row: (-row[2], row[0]))
    return rows


def write_average_scores(stream: IO, rows: Iterable[tuple[PlayerId, int, float, float]]) -> None:
    out = _writer(stream)
    out.writerow(["player", "games", "avg_per_game", "avg_per_36"])
    for player, count, per_game, per_36 in rows:
        out.writerow([player, count, f"{per_game:.2f}", f"{per_36:.2f}"])


@dataclass(frozen=True)
class MeanValueReport:
    """Declared-game counts and value sums per declarer seat."""

    counts: tuple[int, int, int]
    sums: tuple[int, int, int]

    @property
    def means(self) -> tuple[float, float, float]:
        return tuple(s / c if c else math.nan for s, c in zip(self.sums, self.counts))

    @property
    def overall_count(self) -> int:
        return sum(self.counts)

    @property
    def overall_mean(self) -> float:
        return sum(self.sums) / self.overall_count

    @classmethod
    def from_counts(cls, counts: Sequence[int], sums: Sequence[int]) -> "MeanValueReport":
        return cls(counts=tuple(counts), sums=tuple(sums))


def mean_game_value(series_list: Iterable[SeriesRecord]) -> MeanValueReport:
    """Average contract value per declarer seat and overall."""
    counts = [0, 0, 0]
    sums = [0, 0, 0]
    for series in series_list:
        for game in series.games:
            if game.folded:
                continue
            counts[game.declarer] += 1
            sums[game.declarer] += game.base_value
    if sum(counts) == 0:
        raise DomainError("no declared games in the dataset")
    return MeanValueReport(counts=tuple(counts), sums=tuple(sums))


def write_mean_values(stream: IO, report: MeanValueReport) -> None:
    out = _writer(stream)
    out.writerow(["position", "games", "value_sum", "mean"])
    for seat in range(3):
        out.writerow(
            [seat, report.counts[seat], report.sums[seat], f"{report.means[seat]:.1f}"]
        )
    out.writerow(["all", report.overall_count, sum(report.sums), f"{report.overall_mean:.1f}"])


def percentile(values: Sequence[float], p: float) -> float:
    """Nearest-rank percentile: the ceil(p*n/100)-th smallest value."""
    if not values:
        raise DomainError("percentile of an empty sequence")
    if not 0.0 < p <= 100.0:
        raise DomainError(f"percentile must be in (0, 100], got {p}")
    ordered = sorted(values)
    # multiply before dividing: p*n is exact for integer percents
    rank = math.ceil(p * len(ordered) / 100.0)
    rank = min(max(rank, 1), len(ordered))
    return ordered[rank - 1]


@dataclass(frozen=True)
class SweepRow:
    """Final-rating statistics of one replay at one grid point."""

    chance_hand: bool
    chance_flat: bool
    k: float
    maximum: float
    mean: float
    minimum: float
    p10: float
    p25: float
    p75: float
    p90: float


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]


def sweep(
    series_list: Iterable[SeriesRecord],
    grid: Sequence[tuple[bool, bool, float]] = DEFAULT_SWEEP_GRID,
    config: EloConfig | None = None,
    estimator: WinProbEstimator | None = None,
) -> SweepReport:
    """One fresh replay per (chance_hand, chance_flat, K) grid point."""
    if not grid:
        raise DomainError("empty sweep grid")
    base = EloConfig() if config is None else config
    series_list = list(series_list)
    if not series_list:
        raise DomainError("empty dataset")
    rows = []
    for i1, i2, k in grid:
        point = replace(base, chance_hand=bool(i1), chance_flat=bool(i2), k_policy=FixedK(k))
        try:
            ledger = replay(series_list, point, estimator)
        except SkatEloError as exc:
            raise type(exc)(f"grid point ({int(i1)},{int(i2)},{k}): {exc}") from exc
        finals = [rating.value for rating in ledger.ratings.values()]
        rows.append(
            SweepRow(
                chance_hand=bool(i1),
                chance_flat=bool(i2),
                k=k,
                maximum=max(finals),
                mean=sum(finals) / len(finals),
                minimum=min(finals),
                p10=percentile(finals, 10),
                p25=percentile(finals, 25),
                p75=percentile(finals, 75),
                p90=percentile(finals, 90),
            )
        )
    return SweepReport(rows=tuple(rows))


def write_sweep(stream: IO, report: SweepReport) -> None:
    out = _writer(stream)
    out.writerow(["i1", "i2", "k", "max", "mean", "min", "p10", "p25", "p75", "p90"])
    for row in report.rows:
        out.writerow(
            [
                int(row.chance_hand),
                int(row.chance_flat),
                f"{row.k:g}",
                f"{row.maximum:.2f}",
                f"{row.mean:.2f}",
                f"{row.minimum:.2f}",
                f"{row.p10:.2f}",
                f"{row.p25:.2f}",
                f"{row.p75:.2f}",
                f"{row.p90:.2f}",
            ]
        )


def timeseries(
    ledger: RatingLedger,
    players: Sequence[PlayerId] | None = None,
    mode: str = "contracted",
) -> tuple[list[str], list[list]]:
    """Rating trajectories as a table: header row plus data rows.

    Contracted mode has one row per update ordinal, so players who
    played fewer series leave trailing blanks.  Expanded mode has one
    row per global series index with the last known rating carried
    forward (and the first known rating carried backwards), so every
    cell is filled.
    """
    if players is None:
        players = ledger.players()
    else:
        players = list(players)
        for player in players:
            if player not in ledger.ratings:
                raise DomainError(f"unknown player {player!r}")
    if not players:
        raise DomainError("no players to export")

    header = ["x"] + list(players)
    rows: list[list] = []
    if mode == "contracted":
        depth = max(len(ledger.history[p]) for p in players)
        for ordinal in range(1, depth + 1):
            row: list = [ordinal]
            for player in players:
                entries = ledger.history[player]
                row.append(entries[ordinal - 1].posterior if ordinal <= len(entries) else None)
            rows.append(row)
    elif mode == "expanded":
        current = {p: ledger.history[p][0].prior for p in players}
        cursor = {p: 0 for p in players}
        for index in range(1, ledger.series_replayed + 1):
            for player in players:
                entries = ledger.history[player]
                at = cursor[player]
                if at < len(entries) and entries[at].series_index == index:
                    current[player] = entries[at].posterior
                    cursor[player] = at + 1
            rows.append([index] + [current[p] for p in players])
    else:
        raise DomainError(f"unknown timeseries mode {mode!r}")
    return header, rows


def write_timeseries(stream: IO, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """Write a timeseries table with full-precision ratings.

    Ratings are written with repr precision so that reading the file
    back reproduces the exact floats; empty cells stay empty.
    """
    out = _writer(stream)
    out.writerow(list(header))
    for row in rows:
        rendered = [row[0]]
        for cell in row[1:]:
            rendered.append("" if cell is None else repr(cell))
        out.writerow(rendered)
