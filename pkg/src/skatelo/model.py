"""Domain types for Skat game logs and the extended Seeger series scorer.

A series is an ordered block of games played at one table by a fixed
triple of players.  Every game has exactly one declarer; only the
declarer accrues a win or a loss.  A won game is worth the contract
value, a lost game costs twice the contract value.  The series
evaluation then adds 50 points per own win, removes 50 per own loss,
and grants each opponent of a losing declarer 40 points.  Folded games
(everyone passed) contribute nothing anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum, unique

from .errors import DomainError

PlayerId = str

# Series evaluation constants.
WIN_BONUS = 50
OPPONENT_LOSS_BONUS = 40
LOSS_MULTIPLIER = 2


@unique
class GameType(IntEnum):
    """Contract codes; suit contracts are the codes below 13."""

    FOLDED = 0
    DIAMONDS = 9
    HEARTS = 10
    SPADES = 11
    CLUBS = 12
    NULL = 23
    GRAND = 24
    NULL_HAND = 35
    NULL_OUVERT = 46
    NULL_HAND_OUVERT = 59

    @property
    def is_suit(self) -> bool:
        return 0 < self.value < 13

    @property
    def is_null(self) -> bool:
        return self in _NULL_TYPES

    @property
    def is_trump(self) -> bool:
        """True for contracts with a trump suit (the four suits and grand)."""
        return self.is_suit or self is GameType.GRAND


_NULL_TYPES = frozenset(
    {GameType.NULL, GameType.NULL_HAND, GameType.NULL_OUVERT, GameType.NULL_HAND_OUVERT}
)


@dataclass(frozen=True)
class GameRecord:
    """One played (or folded) game at a table.

    ``base_value`` is the positive contract value; the doubling of lost
    games happens in :func:`game_outcome_points`, never here.
    ``win_prob`` is the declarer's estimated winning probability in
    percent and may be absent.  ``declarer`` is a seat index into
    ``players``.
    """

    table_id: str
    game_seq: int
    players: tuple[PlayerId, PlayerId, PlayerId]
    game_type: GameType
    declarer: int | None = None
    base_value: int = 0
    won: bool | None = None
    win_prob: float | None = None

    def __post_init__(self) -> None:
        if not self.table_id:
            raise DomainError("table_id must be non-empty")
        if self.game_seq < 1:
            raise DomainError(f"game_seq must be >= 1, got {self.game_seq}")
        if len(self.players) != 3:
            raise DomainError(f"a game has exactly 3 players, got {len(self.players)}")
        if any(not p for p in self.players):
            raise DomainError("player ids must be non-empty")
        if len(set(self.players)) != 3:
            raise DomainError(f"player ids must be distinct, got {self.players}")
        if self.folded:
            # Folded games carry no declarer, no outcome, and no value.
            if self.declarer is not None or self.won is not None or self.base_value != 0:
                raise DomainError(
                    f"folded game {self.table_id}#{self.game_seq} cannot have "
                    "a declarer, an outcome, or a value"
                )
        else:
            if self.declarer is None or self.won is None:
                raise DomainError(
                    f"game {self.table_id}#{self.game_seq} needs a declarer and an outcome"
                )
            if not 0 <= self.declarer <= 2:
                raise DomainError(f"declarer seat must be 0..2, got {self.declarer}")
            if self.base_value <= 0:
                raise DomainError(
                    f"game {self.table_id}#{self.game_seq} needs a positive base value"
                )
        if self.win_prob is not None and not 0.0 <= self.win_prob <= 100.0:
            raise DomainError(f"win_prob is a percent in [0, 100], got {self.win_prob}")

    @property
    def folded(self) -> bool:
        return self.game_type is GameType.FOLDED


@dataclass(frozen=True)
class SeriesRecord:
    """An ordered block of games played at one table by a fixed triple."""

    table_id: str
    players: tuple[PlayerId, PlayerId, PlayerId]
    games: tuple[GameRecord, ...]

    def __post_init__(self) -> None:
        if not self.games:
            raise DomainError(f"series {self.table_id} has no games")
        last_seq = 0
        for game in self.games:
            if game.table_id != self.table_id:
                raise DomainError(
                    f"series {self.table_id} contains game from table {game.table_id}"
                )
            if game.players != self.players:
                raise DomainError(
                    f"table {self.table_id}: game #{game.game_seq} has players "
                    f"{game.players}, the series has {self.players}"
                )
            if game.game_seq <= last_seq:
                raise DomainError(
                    f"table {self.table_id}: game_seq must be strictly increasing, "
                    f"got {game.game_seq} after {last_seq}"
                )
            last_seq = game.game_seq


@dataclass(frozen=True)
class PlayerTally:
    """Declared-game counters for one seat within a series."""

    wins: int = 0
    losses: int = 0
    value_sum: int = 0

    def __post_init__(self) -> None:
        if self.wins < 0 or self.losses < 0:
            raise DomainError("win and loss counts cannot be negative")


@dataclass(frozen=True)
class SeriesProfile:
    """Per-seat tallies of one series, in seat order."""

    players: tuple[PlayerId, PlayerId, PlayerId]
    tallies: tuple[PlayerTally, PlayerTally, PlayerTally]


def game_outcome_points(game: GameRecord) -> int:
    """Signed outcome for the declarer: +V when won, -2V when lost."""
    if game.folded:
        raise DomainError(f"no outcome for folded game {game.table_id}#{game.game_seq}")
    if game.won:
        return game.base_value
    return -LOSS_MULTIPLIER * game.base_value


def series_profile(series: SeriesRecord) -> SeriesProfile:
    """Count declared wins and losses and sum outcome points per seat."""
    wins = [0, 0, 0]
    losses = [0, 0, 0]
    values = [0, 0, 0]
    for game in series.games:
        if game.folded:
            continue
        seat = game.declarer
        if game.won:
            wins[seat] += 1
        else:
            losses[seat] += 1
        values[seat] += game_outcome_points(game)
    tallies = (
        PlayerTally(wins[0], losses[0], values[0]),
        PlayerTally(wins[1], losses[1], values[1]),
        PlayerTally(wins[2], losses[2], values[2]),
    )
    return SeriesProfile(series.players, tallies)


def seeger_score(profile: SeriesProfile) -> tuple[int, int, int]:
    """Extended Seeger evaluation of a series, per seat.

    score_i = value_sum_i + 50 * (wins_i - losses_i)
            + 40 * (losses of the two opponents)
    """
    total_losses = sum(t.losses for t in profile.tallies)
    scores = tuple(
        t.value_sum
        + WIN_BONUS * (t.wins - t.losses)
        + OPPONENT_LOSS_BONUS * (total_losses - t.losses)
        for t in profile.tallies
    )
    return scores
