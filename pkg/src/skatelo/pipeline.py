"""Replay of series through the rating update, keeping full history."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .chance import WinProbEstimator, adjusted_series_scores
from .elo import (
    AverageStart,
    EloConfig,
    Rating,
    UpdateTrace,
    k_for,
    start_rating,
    update_series,
)
from .errors import DomainError
from .model import PlayerId, SeriesRecord, seeger_score, series_profile


@dataclass(frozen=True)
class HistoryEntry:
    """One series update as seen by one player.

    ``series_index`` is the 1-based position in the global replay order;
    ``seat`` indexes this player inside the trace tuples.
    """

    series_index: int
    table_id: str
    seat: int
    trace: UpdateTrace

    @property
    def prior(self) -> float:
        return self.trace.prior[self.seat]

    @property
    def posterior(self) -> float:
        return self.trace.posterior[self.seat]


@dataclass
class RatingLedger:
    """Current ratings plus every player's full update history."""

    ratings: dict[PlayerId, Rating] = field(default_factory=dict)
    history: dict[PlayerId, list[HistoryEntry]] = field(default_factory=dict)
    series_replayed: int = 0

    def players(self) -> list[PlayerId]:
        """Player ids in order of first appearance."""
        return list(self.ratings)

    def rating(self, player: PlayerId) -> Rating:
        try:
            return self.ratings[player]
        except KeyError:
            raise DomainError(f"unknown player {player!r}") from None


def replay(
    series_list: Iterable[SeriesRecord],
    config: EloConfig | None = None,
    estimator: WinProbEstimator | None = None,
) -> RatingLedger:
    """Run every series through the rating update, in order.

    A player appearing for the first time is initialised per the start
    policy; the averaging policy seeds them from the raw evaluation
    scores of their first n series in this dataset, so the dataset must
    contain that many.  The result is a pure function of the input
    order, the configuration and the estimator.
    """
    if config is None:
        config = EloConfig()
    series_list = list(series_list)
    seed_scores = _first_scores(series_list, config)
    ledger = RatingLedger()

    for index, series in enumerate(series_list, start=1):
        priors: list[Rating] = []
        for player in series.players:
            rating = ledger.ratings.get(player)
            if rating is None:
                try:
                    value = start_rating(config.start_policy, seed_scores.get(player, ()))
                except DomainError as exc:
                    raise DomainError(f"player {player!r}: {exc}") from exc
                rating = Rating(value=value, series_played=0)
            priors.append(rating)

        raw = seeger_score(series_profile(series))
        try:
            adjusted = adjusted_series_scores(
                series, tuple(r.value for r in priors), config, estimator
            )
        except DomainError as exc:
            raise DomainError(f"table {series.table_id}: {exc}") from exc
        ks = tuple(k_for(r.series_played, config.k_policy) for r in priors)
        updated, trace = update_series(
            priors, adjusted, ks, raw_scores=raw, rating_floor=config.rating_floor
        )

        for seat, player in enumerate(series.players):
            ledger.ratings[player] = updated[seat]
            ledger.history.setdefault(player, []).append(
                HistoryEntry(series_index=index, table_id=series.table_id, seat=seat, trace=trace)
            )
        ledger.series_replayed = index
    return ledger


def _first_scores(series_list: Sequence[SeriesRecord], config: EloConfig) -> dict[PlayerId, list[float]]:
    """Raw scores of each player's first n series, for the averaging start."""
    if not isinstance(config.start_policy, AverageStart):
        return {}
    needed = config.start_policy.n
    scores: dict[PlayerId, list[float]] = {}
    for series in series_list:
        raw = seeger_score(series_profile(series))
        for seat, player in enumerate(series.players):
            bucket = scores.setdefault(player, [])
            if len(bucket) < needed:
                bucket.append(float(raw[seat]))
    return scores
