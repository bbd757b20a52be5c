"""Chance reduction: rescaling game values before the rating update.

Two independent corrections can be switched on.  The hand correction
divides a game's value by q, the clipped ratio of the declarer's
winning probability to the normal winning probability of the contract
type, so winning an easy hand moves the rating less than winning a hard
one.  The flat correction replaces every game value with the population
mean value; when both are on, the flat substitution happens first and
the division second.  Win/loss counts and the fixed series bonuses are
never rescaled.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence

from .elo import EloConfig
from .errors import DomainError
from .model import (
    GameRecord,
    GameType,
    LOSS_MULTIPLIER,
    OPPONENT_LOSS_BONUS,
    SeriesRecord,
    WIN_BONUS,
    seeger_score,
    series_profile,
)

# Normal declarer winning percentages per contract type; all four suit
# contracts share one value.
SUIT_NORMAL_PROB = 80.4

DEFAULT_NORMAL_PROB: Mapping[GameType, float] = {
    GameType.DIAMONDS: SUIT_NORMAL_PROB,
    GameType.HEARTS: SUIT_NORMAL_PROB,
    GameType.SPADES: SUIT_NORMAL_PROB,
    GameType.CLUBS: SUIT_NORMAL_PROB,
    GameType.GRAND: 93.4,
    GameType.NULL: 62.0,
    GameType.NULL_HAND: 71.1,
    GameType.NULL_OUVERT: 90.0,
    GameType.NULL_HAND_OUVERT: 94.5,
}

# Maps a game to the declarer's winning percent, or None when it cannot.
WinProbEstimator = Callable[[GameRecord], "float | None"]


def normal_prob(game_type: GameType, table: Mapping[GameType, float] | None = None) -> float:
    """Normal winning percent of a contract type."""
    if game_type is GameType.FOLDED:
        raise DomainError("folded games have no winning probability")
    lookup = DEFAULT_NORMAL_PROB if table is None else table
    try:
        return lookup[game_type]
    except KeyError:
        raise DomainError(f"no normal probability for {game_type.name}") from None


def clip_q(p: float, normal: float, lo: float = 0.5, hi: float = 2.0) -> float:
    """Ratio of estimated to normal winning percent, clipped to [lo, hi]."""
    if normal <= 0:
        raise DomainError(f"normal probability must be positive, got {normal}")
    if p < 0:
        raise DomainError(f"winning probability cannot be negative, got {p}")
    return min(hi, max(lo, p / normal))


def adjust_game_value(
    base_value: float,
    q: float,
    chance_hand: bool,
    chance_flat: bool,
    mean_game_value: float = 41.0,
) -> float:
    """Corrected game value: flat substitution first, then divide by q.

    With both switches off this is the identity on ``base_value``.
    """
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    value = float(base_value)
    if chance_flat:
        value = mean_game_value
    if chance_hand:
        value = value / q
    return value


def opponent_factor(
    r_declarer: float, r_opponents: Sequence[float], enabled: bool, lo: float = 0.5, hi: float = 2.0
) -> float:
    """Mean opponent rating over the declarer's, clipped; 1.0 when off.

    The declarer's game value gets divided by this, so declaring against
    weaker opponents is worth less.
    """
    if not enabled:
        return 1.0
    if len(r_opponents) != 2:
        raise DomainError("a declarer has exactly 2 opponents")
    mean_opp = (r_opponents[0] + r_opponents[1]) / 2.0
    if r_declarer <= 0 or mean_opp <= 0:
        raise DomainError("ratings must be positive")
    return min(hi, max(lo, mean_opp / r_declarer))


def adjusted_series_scores(
    series: SeriesRecord,
    ratings: Sequence[float],
    config: EloConfig,
    estimator: WinProbEstimator | None = None,
) -> tuple[float, float, float]:
    """Series evaluation with the configured value corrections applied.

    Each declared game's value is corrected, its outcome recomputed as
    +v' won / -2v' lost, and the series evaluated with the corrected
    value sums while the win/loss bonuses stay as counted.  A game
    without a recorded winning probability falls back to ``estimator``;
    if that also fails the hand correction cannot run.  With every
    switch off the result equals the raw evaluation bit for bit.
    """
    if len(ratings) != 3:
        raise DomainError(f"need one rating per seat, got {len(ratings)}")
    profile = series_profile(series)
    if not (config.chance_hand or config.chance_flat or config.opponent_factor):
        return tuple(float(s) for s in seeger_score(profile))

    values = [0.0, 0.0, 0.0]
    for game in series.games:
        if game.folded:
            continue
        seat = game.declarer
        q = 1.0
        if config.chance_hand:
            p = game.win_prob
            if p is None and estimator is not None:
                p = estimator(game)
            if p is None:
                raise DomainError(
                    f"missing win probability for game {game.table_id}#{game.game_seq}"
                )
            q = clip_q(
                p,
                normal_prob(game.game_type, config.normal_prob),
                config.clip_lo,
                config.clip_hi,
            )
        value = adjust_game_value(
            game.base_value, q, config.chance_hand, config.chance_flat, config.mean_game_value
        )
        if config.opponent_factor:
            opponents = tuple(ratings[i] for i in range(3) if i != seat)
            value /= opponent_factor(
                ratings[seat], opponents, True, config.clip_lo, config.clip_hi
            )
        values[seat] += value if game.won else -LOSS_MULTIPLIER * value

    total_losses = sum(t.losses for t in profile.tallies)
    scores = tuple(
        values[i]
        + WIN_BONUS * (t.wins - t.losses)
        + OPPONENT_LOSS_BONUS * (total_losses - t.losses)
        for i, t in enumerate(profile.tallies)
    )
    return scores
