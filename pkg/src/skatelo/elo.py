"""Rating update rules.

The series update treats the three adjusted series scores as one
simultaneous observation: each player's expected score is their
proportional share (by rating) of the series total, and the rating moves
by K times the surprise.  The classic two-player expectation, a softmax
generalisation to k players, and an older square-root damped update are
kept alongside for comparison work.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .errors import DomainError
from .model import GameType

DEFAULT_K = 0.02
DEFAULT_START = 800.0
DEFAULT_RATING_FLOOR = 1.0


@dataclass(frozen=True)
class Rating:
    """A player's current rating plus how many series produced it."""

    value: float
    series_played: int = 0

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise DomainError(f"ratings are positive, got {self.value}")
        if self.series_played < 0:
            raise DomainError(f"series_played cannot be negative, got {self.series_played}")


@dataclass(frozen=True)
class FixedK:
    """Constant volatility factor."""

    k: float = DEFAULT_K

    def __post_init__(self) -> None:
        if not 0.0 < self.k <= 1.0:
            raise DomainError(f"k must be in (0, 1], got {self.k}")


@dataclass(frozen=True)
class StepK:
    """Larger K while a player is new, smaller once established."""

    k_start: float
    k_end: float
    decay_after: int

    def __post_init__(self) -> None:
        for name, k in (("k_start", self.k_start), ("k_end", self.k_end)):
            if not 0.0 < k <= 1.0:
                raise DomainError(f"{name} must be in (0, 1], got {k}")
        if self.decay_after < 0:
            raise DomainError(f"decay_after cannot be negative, got {self.decay_after}")


KPolicy = FixedK | StepK


@dataclass(frozen=True)
class FixedStart:
    """Every new player starts at the same rating."""

    value: float = DEFAULT_START

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise DomainError(f"start rating must be positive, got {self.value}")


@dataclass(frozen=True)
class AverageStart:
    """New players start at the mean of their first ``n`` series scores."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"need at least 1 series to average, got {self.n}")


StartPolicy = FixedStart | AverageStart


@dataclass(frozen=True)
class EloConfig:
    """Knobs of the rating pipeline.

    ``chance_hand`` divides each game value by the clipped ratio of the
    declarer's winning probability to the normal one for that contract
    type; ``chance_flat`` first replaces the value with the population
    mean.  ``normal_prob`` overrides the built-in normal winning
    percentages when given.  ``opponent_factor`` additionally divides
    the declarer's value by the clipped mean-opponent-to-declarer rating
    ratio.
    """

    k_policy: KPolicy = field(default_factory=FixedK)
    start_policy: StartPolicy = field(default_factory=FixedStart)
    chance_hand: bool = False
    chance_flat: bool = False
    opponent_factor: bool = False
    clip_lo: float = 0.5
    clip_hi: float = 2.0
    mean_game_value: float = 41.0
    normal_prob: Mapping[GameType, float] | None = None
    rating_floor: float = DEFAULT_RATING_FLOOR

    def __post_init__(self) -> None:
        if not 0.0 < self.clip_lo <= 1.0 <= self.clip_hi:
            raise DomainError(
                f"clip bounds must satisfy 0 < lo <= 1 <= hi, got [{self.clip_lo}, {self.clip_hi}]"
            )
        if self.mean_game_value <= 0:
            raise DomainError(f"mean game value must be positive, got {self.mean_game_value}")
        if self.rating_floor <= 0:
            raise DomainError(f"rating floor must be positive, got {self.rating_floor}")
        if self.normal_prob is not None:
            for game_type, pct in self.normal_prob.items():
                if not 0.0 < pct <= 100.0:
                    raise DomainError(f"normal probability for {game_type.name} out of range: {pct}")


@dataclass(frozen=True)
class UpdateTrace:
    """Every intermediate of one series update, per seat."""

    prior: tuple[float, float, float]
    raw_scores: tuple[float, float, float]
    adjusted_scores: tuple[float, float, float]
    expected: tuple[float, float, float]
    posterior: tuple[float, float, float]
    k: tuple[float, float, float]
    floor_clamped: tuple[bool, bool, bool]


def expected_two(r_a: float, r_b: float) -> tuple[float, float]:
    """Classic two-player expected scores; they always sum to 1."""
    e_a = 1.0 / (1.0 + 10.0 ** ((r_b - r_a) / 400.0))
    return e_a, 1.0 - e_a


def update_two(rating: float, score: float, expected: float, k: float) -> float:
    """One classic update step: move by k times the surprise."""
    return rating + k * (score - expected)


def expected_softmax(ratings: Sequence[float]) -> tuple[float, ...]:
    """Each player's share of the summed win weights 10^(R/400).

    Reduces to :func:`expected_two` for two players.  The common
    exponent is shifted by the maximum rating so huge ratings cannot
    overflow.
    """
    if len(ratings) < 2:
        raise DomainError(f"softmax expectation needs at least 2 players, got {len(ratings)}")
    top = max(ratings)
    weights = [10.0 ** ((r - top) / 400.0) for r in ratings]
    total = sum(weights)
    return tuple(w / total for w in weights)


def expected_proportional(ratings: Sequence[float], scores_total: float) -> tuple[float, ...]:
    """Expected scores proportional to ratings, summing to ``scores_total``."""
    total_rating = sum(ratings)
    if total_rating <= 0:
        raise DomainError(f"rating sum must be positive, got {total_rating}")
    return tuple(r * scores_total / total_rating for r in ratings)


def update_series(
    ratings: Sequence[Rating],
    adjusted_scores: Sequence[float],
    k: float | Sequence[float],
    *,
    raw_scores: Sequence[float] | None = None,
    rating_floor: float = DEFAULT_RATING_FLOOR,
) -> tuple[tuple[Rating, Rating, Rating], UpdateTrace]:
    """Apply one series result to all three ratings simultaneously.

    ``k`` is either one factor for everyone or one per seat.  With a
    uniform k the update conserves the rating sum exactly up to float
    error, because the expectations sum to the adjusted score total.
    Ratings never drop below ``rating_floor``.
    """
    if len(ratings) != 3 or len(adjusted_scores) != 3:
        raise DomainError("series updates take exactly 3 players")
    ks = (float(k), float(k), float(k)) if isinstance(k, (int, float)) else tuple(float(x) for x in k)
    if len(ks) != 3:
        raise DomainError(f"need one k per seat, got {len(ks)}")
    for kf in ks:
        if not 0.0 < kf <= 1.0:
            raise DomainError(f"k must be in (0, 1], got {kf}")
    if rating_floor <= 0:
        raise DomainError(f"rating floor must be positive, got {rating_floor}")
    if raw_scores is None:
        raw_scores = adjusted_scores

    prior = tuple(r.value for r in ratings)
    adjusted = tuple(float(s) for s in adjusted_scores)
    expected = expected_proportional(prior, sum(adjusted))
    moved = [p + kf * (s - e) for p, kf, s, e in zip(prior, ks, adjusted, expected)]
    clamped = tuple(m < rating_floor for m in moved)
    posterior = tuple(max(rating_floor, m) for m in moved)
    updated = tuple(
        Rating(value=v, series_played=r.series_played + 1) for v, r in zip(posterior, ratings)
    )
    trace = UpdateTrace(
        prior=prior,
        raw_scores=tuple(float(s) for s in raw_scores),
        adjusted_scores=adjusted,
        expected=expected,
        posterior=posterior,
        k=ks,
        floor_clamped=clamped,
    )
    return updated, trace


def legacy_sqrt_update(rating: float, score: float, y: float, f: float) -> float:
    """Older damped update (R*f + S*sqrt(Y)) / (f + 1), kept for comparison."""
    if y <= 0:
        raise DomainError(f"Y must be positive, got {y}")
    if f <= 0:
        raise DomainError(f"the damping weight f must be positive, got {f}")
    return (rating * f + score * math.sqrt(y)) / (f + 1.0)


def compute_y(
    own_score: float,
    opp_scores: Sequence[float],
    own_rating: float,
    opp_ratings: Sequence[float],
) -> float:
    """Game quotient over rating quotient for the legacy update.

    Both quotients compare the player against the arithmetic mean of the
    two opponents.
    """
    if len(opp_scores) != 2 or len(opp_ratings) != 2:
        raise DomainError("a declarer has exactly 2 opponents")
    opp_score_mean = (opp_scores[0] + opp_scores[1]) / 2.0
    opp_rating_mean = (opp_ratings[0] + opp_ratings[1]) / 2.0
    if opp_score_mean <= 0:
        raise DomainError(f"mean opponent score must be positive, got {opp_score_mean}")
    if own_rating <= 0 or opp_rating_mean <= 0:
        raise DomainError("ratings must be positive")
    game_quotient = own_score / opp_score_mean
    rating_quotient = own_rating / opp_rating_mean
    return game_quotient / rating_quotient


def start_rating(policy: StartPolicy, first_scores: Sequence[float] = ()) -> float:
    """Initial rating for a new player under the given policy.

    The averaging policy needs the player's first ``n`` raw series
    scores; fewer is an error.
    """
    if isinstance(policy, FixedStart):
        return policy.value
    if len(first_scores) < policy.n:
        raise DomainError(
            f"insufficient history: need {policy.n} series scores, have {len(first_scores)}"
        )
    first = first_scores[: policy.n]
    return sum(first) / float(policy.n)


def k_for(series_played: int, policy: KPolicy) -> float:
    """Volatility factor for a player who has completed ``series_played`` series."""
    if series_played < 0:
        raise DomainError(f"series_played cannot be negative, got {series_played}")
    if isinstance(policy, FixedK):
        return policy.k
    if series_played < policy.decay_after:
        return policy.k_start
    return policy.k_end
