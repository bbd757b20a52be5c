"""Hand strength estimation for games without a recorded win probability.

Trump hands are condensed into a feature tuple (free suits, skat value
group, bid group, position, trump length, high cards, jack group, lost
cards) and looked up in per-contract tables; a miss falls back to a
monotone logistic heuristic over the same features.  Null hands instead
multiply four per-suit winning probabilities.  A simple point count
after von Stegen is provided for quick hand triage.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import IntEnum, unique

from .errors import DomainError
from .model import GameType

# Card encoding: two characters, suit then rank ("CJ" is the club jack).
SUIT_LETTERS = "DHSC"
RANK_LETTERS = "789TJQKA"
HIGH_RANKS = ("A", "T")
HAND_SIZE = 10

# Bids at or below this count as cautious in the point count.
LOW_BID_MAX = 24

SUIT_OF_TYPE: Mapping[GameType, str] = {
    GameType.DIAMONDS: "D",
    GameType.HEARTS: "H",
    GameType.SPADES: "S",
    GameType.CLUBS: "C",
}


@unique
class JackGroup(IntEnum):
    """Jack holdings condensed into strength-ordered groups."""

    NONE = 0
    LOW_ONLY = 1  # jacks, but neither of the two top ones
    ONE_TOP = 2  # exactly one of the club/spade jacks
    TWO_TOP = 3  # both top jacks
    THREE = 4
    FOUR = 5


@dataclass(frozen=True)
class HandFeatures:
    """Feature tuple describing a declarer's hand for one contract.

    ``null_suit_patterns`` names the per-suit holding patterns of a null
    hand and must be present exactly for null contracts.
    """

    free_suits: int = 0
    skat_value_group: int = 0
    bid_group: int = 0
    declarer_position: int = 0
    trump_length: int = 0
    high_cards: int = 0
    jack_group: JackGroup = JackGroup.NONE
    lost_cards: int = 0
    null_suit_patterns: tuple[str, str, str, str] | None = None

    def __post_init__(self) -> None:
        bounds = (
            ("free_suits", self.free_suits, 3),
            ("skat_value_group", self.skat_value_group, 3),
            ("bid_group", self.bid_group, 3),
            ("declarer_position", self.declarer_position, 2),
            ("trump_length", self.trump_length, 11),
            ("high_cards", self.high_cards, 7),
            ("jack_group", int(self.jack_group), 5),
            ("lost_cards", self.lost_cards, 10),
        )
        for name, value, hi in bounds:
            if not 0 <= value <= hi:
                raise DomainError(f"{name} must be in 0..{hi}, got {value}")
        if self.null_suit_patterns is not None:
            if len(self.null_suit_patterns) != 4:
                raise DomainError(
                    f"null hands have one pattern per suit, got {len(self.null_suit_patterns)}"
                )
            if any(not pat for pat in self.null_suit_patterns):
                raise DomainError("suit patterns must be non-empty")


@dataclass(frozen=True)
class HeuristicWeights:
    """Fallback logistic weights; the signs fix the monotone directions."""

    bias: float = 0.0
    free_suits: float = 0.15
    skat_value_group: float = 0.10
    bid_group: float = -0.10
    declarer_position: float = -0.10
    trump_length: float = 0.35
    high_cards: float = 0.25
    jack_group: float = 0.30
    lost_cards: float = -0.45
    # Per-suit percent assumed for unknown null patterns; its fourth
    # power sits near the normal null winning rate.
    null_fallback: float = 88.7

    def __post_init__(self) -> None:
        if not 0.0 < self.null_fallback <= 100.0:
            raise DomainError(f"null fallback is a percent, got {self.null_fallback}")


@dataclass(frozen=True)
class EstimatorTable:
    """Win-percent lookups plus the heuristic used on table misses.

    ``grand`` and ``suit`` are keyed by :func:`canonical_key` strings,
    ``null_suit`` by per-suit holding patterns.  Values are percents.
    """

    grand: Mapping[str, float] = field(default_factory=dict)
    suit: Mapping[str, float] = field(default_factory=dict)
    null_suit: Mapping[str, float] = field(default_factory=dict)
    weights: HeuristicWeights = field(default_factory=HeuristicWeights)

    def __post_init__(self) -> None:
        for name, table in (("grand", self.grand), ("suit", self.suit), ("null_suit", self.null_suit)):
            for key, pct in table.items():
                if not 0.0 <= pct <= 100.0:
                    raise DomainError(f"[{name}] {key}: win percent out of range: {pct}")


def canonical_key(features: HandFeatures) -> str:
    """Comma-joined feature values, the table key for trump contracts."""
    parts = (
        features.free_suits,
        features.skat_value_group,
        features.bid_group,
        features.declarer_position,
        features.trump_length,
        features.high_cards,
        int(features.jack_group),
        features.lost_cards,
    )
    return ",".join(str(p) for p in parts)


def _check_card(card: str) -> str:
    card = card.upper()
    if len(card) != 2 or card[0] not in SUIT_LETTERS or card[1] not in RANK_LETTERS:
        raise DomainError(f"bad card {card!r}, want suit in {SUIT_LETTERS} and rank in {RANK_LETTERS}")
    return card


def von_stegen_points(
    hand: Sequence[str],
    game_type: GameType,
    bid: int,
    position: int = 0,
    *,
    strong_jacks_bonus: float = 1.0,
    low_bid_bonus: float = 1.0,
) -> float:
    """Point count for a trump hand.

    Jacks score 2 points, other trumps and plain-suit aces and tens 1,
    and trump aces and tens 1 extra.  Holding both top jacks earns
    ``strong_jacks_bonus``, a bid of at most 24 earns ``low_bid_bonus``.
    ``position`` is carried for custom weighting; the default count
    ignores it.
    """
    if not game_type.is_trump:
        raise DomainError(f"the point count applies to trump games only, got {game_type.name}")
    if bid < 0:
        raise DomainError(f"bid cannot be negative, got {bid}")
    if not 0 <= position <= 2:
        raise DomainError(f"position must be 0..2, got {position}")
    cards = [_check_card(c) for c in hand]
    if len(cards) != HAND_SIZE:
        raise DomainError(f"a hand has {HAND_SIZE} cards, got {len(cards)}")
    trump_suit = SUIT_OF_TYPE.get(game_type)  # None for grand
    points = 0.0
    for card in cards:
        suit, rank = card[0], card[1]
        if rank == "J":
            points += 2.0
            continue
        if suit == trump_suit:
            points += 1.0
            if rank in HIGH_RANKS:
                points += 1.0
        elif rank in HIGH_RANKS:
            points += 1.0
    if "CJ" in cards and "SJ" in cards:
        points += strong_jacks_bonus
    if bid <= LOW_BID_MAX:
        points += low_bid_bonus
    return points


def null_win_prob(per_suit_probs: Sequence[float]) -> float:
    """Product of the four per-suit winning percents, as a percent."""
    if len(per_suit_probs) != 4:
        raise DomainError(f"need one probability per suit, got {len(per_suit_probs)}")
    product = 1.0
    for p in per_suit_probs:
        if not 0.0 <= p <= 100.0:
            raise DomainError(f"per-suit percent out of range: {p}")
        product *= p / 100.0
    return product * 100.0


def heuristic_win_prob(features: HandFeatures, weights: HeuristicWeights | None = None) -> float:
    """Logistic curve over the weighted feature sum, in percent.

    Monotone in every feature with the sign of its weight; the hand
    with every feature at its best end lands above 99 percent.
    """
    w = HeuristicWeights() if weights is None else weights
    z = (
        w.bias
        + w.free_suits * features.free_suits
        + w.skat_value_group * features.skat_value_group
        + w.bid_group * features.bid_group
        + w.declarer_position * features.declarer_position
        + w.trump_length * features.trump_length
        + w.high_cards * features.high_cards
        + w.jack_group * int(features.jack_group)
        + w.lost_cards * features.lost_cards
    )
    return 100.0 / (1.0 + math.exp(-z))


def estimate_win_prob(
    game_type: GameType,
    features: HandFeatures,
    tables: EstimatorTable | None = None,
) -> float:
    """Winning percent for a hand: table lookup, heuristic on a miss.

    Null contracts multiply per-suit pattern probabilities (unknown
    patterns use the configured fallback percent); trump contracts look
    up the canonical feature key and otherwise fall back to
    :func:`heuristic_win_prob`.
    """
    if tables is None:
        tables = EstimatorTable()
    if game_type is GameType.FOLDED:
        raise DomainError("folded games have no winning probability")
    if game_type.is_null:
        if features.null_suit_patterns is None:
            raise DomainError(f"{game_type.name} needs per-suit patterns")
        probs = [
            tables.null_suit.get(pattern, tables.weights.null_fallback)
            for pattern in features.null_suit_patterns
        ]
        return null_win_prob(probs)
    if features.null_suit_patterns is not None:
        raise DomainError("per-suit patterns only apply to null contracts")
    table = tables.grand if game_type is GameType.GRAND else tables.suit
    key = canonical_key(features)
    if key in table:
        return table[key]
    return heuristic_win_prob(features, tables.weights)
