"""Shared fixture builders for the test suite."""

from __future__ import annotations

import random

from skatelo.model import GameRecord, GameType, SeriesRecord


def build_series(
    table_id: str,
    players: tuple[str, str, str],
    targets: tuple[int, int, int],
) -> SeriesRecord:
    """Craft a series whose raw evaluation equals ``targets`` exactly.

    A seat with a large target gets one won game of value target - 50.
    A seat whose target is too small for that gets a win plus a loss of
    40 (the 50-point bonuses cancel), which hands the other two seats 40
    points each; those are folded into their game values.  Flipping one
    seat to win-plus-loss can push another seat below the single-win
    range, so the loss set is grown to a fixed point first.
    """
    needs_loss = [False, False, False]
    while True:
        changed = False
        for seat in range(3):
            bonus = 40 * sum(1 for j in range(3) if j != seat and needs_loss[j])
            if not needs_loss[seat] and targets[seat] - 50 - bonus < 1:
                needs_loss[seat] = True
                changed = True
        if not changed:
            break
    games = []
    seq = 1
    for seat in range(3):
        bonus = 40 * sum(1 for j in range(3) if j != seat and needs_loss[j])
        if needs_loss[seat]:
            win_value = targets[seat] - bonus + 80
            games.append(
                GameRecord(table_id, seq, players, GameType.CLUBS, seat, win_value, True)
            )
            seq += 1
            games.append(GameRecord(table_id, seq, players, GameType.CLUBS, seat, 40, False))
            seq += 1
        else:
            value = targets[seat] - 50 - bonus
            games.append(GameRecord(table_id, seq, players, GameType.CLUBS, seat, value, True))
            seq += 1
    return SeriesRecord(table_id, players, tuple(games))


def random_series(
    rng: random.Random,
    table_id: str,
    players: tuple[str, str, str],
    games: int = 12,
    with_win_prob: bool = False,
) -> SeriesRecord:
    """A structurally valid series with random outcomes and values."""
    records = []
    for seq in range(1, games + 1):
        if rng.random() < 0.1:
            records.append(GameRecord(table_id, seq, players, GameType.FOLDED))
            continue
        game_type = rng.choice(
            [GameType.DIAMONDS, GameType.HEARTS, GameType.SPADES, GameType.CLUBS,
             GameType.GRAND, GameType.NULL]
        )
        value = int(game_type) if game_type.is_null else int(game_type) * rng.randint(2, 5)
        win_prob = rng.uniform(5.0, 99.0) if with_win_prob else None
        records.append(
            GameRecord(
                table_id,
                seq,
                players,
                game_type,
                declarer=rng.randrange(3),
                base_value=value,
                won=rng.random() < 0.7,
                win_prob=win_prob,
            )
        )
    return SeriesRecord(table_id, players, tuple(records))
