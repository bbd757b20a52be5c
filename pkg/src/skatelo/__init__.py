"""Series scoring and chance-corrected ratings for three-player Skat.

The package splits into the domain model (games, series, the extended
Seeger evaluation), the rating rules, the chance corrections, hand
strength estimation, log ingest, the replay pipeline, reporting, and a
synthetic tournament generator for validation studies.
"""

from .chance import (
    DEFAULT_NORMAL_PROB,
    adjust_game_value,
    adjusted_series_scores,
    clip_q,
    normal_prob,
    opponent_factor,
)
from .config import EngineSettings, load_config, parse_config
from .elo import (
    AverageStart,
    EloConfig,
    FixedK,
    FixedStart,
    Rating,
    StepK,
    UpdateTrace,
    compute_y,
    expected_proportional,
    expected_softmax,
    expected_two,
    k_for,
    legacy_sqrt_update,
    start_rating,
    update_series,
    update_two,
)
from .errors import ConfigError, DomainError, IngestError, SkatEloError
from .handstrength import (
    EstimatorTable,
    HandFeatures,
    HeuristicWeights,
    JackGroup,
    canonical_key,
    estimate_win_prob,
    heuristic_win_prob,
    null_win_prob,
    von_stegen_points,
)
from .ingest import IngestReport, group_series, parse_games, serialize_games
from .model import (
    GameRecord,
    GameType,
    PlayerTally,
    SeriesProfile,
    SeriesRecord,
    game_outcome_points,
    seeger_score,
    series_profile,
)
from .pipeline import HistoryEntry, RatingLedger, replay
from .report import (
    MeanValueReport,
    SweepReport,
    SweepRow,
    average_scores,
    mean_game_value,
    percentile,
    ranking,
    seeger_table,
    sweep,
    timeseries,
)
from .simulate import (
    SHIPPED_SEEDS,
    SimConfig,
    SyntheticPlayer,
    convergence_study,
    fixpoint_index,
    generate_tournament,
    increment_variances,
    kendall_tau,
    make_players,
    rank_recovery,
)

__version__ = "0.1.0"

__all__ = [
    "AverageStart",
    "ConfigError",
    "DEFAULT_NORMAL_PROB",
    "DomainError",
    "EloConfig",
    "EngineSettings",
    "EstimatorTable",
    "FixedK",
    "FixedStart",
    "GameRecord",
    "GameType",
    "HandFeatures",
    "HeuristicWeights",
    "HistoryEntry",
    "IngestError",
    "IngestReport",
    "JackGroup",
    "MeanValueReport",
    "PlayerTally",
    "Rating",
    "RatingLedger",
    "SHIPPED_SEEDS",
    "SeriesProfile",
    "SeriesRecord",
    "SimConfig",
    "SkatEloError",
    "StepK",
    "SweepReport",
    "SweepRow",
    "SyntheticPlayer",
    "UpdateTrace",
    "adjust_game_value",
    "adjusted_series_scores",
    "average_scores",
    "canonical_key",
    "clip_q",
    "compute_y",
    "convergence_study",
    "estimate_win_prob",
    "expected_proportional",
    "expected_softmax",
    "expected_two",
    "fixpoint_index",
    "game_outcome_points",
    "generate_tournament",
    "group_series",
    "heuristic_win_prob",
    "increment_variances",
    "k_for",
    "kendall_tau",
    "legacy_sqrt_update",
    "load_config",
    "make_players",
    "mean_game_value",
    "normal_prob",
    "null_win_prob",
    "opponent_factor",
    "parse_config",
    "parse_games",
    "percentile",
    "rank_recovery",
    "ranking",
    "replay",
    "seeger_score",
    "seeger_table",
    "serialize_games",
    "series_profile",
    "start_rating",
    "sweep",
    "timeseries",
    "update_series",
    "update_two",
    "von_stegen_points",
]
