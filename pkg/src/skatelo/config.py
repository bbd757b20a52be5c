"""INI configuration files for the engine.

Recognised sections:

  [elo]                engine knobs (K policy, start policy, switches, clipping)
  [normalprob]         normal winning percents per contract type
  [grand], [suit]      feature-key -> win percent estimator tables
  [null_suit]          per-suit holding pattern -> win percent
  [heuristic_weights]  fallback logistic weights

Unknown sections or keys are errors, not warnings: a typo must not
silently fall back to a default.  Precedence is command line over file
over built-in defaults; this module only handles the file layer.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, fields, replace

from .chance import DEFAULT_NORMAL_PROB
from .elo import AverageStart, EloConfig, FixedK, FixedStart, StepK
from .errors import ConfigError, DomainError
from .handstrength import EstimatorTable, HandFeatures, HeuristicWeights, JackGroup, canonical_key

_ELO_KEYS = {
    "k",
    "k_start",
    "k_end",
    "k_decay_after",
    "start",
    "start_average_n",
    "chance_hand",
    "chance_flat",
    "opponent_factor",
    "clip_lo",
    "clip_hi",
    "mean_game_value",
    "rating_floor",
}

_NORMALPROB_KEYS = {
    "suit": ("DIAMONDS", "HEARTS", "SPADES", "CLUBS"),
    "grand": ("GRAND",),
    "null": ("NULL",),
    "null_hand": ("NULL_HAND",),
    "null_ouvert": ("NULL_OUVERT",),
    "null_hand_ouvert": ("NULL_HAND_OUVERT",),
}

_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


@dataclass(frozen=True)
class EngineSettings:
    """Everything a replay needs: engine knobs plus estimator tables."""

    elo: EloConfig = field(default_factory=EloConfig)
    tables: EstimatorTable = field(default_factory=EstimatorTable)


def load_config(path: str) -> EngineSettings:
    """Read and validate a configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text, source=path)


def parse_config(text: str, source: str = "<config>") -> EngineSettings:
    """Parse configuration text; ``source`` names the file in errors."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keys are case-sensitive
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from exc

    known = {"elo", "normalprob", "grand", "suit", "null_suit", "heuristic_weights"}
    for section in parser.sections():
        if section not in known:
            raise ConfigError(f"{source}: unknown section [{section}]")

    elo = _parse_elo(parser, source)
    if parser.has_section("normalprob"):
        elo = replace(elo, normal_prob=_parse_normalprob(parser, source))
    tables = _parse_tables(parser, source)
    return EngineSettings(elo=elo, tables=tables)


def _fail(source: str, section: str, key: str, problem: str) -> ConfigError:
    return ConfigError(f"{source}: [{section}] {key}: {problem}")


def _get_float(parser, source: str, section: str, key: str) -> float:
    raw = parser.get(section, key)
    try:
        return float(raw)
    except ValueError:
        raise _fail(source, section, key, f"not a number: {raw!r}") from None


def _get_int(parser, source: str, section: str, key: str) -> int:
    raw = parser.get(section, key)
    try:
        return int(raw)
    except ValueError:
        raise _fail(source, section, key, f"not an integer: {raw!r}") from None


def _get_bool(parser, source: str, section: str, key: str) -> bool:
    raw = parser.get(section, key).strip().lower()
    if raw in _TRUE_WORDS:
        return True
    if raw in _FALSE_WORDS:
        return False
    raise _fail(source, section, key, f"not a boolean: {raw!r}")


def _parse_elo(parser, source: str) -> EloConfig:
    config = EloConfig()
    if not parser.has_section("elo"):
        return config
    section = parser["elo"]
    unknown = set(section) - _ELO_KEYS
    if unknown:
        raise ConfigError(f"{source}: [elo] unknown keys: {', '.join(sorted(unknown))}")

    step_keys = [k for k in ("k_start", "k_end", "k_decay_after") if k in section]
    if step_keys:
        if "k" in section:
            raise ConfigError(f"{source}: [elo] give either k or the k_start/k_end schedule")
        if len(step_keys) != 3:
            raise ConfigError(
                f"{source}: [elo] a K schedule needs k_start, k_end and k_decay_after"
            )
        try:
            k_policy = StepK(
                k_start=_get_float(parser, source, "elo", "k_start"),
                k_end=_get_float(parser, source, "elo", "k_end"),
                decay_after=_get_int(parser, source, "elo", "k_decay_after"),
            )
        except DomainError as exc:
            raise ConfigError(f"{source}: [elo] {exc}") from exc
        config = replace(config, k_policy=k_policy)
    elif "k" in section:
        try:
            config = replace(config, k_policy=FixedK(_get_float(parser, source, "elo", "k")))
        except DomainError as exc:
            raise ConfigError(f"{source}: [elo] k: {exc}") from exc

    if "start_average_n" in section:
        if "start" in section:
            raise ConfigError(f"{source}: [elo] give either start or start_average_n")
        try:
            config = replace(
                config,
                start_policy=AverageStart(_get_int(parser, source, "elo", "start_average_n")),
            )
        except DomainError as exc:
            raise ConfigError(f"{source}: [elo] start_average_n: {exc}") from exc
    elif "start" in section:
        try:
            config = replace(
                config, start_policy=FixedStart(_get_float(parser, source, "elo", "start"))
            )
        except DomainError as exc:
            raise ConfigError(f"{source}: [elo] start: {exc}") from exc

    for key in ("chance_hand", "chance_flat", "opponent_factor"):
        if key in section:
            config = replace(config, **{key: _get_bool(parser, source, "elo", key)})
    scalars = {}
    for key in ("clip_lo", "clip_hi", "mean_game_value", "rating_floor"):
        if key in section:
            scalars[key] = _get_float(parser, source, "elo", key)
    if scalars:
        try:
            config = replace(config, **scalars)
        except DomainError as exc:
            raise ConfigError(f"{source}: [elo] {exc}") from exc
    return config


def _parse_normalprob(parser, source: str) -> dict:
    from .model import GameType

    table = dict(DEFAULT_NORMAL_PROB)
    for key in parser["normalprob"]:
        if key not in _NORMALPROB_KEYS:
            raise _fail(source, "normalprob", key, "unknown contract type")
        pct = _get_float(parser, source, "normalprob", key)
        if not 0.0 < pct <= 100.0:
            raise _fail(source, "normalprob", key, f"percent out of (0, 100]: {pct}")
        for type_name in _NORMALPROB_KEYS[key]:
            table[GameType[type_name]] = pct
    return table


def _parse_feature_key(source: str, section: str, key: str) -> str:
    parts = [p.strip() for p in key.split(",")]
    if len(parts) != 8:
        raise _fail(source, section, key, f"feature keys have 8 values, got {len(parts)}")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise _fail(source, section, key, "feature values must be integers") from None
    try:
        features = HandFeatures(
            free_suits=numbers[0],
            skat_value_group=numbers[1],
            bid_group=numbers[2],
            declarer_position=numbers[3],
            trump_length=numbers[4],
            high_cards=numbers[5],
            jack_group=JackGroup(numbers[6]),
            lost_cards=numbers[7],
        )
    except (DomainError, ValueError) as exc:
        raise _fail(source, section, key, str(exc)) from exc
    return canonical_key(features)


def _parse_tables(parser, source: str) -> EstimatorTable:
    grand: dict[str, float] = {}
    suit: dict[str, float] = {}
    null_suit: dict[str, float] = {}
    for section, table in (("grand", grand), ("suit", suit)):
        if not parser.has_section(section):
            continue
        for key in parser[section]:
            pct = _get_float(parser, source, section, key)
            if not 0.0 <= pct <= 100.0:
                raise _fail(source, section, key, f"percent out of [0, 100]: {pct}")
            table[_parse_feature_key(source, section, key)] = pct
    if parser.has_section("null_suit"):
        for key in parser["null_suit"]:
            pct = _get_float(parser, source, "null_suit", key)
            if not 0.0 <= pct <= 100.0:
                raise _fail(source, "null_suit", key, f"percent out of [0, 100]: {pct}")
            null_suit[key] = pct

    weights = HeuristicWeights()
    if parser.has_section("heuristic_weights"):
        weight_names = {f.name for f in fields(HeuristicWeights)}
        overrides = {}
        for key in parser["heuristic_weights"]:
            if key not in weight_names:
                raise _fail(source, "heuristic_weights", key, "unknown weight")
            overrides[key] = _get_float(parser, source, "heuristic_weights", key)
        try:
            weights = replace(weights, **overrides)
        except DomainError as exc:
            raise ConfigError(f"{source}: [heuristic_weights] {exc}") from exc

    return EstimatorTable(grand=grand, suit=suit, null_suit=null_suit, weights=weights)
