"""Configuration file tests."""

import pytest

from skatelo.config import EngineSettings, load_config, parse_config
from skatelo.elo import AverageStart, FixedK, FixedStart, StepK
from skatelo.errors import ConfigError
from skatelo.model import GameType

FULL_EXAMPLE = """
[elo]
k = 0.04
start = 1000
chance_hand = yes
chance_flat = no
opponent_factor = off
clip_lo = 0.6
clip_hi = 1.8
mean_game_value = 40.5
rating_floor = 2

[normalprob]
suit = 81.0
grand = 92.0

[grand]
0,0,0,0,2,4,5,1 = 96.5
1, 2, 0, 1, 2, 3, 3, 2 = 71.0

[suit]
0,0,0,0,5,2,3,1 = 80.0

[null_suit]
7 = 99.0
789 = 93.5

[heuristic_weights]
trump_length = 0.4
null_fallback = 90.0
"""


class TestParseConfig:
    def test_full_example(self):
        settings = parse_config(FULL_EXAMPLE)
        elo = settings.elo
        assert elo.k_policy == FixedK(0.04)
        assert elo.start_policy == FixedStart(1000.0)
        assert elo.chance_hand and not elo.chance_flat and not elo.opponent_factor
        assert (elo.clip_lo, elo.clip_hi) == (0.6, 1.8)
        assert elo.mean_game_value == 40.5
        assert elo.rating_floor == 2.0

    def test_normalprob_overrides(self):
        settings = parse_config(FULL_EXAMPLE)
        table = settings.elo.normal_prob
        assert table[GameType.CLUBS] == 81.0
        assert table[GameType.DIAMONDS] == 81.0
        assert table[GameType.GRAND] == 92.0
        # untouched entries keep their defaults
        assert table[GameType.NULL] == 62.0

    def test_estimator_tables(self):
        tables = parse_config(FULL_EXAMPLE).tables
        assert tables.grand["0,0,0,0,2,4,5,1"] == 96.5
        # keys are normalised: internal spaces do not matter
        assert tables.grand["1,2,0,1,2,3,3,2"] == 71.0
        assert tables.suit["0,0,0,0,5,2,3,1"] == 80.0
        assert tables.null_suit == {"7": 99.0, "789": 93.5}
        assert tables.weights.trump_length == 0.4
        assert tables.weights.null_fallback == 90.0
        # unmentioned weights keep their defaults
        assert tables.weights.lost_cards == -0.45

    def test_empty_config_is_all_defaults(self):
        settings = parse_config("")
        assert settings == EngineSettings()
        assert settings.elo.k_policy == FixedK(0.02)
        assert settings.elo.normal_prob is None

    def test_step_schedule(self):
        settings = parse_config(
            "[elo]\nk_start = 0.08\nk_end = 0.02\nk_decay_after = 50\n"
        )
        assert settings.elo.k_policy == StepK(k_start=0.08, k_end=0.02, decay_after=50)

    def test_average_start(self):
        settings = parse_config("[elo]\nstart_average_n = 5\n")
        assert settings.elo.start_policy == AverageStart(5)


class TestConfigErrors:
    def test_unknown_section(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_config("[ratings]\nk = 0.02\n")

    def test_unknown_elo_key(self):
        with pytest.raises(ConfigError, match="unknown keys: kay"):
            parse_config("[elo]\nkay = 0.02\n")

    def test_unknown_normalprob_key(self):
        with pytest.raises(ConfigError, match="unknown contract"):
            parse_config("[normalprob]\nramsch = 50.0\n")

    def test_unknown_weight(self):
        with pytest.raises(ConfigError, match="unknown weight"):
            parse_config("[heuristic_weights]\ncharm = 1.0\n")

    def test_bad_boolean(self):
        with pytest.raises(ConfigError, match="not a boolean"):
            parse_config("[elo]\nchance_hand = maybe\n")

    def test_bad_number(self):
        with pytest.raises(ConfigError, match="not a number"):
            parse_config("[elo]\nk = fast\n")

    def test_k_out_of_range(self):
        with pytest.raises(ConfigError, match="k"):
            parse_config("[elo]\nk = 1.5\n")

    def test_incomplete_step_schedule(self):
        with pytest.raises(ConfigError, match="schedule"):
            parse_config("[elo]\nk_start = 0.08\n")

    def test_k_and_schedule_are_exclusive(self):
        with pytest.raises(ConfigError, match="either k or"):
            parse_config("[elo]\nk = 0.02\nk_start = 0.08\nk_end = 0.02\nk_decay_after = 9\n")

    def test_start_and_average_are_exclusive(self):
        with pytest.raises(ConfigError, match="either start or"):
            parse_config("[elo]\nstart = 800\nstart_average_n = 3\n")

    def test_percent_out_of_range(self):
        with pytest.raises(ConfigError, match="percent"):
            parse_config("[normalprob]\ngrand = 140\n")
        with pytest.raises(ConfigError, match="percent"):
            parse_config("[suit]\n0,0,0,0,0,0,0,0 = -3\n")

    def test_short_feature_key(self):
        with pytest.raises(ConfigError, match="8 values"):
            parse_config("[grand]\n1,2,3 = 50\n")

    def test_feature_value_out_of_bounds(self):
        with pytest.raises(ConfigError, match="trump_length"):
            parse_config("[suit]\n0,0,0,0,99,0,0,0 = 50\n")

    def test_feature_value_not_integer(self):
        with pytest.raises(ConfigError, match="integers"):
            parse_config("[suit]\n0,0,0,0,x,0,0,0 = 50\n")

    def test_clip_bounds_cross_validated(self):
        with pytest.raises(ConfigError, match="clip"):
            parse_config("[elo]\nclip_lo = 1.4\nclip_hi = 1.2\n")


class TestLoadConfig:
    def test_round_trip_through_a_file(self, tmp_path):
        path = tmp_path / "engine.ini"
        path.write_text(FULL_EXAMPLE, encoding="utf-8")
        settings = load_config(str(path))
        assert settings.elo.k_policy == FixedK(0.04)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(str(tmp_path / "absent.ini"))

    def test_errors_name_the_file(self, tmp_path):
        path = tmp_path / "engine.ini"
        path.write_text("[elo]\nk = nope\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="engine.ini"):
            load_config(str(path))
