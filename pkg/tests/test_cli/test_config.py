"""Test strongties.cli.config module."""

import pytest

from strongties.cli.config import load_config_file, resolve_config, resolve_inputs
from strongties.errors import ConfigError


def test_resolve_config_precedence():
    """Command line beats file, file beats defaults."""

    cfg = resolve_config(
        "analyze",
        {"alpha": 0.5, "policy": None, "seed": 3},
        {"alpha": 0.9, "policy": "2C"},
        {"runs": 0, "alpha": 0.1},
    )

    assert cfg.alpha == 0.5
    assert cfg.policy == "2C"
    assert cfg.runs == 0
    assert cfg.seed == 3


def test_resolve_config_coerces_yaml_values():
    """Numbers read where names are expected become strings."""

    cfg = resolve_config("gw", {"seed": 1}, {"dist": 1.0, "runs": 10.0, "alpha": 1})

    assert cfg.dist == "1.0"
    assert cfg.runs == 10
    assert isinstance(cfg.runs, int)
    assert cfg.alpha == 1.0
    assert isinstance(cfg.alpha, float)


def test_resolve_config_joins_weight_lists():
    """A YAML list of weights reads as an inline distribution."""

    cfg = resolve_config("analyze", {"seed": 1}, {"dist": [0.5, 0, 0.5]})

    assert cfg.dist == "0.5,0,0.5"
    assert resolve_inputs(None, cfg.dist, 0.9).dist.weights == (0.5, 0.0, 0.5)


def test_resolve_config_keeps_large_seeds():
    """Seeds up to 2**64 - 1 survive unchanged."""

    assert resolve_config("analyze", {"seed": 2**64 - 1}).seed == 2**64 - 1


@pytest.mark.parametrize("file_options", [
    {"runs": "ten"},
    {"runs": 2.5},
    {"runs": True},
    {"alpha": [0.9]},
    {"alpha": "high"},
    {"policy": {"name": "2C"}},
    {"dist": []},
    {"trajectories": "yes"},
    {"seed": -1},
    {"seed": 2**64},
])
def test_resolve_config_rejects_mistyped_values(file_options):
    """Values of the wrong type are configuration errors."""

    with pytest.raises(ConfigError):
        resolve_config("gw", {}, file_options)


def test_load_config_file(tmp_path):
    """Empty documents are empty, unknown keys and non-mappings are rejected."""

    path = tmp_path / "c.yaml"

    path.write_text("")
    assert load_config_file(path) == {}

    path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        load_config_file(path)

    path.write_text("speed: 3\n")
    with pytest.raises(ConfigError):
        load_config_file(path)

    with pytest.raises(ConfigError):
        load_config_file(tmp_path / "missing.yaml")


def test_resolve_inputs():
    """Exactly one of policy and dist; regions bring their ratio."""

    assert resolve_inputs(None, "india", None).alpha.alpha == pytest.approx(0.92)
    assert resolve_inputs(None, "india", 0.5).alpha.alpha == 0.5
    assert resolve_inputs("1C", None, None).alpha is None

    with pytest.raises(ConfigError):
        resolve_inputs(None, None, 0.9)
    with pytest.raises(ConfigError):
        resolve_inputs("1C", "china", 0.9)
