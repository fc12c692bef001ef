"""Resolved command configurations."""

from dataclasses import asdict, dataclass, fields
from pathlib import Path

import yaml

from strongties.errors import ConfigError, UnknownPolicy
from strongties.math.sampling import new_seed
from strongties.policy.builtin import DistributionFactory, builtin_policy, resolve_distribution
from strongties.policy.dist import ChildCountDist, MarriageRatio


@dataclass(frozen=True)
class Inputs:
    """Distribution named on the command line, and its marriage ratio if known."""

    dist: ChildCountDist
    alpha: MarriageRatio | None


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved parameters of one command.

    Fields that do not apply to a command stay None and are left out of
    the echoed configuration.
    """

    command: str
    seed: int
    policy: str | None = None
    dist: str | None = None
    alpha: float | None = None
    mode: str | None = None
    n: int | None = None
    generations: int | None = None
    utilization: float | None = None
    runs: int | None = None
    max_levels: int | None = None
    max_nodes: int | None = None
    format: str | None = None
    out: str | None = None
    trajectories: bool | None = None

    def to_dict(self) -> dict:
        """Return the configuration without unset fields."""
        return {k: v for k, v in asdict(self).items() if v is not None}

    def inputs(self) -> Inputs:
        """Resolve the distribution and marriage ratio named by this config."""
        return resolve_inputs(self.policy, self.dist, self.alpha)


CONFIG_KEYS = {f.name for f in fields(ExperimentConfig)} - {"command"}

FIELD_TYPES = {
    "seed": int,
    "policy": str,
    "dist": str,
    "alpha": float,
    "mode": str,
    "n": int,
    "generations": int,
    "utilization": float,
    "runs": int,
    "max_levels": int,
    "max_nodes": int,
    "format": str,
    "out": str,
    "trajectories": bool,
}


def _coerce(key: str, value):
    """Return value converted to the type of config field `key`.

    YAML reads weight lists and numeric-looking names as numbers, so numbers
    and lists of numbers are accepted where a string is expected.
    """

    kind = FIELD_TYPES[key]
    number = isinstance(value, (int, float)) and not isinstance(value, bool)

    if kind is bool and isinstance(value, bool):
        return value
    if kind is int and isinstance(value, int) and not isinstance(value, bool):
        return value
    if kind is int and isinstance(value, float) and value.is_integer():
        return int(value)
    if kind is float and number:
        return float(value)
    if kind is str:
        if isinstance(value, str) or number:
            return str(value)
        if isinstance(value, list) and value and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
        ):
            return ",".join(str(v) for v in value)

    raise ConfigError(f"{key} must be {kind.__name__}, got {value!r}")


def load_config_file(path) -> dict:
    """Read an experiment document (YAML mapping of option names)."""

    try:
        doc = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc

    if doc is None:
        return {}
    if not isinstance(doc, dict):
        raise ConfigError(f"config {path} is not a mapping")

    unknown = set(doc) - CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")

    return doc


def resolve_config(command: str, options: dict, file_options: dict | None = None,
                   defaults: dict | None = None) -> ExperimentConfig:
    """Merge defaults, file and command-line options, then fill in seed and paths.

    Command-line values that are not None override file values, which
    override defaults.
    """

    merged = dict(defaults or {})
    merged.update(file_options or {})
    merged.update({k: v for k, v in options.items() if v is not None and k in CONFIG_KEYS})

    merged = {k: v if v is None else _coerce(k, v) for k, v in merged.items()}

    if merged.get("seed") is None:
        merged["seed"] = new_seed()
    if not 0 <= merged["seed"] < 2**64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {merged['seed']}")
    if merged.get("out") is not None:
        merged["out"] = str(Path(merged["out"]).resolve())

    try:
        return ExperimentConfig(command=command, **merged)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def resolve_inputs(policy: str | None, dist: str | None, alpha: float | None) -> Inputs:
    """Resolve --policy / --dist / --alpha.

    Regional distributions bring their own marriage ratio, which an explicit
    alpha overrides.
    """

    if (policy is None) == (dist is None):
        raise ConfigError("exactly one of policy and dist is required")

    ratio = MarriageRatio(float(alpha)) if alpha is not None else None

    if policy is not None:
        return Inputs(builtin_policy(policy), ratio)

    try:
        named = DistributionFactory.get(dist)
    except UnknownPolicy:
        return Inputs(resolve_distribution(dist), ratio)

    return Inputs(named.dist, ratio or named.alpha)
