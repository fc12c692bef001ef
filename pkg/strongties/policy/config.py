"""Distribution documents.

A document maps a section name to a distribution and its marriage ratio:

    china:
      weights: [0.418, 0.269, 0.17, 0.085, 0.039, 0.019]
      alpha: 0.92
"""

import yaml

from strongties.errors import ConfigError, DistributionError, InvalidMarriageRatio
from strongties.policy.builtin import NamedDistribution
from strongties.policy.dist import MarriageRatio, validate_dist


def dump_distributions(sections: dict[str, NamedDistribution]) -> str:
    """Serialize named distributions into a YAML document."""

    doc = {
        name: {"weights": list(named.dist.weights), "alpha": named.alpha.alpha}
        for name, named in sections.items()
    }
    return yaml.safe_dump(doc, sort_keys=True, default_flow_style=None)


def load_distributions(text: str) -> dict[str, NamedDistribution]:
    """Parse a YAML document into validated named distributions."""

    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"not a YAML document: {exc}") from exc

    if not isinstance(doc, dict):
        raise ConfigError("expected a mapping of named sections")

    sections = {}
    for name, section in doc.items():
        if not isinstance(section, dict) or "weights" not in section:
            raise ConfigError(f"section {name!r} has no weights")
        try:
            sections[str(name)] = NamedDistribution(
                validate_dist(section["weights"]),
                MarriageRatio(float(section.get("alpha", 1.0))),
            )
        except (DistributionError, InvalidMarriageRatio):
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"section {name!r}: {exc}") from exc

    return sections
