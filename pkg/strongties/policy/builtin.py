"""Built-in population control policies and family size distributions."""

from dataclasses import dataclass
from enum import Enum

from strongties.errors import UnknownPolicy
from strongties.policy.dist import ChildCountDist, MarriageRatio, validate_dist


class Policy(str, Enum):
    """Population control policies enumerator."""

    ONE_CHILD = "1C"
    ZERO_OR_TWO = "0/2C"
    TWO_CHILDREN = "2C"
    ZERO_OR_THREE = "0/3C"
    TWO_PLUS = "C++"


class Region(str, Enum):
    """Regions with a built-in family size distribution."""

    CHINA = "china"
    INDIA = "india"


@dataclass(frozen=True)
class NamedDistribution:
    """Family size distribution observed together with its marriage ratio."""

    dist: ChildCountDist
    alpha: MarriageRatio


# Last entry stands for "5 or more children" in the source data and is read as
# exactly 5 here; see expand_tail for the open-ended reading. The India
# marriage ratio is an estimate.
CHINA = NamedDistribution(
    validate_dist((0.418, 0.269, 0.17, 0.085, 0.039, 0.019)), MarriageRatio(0.92)
)
INDIA = NamedDistribution(
    validate_dist((0.126, 0.121, 0.199, 0.193, 0.141, 0.22)), MarriageRatio(0.92)
)


# pylint: disable=too-few-public-methods


class PolicyFactory:
    """Factory of built-in policy vectors."""

    FACTORY = {
        Policy.ONE_CHILD: (0.0, 1.0),
        Policy.ZERO_OR_TWO: (1 / 2, 0.0, 1 / 2),
        Policy.TWO_CHILDREN: (0.0, 0.0, 1.0),
        Policy.ZERO_OR_THREE: (1 / 3, 0.0, 0.0, 2 / 3),
        Policy.TWO_PLUS: (0.0, 0.0, 9 / 10, 1 / 10),
    }

    @classmethod
    def get(cls, name) -> ChildCountDist:
        """Return policy vector by name."""

        try:
            policy = Policy(name.upper() if isinstance(name, str) else name)
        except ValueError:
            raise UnknownPolicy(f"unknown policy: {name!r}") from None

        return validate_dist(cls.FACTORY[policy])


class DistributionFactory:
    """Factory of built-in regional family size distributions."""

    FACTORY = {
        Region.CHINA: CHINA,
        Region.INDIA: INDIA,
    }

    @classmethod
    def get(cls, name) -> NamedDistribution:
        """Return regional distribution by name."""

        try:
            region = Region(name.lower() if isinstance(name, str) else name)
        except ValueError:
            raise UnknownPolicy(f"unknown distribution: {name!r}") from None

        return cls.FACTORY[region]


# pylint: enable=too-few-public-methods


def builtin_policy(name) -> ChildCountDist:
    """Return built-in policy vector (1C, 0/2C, 2C, 0/3C or C++)."""
    return PolicyFactory.get(name)


def builtin_distribution(name) -> NamedDistribution:
    """Return built-in regional distribution (china or india)."""
    return DistributionFactory.get(name)


def resolve_distribution(text: str) -> ChildCountDist:
    """Resolve a distribution given by name or as comma-separated weights.

    Regional distributions are tried first, then policies, then an inline
    weight list such as "0.5,0,0.5".
    """

    name = text.strip()

    for factory in (DistributionFactory, PolicyFactory):
        try:
            found = factory.get(name)
        except UnknownPolicy:
            continue
        return found.dist if isinstance(found, NamedDistribution) else found

    try:
        weights = [float(w) for w in name.split(",")]
    except ValueError:
        raise UnknownPolicy(f"unknown policy or distribution: {text!r}") from None

    return validate_dist(weights)
