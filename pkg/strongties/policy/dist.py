"""Child count distributions, marriage ratios and compliance."""

from dataclasses import dataclass
from functools import cached_property
from numbers import Real

import numpy as np

from strongties.errors import InvalidMarriageRatio, NegativeWeight, NotNormalized
from strongties.math.sampling import cumulative, draw

TOLERANCE = 1e-9


@dataclass(frozen=True)
class ChildCountDist:
    """Probability vector over the number of children of a family.

    weights[i] is the fraction of families with i children. The same type
    holds a family size distribution F and a policy vector P.
    """

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.weights) == 0:
            raise NotNormalized("empty weight vector")

        for i, w in enumerate(self.weights):
            if not np.isfinite(w):
                raise NotNormalized(f"weight {i} is not finite: {w}")
            if w < 0.0:
                raise NegativeWeight(f"weight {i} is negative: {w}")

        total = sum(self.weights)
        if abs(total - 1.0) > TOLERANCE:
            raise NotNormalized(f"weights sum to {total!r}, not 1")

    @property
    def max_children(self) -> int:
        """Return the largest child count represented (trailing zeros included)."""
        return len(self.weights) - 1

    @cached_property
    def array(self) -> np.ndarray:
        """Return weights as a numpy array."""
        return np.array(self.weights, dtype=float)

    @cached_property
    def cdf(self) -> np.ndarray:
        """Return cumulative weights used for inverse-CDF sampling."""
        return cumulative(self.weights)

    def padded(self, length: int) -> np.ndarray:
        """Return weights zero-padded to `length`."""

        out = np.zeros(max(length, len(self.weights)))
        out[: len(self.weights)] = self.weights
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(f"{w:g}" for w in self.weights) + ")"


@dataclass(frozen=True)
class MarriageRatio:
    """Married women divided by total women in a generation."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidMarriageRatio(f"alpha must lie in [0, 1], got {self.alpha}")

    def __float__(self) -> float:
        return float(self.alpha)


def as_ratio(alpha) -> MarriageRatio:
    """Coerce a real number or MarriageRatio into a MarriageRatio."""

    if isinstance(alpha, MarriageRatio):
        return alpha
    if isinstance(alpha, Real):
        return MarriageRatio(float(alpha))

    raise InvalidMarriageRatio(f"not a marriage ratio: {alpha!r}")


def validate_dist(weights) -> ChildCountDist:
    """Validate a weight sequence and return it as a distribution."""
    return ChildCountDist(tuple(float(w) for w in weights))


def check_compliance(actual: ChildCountDist, policy: ChildCountDist) -> bool:
    """Check that `actual` complies with `policy`.

    A family size distribution complies with a policy when each of its prefix
    sums dominates the corresponding prefix sum of the policy, i.e. families
    never have more children than the policy allows in aggregate.
    """

    n = max(len(actual.weights), len(policy.weights))
    lhs = np.cumsum(actual.padded(n))
    rhs = np.cumsum(policy.padded(n))

    return bool(np.all(lhs >= rhs - TOLERANCE))


def sample_quota(policy: ChildCountDist, rng: np.random.Generator) -> int:
    """Draw the number of children K a family is allowed under `policy`."""
    return draw(policy.cdf, rng)


def mean_children(dist: ChildCountDist) -> float:
    """Return the expected number of children."""
    return float(np.dot(np.arange(len(dist.weights)), dist.array))


def expected_population_ratio(policy: ChildCountDist, alpha) -> float:
    """Return expected size of the next generation relative to the current one.

    Assumes an even sex split and that every family uses its full quota, so
    alpha * n / 2 couples have mean_children(policy) children each.
    """
    return as_ratio(alpha).alpha * mean_children(policy) / 2.0


def expand_tail(dist: ChildCountDist, upto: int) -> ChildCountDist:
    """Read the last bucket as "max_children or more" and spread it up to `upto`.

    The mass of the last bucket is split evenly over child counts
    max_children..upto.
    """

    last = dist.max_children
    if upto < last:
        raise ValueError(f"upto={upto} is below max_children={last}")

    weights = list(dist.weights[:-1])
    share = dist.weights[-1] / (upto - last + 1)
    weights.extend([share] * (upto - last + 1))

    return validate_dist(weights)
