"""Offspring distribution of the strong-ties branching process."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.stats import binom

from strongties.errors import NegativeWeight, NotNormalized
from strongties.policy.dist import TOLERANCE, ChildCountDist, as_ratio, mean_children


@dataclass(frozen=True)
class DerivedChildDist:
    """Offspring distribution A of a couple node, with its mean mu.

    residual_folded is the mass added to a[0] to turn A into a proper
    distribution.
    """

    a: tuple[float, ...]
    mu: float
    residual_folded: float = 0.0

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.a)) or not np.isfinite(self.mu):
            raise NotNormalized("offspring weights and mean must be finite")
        if any(x < 0.0 for x in self.a):
            raise NegativeWeight("offspring weights must be non-negative")
        if abs(sum(self.a) - 1.0) > TOLERANCE:
            raise NotNormalized(f"offspring weights sum to {sum(self.a)!r}")

    @cached_property
    def array(self) -> np.ndarray:
        """Return offspring weights as a numpy array summing to one."""

        a = np.array(self.a, dtype=float)
        return a / a.sum()

    def pgf(self, s):
        """Evaluate the probability generating function at s."""
        return np.polynomial.polynomial.polyval(s, self.array)


def offspring_dist(weights) -> DerivedChildDist:
    """Wrap a plain offspring vector for use in a Galton-Watson process."""

    a = tuple(float(w) for w in weights)
    return DerivedChildDist(a, float(np.dot(np.arange(len(a)), a)))


def strong_ties_weights(f: ChildCountDist, alpha) -> np.ndarray:
    """Return the unfolded offspring weights A_j of a couple node.

    A couple reaches j new couples when j of the k - 1 siblings of a spouse
    from a family of k children are married:

        A_j = sum_{k > j} F_k * binom(k - 1, j) * alpha^j * (1 - alpha)^(k - 1 - j)

    The weights sum to 1 - F_0.
    """

    p = as_ratio(alpha).alpha
    n = len(f.weights)

    if n == 1:
        return np.zeros(1)

    k = np.arange(1, n)
    j = np.arange(n - 1)
    pmf = binom.pmf(j[None, :], k[:, None] - 1, p)

    return f.array[1:] @ pmf


def derive_child_dist(f: ChildCountDist, alpha) -> DerivedChildDist:
    """Return the offspring distribution A derived from F and alpha.

    The mass missing from A (equal to F_0) is folded into A_0, which leaves
    the mean untouched.
    """

    weights = strong_ties_weights(f, alpha)
    mu = float(np.dot(np.arange(len(weights)), weights))
    residual = max(0.0, 1.0 - float(weights.sum()))
    weights[0] += residual

    return DerivedChildDist(tuple(float(x) for x in weights), mu, residual)


def mu_closed_form(f: ChildCountDist, alpha) -> float:
    """Return mean offspring count alpha * (E[children] - 1 + F_0)."""
    return as_ratio(alpha).alpha * (mean_children(f) - 1.0 + f.weights[0])


def critical_alpha(f: ChildCountDist):
    """Return the marriage ratio at which mu equals one.

    Returns None when no ratio in [0, 1] makes the process supercritical.
    """

    slope = mean_children(f) - 1.0 + f.weights[0]
    if slope <= 1.0:
        return None

    return 1.0 / slope
