"""Criticality classification and extinction probability."""

from dataclasses import dataclass
from enum import IntEnum

from scipy.optimize import fixed_point

from strongties.branching.derived import DerivedChildDist
from strongties.errors import NoConvergence

MU_TOLERANCE = 1e-12
EXTINCTION_XTOL = 1e-10
EXTINCTION_MAXITER = 10**6


class CriticalityClass(IntEnum):
    """Regimes of a branching process."""

    SUBCRITICAL = -1
    CRITICAL = 0
    SUPERCRITICAL = 1


@dataclass(frozen=True)
class Criticality:
    """Criticality of an offspring distribution.

    degenerate marks the deterministic chain (every node has exactly one
    child), which neither dies out nor grows.
    """

    cls: CriticalityClass
    mu: float
    degenerate: bool = False

    @property
    def survives(self) -> bool:
        """Check if the process survives forever with positive probability."""
        return self.cls == CriticalityClass.SUPERCRITICAL


def classify(dist: DerivedChildDist) -> Criticality:
    """Classify an offspring distribution by its mean."""

    a1 = dist.a[1] if len(dist.a) > 1 else 0.0

    if abs(a1 - 1.0) <= MU_TOLERANCE:
        return Criticality(CriticalityClass.SUPERCRITICAL, dist.mu, degenerate=True)
    if abs(dist.mu - 1.0) <= MU_TOLERANCE:
        return Criticality(CriticalityClass.CRITICAL, dist.mu)
    if dist.mu < 1.0:
        return Criticality(CriticalityClass.SUBCRITICAL, dist.mu)

    return Criticality(CriticalityClass.SUPERCRITICAL, dist.mu)


def extinction_probability(dist: DerivedChildDist) -> float:
    """Return the probability that the process started from one node dies out.

    This is the smallest root of s = pgf(s) in [0, 1], reached by iterating
    the generating function from s = 0.
    """

    if not classify(dist).survives:
        return 1.0

    try:
        q = fixed_point(
            dist.pgf, 0.0, xtol=EXTINCTION_XTOL, maxiter=EXTINCTION_MAXITER, method="iteration"
        )
    except RuntimeError as exc:
        raise NoConvergence(str(exc)) from exc

    return float(q)
