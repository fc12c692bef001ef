"""Exceptions raised by strongties."""


class StrongTiesError(Exception):
    """Base class for all strongties errors."""


class DistributionError(StrongTiesError, ValueError):
    """Invalid child count distribution."""


class NegativeWeight(DistributionError):
    """Some weight of a distribution is negative."""


class NotNormalized(DistributionError):
    """Distribution weights do not sum to one."""


class ZeroSupport(DistributionError):
    """Distribution puts all its mass on zero children."""


class InvalidMarriageRatio(StrongTiesError, ValueError):
    """Marriage ratio outside of [0, 1]."""


class UnknownPolicy(StrongTiesError, ValueError):
    """Unknown policy or distribution name."""


class UnknownFormat(StrongTiesError, ValueError):
    """Unknown network export format."""


class ConfigError(StrongTiesError, ValueError):
    """Malformed configuration document."""


class NoConvergence(StrongTiesError, ArithmeticError):
    """Fixed point iteration hit its iteration cap."""


class PopulationDied(StrongTiesError):
    """Population became empty before the requested horizon.

    Results produced up to that point are kept in `partial`.
    """

    def __init__(self, generation: int, partial=None) -> None:
        super().__init__(f"population is empty at generation {generation}")
        self.generation = generation
        self.partial = list(partial or [])
