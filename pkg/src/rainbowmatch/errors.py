"""Exception types shared across the package."""


class RainbowError(Exception):
    """Base class for all package-specific errors."""


class NotCliqueUnion(RainbowError):
    """A colour class expected to be a disjoint union of cliques is not."""


class NotTwoFactorized(RainbowError):
    """The instance does not have 2-factor colour classes."""


class PoolTooSmall(RainbowError):
    """The vertex pool cannot host a matching of the requested size."""


class GenerationStuck(RainbowError):
    """Rejection sampling exceeded its retry budget; parameters look infeasible."""


class ParameterViolation(RainbowError):
    """Generator parameters outside their admissible range."""


class CompletionFailed(RainbowError):
    """Greedy completion could not place a colour inside the sample."""

    def __init__(self, color: int):
        super().__init__(f"no disjoint edge available for color {color}")
        self.color = color


class HypothesisViolated(RainbowError):
    """The instance does not satisfy the preconditions of the matching expander."""


class AugmentationStalled(RainbowError):
    """The matching expander hit its iteration cap without reaching the target size."""
