"""Error types shared across the allocation pipeline."""


class RBFairError(Exception):
    """Base class for allocation-engine errors."""


class DegeneratePriceError(RBFairError):
    """Raised when a shadow price of zero would be produced (all bids zero)."""


class ExhaustedBandwidthError(RBFairError):
    """Raised when every rounded candidate exceeds the available bandwidth.

    Carries the smallest candidate total so callers can report how far the
    rounding overshot the budget.
    """

    def __init__(self, smallest_total: float, bandwidth: float):
        self.smallest_total = smallest_total
        self.bandwidth = bandwidth
        super().__init__(
            f"no feasible integer allocation: smallest candidate total "
            f"{smallest_total:g} exceeds bandwidth {bandwidth:g}"
        )


class ScenarioError(RBFairError):
    """Raised when a scenario file cannot be parsed or fails validation."""
