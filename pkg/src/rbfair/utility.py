"""Per-user satisfaction curves and the price-to-rate inversion.

Two families model application traffic:

* ``Sigmoidal(a, b)`` -- real-time traffic.  Normalised logistic curve,
  0 at rate 0, 0.5 at the inflection rate ``b``, saturating towards 1.
  ``a`` controls how sharply satisfaction switches on around ``b``.
* ``Logarithmic(k, r_max)`` -- delay-tolerant traffic.  ``log(1 + k*r)``
  scaled so that satisfaction reaches 1 at ``r_max``.

Both are strictly increasing with concave logarithm, so ``log_slope``
(the derivative of the log-curve) is positive and non-increasing, and
``inverse_slope`` can recover the unique rate at which the log-slope
equals a given price by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

# Shared per-user rate ceiling.  Rates are searched on [BRACKET_FLOOR, cap];
# the log-slope diverges at 0, so a price crossing always exists inside.
DEFAULT_RATE_CAP = 100.0
BRACKET_FLOOR = 1e-9

_BISECT_MAX_ITERS = 200


def _logaddexp(x: float, y: float) -> float:
    m = max(x, y)
    return m + math.log1p(math.exp(-abs(x - y)))


def _log_expm1(x: float) -> float:
    # log(e^x - 1); the direct form overflows past x ~ 709
    if x <= 690.0:
        return math.log(math.expm1(x))
    return x + math.log1p(-math.exp(-x))


@dataclass(frozen=True)
class Sigmoidal:
    """Real-time application curve: c * (1/(1 + e^{-a(r-b)}) - d).

    The constants c and d shift and rescale the logistic so the curve is
    exactly 0 at r=0 and tends to 1 as r grows.
    """

    a: float  # steepness, per bandwidth unit
    b: float  # inflection rate, bandwidth units

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"sigmoidal steepness a must be > 0, got {self.a}")
        if not self.b > 0:
            raise ValueError(f"sigmoidal inflection b must be > 0, got {self.b}")

    @property
    def c(self) -> float:
        # (1 + e^{ab}) / e^{ab} == 1 + e^{-ab}, overflow-free
        return 1.0 + math.exp(-self.a * self.b)

    @property
    def d(self) -> float:
        # 1 / (1 + e^{ab}) == e^{-ab} / (1 + e^{-ab})
        t = math.exp(-self.a * self.b)
        return t / (1.0 + t)

    def evaluate(self, r: float) -> float:
        """Satisfaction at rate r, in [0, 1]. 0 exactly at r=0."""
        if r < 0:
            raise ValueError(f"rate must be >= 0, got {r}")
        if r == 0:
            return 0.0
        # c*(sigmoid(a(r-b)) - d) == (e^{ar} - 1) / (e^{ar} + e^{ab});
        # dividing through by e^{ar} keeps every term bounded
        gap = self.a * (self.b - r)
        if gap > 700.0:
            return math.exp(self.log_evaluate(r))
        return -math.expm1(-self.a * r) / (1.0 + math.exp(gap))

    def log_evaluate(self, r: float) -> float:
        """log of evaluate(r), computed without underflow (-inf at r=0).

        log((e^{ar}-1)/(e^{ar}+e^{ab})) with the dominant exponents cancelled
        symbolically, so the value stays resolvable even deep into saturation
        where it is a tiny negative number.
        """
        if r < 0:
            raise ValueError(f"rate must be >= 0, got {r}")
        if r == 0:
            return float("-inf")
        ar = self.a * r
        ab = self.a * self.b
        if ar >= ab:
            return math.log1p(-math.exp(-ar)) - math.log1p(math.exp(ab - ar))
        return _log_expm1(ar) - ab - math.log1p(math.exp(ar - ab))

    def log_slope(self, r: float) -> float:
        """d/dr of log_evaluate: a*(1+e^{ab})*e^{ar} / ((e^{ar}-1)(e^{ar}+e^{ab}))."""
        if r <= 0:
            raise ValueError(f"rate must be > 0, got {r}")
        ar = self.a * r
        ab = self.a * self.b
        x = ar - ab
        # log(e^x + 1), overflow-free on both sides
        if x >= 0:
            log_denom = x + math.log1p(math.exp(-x))
        else:
            log_denom = math.log1p(math.exp(x))
        log_s = (
            math.log(self.a)
            + math.log1p(math.exp(-ab))
            - math.log1p(-math.exp(-ar))
            - log_denom
        )
        try:
            return math.exp(log_s)
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class Logarithmic:
    """Delay-tolerant application curve: log(1 + k*r) / log(1 + k*r_max)."""

    k: float      # growth rate, per bandwidth unit
    r_max: float  # rate achieving 100% satisfaction, bandwidth units

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"logarithmic growth k must be > 0, got {self.k}")
        if not self.r_max > 0:
            raise ValueError(f"logarithmic r_max must be > 0, got {self.r_max}")

    def evaluate(self, r: float) -> float:
        """Satisfaction at rate r; reaches 1.0 exactly at r_max."""
        if r < 0:
            raise ValueError(f"rate must be >= 0, got {r}")
        return math.log1p(self.k * r) / math.log1p(self.k * self.r_max)

    def log_evaluate(self, r: float) -> float:
        if r < 0:
            raise ValueError(f"rate must be >= 0, got {r}")
        if r == 0:
            return float("-inf")
        return math.log(math.log1p(self.k * r)) - math.log(math.log1p(self.k * self.r_max))

    def log_slope(self, r: float) -> float:
        """d/dr of log_evaluate: k / ((1 + k*r) * ln(1 + k*r))."""
        if r <= 0:
            raise ValueError(f"rate must be > 0, got {r}")
        t = math.log1p(self.k * r)
        return self.k / ((1.0 + self.k * r) * t)


UtilityFunction = Union[Sigmoidal, Logarithmic]


def inverse_slope(u: UtilityFunction, p: float, rate_cap: float = DEFAULT_RATE_CAP) -> float:
    """Rate at which u's log-slope equals the price p.

    This is the maximiser of ``log_evaluate(r) - p*r`` over (0, rate_cap].
    The log-slope is non-increasing and diverges at 0, so bisection on
    [BRACKET_FLOOR, rate_cap] is unconditionally safe; prices at or below
    the slope at the cap return the cap (rate ceiling).
    """
    if not p > 0:
        raise ValueError(f"price must be > 0, got {p}")
    lo = BRACKET_FLOOR
    hi = rate_cap
    if u.log_slope(hi) >= p:
        return hi
    if u.log_slope(lo) <= p:  # price above the slope at the floor; cannot bracket
        return lo
    for _ in range(_BISECT_MAX_ITERS):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:  # float spacing exhausted
            break
        if u.log_slope(mid) > p:
            lo = mid
        else:
            hi = mid
        # absolute width for ordinary rates, relative width for tiny ones so
        # the price round-trip stays accurate where the slope behaves like 1/r
        if hi - lo <= 1e-9 * min(1.0, lo):
            break
    return 0.5 * (lo + hi)
