"""Ramsey-length bound calculators.

Lower bounds come from the first-moment method: when the mean occurrence count
over a population is below 1, some member has none, so avoiding words exist up
to (roughly) the length where the mean crosses 1.  The asymptotic thresholds
drop the vanishing corrections and are heuristic; exact_avoidance_threshold is
the rigorous counterpart built on exact series coefficients.  Upper bounds for
the Zimin patterns use the classical doubling recursion and its tetration
envelope, with graceful overflow marking past a configurable digit cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .asymptotics import MeanKind, abelian_constant, DEFAULT_ABELIAN_EPS
from .errors import BudgetExceededError
from .genfunc import ogf_build
from .oracle import CountKind, population_size
from .words import Pattern, PatternSignature, signature

DEFAULT_DIGIT_CAP = 1_000_000
DEFAULT_SERIES_BUDGET = 2_000


@dataclass(frozen=True)
class BoundValue:
    """Either an exact nonnegative integer or a marker that it outgrew the digit cap."""

    exact: int | None
    overflow_cap: int | None

    @classmethod
    def of(cls, value: int) -> "BoundValue":
        return cls(exact=value, overflow_cap=None)

    @classmethod
    def overflow(cls, cap: int) -> "BoundValue":
        return cls(exact=None, overflow_cap=cap)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def less_than(self, other: "BoundValue") -> bool:
        """Decidable order: an overflowed value exceeds anything below its cap."""
        if self.is_exact and other.is_exact:
            return self.exact < other.exact
        if self.is_exact and not other.is_exact:
            if self.exact < 10 ** other.overflow_cap:
                return True
            raise ValueError("comparison undecidable across the overflow cap")
        if not self.is_exact and other.is_exact:
            if other.exact < 10 ** self.overflow_cap:
                return False
            raise ValueError("comparison undecidable across the overflow cap")
        raise ValueError("two overflowed values cannot be ordered")

    def __str__(self):
        if self.is_exact:
            return str(self.exact)
        return f"overflow(>{self.overflow_cap} digits)"


def _guarded_power(base: int, exponent: int, cap: int) -> int | None:
    """base**exponent if its digit count can stay within cap, else None."""
    if base == 1:
        return 1
    est = exponent * math.log10(base)
    if est > cap + 16:
        return None
    value = base ** exponent
    if value >= 10 ** cap:
        return None
    return value


def double_uparrow(x: int, y: int, cap: int = DEFAULT_DIGIT_CAP) -> BoundValue:
    """x double-up-arrow y (the power tower of y copies of x), digit-capped."""
    if x < 1 or y < 0:
        raise ValueError("double up-arrow needs x >= 1 and y >= 0")
    if cap < 1:
        raise ValueError("digit cap must be >= 1")
    value = 1
    for _ in range(y):
        value = _guarded_power(x, value, cap)
        if value is None:
            return BoundValue.overflow(cap)
    return BoundValue.of(value)


class ZiminUpperMode:
    RECURSIVE = "recursive"
    TETRATION = "tetration"


def zimin_upper(m: int, i: int, mode: str = ZiminUpperMode.RECURSIVE,
                cap: int = DEFAULT_DIGIT_CAP) -> BoundValue:
    """Upper bound on the forcing length for the i-th Zimin pattern over m letters.

    recursive: iterate L -> m^L (L + 1) + L from the exact base L = 2m + 1.
    tetration: the far looser envelope m^^(2i - 1).
    """
    if m < 2 or i < 2:
        raise ValueError("zimin upper bounds need m >= 2 and i >= 2")
    if mode == ZiminUpperMode.TETRATION:
        return double_uparrow(m, 2 * i - 1, cap)
    if mode != ZiminUpperMode.RECURSIVE:
        raise ValueError(f"unknown mode {mode!r}")
    bound = 2 * m + 1
    for _ in range(i - 2):
        power = _guarded_power(m, bound, cap)
        if power is None:
            return BoundValue.overflow(cap)
        bound = power * (bound + 1) + bound
        if bound >= 10 ** cap:
            return BoundValue.overflow(cap)
    return BoundValue.of(bound)


def zimin_signature(i: int) -> PatternSignature:
    """Signature of the i-th Zimin pattern without materializing its 2^i - 1 symbols."""
    if i < 1:
        raise ValueError("zimin index must be >= 1")
    return PatternSignature(r=i, s=1, mults=tuple(2 ** j for j in range(i)))


def _ln_factor(kind: MeanKind, m: int, k: int, d: Fraction | None, eps: float) -> float:
    """ln of the avoidance-threshold factor for one repeated variable, stably."""
    if kind is MeanKind.FULL:
        # ln(m^(k-1) - 1)
        if m < 2:
            raise ValueError("full-word thresholds need at least two letters")
        ln_main = (k - 1) * math.log(m)
        return ln_main + math.log1p(-math.exp(-ln_main))
    if kind in (MeanKind.PARTIAL, MeanKind.STRICT):
        # ln((m+1)^k / (m 2^k - m + 1) - 1)
        ln_a = k * math.log(m + 1)
        ln_b = math.log(m) + k * math.log(2)
        if k < 1020:  # below this the correction is representable at all
            ln_b += math.log1p((1 - m) / (m * 2 ** k))
        return ln_a - ln_b + math.log1p(-math.exp(ln_b - ln_a))
    if kind is MeanKind.DENSITY:
        # ln(m^(k-1) / ([1+d(m-1)]^k - (1-1/m)(md)^k) - 1)
        df = float(d)
        ln_fill = k * math.log1p(df * (m - 1))
        ratio = (1 - 1 / m) * math.exp(k * (math.log(m * df) - math.log1p(df * (m - 1))))
        ln_den = ln_fill + math.log1p(-ratio)
        ln_num = (k - 1) * math.log(m)
        if ln_den >= ln_num:
            return -math.inf
        return ln_num - ln_den + math.log1p(-math.exp(ln_den - ln_num))
    if kind is MeanKind.ABELIAN:
        return -math.log(abelian_constant(m, k, eps).value)
    raise ValueError(f"unsupported kind {kind}")


def _threshold_from_signature(kind: MeanKind, sig: PatternSignature, m: int,
                              d: Fraction | None, eps: float) -> float:
    if kind is MeanKind.ABELIAN and m < 4:
        raise ValueError("abelian thresholds need an alphabet of at least 4 letters")
    if kind is MeanKind.DENSITY and (d is None or not 0 < d < 1):
        raise ValueError("hole density d must lie strictly between 0 and 1")
    ln_total = math.lgamma(sig.s + 2)  # ln((s+1)!)
    for k in sig.repeated:
        ln_total += _ln_factor(kind, m, k, d, eps)
    try:
        return math.exp(ln_total / (sig.s + 1))
    except OverflowError:
        return math.inf


def avoidance_threshold(kind: MeanKind, p: Pattern, m: int,
                        d: Fraction | None = None,
                        eps: float = DEFAULT_ABELIAN_EPS) -> float:
    """First-moment length bound: below it (up to the dropped vanishing factor)
    an avoiding word of the respective kind exists.

    The bound is [(s+1)! * product of per-variable factors]^(1/(s+1)); with no
    repeated variable the product is empty and the trivial bound remains.
    """
    return _threshold_from_signature(kind, signature(p), m, d, eps)


def zimin_lower(kind: MeanKind, m: int, i: int, d: Fraction | None = None,
                eps: float = DEFAULT_ABELIAN_EPS) -> float:
    """First-moment lower bound on the Zimin forcing length (leading term).

    Supports the full-word, abelian, and hole-density variants; the structural
    signature is used, so i may be far too large for the pattern to materialize.
    """
    if kind not in (MeanKind.FULL, MeanKind.ABELIAN, MeanKind.DENSITY):
        raise ValueError("zimin lower bounds cover the full, abelian, and density kinds")
    if i < 2:
        raise ValueError("zimin lower bounds need i >= 2")
    return _threshold_from_signature(kind, zimin_signature(i), m, d, eps)


def exact_avoidance_threshold(kind: CountKind, p: Pattern, m: int, n_max: int,
                              series_budget: int = DEFAULT_SERIES_BUDGET) -> int:
    """Largest n <= n_max with exact mean occurrence count < 1 for every n' <= n.

    Occurrence counts are integers, so a mean below 1 guarantees an avoiding
    object of that length; the coefficients come from the exact series and the
    populations are counted in closed form, making this bound rigorous.
    """
    if kind not in (CountKind.FULL, CountKind.ABELIAN, CountKind.PARTIAL_COLLAPSED):
        raise ValueError("exact thresholds cover FULL, ABELIAN, and PARTIAL_COLLAPSED")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > series_budget:
        raise BudgetExceededError(
            f"series order {n_max} exceeds the budget of {series_budget}",
            needed=n_max, budget=series_budget)
    series = ogf_build(kind, p, m, n_max)
    for n in range(1, n_max + 1):
        mean = Fraction(series.coeff(n)) / population_size(kind, n, m)
        if mean >= 1:
            return n - 1
    return n_max
