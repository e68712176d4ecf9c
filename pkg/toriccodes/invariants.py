"""Hilbert functions, regularity and the Hilbert series of the projective torus."""
import logging
from typing import List, Optional

from .codes import dimension
from .errors import BoundViolationError, DiscrepancyError, PreconditionError
from .geometry import ToricSet, is_complete_intersection
from .interfaces import HilbertProfile, HilbertSeriesCI, RegularityReport

logger = logging.getLogger(__name__)


def hilbert_profile(x: ToricSet, hard_stop: Optional[int] = None, cap: Optional[int] = None) -> HilbertProfile:
    """H_X(0), H_X(1), ... up to the first degree where H_X reaches |X|.

    The Hilbert function reaches |X| by degree |X| - 1 at the latest, which is
    the default stop; a smaller `hard_stop` that is not reached raises
    DiscrepancyError.
    """
    size = len(x)
    stop = size - 1 if hard_stop is None else hard_stop
    if stop < 0:
        raise PreconditionError(f"hard_stop must be nonnegative, got {stop}")
    values: List[int] = []
    for d in range(stop + 1):
        values.append(dimension(x, d, cap))
        if values[-1] == size:
            logger.debug("Hilbert profile of %r: %s", x, values)
            return HilbertProfile(q=x.field.q, s=x.s, values=values, regularity=d, degree=size)
    raise DiscrepancyError(
        f"Hilbert function did not reach |X|={size} by degree {stop}",
        {"q": x.field.q, "s": x.s, "values": values, "hard_stop": stop},
    )


def hilbert_numerator(profile: HilbertProfile) -> List[int]:
    """First differences h_i = H_X(i) - H_X(i-1), with h_0 = 1."""
    values = profile.values
    return [values[0]] + [b - a for a, b in zip(values, values[1:])]


def ci_hilbert_series(q: int, s: int) -> HilbertSeriesCI:
    """Numerator (1 + t + ... + t^(q-2))^(s-1) of the Hilbert series of the torus."""
    if q < 2 or s < 2:
        raise PreconditionError(f"torus Hilbert series needs q >= 2 and s >= 2, got q={q}, s={s}")
    numerator = [1]
    for _ in range(s - 1):
        spread = [0] * (len(numerator) + q - 2)
        for i, c in enumerate(numerator):
            for j in range(q - 1):
                spread[i + j] += c
        numerator = spread
    return HilbertSeriesCI(q=q, s=s, numerator=numerator)


def ci_regularity(q: int, s: int) -> int:
    if q < 2 or s < 2:
        raise PreconditionError(f"torus regularity needs q >= 2 and s >= 2, got q={q}, s={s}")
    return (s - 1) * (q - 2)


def check_regularity_bound(x: ToricSet, cap: Optional[int] = None) -> RegularityReport:
    """Regularity of a clutter-parameterized X against (q-2)(s-1).

    Equality is asserted only in the complete-intersection direction.
    """
    q, s = x.field.q, x.s
    bound = (q - 2) * (s - 1)
    try:
        profile = hilbert_profile(x, hard_stop=bound, cap=cap)
    except DiscrepancyError as e:
        raise BoundViolationError(f"regularity exceeds (q-2)(s-1)={bound}", e.details)
    ci = is_complete_intersection(x)
    report = RegularityReport(q=q, s=s, size=len(x), values=profile.values, regularity=profile.regularity,
                              bound=bound, equality=profile.regularity == bound, ci=ci)
    if ci and not report.equality:
        raise DiscrepancyError("complete intersection with regularity below (q-2)(s-1)", report.model_dump())
    return report
