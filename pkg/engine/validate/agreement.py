"""
Cross-method agreement on a grid.

Each grid point is evaluated twice with the method forced to m1 and to m2;
the row records their relative difference. A point where either method
refuses to run is written with reldiff = nan and the tag "error".
"""

import logging
import math
from typing import Iterator, Optional

from engine.dispatch import u_pcf
from engine.errors import PCFError
from engine.models import AgreementRow, EvalOptions, GridSpec, MethodTag
from engine.numerics.elementary import reldiff
from engine.validate.recurrence import ResidualSample, default_evaluator, recurrence_sample

logger = logging.getLogger(__name__)

ERROR_TAG = "error"


def method_agreement_map(
    grid: GridSpec, m1: MethodTag, m2: MethodTag, tol: float = 1e-15
) -> Iterator[AgreementRow]:
    """Yield one AgreementRow per grid point in grid order."""
    opts1 = EvalOptions(tol=tol, method=m1)
    opts2 = EvalOptions(tol=tol, method=m2)
    for a, z in grid.points():
        try:
            first = u_pcf(a, z, opts1)
        except PCFError as exc:
            logger.debug("%s failed at a=%g, z=%s: %s", m1.value, a, z, exc)
            yield AgreementRow(a, z, math.nan, ERROR_TAG, m2.value)
            continue
        try:
            second = first if m2 is m1 else u_pcf(a, z, opts2)
        except PCFError as exc:
            logger.debug("%s failed at a=%g, z=%s: %s", m2.value, a, z, exc)
            yield AgreementRow(a, z, math.nan, m1.value, ERROR_TAG)
            continue
        yield AgreementRow(a, z, reldiff(first.value, second.value), m1.value, m2.value)


def recurrence_map(
    grid: GridSpec, opts: Optional[EvalOptions] = None
) -> Iterator[tuple[float, complex, Optional[ResidualSample], str]]:
    """Yield (a, z, sample, message) per grid point; sample is None when evaluation failed."""
    evaluate = default_evaluator(opts)
    for a, z in grid.points():
        try:
            yield a, z, recurrence_sample(a, z, evaluate), ""
        except PCFError as exc:
            yield a, z, None, str(exc)
