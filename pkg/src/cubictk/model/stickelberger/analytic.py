"""Analytic class number formulas for cyclotomic fields."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from cubictk.errors import HypothesisError, IntegralityError
from cubictk.model.bernoulli import gen_bernoulli, is_irregular_pair
from cubictk.model.cyclotomic.integer import check_prime
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.dirichlet import teichmuller_powers

DEFAULT_MAX_R = 200

LOGGER = logging.getLogger(__name__)


@cache
def h_minus(r: int, *, max_r: int = DEFAULT_MAX_R) -> int:
    """Return the relative class number h⁻ of ℚ(ζ_r) as 2r·Π_(χ odd) (−B_(1,χ)/2)."""
    check_prime(r)
    if r > max_r:
        message = f"h⁻ is computed for r ≤ {max_r}, got {r}"
        raise HypothesisError(message)
    product = CycNumber.from_rational(1, r - 1)
    for character in teichmuller_powers(r):
        if character.is_odd():
            product *= gen_bernoulli(1, character) * Fraction(-1, 2)
    value = product.as_rational() * 2 * r
    if value.denominator != 1 or value <= 0:
        message = f"the analytic class number formula gave {value} for r = {r}"
        raise IntegralityError(message)
    LOGGER.info("h⁻(%d) = %d", r, value)
    return int(value)


@dataclass(frozen=True)
class AnalyticScan:
    """Analytic data of ℚ(ζ_r) that does not need a class group computation."""

    r: int
    h_minus: int
    irregular_indices: tuple[int, ...]
    certified: bool  # Whether the class group engine can confirm the data for this r


def analytic_scan(r: int, *, max_r: int = DEFAULT_MAX_R, class_group_max_r: int = 23) -> AnalyticScan:
    """Return h⁻(r) and the even k ≤ r − 3 with r | B_k; larger r are labelled as not certified."""
    indices = tuple(k for k in range(2, r - 2, 2) if is_irregular_pair(r, k))
    return AnalyticScan(r, h_minus(r, max_r=max_r), indices, r <= class_group_max_r)
