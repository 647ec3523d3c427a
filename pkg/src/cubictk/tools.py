"""Utility functions."""

from collections.abc import Iterator, Sequence
from fractions import Fraction
from itertools import chain, combinations
from math import gcd
from typing import TypeVar

T = TypeVar("T")


def subsets(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """Return all subsets of the items, smallest first."""
    return chain.from_iterable(combinations(items, size) for size in range(len(items) + 1))


def lcm(*numbers: int) -> int:
    """Return the least common multiple of the numbers; 1 for no numbers."""
    result = 1
    for number in numbers:
        result = result * number // gcd(result, number)
    return result


def rational_to_str(value: Fraction | int) -> str:
    """Return the rational as 'num/den', or as 'n' when it is an integer."""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
