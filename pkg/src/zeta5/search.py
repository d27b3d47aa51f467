"""Exhaustive search for integer solutions of x^4 - q^4 = p*y^5 within bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import integer_nth_root

__all__ = [
    "SolutionCandidate",
    "SolutionCheck",
    "integer_nth_root",
    "check_solution",
    "find_solutions",
]


@dataclass(frozen=True)
class SolutionCandidate:
    """An exact solution (x, y); trivial means y = 0 (forcing x = +-q)."""

    x: int
    y: int
    trivial: bool
    violates_conditions: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "trivial": self.trivial,
            "violates_conditions": list(self.violates_conditions),
        }


@dataclass(frozen=True)
class SolutionCheck:
    equation_holds: bool
    trivial: bool
    violates_conditions: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.equation_holds


def _violations(p: int, x: int, y: int) -> tuple[str, ...]:
    out = []
    if y % p == 0:
        out.append("ii")
    if math.gcd(x, y) != 1:
        out.append("v")
    return tuple(out)


def check_solution(p: int, q: int, x: int, y: int) -> SolutionCheck:
    """Exact test of x^4 - q^4 = p*y^5 plus solution-level annotations."""
    holds = x ** 4 - q ** 4 == p * y ** 5
    return SolutionCheck(holds, y == 0, _violations(p, x, y) if holds else ())


def find_solutions(p: int, q: int, y_bound: int) -> list[SolutionCandidate]:
    """Every solution with |y| <= y_bound, in ascending (y, x) order.

    Iterates over y and tests p*y^5 + q^4 for being a perfect fourth power;
    negative values are skipped since x^4 >= 0.  Complete within the bound.
    """
    if y_bound < 0:
        raise ValueError("y_bound must be nonnegative")
    q4 = q ** 4
    out = []
    for y in range(-y_bound, y_bound + 1):
        n = p * y ** 5 + q4
        if n < 0:
            continue
        x = integer_nth_root(n, 4)
        if x ** 4 != n:
            continue
        trivial = y == 0
        if x == 0:
            out.append(SolutionCandidate(0, y, trivial, _violations(p, 0, y)))
        else:
            out.append(SolutionCandidate(-x, y, trivial, _violations(p, -x, y)))
            out.append(SolutionCandidate(x, y, trivial, _violations(p, x, y)))
    return out
