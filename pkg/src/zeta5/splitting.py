"""Prime splitting in Z[zeta_5] and in quintic Kummer extensions of it."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import integer_nth_root, is_prime, ord_mod5
from .cyclotomic import CycInt, QuadraticInt, div_exact
from .residues import PrimeIdealRep, build_residue_field
from .symbols import SymbolValue, quintic_symbol

RAMIFIED_5TH_POWER = "Ramified5thPower"
SPLITS_INTO_5 = "SplitsInto5"
INERT = "Inert"


@dataclass(frozen=True)
class SplittingType:
    """Ramification/degree data (e, f, r) of a rational prime in Z[zeta_5]."""

    e: int
    f: int
    r: int

    def __post_init__(self) -> None:
        if self.e * self.f * self.r != 4:
            raise ValueError("e*f*r must equal 4")


def splitting_type(p: int) -> SplittingType:
    """How the rational prime p behaves in Z[zeta_5].

    f is the least positive integer with p^f = 1 (mod 5) and r = 4/f; the
    prime 5 ramifies totally.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 5:
        return SplittingType(4, 1, 1)
    f = ord_mod5(p)
    return SplittingType(1, f, 4 // f)


def factor_f2_prime(q: int) -> tuple[PrimeIdealRep, PrimeIdealRep]:
    """Split q = pi1 * pi2 (up to a unit) for a prime q = 4 (mod 5).

    Finds a, b >= 1 with a^2 + a*b - b^2 = q by bounded enumeration (first
    hit with a ascending, then b), embeds pi1 = a - b*z^2 - b*z^3 and sets
    pi2 to its conjugate under z -> z^2.  The unit quotient q / (pi1*pi2) is
    verified to have norm 1 before returning.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 5 != 4:
        raise ValueError(f"{q} is not congruent to 4 mod 5 (residue degree not 2)")
    bound = isqrt(5 * q) + 1
    rep = None
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            if a * a + a * b - b * b == q:
                rep = (a, b)
                break
        if rep:
            break
    if rep is None:
        # a value -q flips to +q after one multiplication by the golden unit
        for a in range(1, bound + 1):
            for b in range(1, bound + 1):
                if a * a + a * b - b * b == -q:
                    rep = (b, a + b)
                    break
            if rep:
                break
    if rep is None:
        raise ArithmeticError(f"norm form failed to represent {q} within the bound")
    pi1 = QuadraticInt(*rep).embed()
    pi2 = pi1.conjugate(2)
    unit = div_exact(CycInt.from_int(q), pi1 * pi2)
    if unit is None or unit.norm() != 1:
        raise ArithmeticError("pi1 * pi2 is not an associate of q")
    return build_residue_field(pi1), build_residue_field(pi2)


def _is_fifth_power_int(n: int) -> bool:
    r = integer_nth_root(abs(n), 5)
    return (r ** 5 == abs(n)) and (n >= 0 or (-r) ** 5 == n)


@dataclass(frozen=True)
class KummerFieldDesc:
    """The quintic Kummer extension of Q(zeta_5) by a fifth root of mu."""

    radicand: CycInt
    label: str = ""

    def __post_init__(self) -> None:
        mu = self.radicand
        if isinstance(mu, int):
            object.__setattr__(self, "radicand", CycInt.from_int(mu))
            mu = self.radicand
        if mu.is_zero():
            raise ValueError("radicand must be nonzero")
        if mu.is_rational() and _is_fifth_power_int(mu.c0):
            raise ValueError("rational radicand must not be a perfect fifth power")


@dataclass(frozen=True)
class KummerSplitting:
    """Behaviour of an unramified prime of Z[zeta_5] in the Kummer extension."""

    case: str
    symbol: SymbolValue

    def __post_init__(self) -> None:
        expected = _case_for(self.symbol)
        if self.case != expected:
            raise ValueError(f"case {self.case!r} inconsistent with symbol (expected {expected!r})")


def _case_for(symbol: SymbolValue) -> str:
    if symbol.is_zero():
        return RAMIFIED_5TH_POWER
    if symbol.is_one():
        return SPLITS_INTO_5
    return INERT


def kummer_splitting(kummer: KummerFieldDesc, prime: PrimeIdealRep) -> KummerSplitting:
    """Classify the prime in the Kummer extension via its quintic symbol.

    Symbol zero: the prime becomes a fifth power of one prime; symbol one:
    it splits into five distinct primes; any other root of unity: it stays
    prime (inert).
    """
    symbol = quintic_symbol(kummer.radicand, prime)
    return KummerSplitting(_case_for(symbol), symbol)
