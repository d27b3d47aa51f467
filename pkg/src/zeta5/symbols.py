"""Quintic power-residue symbols, a brute-force oracle, and reciprocity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclotomic import CycInt, div_exact, is_semiprimary
from .residues import (
    PrimeIdealRep,
    ResidueFieldDesc,
    _elem_mul,
    _elem_pow,
    _one_tuple,
    _project_tuple,
    build_residue_field,
)

BRUTE_FORCE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class SymbolValue:
    """Value of a quintic residue symbol: zero, or the root of unity z^c."""

    kind: str  # "Zero" | "Root"
    exponent: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Zero", "Root"):
            raise ValueError("kind must be 'Zero' or 'Root'")
        if (self.kind == "Root") != (self.exponent is not None):
            raise ValueError("exponent is set exactly for Root values")
        if self.exponent is not None and not 0 <= self.exponent <= 4:
            raise ValueError("exponent must be canonical in {0, ..., 4}")

    @classmethod
    def zero(cls) -> SymbolValue:
        return cls("Zero")

    @classmethod
    def root(cls, c: int) -> SymbolValue:
        return cls("Root", c % 5)

    def is_zero(self) -> bool:
        return self.kind == "Zero"

    def is_one(self) -> bool:
        return self.kind == "Root" and self.exponent == 0

    def __mul__(self, other: SymbolValue) -> SymbolValue:
        if not isinstance(other, SymbolValue):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return SymbolValue.zero()
        return SymbolValue.root(self.exponent + other.exponent)

    def __pow__(self, e: int) -> SymbolValue:
        if self.is_zero():
            return self
        return SymbolValue.root(self.exponent * e)

    def to_dict(self) -> dict:
        if self.is_zero():
            return {"kind": "Zero"}
        return {"kind": "Root", "exponent": self.exponent}


_ZETA_POWER_CACHE: dict[ResidueFieldDesc, tuple[tuple[int, ...], ...]] = {}
_FIFTH_POWER_CACHE: dict[ResidueFieldDesc, frozenset[tuple[int, ...]]] = {}


def _zeta_powers(desc: ResidueFieldDesc) -> tuple[tuple[int, ...], ...]:
    cached = _ZETA_POWER_CACHE.get(desc)
    if cached is None:
        powers = [_one_tuple(desc)]
        for _ in range(4):
            powers.append(_elem_mul(desc, powers[-1], desc.zeta_image))
        cached = tuple(powers)
        _ZETA_POWER_CACHE[desc] = cached
    return cached


def quintic_symbol(alpha: CycInt, prime: PrimeIdealRep) -> SymbolValue:
    """The quintic symbol {alpha / prime}.

    Zero when the prime divides alpha; otherwise the unique c in {0,...,4}
    with alpha^((N-1)/5) congruent to zeta^c, where N = q^f is the absolute
    norm.  Exponentiation runs in the residue field; the result is identified
    against the five precomputed powers of zeta's image.
    """
    if isinstance(alpha, int):
        alpha = CycInt.from_int(alpha)
    desc = prime.field
    a = _project_tuple(alpha, desc)
    if all(v == 0 for v in a):
        return SymbolValue.zero()
    n = prime.absolute_norm()
    y = _elem_pow(desc, a, (n - 1) // 5)
    for c, zc in enumerate(_zeta_powers(desc)):
        if y == zc:
            return SymbolValue.root(c)
    raise ArithmeticError("exponentiation did not land on a fifth root of unity")


def _fifth_powers(desc: ResidueFieldDesc) -> frozenset[tuple[int, ...]]:
    cached = _FIFTH_POWER_CACHE.get(desc)
    if cached is None:
        out = set()
        for coeffs in product(range(desc.q), repeat=desc.f):
            sq = _elem_mul(desc, coeffs, coeffs)
            out.add(_elem_mul(desc, _elem_mul(desc, sq, sq), coeffs))
        cached = frozenset(out)
        _FIFTH_POWER_CACHE[desc] = cached
    return cached


def brute_force_symbol(alpha: CycInt, prime: PrimeIdealRep) -> SymbolValue:
    """Independent oracle for quintic_symbol by exhausting the residue field.

    Enumerates every field element beta and collects the set S of fifth
    powers; alpha lies in exactly one coset zeta^c0 * S, and the symbol value
    is then zeta^(c0 * u) with u = (N-1)/5 mod 5 (u is the symbol exponent of
    zeta itself).  Only usable when q^f <= 10^6, and only fields where zeta's
    image is not itself a fifth power (u != 0) can label nontrivial cosets.
    """
    if isinstance(alpha, int):
        alpha = CycInt.from_int(alpha)
    desc = prime.field
    if desc.size > BRUTE_FORCE_LIMIT:
        raise ValueError(f"field of size {desc.size} is too large to enumerate")
    a = _project_tuple(alpha, desc)
    if all(v == 0 for v in a):
        return SymbolValue.zero()
    powers = _fifth_powers(desc)
    if a in powers:
        return SymbolValue.root(0)
    u = (prime.absolute_norm() - 1) // 5 % 5
    if u == 0:
        raise ValueError(
            "zeta's image is a fifth power in this field (25 divides N - 1); "
            "cosets of fifth powers cannot be labelled by its powers"
        )
    zp = _zeta_powers(desc)
    for c0 in range(1, 5):
        shifted = _elem_mul(desc, a, zp[(5 - c0) % 5])
        if shifted in powers:
            return SymbolValue.root(c0 * u)
    raise ArithmeticError("element not covered by the five cosets of fifth powers")


def reciprocity_check(a: CycInt, b: CycInt) -> bool:
    """Test {a/(b)} = {b/(a)} for semiprimary coprime prime elements.

    Both arguments must be semiprimary, generate prime ideals (prime-power
    norm, coprime to 5) and generate distinct ideals.  Both symbols are
    computed independently by exponentiation and compared.
    """
    if isinstance(a, int):
        a = CycInt.from_int(a)
    if isinstance(b, int):
        b = CycInt.from_int(b)
    for name, x in (("first", a), ("second", b)):
        if not is_semiprimary(x):
            raise ValueError(f"{name} argument is not semiprimary")
    prime_a = build_residue_field(a)
    prime_b = build_residue_field(b)
    if div_exact(a, b) is not None or div_exact(b, a) is not None:
        raise ValueError("arguments generate the same prime ideal")
    return quintic_symbol(a, prime_b) == quintic_symbol(b, prime_a)
