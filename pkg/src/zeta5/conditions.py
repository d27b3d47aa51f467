"""The hypothesis set on a prime pair (p, q), with witnesses for each part."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_prime, prime_factors, primes_up_to


def multiplicative_order(a: int, n: int) -> int:
    """Least t >= 1 with a^t = 1 (mod n); requires gcd(a, n) = 1, n >= 2.

    Starts from the group order phi(n) and descends through its prime
    divisors, so it stays exact for moduli like q^4.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError("argument must be coprime to the modulus")
    phi = 1
    for prime, e in prime_factors(n).items():
        phi *= (prime - 1) * prime ** (e - 1)
    t = phi
    for r in prime_factors(phi):
        while t % r == 0 and pow(a, t // r, n) == 1:
            t //= r
    return t


@dataclass(frozen=True)
class ConditionReport:
    """Pass/fail with witnesses for the six-part hypothesis on (p, q).

    Parts (ii) and (v) constrain hypothetical solutions rather than the pair
    itself; they are recorded verbatim and enforced by the search filters.
    """

    p: int
    q: int
    distinct_primes: bool
    p_mod_20: int
    p_mod_20_ok: bool
    q_mod_5: int
    q_mod_5_ok: bool
    primitive_root_order: int | None
    primitive_root_order_expected: int | None
    primitive_root_ok: bool
    quintic_residue_witness: int | None
    quintic_residue_ok: bool
    overall: bool

    SOLUTION_LEVEL = {
        "ii": "y not divisible by p (solution-level, enforced by search filters)",
        "v": "gcd(x, y) = 1 (solution-level, enforced by search filters)",
    }

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "distinct_primes": self.distinct_primes,
            "p_mod_20": self.p_mod_20,
            "p_mod_20_ok": self.p_mod_20_ok,
            "q_mod_5": self.q_mod_5,
            "q_mod_5_ok": self.q_mod_5_ok,
            "primitive_root_order": self.primitive_root_order,
            "primitive_root_order_expected": self.primitive_root_order_expected,
            "primitive_root_ok": self.primitive_root_ok,
            "quintic_residue_witness": self.quintic_residue_witness,
            "quintic_residue_ok": self.quintic_residue_ok,
            "solution_level_conditions": dict(self.SOLUTION_LEVEL),
            "overall": self.overall,
        }


def quintic_residue_witness(q: int) -> int | None:
    """Some w with w^5 = 2 (mod q), found by scan, or None."""
    for w in range(q):
        if pow(w, 5, q) == 2 % q:
            return w
    return None


def check_conditions(p: int, q: int) -> ConditionReport:
    """Evaluate every part of the hypothesis for (p, q).

    Non-prime inputs produce a failing report rather than an error, so range
    sweeps stay uniform.
    """
    p_prime, q_prime = is_prime(p), is_prime(q)
    distinct = p_prime and q_prime and p != q
    p_mod_20, q_mod_5 = p % 20, q % 5
    p_mod_20_ok, q_mod_5_ok = p_mod_20 == 3, q_mod_5 == 4

    order: int | None = None
    expected: int | None = None
    order_ok = False
    if distinct:
        expected = q ** 3 * (q - 1)
        order = multiplicative_order(p, q ** 4)
        order_ok = order == expected

    witness = quintic_residue_witness(q) if q_prime else None
    witness_ok = witness is not None

    overall = distinct and p_mod_20_ok and q_mod_5_ok and order_ok and witness_ok
    return ConditionReport(
        p=p,
        q=q,
        distinct_primes=distinct,
        p_mod_20=p_mod_20,
        p_mod_20_ok=p_mod_20_ok,
        q_mod_5=q_mod_5,
        q_mod_5_ok=q_mod_5_ok,
        primitive_root_order=order,
        primitive_root_order_expected=expected,
        primitive_root_ok=order_ok,
        quintic_residue_witness=witness,
        quintic_residue_ok=witness_ok,
        overall=overall,
    )


def enumerate_pairs(p_max: int, q_max: int) -> list[ConditionReport]:
    """All passing pairs with p <= p_max, q <= q_max, ascending by (p, q).

    Residue classes are pre-filtered (a pair failing them would fail the
    report anyway), then the full report decides membership.
    """
    if p_max < 2 or q_max < 2:
        raise ValueError("bounds must be at least 2")
    out = []
    for p in primes_up_to(p_max):
        if p % 20 != 3:
            continue
        for q in primes_up_to(q_max):
            if q % 5 != 4:
                continue
            report = check_conditions(p, q)
            if report.overall:
                out.append(report)
    return out
