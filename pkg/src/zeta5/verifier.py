"""Certificate-producing replay of the nonexistence argument for x^4 - q^4 = p*y^5.

Every claim of the underlying proof that can be decided by computation is
recomputed exactly and recorded as a Computational step with status Pass or
Fail; steps that quantify over hypothetical solution variables are recorded
as PaperSymbolic with status AssumedByPaper.  The final verdict is Verified
only when the hypothesis holds and every Computational step passes; a failing
Computational step yields Refuted, and the certificate preserves the failing
step so the discrepancy can be audited.  Refuted never asserts the equation
has solutions; it flags the argument, not the theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import integer_nth_root, prime_power_split
from .conditions import ConditionReport, check_conditions
from .cyclotomic import CycInt, div_exact
from .residues import PrimeIdealRep, build_residue_field
from .splitting import (
    INERT,
    SPLITS_INTO_5,
    KummerFieldDesc,
    KummerSplitting,
    factor_f2_prime,
    kummer_splitting,
    splitting_type,
)
from .symbols import quintic_symbol

COMPUTATIONAL = "Computational"
PAPER_SYMBOLIC = "PaperSymbolic"
PASS = "Pass"
FAIL = "Fail"
ASSUMED = "AssumedByPaper"
VERIFIED = "Verified"
REFUTED = "Refuted"
INCOMPLETE = "Incomplete"

FAMILY_ABOVE_TWO = "AboveTwo"
FAMILY_ABOVE_Q = "AboveQ"


@dataclass(frozen=True)
class CertificateStep:
    """One replayed step: either recomputed (Computational) or quoted."""

    id: str
    kind: str
    claim: str
    inputs: dict
    computed: dict | None
    status: str
    anchor: str

    def __post_init__(self) -> None:
        if self.kind not in (COMPUTATIONAL, PAPER_SYMBOLIC):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.status not in (PASS, FAIL, ASSUMED):
            raise ValueError(f"unknown step status {self.status!r}")
        if (self.kind == PAPER_SYMBOLIC) != (self.status == ASSUMED):
            raise ValueError("PaperSymbolic steps carry status AssumedByPaper, and only those")
        if self.kind == COMPUTATIONAL and self.computed is None:
            raise ValueError("Computational steps must carry a computed value")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "claim": self.claim,
            "inputs": self.inputs,
            "computed": self.computed,
            "status": self.status,
            "anchor": self.anchor,
        }


@dataclass(frozen=True)
class ProofCertificate:
    """Ordered replay transcript for one pair (p, q)."""

    p: int
    q: int
    condition_report: ConditionReport
    steps: tuple[CertificateStep, ...]
    verdict: str

    def __post_init__(self) -> None:
        if self.verdict not in (VERIFIED, REFUTED, INCOMPLETE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        computational_pass = all(
            s.status == PASS for s in self.steps if s.kind == COMPUTATIONAL
        )
        if (self.verdict == VERIFIED) != (
            self.condition_report.overall and self.steps != () and computational_pass
        ):
            raise ValueError("verdict inconsistent with step statuses")

    def to_dict(self) -> dict:
        return {
            "pair": {"p": self.p, "q": self.q},
            "condition_report": self.condition_report.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class IdealAtom:
    """A prime ideal of the Kummer ring, known only by name, norm and family."""

    name: str
    norm: int
    family: str


@dataclass(frozen=True)
class IdealEquation:
    """A product of five conjugate factor ideals equated against known atoms.

    target maps each atom name to its exponent on the right-hand side; the
    five factors on the left are the unknowns.
    """

    label: str
    atoms: tuple[IdealAtom, ...]
    target: dict
    factor_count: int = 5

    def __post_init__(self) -> None:
        if self.factor_count != 5:
            raise ValueError("equations always have five factors")
        names = [a.name for a in self.atoms]
        if len(set(names)) != len(names):
            raise ValueError("atom names must be unique")
        if set(self.target) != set(names):
            raise ValueError("target exponents must cover exactly the atom list")
        for name, e in self.target.items():
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"exponent of {name} must be a positive integer")
        for a in self.atoms:
            if prime_power_split(a.norm) is None:
                raise ValueError(f"atom {a.name} has non-prime-power norm {a.norm}")

    def total_norm(self) -> int:
        return prod(a.norm ** self.target[a.name] for a in self.atoms)


@dataclass(frozen=True)
class GaloisOrbitSpec:
    """The factor-cycling symmetry: factor m maps to m + step (mod 5), and the
    induced atom permutation preserves each family."""

    factor_count: int = 5
    factor_step: int = 1
    family_preserving: bool = True

    def __post_init__(self) -> None:
        if self.factor_count != 5:
            raise ValueError("the factor orbit has length 5")


@dataclass(frozen=True)
class InfeasibilityResult:
    """Outcome of the assignment search; truthy exactly when infeasible."""

    infeasible: bool
    trace: tuple[str, ...]
    assignments_checked: int
    witness: tuple[tuple[str, int], ...] | None

    def __bool__(self) -> bool:
        return self.infeasible


def kummer_atom_norms(
    kummer: KummerFieldDesc, prime: PrimeIdealRep, split: KummerSplitting, prefix: str = "P"
) -> list[tuple[str, int]]:
    """Atoms above one prime of Z[zeta_5] in the Kummer ring, as (name, norm).

    Splitting into five yields five atoms of norm q^f; an inert prime yields
    one atom of norm (q^f)^5; a ramified fifth power yields one atom of norm
    q^f (appearing with exponent 5 in any equation using it).
    """
    n = prime.absolute_norm()
    if split.case == SPLITS_INTO_5:
        return [(f"{prefix}{i}", n) for i in range(1, 6)]
    if split.case == INERT:
        return [(prefix, n ** 5)]
    return [(prefix, n)]


def case_one_equation(q: int) -> IdealEquation:
    """Ideal data of the first descent: factors against (pi1*A)^2 * (pi2*A)^2.

    Atom norms follow the claimed inert behaviour of pi_i in the extension by
    the fifth root of 8p: one prime of norm (q^2)^5 above each pi_i.
    """
    atoms = (
        IdealAtom("pi1A", q ** 10, FAMILY_ABOVE_Q),
        IdealAtom("pi2A", q ** 10, FAMILY_ABOVE_Q),
    )
    return IdealEquation("eq4", atoms, {"pi1A": 2, "pi2A": 2})


def case_two_equation(q: int, two_atoms: list[tuple[str, int]] | None = None) -> IdealEquation:
    """Ideal data of the second descent: factors against P1..P5 * (pi1*A)^2 * (pi2*A)^2.

    The five atoms above 2 may be passed in (as produced by kummer_atom_norms);
    by default they carry norm 2^4.  The pi_i atoms follow the claimed inert
    behaviour in the extension by the fifth root of p.
    """
    if two_atoms is None:
        two_atoms = [(f"P{i}", 16) for i in range(1, 6)]
    atoms = tuple(IdealAtom(name, norm, FAMILY_ABOVE_TWO) for name, norm in two_atoms) + (
        IdealAtom("pi1A", q ** 10, FAMILY_ABOVE_Q),
        IdealAtom("pi2A", q ** 10, FAMILY_ABOVE_Q),
    )
    target = {name: 1 for name, _ in two_atoms}
    target["pi1A"] = 2
    target["pi2A"] = 2
    return IdealEquation("eq6", atoms, target)


def ideal_equation_infeasible(eq: IdealEquation, orbit: GaloisOrbitSpec) -> InfeasibilityResult:
    """Decide whether five equal-norm, pairwise-comaximal factors can exist.

    Comaximality forces each atom (with its whole target exponent) into at
    most one factor, so assignments are ownership maps atom -> factor; the
    factor-cycling symmetry forces all five factor norms to be equal.  The
    search is exhaustive with divisibility pruning.  When infeasible, the
    trace records the decisive obstructions: the per-prime exponent argument
    (independent of comaximality), and the counting/fixed-atom argument that
    works without the equal-norm constraint.
    """
    atoms = list(eq.atoms)
    k = eq.factor_count
    total = eq.total_norm()
    trace: list[str] = []

    root = integer_nth_root(total, k)
    per_factor = root if root ** k == total else None
    if per_factor is None:
        trace.append(
            f"total norm {total} is not a perfect {k}th power, so {k} equal-norm factors are impossible"
        )
    else:
        by_base: dict[int, list[tuple[IdealAtom, int]]] = {}
        for atom in atoms:
            base, exp = prime_power_split(atom.norm)
            by_base.setdefault(base, []).append((atom, exp))
        for base in sorted(by_base):
            need = 0
            r = per_factor
            while r % base == 0:
                need += 1
                r //= base
            blocks = sorted(exp * eq.target[atom.name] for atom, exp in by_base[base])
            sums = {0}
            for bl in blocks:
                sums |= {s + bl for s in sums}
            if need not in sums:
                per_copy = sorted({exp for _, exp in by_base[base]})
                trace.append(
                    f"each factor must carry {base}^{need}, but whole atoms contribute "
                    f"{base}-exponents from {blocks} ({per_copy} per single copy); "
                    f"{need} is not a reachable sum"
                )

    nodes = 0
    witness: tuple[tuple[str, int], ...] | None = None
    if per_factor is not None:
        contributions = [atom.norm ** eq.target[atom.name] for atom in atoms]
        owner = [0] * len(atoms)
        factor_norms = [1] * k

        def search(i: int) -> bool:
            nonlocal nodes
            if i == len(atoms):
                return all(v == per_factor for v in factor_norms)
            for fac in range(k):
                nodes += 1
                nxt = factor_norms[fac] * contributions[i]
                if per_factor % nxt == 0:
                    factor_norms[fac] = nxt
                    owner[i] = fac
                    if search(i + 1):
                        return True
                    factor_norms[fac] //= contributions[i]
            return False

        if search(0):
            witness = tuple((atom.name, owner[j]) for j, atom in enumerate(atoms))

    if witness is not None:
        return InfeasibilityResult(
            False, tuple(trace) + (f"assignment found after {nodes} search nodes",), nodes, witness
        )

    if len(atoms) < k:
        trace.append(
            f"only {len(atoms)} prime atoms are available for {k} pairwise-comaximal "
            f"non-unit factors"
        )
    if orbit.family_preserving:
        families: dict[str, list[IdealAtom]] = {}
        for atom in atoms:
            families.setdefault(atom.family, []).append(atom)
        for fam in sorted(families):
            members = families[fam]
            if len(members) % k != 0:
                names = ", ".join(a.name for a in members)
                trace.append(
                    f"family {fam} has {len(members)} atom(s) ({names}); any family-preserving "
                    f"permutation of order dividing {k} fixes at least one of them, and a fixed "
                    f"atom cannot lie in exactly one of {k} cyclically permuted comaximal factors"
                )
    trace.append(f"exhaustive ownership search found no valid assignment ({nodes} nodes explored)")
    return InfeasibilityResult(True, tuple(trace), nodes, None)


def _step(step_id, kind, claim, inputs, computed, ok_or_status, anchor) -> CertificateStep:
    if isinstance(ok_or_status, bool):
        status = PASS if ok_or_status else FAIL
    else:
        status = ok_or_status
    return CertificateStep(step_id, kind, claim, inputs, computed, status, anchor)


def verify_theorem(p: int, q: int) -> ProofCertificate:
    """Replay the whole nonexistence argument for the pair (p, q).

    Fails fast with verdict Incomplete when the hypothesis on (p, q) does not
    hold.  Otherwise emits the normative step sequence I.1-I.10 (x odd) and
    II.1-II.8 (x even); the verdict is Verified exactly when every
    Computational step passes.
    """
    report = check_conditions(p, q)
    if not report.overall:
        return ProofCertificate(p, q, report, (), INCOMPLETE)

    steps: list[CertificateStep] = []
    st_p = splitting_type(p)
    prime_p = build_residue_field(CycInt.from_int(p))
    pi1, pi2 = factor_f2_prime(q)
    prime_2 = build_residue_field(CycInt.from_int(2))
    kummer_8p = KummerFieldDesc(CycInt.from_int(8 * p), label="fifth root of 8p")
    kummer_p = KummerFieldDesc(CycInt.from_int(p), label="fifth root of p")
    orbit = GaloisOrbitSpec()

    # ----- Case I: x odd -------------------------------------------------
    steps.append(_step(
        "I.1", COMPUTATIONAL,
        "p = 3 (mod 5), hence p stays prime (inert) in Z[zeta_5]",
        {"p": p, "p_mod_5": p % 5},
        {"e": st_p.e, "f": st_p.f, "r": st_p.r},
        p % 5 == 3 and (st_p.e, st_p.f, st_p.r) == (1, 4, 1),
        "case I: p = 3 (mod 5) is a prime element of the cyclotomic ring",
    ))

    steps.append(_step(
        "I.2", PAPER_SYMBOLIC,
        "for odd x: gcd(x^2 - q^2, x^2 + q^2) = 2, and the surviving branch is "
        "x^2 - q^2 = 16*p*y1^5, x^2 + q^2 = 2*y2^5",
        {"q_mod_4": q % 4},
        {"odd_square_residues_mod_8": sorted({r * r % 8 for r in (1, 3, 5, 7)})},
        ASSUMED,
        "case I descent: x^2 - q^2 = 16*p*y1^5, x^2 + q^2 = 2*y2^5",
    ))

    minus_one_nonresidue = pow(p - 1, (p - 1) // 2, p) == p - 1
    steps.append(_step(
        "I.3", COMPUTATIONAL,
        "the rejected branch needs p | x^2 + q^2, impossible since -1 is not a square mod p",
        {"p": p},
        {"p_mod_4": p % 4, "minus_one_is_nonresidue_mod_p": minus_one_nonresidue},
        p % 4 == 3 and minus_one_nonresidue,
        "case I: p | x^2 + q^2 contradicts p = 3 (mod 4)",
    ))

    sym_q_over_p = quintic_symbol(CycInt.from_int(q), prime_p)
    steps.append(_step(
        "I.4", COMPUTATIONAL,
        "q is a quintic residue modulo the inert prime p: {q/(p)} = 1",
        {"q": q, "absolute_norm": p ** 4, "exponent": (p ** 4 - 1) // 5},
        {"symbol": sym_q_over_p.to_dict()},
        sym_q_over_p.is_one(),
        "case I: {q/(p)} = 1 by direct exponentiation",
    ))

    unit = div_exact(CycInt.from_int(q), pi1.generator * pi2.generator)
    steps.append(_step(
        "I.5", COMPUTATIONAL,
        "q factors as pi1 * pi2 up to a unit, with N(pi1) = N(pi2) = q^2",
        {"q": q},
        {
            "pi1": list(pi1.generator.coeffs),
            "pi2": list(pi2.generator.coeffs),
            "norm_pi1": pi1.generator.norm(),
            "norm_pi2": pi2.generator.norm(),
            "unit_quotient": list(unit.coeffs) if unit is not None else None,
            "unit_quotient_norm": unit.norm() if unit is not None else None,
        },
        pi1.generator.norm() == q * q
        and pi2.generator.norm() == q * q
        and unit is not None
        and unit.norm() == 1,
        "case I: q*Z[zeta_5] = Q1*Q2 with N(pi_1) = N(pi_2) = q^2",
    ))

    sym_2_pi = (quintic_symbol(CycInt.from_int(2), pi1), quintic_symbol(CycInt.from_int(2), pi2))
    steps.append(_step(
        "I.6", COMPUTATIONAL,
        "2 is a quintic residue modulo both pi_i: {2/(pi_i)} = 1",
        {"witness_w_with_w5_eq_2_mod_q": report.quintic_residue_witness},
        {"symbol_pi1": sym_2_pi[0].to_dict(), "symbol_pi2": sym_2_pi[1].to_dict()},
        sym_2_pi[0].is_one() and sym_2_pi[1].is_one(),
        "case I: w^5 = 2 (mod q) forces {2/(pi_i)} = 1",
    ))

    sym_p_pi = (quintic_symbol(CycInt.from_int(p), pi1), quintic_symbol(CycInt.from_int(p), pi2))
    sym_8p_pi = (
        quintic_symbol(CycInt.from_int(8 * p), pi1),
        quintic_symbol(CycInt.from_int(8 * p), pi2),
    )
    multiplicative_ok = all(
        sym_8p_pi[i] == (sym_2_pi[i] ** 3) * sym_p_pi[i] for i in (0, 1)
    )
    steps.append(_step(
        "I.7", COMPUTATIONAL,
        "{8p/(pi_i)} = {2/(pi_i)}^3 * {p/(pi_i)} = {p/(pi_i)} for both i",
        {"p": p, "q": q},
        {
            "symbol_8p_pi1": sym_8p_pi[0].to_dict(),
            "symbol_8p_pi2": sym_8p_pi[1].to_dict(),
            "symbol_p_pi1": sym_p_pi[0].to_dict(),
            "symbol_p_pi2": sym_p_pi[1].to_dict(),
            "multiplicativity_holds": multiplicative_ok,
        },
        multiplicative_ok and sym_8p_pi[0] == sym_p_pi[0] and sym_8p_pi[1] == sym_p_pi[1],
        "case I: {8p/(pi_i)} = {2/(pi_i)}^3 * {p/(pi_i)}",
    ))

    divisibility_holds = ((q * q - 1) // 5) % (q ** 3 * (q - 1)) == 0
    k_exists = (q + 1) % (5 * q ** 3) == 0
    steps.append(_step(
        "I.8", COMPUTATIONAL,
        "claimed: {p/(pi_i)} != 1 for i = 1, 2; cross-check: q^3*(q-1) does not divide "
        "(q^2-1)/5, equivalently q + 1 = 5*q^3*k has no positive solution",
        {"p": p, "q": q, "exponent": (q * q - 1) // 5},
        {
            "symbol_exponent_pi1": sym_p_pi[0].exponent,
            "symbol_exponent_pi2": sym_p_pi[1].exponent,
            "divisibility_q3_qm1_divides_q2m1_over_5": divisibility_holds,
            "k_with_q_plus_1_eq_5q3k_exists": k_exists,
            "five_divides_q_plus_1": (q + 1) % 5 == 0,
        },
        (not sym_p_pi[0].is_one())
        and (not sym_p_pi[1].is_one())
        and not divisibility_holds
        and not k_exists,
        "case I: {p/(pi_i)} != 1; q + 1 = 5*q^3*k is impossible",
    ))

    ks_8p = (kummer_splitting(kummer_8p, pi1), kummer_splitting(kummer_8p, pi2))
    steps.append(_step(
        "I.9", COMPUTATIONAL,
        "claimed: pi_i*A stays prime (inert) in the extension by the fifth root of 8p",
        {"radicand": 8 * p},
        {
            "case_pi1": ks_8p[0].case,
            "case_pi2": ks_8p[1].case,
            "symbol_pi1": ks_8p[0].symbol.to_dict(),
            "symbol_pi2": ks_8p[1].symbol.to_dict(),
        },
        ks_8p[0].case == INERT and ks_8p[1].case == INERT,
        "case I: {8p/(pi_i)} != 1 would keep pi_i*A prime in A",
    ))

    eq4 = case_one_equation(q)
    res4 = ideal_equation_infeasible(eq4, orbit)
    steps.append(_step(
        "I.10", COMPUTATIONAL,
        "equation (4): five conjugate comaximal factors cannot multiply to (pi1*A)^2 * (pi2*A)^2",
        {
            "atoms": [{"name": a.name, "norm": a.norm, "family": a.family} for a in eq4.atoms],
            "target": dict(eq4.target),
            "target_norm": eq4.total_norm(),
        },
        {
            "infeasible": res4.infeasible,
            "obstructions": list(res4.trace),
            "search_nodes": res4.assignments_checked,
        },
        res4.infeasible and len(res4.trace) > 0,
        "case I: equation (4) q^2 = y2^5 - 8*p*y1^5 is impossible in ideals",
    ))

    # ----- Case II: x even -----------------------------------------------
    steps.append(_step(
        "II.1", PAPER_SYMBOLIC,
        "for even x: gcd(x^2 - q^2, x^2 + q^2) = 1, and the surviving branch is "
        "x^2 - q^2 = p*y1^5, x^2 + q^2 = y2^5",
        {"p": p, "q": q},
        None,
        ASSUMED,
        "case II: gcd(x^2 - q^2, x^2 + q^2) = 1",
    ))

    steps.append(_step(
        "II.2", COMPUTATIONAL,
        "the rejected branch needs p | x^2 + q^2, impossible since -1 is not a square mod p",
        {"p": p},
        {"p_mod_4": p % 4, "minus_one_is_nonresidue_mod_p": minus_one_nonresidue},
        p % 4 == 3 and minus_one_nonresidue,
        "case II: p | x^2 + q^2 contradicts p = 3 (mod 4)",
    ))

    samples = [(x, (x * x + q * q) - (x * x - q * q)) for x in (0, 1, 2, 3)]
    steps.append(_step(
        "II.3", COMPUTATIONAL,
        "subtracting the two branch equations leaves 2*q^2 = y2^5 - p*y1^5",
        {"q": q},
        {"difference_samples": samples, "expected": 2 * q * q},
        all(v == 2 * q * q for _, v in samples),
        "case II: 2*q^2 = y2^5 - p*y1^5",
    ))

    st_2 = splitting_type(2)
    steps.append(_step(
        "II.4", COMPUTATIONAL,
        "2 stays prime (inert) in Z[zeta_5]",
        {"p": 2},
        {"e": st_2.e, "f": st_2.f, "r": st_2.r},
        (st_2.e, st_2.f, st_2.r) == (1, 4, 1),
        "case II: 2 is a prime element of the cyclotomic ring",
    ))

    sym_p_over_2 = quintic_symbol(CycInt.from_int(p), prime_2)
    ks_2 = kummer_splitting(kummer_p, prime_2)
    steps.append(_step(
        "II.5", COMPUTATIONAL,
        "{p/(2)} = 1, hence 2*A splits into five distinct prime ideals",
        {"p": p, "absolute_norm": 16, "exponent": 3},
        {"symbol": sym_p_over_2.to_dict(), "case": ks_2.case},
        sym_p_over_2.is_one() and ks_2.case == SPLITS_INTO_5,
        "case II: p = 1 (mod 2) gives {p/(2)} = 1 and 2*A = P1*P2*P3*P4*P5",
    ))

    ks_p = (kummer_splitting(kummer_p, pi1), kummer_splitting(kummer_p, pi2))
    steps.append(_step(
        "II.6", COMPUTATIONAL,
        "claimed: pi_i*A stays prime (inert) in the extension by the fifth root of p",
        {"radicand": p},
        {
            "case_pi1": ks_p[0].case,
            "case_pi2": ks_p[1].case,
            "symbol_pi1": ks_p[0].symbol.to_dict(),
            "symbol_pi2": ks_p[1].symbol.to_dict(),
        },
        ks_p[0].case == INERT and ks_p[1].case == INERT,
        "case II: {p/(pi_i)} != 1 would keep pi_i*A prime in A",
    ))

    steps.append(_step(
        "II.7", PAPER_SYMBOLIC,
        "a Galois element v with v(zeta) = zeta and v(p^(1/5)) = zeta*p^(1/5) permutes the "
        "five factors cyclically and maps prime ideals to prime ideals",
        {"p": p},
        None,
        ASSUMED,
        "case II: v(zeta) = zeta, v(p^(1/5)) = zeta*p^(1/5) cycles the factors",
    ))

    atoms_above_2 = kummer_atom_norms(kummer_p, prime_2, ks_2, prefix="P")
    eq6 = case_two_equation(q, atoms_above_2)
    res6 = ideal_equation_infeasible(eq6, orbit)
    steps.append(_step(
        "II.8", COMPUTATIONAL,
        "equation (6): five conjugate comaximal factors cannot multiply to "
        "P1*...*P5 * (pi1*A)^2 * (pi2*A)^2",
        {
            "atoms": [{"name": a.name, "norm": a.norm, "family": a.family} for a in eq6.atoms],
            "target": dict(eq6.target),
            "target_norm": eq6.total_norm(),
        },
        {
            "infeasible": res6.infeasible,
            "obstructions": list(res6.trace),
            "search_nodes": res6.assignments_checked,
        },
        res6.infeasible and len(res6.trace) > 0,
        "case II: equation (6) 2*q^2 = y2^5 - p*y1^5 is impossible in ideals",
    ))

    verdict = VERIFIED if all(
        s.status == PASS for s in steps if s.kind == COMPUTATIONAL
    ) else REFUTED
    return ProofCertificate(p, q, report, tuple(steps), verdict)
