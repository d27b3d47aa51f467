"""Exact arithmetic in Z[zeta_5], quintic residue symbols, Kummer splitting,
hypothesis checks, certificate-producing proof replay and exhaustive search
for the Diophantine equation x^4 - q^4 = p*y^5."""

from .arith import integer_nth_root, is_prime, primes_up_to
from .conditions import (
    ConditionReport,
    check_conditions,
    enumerate_pairs,
    multiplicative_order,
    quintic_residue_witness,
)
from .cyclotomic import (
    LAMBDA,
    ONE,
    ZETA,
    CycInt,
    NotNormalizable,
    QuadraticInt,
    div_exact,
    embed_quadratic,
    is_semiprimary,
    semiprimary_normalize,
    semiprimary_residue,
)
from .residues import (
    PHI5,
    PrimeIdealRep,
    ResidueElem,
    ResidueFieldDesc,
    add_in_field,
    build_residue_field,
    mul_in_field,
    pow_in_field,
    project,
)
from .search import SolutionCandidate, SolutionCheck, check_solution, find_solutions
from .splitting import (
    INERT,
    RAMIFIED_5TH_POWER,
    SPLITS_INTO_5,
    KummerFieldDesc,
    KummerSplitting,
    SplittingType,
    factor_f2_prime,
    kummer_splitting,
    splitting_type,
)
from .symbols import SymbolValue, brute_force_symbol, quintic_symbol, reciprocity_check
from .verifier import (
    CertificateStep,
    GaloisOrbitSpec,
    IdealAtom,
    IdealEquation,
    InfeasibilityResult,
    ProofCertificate,
    case_one_equation,
    case_two_equation,
    ideal_equation_infeasible,
    kummer_atom_norms,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CycInt",
    "QuadraticInt",
    "NotNormalizable",
    "ZETA",
    "ONE",
    "LAMBDA",
    "PHI5",
    "div_exact",
    "embed_quadratic",
    "is_semiprimary",
    "semiprimary_normalize",
    "semiprimary_residue",
    "ResidueFieldDesc",
    "ResidueElem",
    "PrimeIdealRep",
    "build_residue_field",
    "project",
    "add_in_field",
    "mul_in_field",
    "pow_in_field",
    "SymbolValue",
    "quintic_symbol",
    "brute_force_symbol",
    "reciprocity_check",
    "SplittingType",
    "splitting_type",
    "factor_f2_prime",
    "KummerFieldDesc",
    "KummerSplitting",
    "kummer_splitting",
    "RAMIFIED_5TH_POWER",
    "SPLITS_INTO_5",
    "INERT",
    "ConditionReport",
    "multiplicative_order",
    "quintic_residue_witness",
    "check_conditions",
    "enumerate_pairs",
    "CertificateStep",
    "ProofCertificate",
    "IdealAtom",
    "IdealEquation",
    "GaloisOrbitSpec",
    "InfeasibilityResult",
    "kummer_atom_norms",
    "ideal_equation_infeasible",
    "case_one_equation",
    "case_two_equation",
    "verify_theorem",
    "SolutionCandidate",
    "SolutionCheck",
    "integer_nth_root",
    "check_solution",
    "find_solutions",
    "is_prime",
    "primes_up_to",
]
