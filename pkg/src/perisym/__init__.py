"""Exact arithmetic in the supercharacter ring of the periplectic
supergroup: supersymmetric Laurent polynomials, thin-Kac supercharacters,
the evaluation homomorphism with its kernel decomposition, Euler
characteristics of parabolic inductions, and constructive lift
certificates."""

from .errors import (
    ArityMismatch,
    BadIndices,
    BeadCollision,
    LeviIncompatible,
    NoIntegerSolution,
    NotDivisible,
    NotDominant,
    NotInKernel,
    NotMember,
    NotSymmetric,
    PerisymError,
    WindowTooSmall,
)
from .laurent import (
    LaurentPoly,
    TSlice,
    grlex_key,
    monomial_orbit_sum,
    straighten_alternant,
)
from .weights import (
    dominance_leq,
    dominant_weights_with_beads_in,
    from_diagram,
    is_dominant,
    parity,
    rho,
    to_diagram,
)
from .schur import SchurExpansion, denominators, schur_expand, schur_poly
from .thinkac import (
    KClass,
    kclass_sch,
    sch_standard,
    sch_thin_kac,
    supertrace_twist,
    theta_prime,
)
from .dsmap import (
    MembershipReport,
    ds_eval,
    ds_power,
    filtration_level,
    kernel_decompose,
    membership,
    quotient_reduce,
)
from .euler import (
    ParabolicDatum,
    euler_characteristic,
    euler_ds_power,
    radical_roots,
)
from .lift import (
    Certificate,
    CertificateLevel,
    Window,
    certify,
    lift_window,
    membership_window_basis,
    orbit_sum_combination,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BadIndices",
    "BeadCollision",
    "Certificate",
    "CertificateLevel",
    "KClass",
    "LaurentPoly",
    "LeviIncompatible",
    "MembershipReport",
    "NoIntegerSolution",
    "NotDivisible",
    "NotDominant",
    "NotInKernel",
    "NotMember",
    "NotSymmetric",
    "ParabolicDatum",
    "PerisymError",
    "SchurExpansion",
    "TSlice",
    "Window",
    "WindowTooSmall",
    "certify",
    "denominators",
    "dominance_leq",
    "dominant_weights_with_beads_in",
    "ds_eval",
    "ds_power",
    "euler_characteristic",
    "euler_ds_power",
    "filtration_level",
    "from_diagram",
    "grlex_key",
    "is_dominant",
    "kclass_sch",
    "kernel_decompose",
    "lift_window",
    "membership",
    "membership_window_basis",
    "monomial_orbit_sum",
    "orbit_sum_combination",
    "parity",
    "quotient_reduce",
    "radical_roots",
    "rho",
    "sch_standard",
    "sch_thin_kac",
    "schur_expand",
    "schur_poly",
    "straighten_alternant",
    "supertrace_twist",
    "theta_prime",
    "to_diagram",
]
