"""Exact local invariants of isolated complete intersection singularities.

The package computes Milnor, Tjurina and Bruce-Roberts-type numbers of
germs at the origin through local standard bases (Mora division) and
syzygies, entirely over exact rational arithmetic, and derives the
GSV-index, local Euler obstruction, Euler obstruction of a function,
Brasselet number and d-th polar multiplicity from the identities
connecting them, re-checking every identity exactly.
"""

from .derlog import TangentModule, VarietyGerm, df_theta, mu_BR, mu_BR_rel, tau_BR, theta_X
from .errors import (
    ContainmentViolation,
    GenericityExhausted,
    GermlabError,
    ICISViolation,
    InfiniteColength,
    ParseError,
    PreconditionViolation,
    ReductionLimitExceeded,
)
from .invariants import (
    IcisResult,
    IdentityCheck,
    InvariantReport,
    derived_invariants,
    detect_quasihomogeneous,
    generic_linear_form,
    milnor_hypersurface,
    milnor_icis,
    tjurina_icis,
    verify_icis,
)
from .module_ops import (
    intersect,
    jacobian_minors,
    module_sum,
    product,
    submodule_pullback,
    subquotient_dimension,
    syzygies,
)
from .orders import LocalOrder, ModuleOrder, compare
from .parsing import parse_polynomial
from .problemfile import ProblemFile, parse_problem_file
from .ring import Monomial, Polynomial, RingSpec, format_polynomial, gradient, partial_derivative
from .standard_basis import (
    INFINITE,
    ModuleElement,
    MoraCertificate,
    StandardBasis,
    Submodule,
    colength,
    is_finite,
    krull_dimension,
    local_colength,
    mora_normal_form,
    set_default_max_steps,
    standard_basis,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "ContainmentViolation",
    "GenericityExhausted",
    "GermlabError",
    "ICISViolation",
    "IcisResult",
    "IdentityCheck",
    "InfiniteColength",
    "InvariantReport",
    "LocalOrder",
    "ModuleElement",
    "ModuleOrder",
    "Monomial",
    "MoraCertificate",
    "ParseError",
    "Polynomial",
    "PreconditionViolation",
    "ProblemFile",
    "ReductionLimitExceeded",
    "RingSpec",
    "StandardBasis",
    "Submodule",
    "TangentModule",
    "VarietyGerm",
    "colength",
    "compare",
    "derived_invariants",
    "detect_quasihomogeneous",
    "df_theta",
    "format_polynomial",
    "generic_linear_form",
    "gradient",
    "intersect",
    "is_finite",
    "jacobian_minors",
    "krull_dimension",
    "local_colength",
    "milnor_hypersurface",
    "milnor_icis",
    "module_sum",
    "mora_normal_form",
    "mu_BR",
    "mu_BR_rel",
    "parse_polynomial",
    "parse_problem_file",
    "partial_derivative",
    "product",
    "set_default_max_steps",
    "standard_basis",
    "submodule_pullback",
    "subquotient_dimension",
    "syzygies",
    "tau_BR",
    "theta_X",
    "tjurina_icis",
    "verify_icis",
]
