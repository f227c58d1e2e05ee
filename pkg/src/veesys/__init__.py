"""Covector systems of Coxeter type and their logarithmic Frobenius checks.

The package constructs the classical and exceptional root systems together
with their deformed and restricted families, decides the two-plane
conditions characterising vee-systems, cross-checks the verdict through
WDVV / associativity residuals of the logarithmic multiplication, restricts
systems to intersection subspaces, decides equivalence up to an invertible
linear map, and enumerates the restrictions of the exceptional groups by
parabolic class.
"""

from .builders import (
    SystemSpec,
    build,
    build_e8_even_sign_variant,
    parse_spec_string,
    simple_roots,
)
from .catalog import (
    CatalogEntry,
    ParabolicClass,
    build_catalog,
    enumerate_parabolic_classes,
    verify_paper_equivalences,
    verify_theorem4_identifications,
)
from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    DegenerateForm,
    EmptyRestriction,
    EmptySubspace,
    GramForm,
    IndefiniteForm,
    InvalidSpec,
    SamplingExhausted,
    SingularPoint,
    TolerancePolicy,
    VeesysError,
    ZeroCovector,
    canonical_direction,
    cvee,
    find_covector,
    gram,
    random_regular_point,
)
from .equivalence import Certificate, equivalent, normalize_to_unit_gram
from .frobenius import (
    associativity_residual,
    fa_matrix,
    frobenius_residual,
    multiply,
    prepotential,
    wdvv_residual,
)
from .restriction import (
    RestrictionResult,
    Subspace,
    limit_check,
    restrict,
    subsystem_of,
    tangency_check,
)
from .veecheck import (
    PlaneClass,
    VeeReport,
    check_reducible,
    check_vee,
    check_vee_geometric,
    check_well_distributed,
    plane_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "Certificate",
    "CovectorSystem",
    "DEFAULT_POLICY",
    "DegenerateForm",
    "EmptyRestriction",
    "EmptySubspace",
    "GramForm",
    "IndefiniteForm",
    "InvalidSpec",
    "ParabolicClass",
    "PlaneClass",
    "RestrictionResult",
    "SamplingExhausted",
    "SingularPoint",
    "Subspace",
    "SystemSpec",
    "TolerancePolicy",
    "VeeReport",
    "VeesysError",
    "ZeroCovector",
    "associativity_residual",
    "build",
    "build_catalog",
    "build_e8_even_sign_variant",
    "canonical_direction",
    "check_reducible",
    "check_vee",
    "check_vee_geometric",
    "check_well_distributed",
    "cvee",
    "enumerate_parabolic_classes",
    "equivalent",
    "fa_matrix",
    "find_covector",
    "frobenius_residual",
    "gram",
    "limit_check",
    "multiply",
    "normalize_to_unit_gram",
    "parse_spec_string",
    "plane_partition",
    "prepotential",
    "random_regular_point",
    "restrict",
    "simple_roots",
    "subsystem_of",
    "tangency_check",
    "verify_paper_equivalences",
    "verify_theorem4_identifications",
    "wdvv_residual",
]
