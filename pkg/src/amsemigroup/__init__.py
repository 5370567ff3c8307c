"""Numerical semigroups and Abhyankar-Moh semigroups of degree n."""
from .classification import (
    ClassificationRecord,
    DivisorChain,
    ExtremalSemigroup,
    am11_check,
    build_extremal,
    classify_extremal,
    divisor_chains,
    enumerate_am_sequences,
    verify_property2,
)
from .conditions import (
    AmCheckReport,
    AmSequence,
    DeltaReport,
    StructuralConstants,
    check_conditions,
    conductor_formula,
    delta_membership,
    delta_report,
    remark_properties,
    structural_constants,
    theorem_check,
)
from .errors import NotNumericalError, OverflowGuardError, PreconditionError, SemigroupError
from .kernels import BACKEND
from .semigroup import (
    GeneratorSet,
    MembershipTable,
    NMinimalSequence,
    build_table,
    gaps,
    membership,
    minimal_generators,
    n_minimal_sequence,
    normalize_generators,
    same_semigroup,
)

__version__ = "0.1.0"
