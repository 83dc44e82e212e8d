"""Generalized and quasi-Yang-Baxter operators, braid representations, and fusion-ring integrality checks."""

from .braid import BraidWord, free_reduce, random_word, relator_instances
from .fusion import (
    FusionData,
    MultiplicityWindow,
    ObstructionReport,
    hom_dims,
    inclusion_matrix,
    multiplicity_search,
    obstruction_test,
    period_and_stabilization,
)
from .gybe import (
    ClosureReport,
    GybOperator,
    SpectrumClass,
    build_generator,
    check_braid_relations,
    check_far_commutativity,
    check_gybe,
    classify_spectrum,
    image_closure,
    projective_order,
    represent,
)
from .hecke import HeckeFit, TraceReport, fit_quadratic, markov_check, tl_quotient_dims
from .linalg import DomainError, InputError, NumericalError, Tolerance
from .quasi import (
    QuasiBraidedSpace,
    TruncationError,
    build_a_n,
    check_axiom1,
    check_axiom2,
    pentagon_a2,
    quasi_represent,
)
from .quaternion import Quat, QuatTensor3, build_r, emit_matrix, quat_mul, rep2

__version__ = "0.1.0"
