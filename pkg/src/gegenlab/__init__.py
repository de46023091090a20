"""Exact computer algebra for the trigonometric quantum many-body system on
the circle: generalized Gegenbauer polynomials, commuting integrals of
motion, and raising/lowering operators."""

from .scalars import (
    GaussRational,
    KappaPolynomial,
    KappaRational,
    KappaPole,
    KappaZeroDivision,
    NonRealDenominator,
    Rational,
    SpectralDegeneracy,
    kappa,
    kr,
    kr_arith,
    kr_eval,
    kr_normalize,
    lin,
)
from .symfun import (
    NonPolynomialOutput,
    NonSymmetricInput,
    RankMismatch,
    Weight,
    XPolynomial,
    XRational,
    ZPolynomial,
    divide_exact,
    dominated_weights,
    lift,
    partition_weight,
    project,
    weight_partition,
    weighted_degree,
)
from .integrals import (
    Calibration,
    CommutatorReport,
    ConventionMismatch,
    EngineError,
    ZOperator,
    apply_gauge_potential,
    apply_integral,
    apply_momentum,
    calibrate,
    char_apply,
    commutator_residual,
    transcribed_operator,
)
from .gegenbauer import (
    DecompositionError,
    LVector,
    RecurrenceTable,
    ShiftNotTabulated,
    SigmaTable,
    char_eigenvalue,
    epsilon2,
    expand_product,
    gen_eigen,
    gen_recurrence,
    ground_energy,
    l_shift,
    l_vector,
    mu_vector,
    recurrence_coefficient,
    sigma_closed_form,
    step,
    tabulated_shifts,
)

__version__ = "0.1.0"
