"""Exact and numerical toolkit for the duality between spin-network
evaluations and the 2d Ising model on the tetrahedron graph."""

from .errors import (
    AdmissibilityError,
    CouplingError,
    DegenerateGeometryError,
    FlatTetrahedronError,
    LorentzianRegimeError,
    PoleError,
    TetraIsingError,
    UnknownGraphError,
)
from .graphs import (
    BUILTIN_NAMES,
    Graph,
    LoopPolynomial,
    TETRA,
    TETRA_DUAL,
    THETA,
    TRIANGLE,
    builtin_graph,
    dual_couplings,
    duality_map,
    enumerate_cycles,
    eval_loop_polynomial,
)
from .recoupling import (
    FigurateNumber,
    figurate,
    figurate_bivariate_check,
    figurate_transform_partial,
    genfun_partial_sum,
    is_admissible,
    racah_weight,
    sixj,
    triangle_coeff_sq,
)
from .ising import (
    check_high_temp,
    check_low_temp,
    check_westbury,
    duality_on_p_residuals,
    ising_partition,
    pachner_reduce,
    scissor_transform,
    self_duality_residual,
)
from .geometry import (
    TetraLengths,
    TriangleLengths,
    ZeroSet,
    cayley_menger_vsq,
    cevian_zeros,
    cycle_variables,
    dihedral_angle,
    geometric_zeros,
    pregeometric_zeros,
    quadratic_coeffs,
    triangle_angles,
    triangle_zeros,
    verify_zero,
)
from .asymptotics import (
    ReggeData,
    figurate_asymptote,
    figurate_log_ratio,
    pr_estimate,
    pr_envelope,
    regge_data,
    saddle_couplings,
    saddle_residual,
    saddle_residual_discrete,
)

__version__ = "0.1.0"
