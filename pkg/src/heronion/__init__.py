"""heronion: exact area polynomials for cyclic and semicyclic polygons,
with a numeric solver enumerating every realizable area."""

from .poly_core import (
    MultiPoly,
    NotDivisible,
    PolyError,
    TableMismatch,
    UniView,
    UnknownVariable,
    VarTable,
    discriminant,
    exact_divide,
    from_json,
    from_text,
    lift,
    mp_arith,
    mp_eval,
    mp_substitute,
    poly_sqrt,
    resultant,
    resultant_prs,
    to_json,
    to_text,
)
from .symgen import (
    DECoeffs,
    TauVector,
    de_coeffs,
    de_generating_form,
    elementary_symmetric,
    fibonacci_poly,
    main_identity_residual,
)
from .geom_solver import (
    AreaSolution,
    GeomError,
    MobiusPoly,
    PolygonConfig,
    config_from_angles,
    crossing_parity,
    delta_count,
    enumerate_areas,
    mobius_polynomial,
    mobius_prestrip_degree,
    mobius_prestrip_leading,
    semicyclic_parity,
)
from .heron_engine import (
    BinaryForm,
    EngineError,
    PipelineError,
    PnPolynomial,
    TUSystem,
    alpha7_specialized,
    alpha_cyclic_small,
    alpha_semicyclic,
    build_tu,
    factorization_witness,
    fg_polynomials,
    ideal_membership_cofactors,
    mplcty_divisibility_check,
    pn_polynomial,
    quintic_covariant_C,
    relative_residual,
    specialization_checks,
    transvectant,
)

__version__ = "0.1.0"
