"""Basic Hodge numbers of Sasakian structures over generalized flag manifolds."""
from flaghodge._core import BACKEND
from flaghodge.flagcoh import (
    FlagCohomology,
    compute_flag_cohomology,
    euler_number,
    euler_weyl,
    poincare_borel,
    poincare_coset,
)
from flaghodge.polyring import IntPolynomial, eval_at_one, poly_exact_div, poly_mul
from flaghodge.rootsys import (
    ExponentSet,
    GroupSpec,
    LeviSpec,
    RootSystem,
    WeylCosetData,
    build_root_system,
    exponents,
    levi_decompose,
    levi_exponents,
    parabolic_coset_data,
    weyl_length_polynomial,
    weyl_order,
)
from flaghodge.sasaki import (
    HodgeDiamond,
    SasakiStructureRecord,
    ValidationReport,
    betti_from_diamond,
    builtin_fixtures,
    carrell_lieberman_check,
    check_finite_closed_leaves_vanishing,
    check_positivity_vanishing,
    closed_leaf_count_from_flag,
    diamond_from_flag,
    sphere_diamond,
    validate_diamond,
)

__version__ = "0.1.0"
