"""Exact reflection-deformed differential-difference operators and their
verification harness: scalar field arithmetic, root systems, deformed
derivatives and their twisted and Clifford-contracted forms, weighted inner
products, hand-transcribed coordinate realizations, and the suite runner.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .algebra import FieldElem, Rational, felem, parse_scalar, sqrt_rational
from .polyring import (
    Monomial,
    PoleError,
    Polynomial,
    RationalSection,
    SectionVector,
    divided_difference,
    parse_poly,
)
from .rootsys import (
    Multiplicity,
    Point,
    RootSystemA,
    WallPoleError,
    enumerate_group,
    pairing,
    reflect,
    system_from_name,
    weight_eval,
    weight_poly,
)
from .dunkl import (
    DunklContext,
    OrthonormalBasis,
    commutator,
    drift_apply,
    dunkl_apply,
    dunkl_laplacian,
)
from .reps import (
    Representation,
    VectorField,
    builtin_rep,
    check_equivariance,
    twisted_commutator,
    twisted_dunkl_apply,
)
from .clifford import CliffordGens, SpinorField, flat_dirac_apply, make_generators
from .dirac import (
    DiracContext,
    basis_invariance_check,
    dirac_dunkl_apply,
    dirac_laplacian,
    dirac_square_residual,
)
from .inner import (
    DEFAULT_SEED,
    ExactIntegral,
    GaussianTestFn,
    MCEstimate,
    adjoint_residual_derivative,
    gaussian_moment,
    inner_product_exact,
    inner_product_mc,
    skew_residual,
)
from .calogero import (
    ExplicitOperator,
    OperatorReport,
    crosscheck_generic,
    explicit_apply,
    hamiltonian_report,
)
from .suites import SUITE_NAMES, run_suites

__all__ = [
    "__version__",
    "BACKEND",
    "FieldElem",
    "Rational",
    "felem",
    "parse_scalar",
    "sqrt_rational",
    "Monomial",
    "PoleError",
    "Polynomial",
    "RationalSection",
    "SectionVector",
    "divided_difference",
    "parse_poly",
    "Multiplicity",
    "Point",
    "RootSystemA",
    "WallPoleError",
    "enumerate_group",
    "pairing",
    "reflect",
    "system_from_name",
    "weight_eval",
    "weight_poly",
    "DunklContext",
    "OrthonormalBasis",
    "commutator",
    "drift_apply",
    "dunkl_apply",
    "dunkl_laplacian",
    "Representation",
    "VectorField",
    "builtin_rep",
    "check_equivariance",
    "twisted_commutator",
    "twisted_dunkl_apply",
    "CliffordGens",
    "SpinorField",
    "flat_dirac_apply",
    "make_generators",
    "DiracContext",
    "basis_invariance_check",
    "dirac_dunkl_apply",
    "dirac_laplacian",
    "dirac_square_residual",
    "DEFAULT_SEED",
    "ExactIntegral",
    "GaussianTestFn",
    "MCEstimate",
    "adjoint_residual_derivative",
    "gaussian_moment",
    "inner_product_exact",
    "inner_product_mc",
    "skew_residual",
    "ExplicitOperator",
    "OperatorReport",
    "crosscheck_generic",
    "explicit_apply",
    "hamiltonian_report",
    "SUITE_NAMES",
    "run_suites",
]
