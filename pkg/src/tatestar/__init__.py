"""Exact twisted convolution on elliptic p-torsion and the tame local pairing.

The package has three layers: the torsion group with its symplectic pairing
and exact Q(zeta_p) coefficients (torsion, cyclotomic, laurent); the twisted
group algebra and its closed-form p-th powers (star_algebra, closed_forms,
qplane); and the tame local field model where the pairing becomes an explicit
Hilbert symbol (local_pairing).  Everything is exact; there are no floats.
"""

from .closed_forms import (
    ClosedFormResult,
    build_delta,
    gamma_form,
    intermediate_form,
    multiplicative_specialization,
    rho_form,
)
from .cyclotomic import CycNumber
from .errors import AmbientMismatchError, BasisError, SubstitutionError
from .laurent import LaurentPoly, Monomial
from .local_pairing import (
    PairingValue,
    TameElement,
    TameFieldModel,
    ZERO,
    hilbert,
    iota,
    is_norm_from,
    one_minus,
    qk_split,
    unramified_scaling,
)
from .qplane import QPlaneElement, line_operator, norm_identity_sides, qplane_identity_sides
from .star_algebra import (
    AlgebraElement,
    GammaAssignment,
    PrimeFieldCoefficients,
    RhoAssignment,
    SymbolicCoefficients,
    coboundary,
    delta_inverse,
    star,
    star_pow,
)
from .torsion import RootOfUnity, TorsionPoint, basis, epsilon, w_map, weil

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AmbientMismatchError",
    "BasisError",
    "ClosedFormResult",
    "CycNumber",
    "GammaAssignment",
    "LaurentPoly",
    "Monomial",
    "PairingValue",
    "PrimeFieldCoefficients",
    "QPlaneElement",
    "RhoAssignment",
    "RootOfUnity",
    "SubstitutionError",
    "SymbolicCoefficients",
    "TameElement",
    "TameFieldModel",
    "TorsionPoint",
    "ZERO",
    "basis",
    "build_delta",
    "coboundary",
    "delta_inverse",
    "epsilon",
    "gamma_form",
    "hilbert",
    "intermediate_form",
    "iota",
    "is_norm_from",
    "line_operator",
    "multiplicative_specialization",
    "norm_identity_sides",
    "one_minus",
    "qk_split",
    "qplane_identity_sides",
    "rho_form",
    "star",
    "star_pow",
    "unramified_scaling",
    "w_map",
    "weil",
    "__version__",
]
