"""Left-invariant orthogonal almost complex structures on su(2) + su(2).

The twistor space Z of such structures is a copy of CP^3; this package
evaluates the Nijenhuis norm functional on Z, realizes the two-way
correspondence with projective coordinates, certifies the closed-form
norm law together with its maximizing (ANK) set, and exports
tetrahedron-coordinate point clouds of the distinguished subsets.
"""

from .acs import (
    ACS,
    Blocks,
    acs_from_form,
    ank_reference_acs,
    blocks,
    constraint_residuals,
    fundamental_form,
    hopf_acs,
    orientation_sign,
    random_acs,
    vertex_acs,
)
from .algebra import bracket, metric, nabla
from .cp3 import CP3Point, acs_to_cp3, cp3_to_acs, tetra_coords
from .exterior import TwoForm, eval_form, form_inner, wedge
from .kernels import BACKEND
from .nearly_kaehler import ank_form, is_ank, nabla_omega, nk_defect
from .nijenhuis import (
    calibration_constant,
    closed_form_norm,
    cofactor_checks,
    integrable_acs,
    is_integrable,
    max_norm,
    nijenhuis,
    nijenhuis_norm,
)
from .search import SearchReport, maximize, minimize
from .zgeom import (
    Edge,
    PolarPairParams,
    ank_circle_acs,
    circle_form,
    circle_point,
    edge01_closed_form,
    edge01_form,
    edge_point,
    generalized_edge_contains,
    invert_ank_circle,
    invert_circle,
    polar_contains,
    polar_pair_points,
)

__version__ = "0.1.0"

__all__ = [
    "ACS",
    "BACKEND",
    "Blocks",
    "CP3Point",
    "Edge",
    "PolarPairParams",
    "SearchReport",
    "TwoForm",
    "acs_from_form",
    "acs_to_cp3",
    "ank_circle_acs",
    "ank_form",
    "ank_reference_acs",
    "blocks",
    "bracket",
    "calibration_constant",
    "circle_form",
    "circle_point",
    "closed_form_norm",
    "cofactor_checks",
    "constraint_residuals",
    "cp3_to_acs",
    "edge01_closed_form",
    "edge01_form",
    "edge_point",
    "eval_form",
    "form_inner",
    "fundamental_form",
    "generalized_edge_contains",
    "hopf_acs",
    "integrable_acs",
    "invert_ank_circle",
    "invert_circle",
    "is_ank",
    "is_integrable",
    "max_norm",
    "maximize",
    "metric",
    "minimize",
    "nabla",
    "nabla_omega",
    "nijenhuis",
    "nijenhuis_norm",
    "nk_defect",
    "orientation_sign",
    "polar_contains",
    "polar_pair_points",
    "random_acs",
    "tetra_coords",
    "vertex_acs",
    "wedge",
]
