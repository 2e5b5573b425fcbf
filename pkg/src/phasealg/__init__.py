"""Toolkit for the deformed algebra of quantum phase-space observables.

Construction and axiom checks of the 15-generator algebra, its Killing
classification and pseudoorthogonal embedding, Casimir operators, spinor
uncertainty relations, and the quark-mass arithmetic built on them.
"""

from .core import (
    CANONICAL_PARAMS,
    DIM,
    F,
    F_PAIRS,
    GENERATOR_NAMES,
    ID,
    InternalConsistencyError,
    InvalidInputError,
    METRIC_DIAG,
    P,
    ParameterSet,
    Representation,
    StructureTensor,
    UnitsParams,
    UnsupportedDomainError,
    X,
    bracket,
    basis_element,
    convert_units,
    jacobi_residual,
    structure_constants,
)
from .classify import (
    AlgebraClass,
    Embedding,
    adjoint_representation,
    canonical_inertia,
    inertia,
    killing_det,
    killing_form,
    pseudo_orthogonal_embedding,
    semisimplicity_indicator,
    so_structure_constants,
)
from .casimir import CasimirReport, casimir_eps, casimir_k2, kgf_check, levi_civita6
from .spinor import (
    GammaBasis,
    UncertaintyReport,
    gamma_basis,
    robertson,
    spin_up_state,
    spinor_momentum_rep,
)
from .pheno import (
    DGLOptions,
    MassDomainError,
    MassInputs,
    current_mass,
    dgl_spectrum,
    mu_s_from_masses,
)

# submodules stay reachable as attributes; the classifier function itself
# lives at phasealg.classify.classify
from . import casimir, classify, core, linalg, pheno, spinor  # noqa: E402,F811

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
