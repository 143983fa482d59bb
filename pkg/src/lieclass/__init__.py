"""Exact Cartan-class and coadjoint-orbit toolkit for finite-dimensional Lie algebras."""
from .algebra import LieAlgebra, Subspace, abelian, center, direct_sum, is_nilpotent, is_solvable, jacobi_check
from .cartan import (cartan_class, cartan_class_wedge_oracle, characteristic_space_abelian_check,
                     class_spectrum_sample, index, is_contact, is_frobenius, max_class_witness,
                     orbit_dimension, verify_class_upper_bound)
from .catalog import build, list_entries
from .charseq import CharSequence, characteristic_sequence, characteristic_sequence_of
from .deform import Cochain2, ScalingMap, central_extension, contract, verify_quadratic_deformation
from .dsl import dumps, load, parse
from .errors import (BadParams, DimensionMismatch, InDerivedAlgebra, JacobiError, LieClassError,
                     NotAnIdeal, NotClosed, NotNilpotent, NotSymplectic, OddDimension,
                     PaperInconsistency, SingularScaling, ZeroForm)
from .forms import KForm, ce_differential, wedge
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra", "Subspace", "abelian", "center", "direct_sum", "is_nilpotent", "is_solvable",
    "jacobi_check", "cartan_class", "cartan_class_wedge_oracle", "characteristic_space_abelian_check",
    "class_spectrum_sample", "index", "is_contact", "is_frobenius", "max_class_witness",
    "orbit_dimension", "verify_class_upper_bound", "build", "list_entries", "CharSequence",
    "characteristic_sequence", "characteristic_sequence_of", "Cochain2", "ScalingMap",
    "central_extension", "contract", "verify_quadratic_deformation", "dumps", "load", "parse",
    "BadParams", "DimensionMismatch", "InDerivedAlgebra", "JacobiError", "LieClassError",
    "NotAnIdeal", "NotClosed", "NotNilpotent", "NotSymplectic", "OddDimension",
    "PaperInconsistency", "SingularScaling", "ZeroForm", "KForm", "ce_differential", "wedge",
    "BACKEND",
]
