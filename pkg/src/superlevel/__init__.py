"""Exact computations with level structures on superelliptic curves."""

from .branch import (BranchConfiguration, MultiplicityVector, affine_model, genus_of,
                     monodromy_cycles, normalize_multiplicity_vector, ramification_count)
from .divisors import DivisorClass, delta_rank, normal_form, pairing_exponent, weil_ratio_ramified
from .exact import ExactRational, FieldScalar, fp_inverse, rational_eval_poly
from .hyperelliptic import build_basis, embed_symmetric_group, hyp_component_count
from .symplectic import (FpMatrix, SymplecticForm, enumerate_sp, is_symplectic,
                         left_coset_count, sp_group_order)
from .trigonal import (aut_group, census_sum, component_count_formula, psi_generator_image,
                       psi_subgroup, trigonal_indexing_set)

__version__ = "0.1.0"
