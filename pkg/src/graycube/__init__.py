"""graycube: exact combinatorics of augmented directed complexes.

Cubes under the tensor product, suspensions, wedge sums, a brute-force
cell-enumeration oracle, and machine-verified section/retraction pairs
exhibiting wedges and suspensions of cubes (and every tree realization)
as retracts of cubes.
"""

from .adc import ADC, Bipointing, find_relabel_iso, validate_complex
from .chains import Chain, Key, parse_key, render_key
from .errors import (
    CompositionError, ConstructionError, GrayCubeError, InternalCheckError,
    PushoutError, ResourceError, StructuralError,
)
from .construct import (
    const_map, cube, cube_boundary, face_left, face_right, face_sandwich,
    interval, max_cube_dim, point, poles, skeleton, suspension,
    suspension_collapse, suspension_morphism, tensor, tensor_all,
    tensor_morphism, wedge, wedge_induced, wedge_morphism, wedge_pushout,
)
from .morphisms import (
    ADCMorphism, compose, compose_all, identity_morphism, is_identity,
    validate_morphism,
)
from .pushout import PushoutData, induced_from_pushout, pushout
from .realize import (
    Cell, apply_morphism_cellwise, atom_cell, cells_between,
    check_fully_faithful, compose_cells, enumerate_cells, hom_set,
    identity_cell, point_cell, validate_cell,
)
from .retract import (
    RetractWitness, cube_witness, lift_retract, make_witness, point_witness,
    suspension_quotient, suspension_section, suspension_step_quotient,
    suspension_step_section, wedge_retraction, wedge_section,
    wedge_step_retraction, wedge_step_retraction_dual, wedge_step_section,
    wedge_step_section_dual, wedge_tensor_inclusion,
    wedge_tensor_inclusion_dual,
)
from .sections import SectionSearch, solve_sections
from .theta import (
    ThetaTree, all_trees, dimension, parse_tree, point_count, theta_to_adc,
    theta_witness, verify_theta_witness, witness_cube_dim,
)

__all__ = [name for name in dir() if not name.startswith("_")]
