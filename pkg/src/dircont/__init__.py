"""Finite directed containers: checkers, constructions and interpretation."""

from .core import (Container, ContMorphism, DContMorphism, DirectedContainer,
                   FinSet, LawReport, NotLawfulError, StructureError, Violation,
                   check_cont_morphism, check_dcont_laws, check_dcont_morphism,
                   compose_dcont_morphisms, find_isomorphism,
                   identity_dcont_morphism, validate_container)
from .category import (PreOpMorphism, SmallCat, cat_to_dcont, check_cat_laws,
                       check_preop_morphism, cofree_cat, dcont_to_cat,
                       discrete_cat, dmorph_to_preop, find_cat_isomorphism,
                       is_linear, preop_to_dmorph)
from .constructions import (InverseMap, OminusMap, check_bidirected,
                            coproduct_dcont, groupoid_inverse_search,
                            inverse_from_ominus, is_groupoid,
                            ominus_from_inverse, opposite_cat, opposite_dcont,
                            tensor_dcont)
from .interp import (ContainerValue, check_comonad_laws, check_comonad_morphism,
                     comult, counit, enum_nat_trans, enum_values,
                     interp_morphism, map_value, nat_trans_oracle_count)
from .enumerate import (DEFAULT_BUDGET, enum_morphisms, enum_structures,
                        morphism_space, quotient_by_iso, structure_space)
from . import examples

__all__ = [
    "Container", "ContMorphism", "DContMorphism", "DirectedContainer",
    "FinSet", "LawReport", "NotLawfulError", "StructureError", "Violation",
    "check_cont_morphism", "check_dcont_laws", "check_dcont_morphism",
    "compose_dcont_morphisms", "find_isomorphism", "identity_dcont_morphism",
    "validate_container",
    "PreOpMorphism", "SmallCat", "cat_to_dcont", "check_cat_laws",
    "check_preop_morphism", "cofree_cat", "dcont_to_cat", "discrete_cat",
    "dmorph_to_preop", "find_cat_isomorphism", "is_linear", "preop_to_dmorph",
    "InverseMap", "OminusMap", "check_bidirected", "coproduct_dcont",
    "groupoid_inverse_search", "inverse_from_ominus", "is_groupoid",
    "ominus_from_inverse", "opposite_cat", "opposite_dcont", "tensor_dcont",
    "ContainerValue", "check_comonad_laws", "check_comonad_morphism", "comult",
    "counit", "enum_nat_trans", "enum_values", "interp_morphism", "map_value",
    "nat_trans_oracle_count",
    "DEFAULT_BUDGET", "enum_morphisms", "enum_structures", "morphism_space",
    "quotient_by_iso", "structure_space",
    "examples",
]
