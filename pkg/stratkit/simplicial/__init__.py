"""
The :mod:`stratkit.simplicial` module provides finite simplicial sets with
normal forms, products, colimits, barycentric subdivision, map enumeration
and homology.
"""

from ._simplicial_set import SimplexRef
from ._simplicial_set import SimplicialSet
from ._simplicial_set import chain_ref
from ._simplicial_set import disjoint_union
from ._simplicial_set import euler_characteristic
from ._simplicial_set import face_closure
from ._simplicial_set import from_chains
from ._simplicial_set import standard_simplex_set
from ._simplicial_set import sub_simplicial_set
from ._simplicial_set import surjection_from_word
from ._simplicial_set import verify_simplicial_identities
from ._simplicial_set import word_from_surjection

from ._maps import SimplicialMap
from ._maps import compose
from ._maps import enumerate_maps
from ._maps import identity
from ._maps import vertex_map

from ._product import pair_ref
from ._product import product
from ._product import product_map
from ._product import split_ref

from ._colimit import Colimit
from ._colimit import colimit
from ._colimit import pushout

from ._subdivision import last_vertex
from ._subdivision import sd
from ._subdivision import sd_chain_ref
from ._subdivision import sd_map

from ._homology import HomologyReport
from ._homology import boundary_matrix
from ._homology import chain_map_matrix
from ._homology import homology
from ._homology import induced_homology_rank
from ._homology import is_homology_isomorphism
from ._homology import pi0
from ._homology import smith_normal_form

from ._isomorphism import find_isomorphism
from ._isomorphism import is_isomorphic

from ._mapping import MappingComplex
from ._mapping import ShapeFamily

__all__ = [
    "SimplexRef",
    "SimplicialSet",
    "SimplicialMap",
    "Colimit",
    "HomologyReport",
    "MappingComplex",
    "ShapeFamily",
    "boundary_matrix",
    "chain_map_matrix",
    "chain_ref",
    "colimit",
    "compose",
    "disjoint_union",
    "enumerate_maps",
    "euler_characteristic",
    "face_closure",
    "find_isomorphism",
    "from_chains",
    "homology",
    "induced_homology_rank",
    "is_homology_isomorphism",
    "identity",
    "is_isomorphic",
    "last_vertex",
    "pair_ref",
    "pi0",
    "product",
    "product_map",
    "pushout",
    "sd",
    "sd_chain_ref",
    "sd_map",
    "smith_normal_form",
    "split_ref",
    "standard_simplex_set",
    "sub_simplicial_set",
    "surjection_from_word",
    "vertex_map",
    "verify_simplicial_identities",
    "word_from_surjection",
]
