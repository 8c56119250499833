"""
The :mod:`stratkit.stratified` module includes simplicial sets stratified
over a poset: stratified simplices, boundaries, horns, strata, products,
stratified maps and their homotopy classes.
"""

from ._stratified import StratifiedMap
from ._stratified import StratifiedSimplicialSet
from ._stratified import as_stratified_map
from ._stratified import boundary
from ._stratified import enumerate_stratified_maps
from ._stratified import horn
from ._stratified import is_admissible
from ._stratified import is_degenerate_horn_flag
from ._stratified import standard_simplex
from ._stratified import stratification_map
from ._stratified import stratified_disjoint_union
from ._stratified import stratified_nerve
from ._stratified import stratified_product
from ._stratified import stratum
from ._stratified import subcomplex

from ._homotopy import find_homotopy_inverse
from ._homotopy import homotopy_classes
from ._homotopy import is_stratified_homotopy_equivalence

from ._generating import generating_cofibrations
from ._generating import generating_trivial_cofibrations

__all__ = [
    "StratifiedMap",
    "StratifiedSimplicialSet",
    "as_stratified_map",
    "boundary",
    "enumerate_stratified_maps",
    "find_homotopy_inverse",
    "generating_cofibrations",
    "generating_trivial_cofibrations",
    "homotopy_classes",
    "horn",
    "is_admissible",
    "is_degenerate_horn_flag",
    "is_stratified_homotopy_equivalence",
    "standard_simplex",
    "stratification_map",
    "stratified_disjoint_union",
    "stratified_nerve",
    "stratified_product",
    "stratum",
    "subcomplex",
]
