"""
The :mod:`stratkit.diagrams` module includes diagrams of simplicial sets
indexed by regular flags, their cofibrancy, the realization ``C_P`` and
levelwise comparison of diagram maps.
"""

from ._diagram import Diagram
from ._diagram import DiagramMap
from ._diagram import generator
from ._diagram import identity_map
from ._diagram import is_cofibrant
from ._diagram import representable

from ._cp import C_P
from ._cp import flag_inclusion

from ._compare import LevelComparison
from ._compare import compare_map
from ._compare import is_pi0_bijection
from ._compare import levelwise_compare

__all__ = [
    "C_P",
    "Diagram",
    "DiagramMap",
    "LevelComparison",
    "compare_map",
    "flag_inclusion",
    "generator",
    "identity_map",
    "is_cofibrant",
    "is_pi0_bijection",
    "levelwise_compare",
    "representable",
]
