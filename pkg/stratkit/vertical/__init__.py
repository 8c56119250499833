"""
The :mod:`stratkit.vertical` module includes P-labelled simplicial sets,
their verticalization, the labelled subdivision and the correspondence with
cofibrant diagrams.
"""

from ._labelled import LabelledSimplicialSet
from ._labelled import U
from ._labelled import U_map
from ._labelled import Verticalization
from ._labelled import diagram_to_labelled
from ._labelled import is_label_preserving
from ._labelled import is_vertical_map
from ._labelled import label_subdivision
from ._labelled import verticalize

__all__ = [
    "LabelledSimplicialSet",
    "U",
    "U_map",
    "Verticalization",
    "diagram_to_labelled",
    "is_label_preserving",
    "is_vertical_map",
    "label_subdivision",
    "verticalize",
]
