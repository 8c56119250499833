"""
The :mod:`stratkit.datasets` provides a named corpus of small stratified and
labelled simplicial sets.
"""

from ._corpus import load_corpus
from ._corpus import load_labelled_corpus
from ._corpus import make_figure_eight
from ._corpus import make_stratified_cylinder

__all__ = [
    "load_corpus",
    "load_labelled_corpus",
    "make_figure_eight",
    "make_stratified_cylinder",
]
