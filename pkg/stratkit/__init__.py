"""Toolbox for simplicial sets stratified over finite posets.

``strat-kit`` is a set of exact, finite algorithms for the homotopy theory of
stratified simplicial sets: links and homotopy links, stratified
subdivisions, Ex_P, labelled simplicial sets and diagrams of links.

Subpackages
-----------
datasets
    Module which provides a named corpus of small stratified objects.
diagrams
    Module which provides diagrams indexed by regular flags, cofibrancy and
    the realization C_P.
exceptions
    Module including custom warnings and error classes used across
    strat-kit.
io
    Module which reads and writes the JSON documents of every object.
links
    Module which provides simplicial links and truncated homotopy links.
poset
    Module which provides finite posets, flags and nerves.
simplicial
    Module which provides finite simplicial sets, maps, products,
    subdivision, homology and mapping complexes.
stratified
    Module which provides stratified simplicial sets, generating
    cofibrations and stratified homotopy.
subdivision
    Module which provides sd_P, the last vertex map, Ex_P and pairings.
utils
    Module including various utilities.
vertical
    Module which provides labelled simplicial sets and verticalization.
weq
    Module which provides the weak-equivalence probes.
"""

from . import datasets
from . import diagrams
from . import exceptions
from . import io
from . import links
from . import poset
from . import simplicial
from . import stratified
from . import subdivision
from . import utils
from . import vertical
from . import weq

from ._config import config_context
from ._config import get_config
from ._config import set_config
from ._version import __version__
from .utils._show_versions import show_versions

__all__ = [
    "datasets",
    "diagrams",
    "exceptions",
    "io",
    "links",
    "poset",
    "simplicial",
    "stratified",
    "subdivision",
    "utils",
    "vertical",
    "weq",
    "config_context",
    "get_config",
    "set_config",
    "show_versions",
    "__version__",
]
