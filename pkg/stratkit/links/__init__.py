"""
The :mod:`stratkit.links` module includes simplicial links, truncated
homotopy links and the diagram ``D_P`` of a stratified simplicial set.
"""

from ._link import induced_link_map
from ._link import link

from ._holink import HolinkFamily
from ._holink import diagram_D
from ._holink import diagram_D_map
from ._holink import holink
from ._holink import holink_restriction
from ._holink import induced_holink_map
from ._holink import prism

__all__ = [
    "HolinkFamily",
    "diagram_D",
    "diagram_D_map",
    "holink",
    "holink_restriction",
    "induced_holink_map",
    "induced_link_map",
    "link",
    "prism",
]
