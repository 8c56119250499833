"""
The :mod:`stratkit.weq` module includes probes that refute or support that
a stratified map is a weak equivalence.
"""

from ._probe import PASSES
from ._probe import REFUTED
from ._probe import ProbeReport
from ._probe import probe
from ._probe import probe_diagram

__all__ = ["PASSES", "REFUTED", "ProbeReport", "probe", "probe_diagram"]
