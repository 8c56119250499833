"""
The :mod:`stratkit.poset` module includes finite posets, their flags and
regular flags, and their nerves.
"""

from ._poset import Poset
from ._poset import flag_subflag
from ._poset import flags
from ._poset import regular_flags
from ._poset import underlying_regular

from ._nerve import nerve

__all__ = [
    "Poset",
    "flag_subflag",
    "flags",
    "nerve",
    "regular_flags",
    "underlying_regular",
]
