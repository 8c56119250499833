"""
The :mod:`stratkit.utils` module includes various utilities.
"""

from ._docstring import Substitution

from ._validation import check_budget
from ._validation import check_dim_bound
from ._validation import check_flag
from ._validation import check_index
from ._validation import check_n_jobs
from ._validation import check_regular_flag

__all__ = [
    "check_budget",
    "check_dim_bound",
    "check_flag",
    "check_index",
    "check_n_jobs",
    "check_regular_flag",
    "Substitution",
]
