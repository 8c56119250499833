"""Utilities for input validation"""

# License: MIT

from numbers import Integral

from .._config import get_config
from ..exceptions import MalformedInputError
from ..exceptions import raise_isinstance_error


def check_index(name, value, low, high):
    """Check that an operator index lies in ``[low, high]``.

    Parameters
    ----------
    name : str
        Name of the index, used in the error message.

    value : int
        The index.

    low, high : int
        Inclusive bounds.

    Returns
    -------
    value : int
        The validated index.
    """
    if not isinstance(value, Integral):
        raise_isinstance_error(name, [int], value)
    if not low <= value <= high:
        raise MalformedInputError(
            f"{name} must be in the range [{low}, {high}]. Got {value} instead."
        )
    return int(value)


def check_dim_bound(dim_bound):
    """Check a truncation dimension."""
    if not isinstance(dim_bound, Integral):
        raise_isinstance_error("dim_bound", [int], dim_bound)
    if dim_bound < 0:
        raise MalformedInputError(
            f"dim_bound must be non-negative. Got {dim_bound} instead."
        )
    return int(dim_bound)


def check_budget(budget):
    """Resolve the enumeration budget.

    ``None`` falls back to the global configuration.
    """
    if budget is None:
        return get_config()["budget"]
    if not isinstance(budget, Integral):
        raise_isinstance_error("budget", [int, None], budget)
    if budget <= 0:
        raise MalformedInputError(f"budget must be positive. Got {budget} instead.")
    return int(budget)


def check_n_jobs(n_jobs):
    """Resolve the number of workers, falling back to the global configuration."""
    if n_jobs is None:
        n_jobs = get_config()["n_jobs"]
    if n_jobs is not None and not isinstance(n_jobs, Integral):
        raise_isinstance_error("n_jobs", [int, None], n_jobs)
    return n_jobs


def check_flag(P, flag):
    """Parse and validate a flag of ``P``.

    Parameters
    ----------
    P : Poset

    flag : sequence or str
        Entries, or a comma separated string of element labels as given on
        the command line.

    Returns
    -------
    flag : tuple
    """
    if isinstance(flag, str):
        flag = _parse_labels(P, flag)
    return P.check_flag(flag)


def check_regular_flag(P, flag):
    """Same as :func:`check_flag` with distinct entries required."""
    if isinstance(flag, str):
        flag = _parse_labels(P, flag)
    return P.check_regular_flag(flag)


def _parse_labels(P, text):
    by_label = {str(p): p for p in P.elements}
    entries = []
    for label in text.split(","):
        label = label.strip()
        if label not in by_label:
            raise MalformedInputError(f"{label!r} is not an element of the poset.")
        entries.append(by_label[label])
    return entries
