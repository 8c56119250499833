"""Global configuration for strat-kit."""

# License: MIT

from contextlib import contextmanager

from .exceptions import MalformedInputError

_global_config = {
    "budget": 10_000_000,
    "n_jobs": None,
}


def get_config():
    """Retrieve the current strat-kit configuration.

    Returns
    -------
    config : dict
        Keys are parameter names that can be passed to :func:`set_config`.

    Examples
    --------
    >>> from stratkit import get_config
    >>> get_config()["budget"]
    10000000
    """
    return _global_config.copy()


def set_config(budget=None, n_jobs=None):
    """Set global strat-kit configuration.

    Parameters
    ----------
    budget : int, default=None
        Maximum number of candidate expansions for every map enumeration.
        Enumerations stop with :class:`~stratkit.exceptions.BudgetExceededError`
        when they reach it. ``None`` keeps the current value.

    n_jobs : int, default=None
        Number of workers used for independent per-flag computations.
        ``None`` keeps the current value.
    """
    if budget is not None:
        if int(budget) <= 0:
            raise MalformedInputError(f"budget must be positive. Got {budget}.")
        _global_config["budget"] = int(budget)
    if n_jobs is not None:
        _global_config["n_jobs"] = n_jobs


@contextmanager
def config_context(**new_config):
    """Context manager for global strat-kit configuration.

    Parameters
    ----------
    **new_config
        Same parameters as :func:`set_config`.

    Examples
    --------
    >>> from stratkit import config_context, get_config
    >>> with config_context(budget=100):
    ...     get_config()["budget"]
    100
    """
    old_config = get_config()
    set_config(**new_config)
    try:
        yield
    finally:
        _global_config.clear()
        _global_config.update(old_config)
