"""Utilities for docstring in strat-kit."""

# License: MIT


class Substitution:
    """Decorate a function's or a class' docstring to perform string
    substitution on it.

    This decorator should be robust even if obj.__doc__ is None
    (for example, if -OO was passed to the interpreter)
    """

    def __init__(self, *args, **kwargs):
        if args and kwargs:
            raise AssertionError("Only positional or keyword args are allowed")

        self.params = args or kwargs

    def __call__(self, obj):
        if obj.__doc__ is not None:
            obj.__doc__ = obj.__doc__.format(**self.params)
        return obj


_budget_docstring = """budget : int, default=None
        Maximum number of candidate expansions of the map enumeration.
        ``None`` means the value set with :func:`stratkit.set_config`
        (10 000 000 unless changed).
    """.rstrip()

_n_jobs_docstring = """n_jobs : int, default=None
        Number of workers used for the independent per-flag computations.
        ``None`` means the value set with :func:`stratkit.set_config`, which
        is 1 unless in a :obj:`joblib.parallel_backend` context.
        ``-1`` means using all processors.
    """.rstrip()
