"""Test the docstring substitution."""
# License: MIT

import pytest

from stratkit.links import diagram_D
from stratkit.simplicial import enumerate_maps
from stratkit.utils import Substitution
from stratkit.utils._docstring import _budget_docstring
from stratkit.utils._docstring import _n_jobs_docstring


def _template_function():
    """Enumerate.

    Parameters
    ----------
    {budget}
    """


class _TemplateClass:
    """Build.

    Parameters
    ----------
    {n_jobs}
    """


@pytest.mark.parametrize(
    "obj, expected",
    [(_template_function, _budget_docstring), (_TemplateClass, _n_jobs_docstring)],
)
def test_substitution_fills_the_template(obj, expected):
    obj = Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)(obj)
    assert expected in obj.__doc__
    assert "{" not in obj.__doc__


def test_substitution_keeps_a_missing_docstring():
    def undocumented():
        pass

    assert Substitution(budget="x")(undocumented).__doc__ is None


@pytest.mark.parametrize(
    "func, expected",
    [(enumerate_maps, "candidate expansions"), (diagram_D, "per-flag computations")],
)
def test_public_docstrings_are_substituted(func, expected):
    assert expected in func.__doc__
    assert "{budget}" not in func.__doc__


def test_substitution_rejects_mixed_arguments():
    with pytest.raises(AssertionError):
        Substitution("a", b="b")
