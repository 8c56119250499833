"""Test for the exceptions modules"""
# License: MIT

import pytest

from stratkit.exceptions import BudgetExceededError
from stratkit.exceptions import MalformedInputError
from stratkit.exceptions import NotCofibrantError
from stratkit.exceptions import raise_isinstance_error


def test_raise_isinstance_error():
    var = 10.0
    with pytest.raises(MalformedInputError, match="has to be one of"):
        raise_isinstance_error("var", [int], var)
    with pytest.raises(ValueError):
        raise_isinstance_error("var", [int], var)


def test_budget_exceeded_error_keeps_the_budget():
    error = BudgetExceededError(12, "holink")
    assert error.budget == 12
    assert "holink exceeded the budget of 12" in str(error)
    assert isinstance(error, RuntimeError)


def test_not_cofibrant_error_keeps_the_certificate():
    error = NotCofibrantError(("not-mono", (0,), (0, 1)))
    assert error.certificate == ("not-mono", (0,), (0, 1))
    assert "not-mono" in str(error)
