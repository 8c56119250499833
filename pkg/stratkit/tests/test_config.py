"""Test the global configuration."""
# License: MIT

import pytest

from stratkit import config_context
from stratkit import get_config
from stratkit import set_config
from stratkit.exceptions import BudgetExceededError
from stratkit.exceptions import MalformedInputError
from stratkit.poset import Poset
from stratkit.stratified import enumerate_stratified_maps
from stratkit.stratified import standard_simplex


def test_config_context():
    assert get_config() == {"budget": 10_000_000, "n_jobs": None}
    with config_context(budget=5, n_jobs=2):
        assert get_config() == {"budget": 5, "n_jobs": 2}
        with config_context(budget=6):
            assert get_config() == {"budget": 6, "n_jobs": 2}
        assert get_config()["budget"] == 5
    assert get_config() == {"budget": 10_000_000, "n_jobs": None}


def test_config_context_restores_on_error():
    with pytest.raises(ValueError):
        with config_context(budget=5):
            raise ValueError
    assert get_config()["budget"] == 10_000_000


def test_set_config_rejects_a_non_positive_budget():
    with pytest.raises(MalformedInputError, match="positive"):
        set_config(budget=0)


def test_configured_budget_reaches_enumerations():
    P = Poset([0, 1], [(0, 1)])
    K, L = standard_simplex(P, (0, 0, 1)), standard_simplex(P, (0, 0, 0, 1, 1))
    with config_context(budget=2):
        with pytest.raises(BudgetExceededError):
            enumerate_stratified_maps(K, L)
