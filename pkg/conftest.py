# This file is here so that when running from the root folder
# ./stratkit is added to sys.path by pytest.
# See https://docs.pytest.org/en/latest/pythonpath.html for more details.

import logging

import pytest


@pytest.fixture(autouse=True)
def _restore_stratkit_logger():
    logger = logging.getLogger("stratkit")
    handlers, level = list(logger.handlers), logger.level
    yield
    logger.handlers[:] = handlers
    logger.setLevel(level)
