"""Levelwise comparison of maps of diagrams."""

# License: MIT

import logging
from typing import NamedTuple

from joblib import Parallel, delayed

from ..simplicial import is_homology_isomorphism
from ..simplicial import pi0
from ..utils import Substitution
from ..utils import check_n_jobs
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)


class LevelComparison(NamedTuple):
    """Outcome of comparing one component of a map.

    ``homology_isomorphic`` records whether the component induces
    isomorphisms on homology up to the compared degree.
    """

    flag: tuple
    pi0_bijective: bool
    homology_isomorphic: bool

    @property
    def passed(self):
        return self.pi0_bijective and self.homology_isomorphic


def is_pi0_bijection(f):
    """Whether a simplicial map induces a bijection on components."""
    source = pi0(f.source)
    target = pi0(f.target)
    component = {v: c for c, members in enumerate(target) for v in members}
    images = [component[f.images[members[0]][0]] for members in source]
    return len(set(images)) == len(images) == len(target)


def compare_map(flag, f, max_deg):
    """Whether ``f`` is a bijection on ``pi_0`` and an isomorphism on
    homology up to ``max_deg``."""
    result = LevelComparison(
        flag, is_pi0_bijection(f), is_homology_isomorphism(f, max_deg)
    )
    logger.info("Level %s: passed=%s", flag, result.passed)
    return result


@Substitution(n_jobs=_n_jobs_docstring)
def levelwise_compare(f, max_deg, n_jobs=None):
    """Compare a map of diagrams flag by flag.

    Parameters
    ----------
    f : DiagramMap

    max_deg : int
        Highest homology degree compared.

    {n_jobs}

    Returns
    -------
    report : list of LevelComparison
        One entry per regular flag, in flag order.
    """
    return Parallel(n_jobs=check_n_jobs(n_jobs), prefer="threads")(
        delayed(compare_map)(I, f.components[I], max_deg) for I in f.source.flags
    )
