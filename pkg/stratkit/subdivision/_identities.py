"""Relations between the maps ``j^k``, ``r^k`` and the subdivided cofaces and
codegeneracies of stratified simplices.

Every map involved goes between subdivided simplices, which are ordered
complexes, so two composites agree exactly when they agree on vertices.
Each instance is checked on every vertex of its domain.
"""

# License: MIT

import logging
from typing import NamedTuple, Tuple

from joblib import Parallel, delayed

from ._model import degeneracy_vertex
from ._model import delete_entry
from ._model import face_vertex
from ._model import j_vertex
from ._model import r_vertex
from ._model import repeat_entry
from ._model import simplex_vertices
from ..poset import flags
from ..utils import Substitution
from ..utils import check_n_jobs
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)


class IdentityCheck(NamedTuple):
    """One instance of a relation.

    Attributes
    ----------
    equation : str
        The relation, composites read right to left.

    flag : tuple
        The flag ``J`` that is the target of both composites.

    indices : tuple of (str, int)
        The values of the indices of the relation.

    passed : bool
    """

    equation: str
    flag: tuple
    indices: Tuple[Tuple[str, int], ...]
    passed: bool


def _compose(*functions):
    def composite(v):
        for func in reversed(functions):
            v = func(v)
        return v

    return composite


def _identity(v):
    return v


# Every builder returns (domain flag, left composite, right composite) for the
# target flag J of length n + 1.


def _retraction_of_face(J, k):
    n = len(J) - 1
    return J, _compose(r_vertex(n, k), face_vertex(k)), _identity


def _face_before_retraction(J, k, i):
    n = len(J) - 1
    Jk = repeat_entry(J, k)
    head = _compose(j_vertex(n, k), r_vertex(n, k), face_vertex(i))
    return delete_entry(Jk, i), _compose(head, j_vertex(n, k + 1)), head


def _retraction_past_face(J, k, i):
    n = len(J) - 1
    lhs = _compose(r_vertex(n, k), face_vertex(i))
    rhs = _compose(face_vertex(i), r_vertex(n - 1, k - 1))
    return delete_entry(repeat_entry(J, k), i), lhs, rhs


def _retraction_past_j_above(J, k, h):
    n = len(J) - 1
    lhs = _compose(r_vertex(n, k), j_vertex(n + 1, h + 1))
    rhs = _compose(j_vertex(n, h), r_vertex(n, k))
    return repeat_entry(J, k), lhs, rhs


def _retraction_past_j_below(J, k, h):
    n = len(J) - 1
    lhs = _compose(r_vertex(n, k), j_vertex(n + 1, h))
    rhs = _compose(j_vertex(n, h), r_vertex(n, k))
    return repeat_entry(J, k), lhs, rhs


def _j_past_face(J, k, i):
    n = len(J) - 1
    head = _compose(j_vertex(n, k), face_vertex(i))
    return delete_entry(J, i), _compose(head, j_vertex(n - 1, k - 1)), head


def _j_kills_retraction(J, k, h):
    n = len(J) - 1
    lhs = _compose(j_vertex(n, h), r_vertex(n, k))
    rhs = _compose(j_vertex(n, h), degeneracy_vertex(k))
    return repeat_entry(J, k), lhs, rhs


def _double_retraction(J, k):
    n = len(J) - 1
    head = _compose(j_vertex(n, k), r_vertex(n, k))
    lhs = _compose(head, r_vertex(n + 1, k + 1))
    rhs = _compose(head, degeneracy_vertex(k))
    return repeat_entry(repeat_entry(J, k), k), lhs, rhs


def _degeneracy_above(J, k, h):
    n = len(J) - 1
    lhs = _compose(degeneracy_vertex(h), j_vertex(n + 1, k), r_vertex(n + 1, k))
    rhs = _compose(j_vertex(n, k), r_vertex(n, k), degeneracy_vertex(h + 1))
    return repeat_entry(repeat_entry(J, h), k), lhs, rhs


def _degeneracy_below(J, k, h):
    n = len(J) - 1
    lhs = _compose(
        degeneracy_vertex(h), j_vertex(n + 1, k + 1), r_vertex(n + 1, k + 1)
    )
    rhs = _compose(j_vertex(n, k), r_vertex(n, k), degeneracy_vertex(h))
    return repeat_entry(repeat_entry(J, k), h), lhs, rhs


def _top_j_past_degeneracy(J, k):
    n = len(J) - 1
    head = _compose(j_vertex(n, n), degeneracy_vertex(k))
    return repeat_entry(J, k), _compose(head, j_vertex(n + 1, n + 1)), head


def _instances(n):
    """Yield ``(equation, builder, indices)`` for a target of dimension ``n``."""
    span = range(n + 1)
    for k in span:
        yield "r^k sd(d^k) = 1", _retraction_of_face, (("k", k),)
    for k in span:
        for i in range(k + 1, n + 1):
            yield (
                "j^k r^k sd(d^i) j^(k+1) = j^k r^k sd(d^i)",
                _face_before_retraction,
                (("k", k), ("i", i)),
            )
    for k in span:
        for i in range(k):
            yield (
                "r^k sd(d^i) = sd(d^i) r^(k-1)",
                _retraction_past_face,
                (("k", k), ("i", i)),
            )
    # j^(h+1) on sd(Delta^(n+1)) matches j^h on sd(Delta^n) for h >= k only.
    for k in span:
        for h in range(k, n + 1):
            yield (
                "r^k j^(h+1) = j^h r^k",
                _retraction_past_j_above,
                (("k", k), ("h", h)),
            )
        for h in range(k + 1):
            yield (
                "r^k j^h = j^h r^k",
                _retraction_past_j_below,
                (("k", k), ("h", h)),
            )
    if n >= 1:
        for k in range(1, n + 1):
            for i in span:
                yield (
                    "j^k sd(d^i) j^(k-1) = j^k sd(d^i)",
                    _j_past_face,
                    (("k", k), ("i", i)),
                )
    for k in range(1, n + 1):
        for h in range(k + 1, n + 1):
            yield (
                "j^h r^k = j^h sd(s^k)",
                _j_kills_retraction,
                (("k", k), ("h", h)),
            )
    for k in span:
        yield (
            "j^k r^k r^(k+1) = j^k r^k sd(s^k)",
            _double_retraction,
            (("k", k),),
        )
    for k in span:
        for h in range(k, n + 1):
            yield (
                "sd(s^h) j^k r^k = j^k r^k sd(s^(h+1))",
                _degeneracy_above,
                (("k", k), ("h", h)),
            )
        for h in range(k + 1):
            yield (
                "sd(s^h) j^(k+1) r^(k+1) = j^k r^k sd(s^h)",
                _degeneracy_below,
                (("k", k), ("h", h)),
            )
    for k in span:
        yield (
            "j^n sd(s^k) j^(n+1) = j^n sd(s^k)",
            _top_j_past_degeneracy,
            (("k", k),),
        )


def _check(J, equation, builder, indices):
    domain, lhs, rhs = builder(J, *(value for _, value in indices))
    passed = all(lhs(v) == rhs(v) for v in simplex_vertices(domain))
    return IdentityCheck(equation, J, indices, passed)


@Substitution(n_jobs=_n_jobs_docstring)
def verify_identities(P, max_len, n_jobs=None):
    """Check the relations between ``j^k``, ``r^k``, cofaces and codegeneracies.

    For every flag ``J`` of ``P`` of length at most ``max_len`` and every
    admissible choice of indices, both composites ending in
    ``sd_P(Delta^J)`` are compared exactly.

    Parameters
    ----------
    P : Poset

    max_len : int

    {n_jobs}

    Returns
    -------
    report : list of IdentityCheck
        In flag order, then in the order of the relations. A failing entry
        is a defect of the maps.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import verify_identities
    >>> report = verify_identities(Poset([0, 1], [(0, 1)]), 1)
    >>> [(check.equation, check.flag, check.passed) for check in report[:2]]
    [('r^k sd(d^k) = 1', (0,), True), ('r^k j^(h+1) = j^h r^k', (0,), True)]
    """
    tasks = [
        (J, equation, builder, indices)
        for J in flags(P, max_len)
        for equation, builder, indices in _instances(len(J) - 1)
    ]
    report = Parallel(n_jobs=check_n_jobs(n_jobs), prefer="threads")(
        delayed(_check)(*task) for task in tasks
    )
    n_failed = sum(not check.passed for check in report)
    logger.info(
        "Checked %d relation instances, %d failed.", len(report), n_failed
    )
    return report
