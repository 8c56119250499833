"""Test the relations between the maps j, r and the subdivided operators."""
# License: MIT

from functools import partial

import pytest

from stratkit.poset import Poset
from stratkit.simplicial import compose
from stratkit.simplicial import identity
from stratkit.subdivision import face_map
from stratkit.subdivision import j_tilde
from stratkit.subdivision import r_map
from stratkit.subdivision import r_tilde
from stratkit.subdivision import repeat_entry
from stratkit.subdivision import simplex_model
from stratkit.subdivision import verify_identities

P2 = Poset([0, 1], [(0, 1)])
P3 = Poset([0, 1, 2], [(0, 1), (1, 2)])


@pytest.mark.parametrize("P, max_len", [(P2, 3), (P3, 4)])
def test_all_instances_pass(P, max_len):
    report = verify_identities(P, max_len)
    assert report
    failed = [check for check in report if not check.passed]
    assert not failed


def test_points_only():
    report = verify_identities(P2, 1)
    assert {len(check.flag) for check in report} == {1}
    assert all(check.passed for check in report)
    assert "r^k sd(d^k) = 1" in {check.equation for check in report}


def test_report_does_not_depend_on_n_jobs():
    assert verify_identities(P2, 3, n_jobs=1) == verify_identities(P2, 3, n_jobs=2)


def test_retraction_of_face_on_maps():
    J = (0, 1)
    composite = compose(r_map(P2, J, 0), face_map(P2, repeat_entry(J, 0), 0))
    assert composite == identity(simplex_model(P2, J))


def test_every_relation_is_exercised():
    equations = {check.equation for check in verify_identities(P2, 3)}
    assert len(equations) == 11


def _image(func, sigma):
    return {b for a in sigma for b in func(a)}


def test_retraction_past_j_shifts_the_index_only_from_k_on():
    # On {0} of sd(Delta^2) with k = 1 and h = 0 < k the shifted form fails
    # and the unshifted one holds.
    n, k, h = 1, 1, 0
    r = partial(r_tilde, n, k)
    assert _image(r, j_tilde(n + 1, h + 1, 0)) == {0, 1}
    assert _image(partial(j_tilde, n, h), r(0)) == {0}
    assert _image(r, j_tilde(n + 1, h, 0)) == {0}

    checks = [
        check
        for check in verify_identities(P2, 2)
        if check.equation.startswith("r^k j^")
    ]
    shifted = [
        dict(check.indices)
        for check in checks
        if check.equation == "r^k j^(h+1) = j^h r^k"
    ]
    assert shifted
    assert all(indices["h"] >= indices["k"] for indices in shifted)
    assert all(check.passed for check in checks)
