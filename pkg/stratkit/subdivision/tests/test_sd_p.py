"""Test the subdivisions of stratified simplicial sets."""
# License: MIT

import pytest

from stratkit.exceptions import MalformedInputError
from stratkit.poset import Poset
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import compose
from stratkit.simplicial import is_isomorphic
from stratkit.stratified import StratifiedMap
from stratkit.stratified import boundary
from stratkit.stratified import standard_simplex
from stratkit.subdivision import iterated_sd_P
from stratkit.subdivision import lv_P
from stratkit.subdivision import naive_last_vertex
from stratkit.subdivision import sd_P
from stratkit.subdivision import sd_P_map
from stratkit.subdivision import sd_P_naiv
from stratkit.subdivision import simplex_model
from stratkit.subdivision import t_map

P = Poset([0, 1], [(0, 1)])


def test_sd_P_of_an_edge():
    sdPK = sd_P(standard_simplex(P, (0, 1)))
    assert sdPK.counts() == [4, 3]
    assert sorted(sdPK.flags[v] for v in sdPK.simplices(0)) == [
        (0,), (0,), (1,), (1,)
    ]
    sdPK.check()


def test_sd_P_of_a_point():
    K = standard_simplex(P, (0,))
    assert is_isomorphic(sd_P(K), K)


@pytest.mark.parametrize("J", [(0, 1), (0, 0, 1), (0, 1, 1), (1, 1)])
def test_sd_P_of_a_simplex_matches_the_model(J):
    sdPK = sd_P(standard_simplex(P, J))
    model = simplex_model(P, J)
    assert is_isomorphic(
        sdPK, model, x_label=sdPK.flags.__getitem__, y_label=model.flags.__getitem__
    )


def test_lv_P_is_a_stratified_map():
    K = standard_simplex(P, (0, 0, 1))
    lv = lv_P(K)
    StratifiedMap(lv.source, lv.target, lv.images, validate=True)
    assert lv.is_surjective()


def test_lv_P_of_a_point_is_the_identity():
    K = standard_simplex(P, (0,))
    lv = lv_P(K)
    assert all(ref == SimplexRef((0,)) for ref in lv.images.values())


def test_lv_P_is_natural():
    A = standard_simplex(P, (0, 0))
    B = standard_simplex(P, (0, 0, 1))
    f = StratifiedMap(A, B, {x: SimplexRef(x) for x in A})
    sdA, sdB = sd_P(A), sd_P(B)
    lhs = compose(lv_P(B, sdB), sd_P_map(f, sdA, sdB))
    rhs = compose(f, lv_P(A, sdA))
    assert lhs == rhs


def test_sd_P_naiv_strata():
    naive = sd_P_naiv(standard_simplex(P, (0, 1)))
    assert [naive.flags[v] for v in naive.simplices(0)] == [(0,), (1,), (1,)]
    naive.check()


def test_t_map_is_surjective_on_a_boundary():
    K, _ = boundary(P, (0, 0, 1))
    source = sd_P(K)
    t = t_map(K, source)
    assert t.is_surjective()
    lv = compose(naive_last_vertex(K, t.target), t)
    assert lv == lv_P(K, source)


def test_iterated_sd_P():
    K = standard_simplex(P, (0, 1))
    twice, lv = iterated_sd_P(K, 2)
    assert twice.counts() == [8, 7]
    assert lv.target is K
    assert lv.is_surjective()
    once, _ = iterated_sd_P(K, 0)
    assert once is K


def test_iterated_sd_P_negative():
    with pytest.raises(MalformedInputError, match="non-negative"):
        iterated_sd_P(standard_simplex(P, (0,)), -1)
