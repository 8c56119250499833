"""Test the subdivided simplices and the maps between them."""
# License: MIT

import pytest

from stratkit.exceptions import MalformedInputError
from stratkit.poset import Poset
from stratkit.poset import flags
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import compose
from stratkit.subdivision import face_map
from stratkit.subdivision import factor_map_f
from stratkit.subdivision import g_map
from stratkit.subdivision import j_map
from stratkit.subdivision import j_tilde
from stratkit.subdivision import lift_naive_simplex
from stratkit.subdivision import lv_simplex_map
from stratkit.subdivision import moss_r
from stratkit.subdivision import moss_r_tilde
from stratkit.subdivision import naive_lv_simplex_map
from stratkit.subdivision import naive_model
from stratkit.subdivision import r_map
from stratkit.subdivision import r_tilde
from stratkit.subdivision import repeat_entry
from stratkit.subdivision import simplex_model
from stratkit.subdivision import t_simplex_map

P2 = Poset([0, 1], [(0, 1)])
P3 = Poset([0, 1, 2], [(0, 1), (1, 2)])


@pytest.mark.parametrize(
    "J, counts",
    [((0,), [1]), ((0, 1), [4, 3]), ((0, 0), [3, 2])],
)
def test_simplex_model_counts(J, counts):
    assert simplex_model(P2, J).counts() == counts


@pytest.mark.parametrize("J", flags(P2, 3))
def test_simplex_model_is_valid(J):
    model = simplex_model(P2, J)
    model.check()
    assert all(len(model.flags[x]) == model.dim(x) + 1 for x in model)


def test_simplex_model_vertex_count_over_three_entries():
    # subsets of {0, 1, 2} with one stratum each, except {0, 2}, {1, 2} and
    # {0, 1, 2} which meet two
    assert len(simplex_model(P2, (0, 0, 1)).simplices(0)) == 10


def test_naive_model_strata():
    model = naive_model(P2, (0, 1))
    strata = {v[0]: model.flags[v][0] for v in model.simplices(0)}
    assert strata == {(0,): 0, (1,): 1, (0, 1): 1}


def test_vertex_formulas():
    assert [r_tilde(1, 0, i) for i in range(3)] == [(0, 1), (0,), (1,)]
    assert all(j_tilde(3, 0, i) == (i,) for i in range(4))
    assert j_tilde(2, 2, 0) == (0, 1, 2)
    assert [moss_r_tilde(1, 0, i) for i in range(3)] == [(0,), (0,), (1,)]


def test_face_map_of_a_point():
    with pytest.raises(MalformedInputError, match="no faces"):
        face_map(P2, (0,), 0)


def test_r_map_index_out_of_range():
    with pytest.raises(MalformedInputError, match="range"):
        r_map(P2, (0, 1), 2)


def test_lv_on_vertices():
    lv = lv_simplex_map(P2, (0, 1))
    expected = {
        ((0,), 0): (0,),
        ((0, 1), 0): (0,),
        ((0, 1), 1): (1,),
        ((1,), 1): (1,),
    }
    for vertex, image in expected.items():
        assert lv.images[(vertex,)] == SimplexRef(image)


def test_t_truncates_at_the_stratum():
    t = t_simplex_map(P2, (0, 1))
    assert t.images[(((0, 1), 0),)] == SimplexRef(((0,),))
    assert t.images[(((0, 1), 1),)] == SimplexRef(((0, 1),))


def test_moss_r_images_are_keyed_by_source_chains():
    r = moss_r(P2, (0, 1), 0)
    assert set(r.images) == set(r.source)
    assert r.images[((0, 1, 2),)] == SimplexRef(((0, 1),))
    assert r.images[((1,),)] == SimplexRef(((0,),))
    assert r.images[((2,),)] == SimplexRef(((1,),))


def test_t_is_an_isomorphism_on_constant_flags():
    t = t_simplex_map(P2, (0, 0, 0))
    assert t.is_injective()
    assert t.is_surjective()


@pytest.mark.parametrize("J", flags(P3, 4))
def test_t_is_surjective(J):
    assert t_simplex_map(P3, J).is_surjective()


@pytest.mark.parametrize("J", flags(P3, 4))
def test_last_vertex_factors_through_t(J):
    composite = compose(naive_lv_simplex_map(P3, J), t_simplex_map(P3, J))
    assert composite == lv_simplex_map(P3, J)


@pytest.mark.parametrize("J", flags(P3, 3))
def test_factor_map_f(J):
    n = len(J) - 1
    assert compose(factor_map_f(P3, J), t_simplex_map(P3, J)) == j_map(P3, J, n)


@pytest.mark.parametrize("J", flags(P3, 3))
def test_g_commutes_with_t(J):
    for k in range(len(J)):
        lhs = compose(t_simplex_map(P3, J), r_map(P3, J, k))
        rhs = compose(g_map(P3, J, k), t_simplex_map(P3, repeat_entry(J, k)))
        assert lhs == rhs


@pytest.mark.parametrize("J", [(0, 0, 1), (0, 1, 2), (0, 1, 1), (0, 2)])
def test_lift_naive_simplex(J):
    model = simplex_model(P3, J)
    t = t_simplex_map(P3, J)
    for chain in naive_model(P3, J):
        lift = lift_naive_simplex(P3, J, chain)
        assert lift in model
        assert t.images[lift] == SimplexRef(chain)
