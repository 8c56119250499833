"""Test simplicial maps, products, colimits and subdivision."""
# License: MIT

import pytest

from stratkit.exceptions import BudgetExceededError
from stratkit.exceptions import MalformedInputError
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import SimplicialMap
from stratkit.simplicial import SimplicialSet
from stratkit.simplicial import colimit
from stratkit.simplicial import compose
from stratkit.simplicial import enumerate_maps
from stratkit.simplicial import euler_characteristic
from stratkit.simplicial import from_chains
from stratkit.simplicial import homology
from stratkit.simplicial import identity
from stratkit.simplicial import last_vertex
from stratkit.simplicial import pair_ref
from stratkit.simplicial import product
from stratkit.simplicial import product_map
from stratkit.simplicial import pushout
from stratkit.simplicial import sd
from stratkit.simplicial import sd_map
from stratkit.simplicial import split_ref
from stratkit.simplicial import standard_simplex_set
from stratkit.simplicial import vertex_map

EDGE = standard_simplex_set(1)
TRIANGLE = standard_simplex_set(2)
POINT = from_chains([(0,)])
ENDS = from_chains([(0,), (1,)])


def test_vertex_map_collapses_to_degeneracies():
    f = vertex_map(EDGE, POINT, {0: 0, 1: 0})
    assert f.images[(0, 1)] == SimplexRef((0,), (0,))
    assert not f.is_injective()
    assert f.is_surjective()
    with pytest.raises(MalformedInputError, match="does not send"):
        vertex_map(EDGE, TRIANGLE, {0: 2, 1: 0})


def test_map_must_commute_with_faces():
    images = {(0,): SimplexRef((0,)), (1,): SimplexRef((1,)), (0, 1): SimplexRef((0, 2))}
    with pytest.raises(MalformedInputError, match="does not commute"):
        SimplicialMap(EDGE, TRIANGLE, images)


def test_compose_and_identity():
    f = vertex_map(EDGE, TRIANGLE, {0: 0, 1: 2})
    g = vertex_map(TRIANGLE, EDGE, {0: 0, 1: 0, 2: 1})
    assert compose(g, f) == identity(EDGE)
    assert compose(identity(TRIANGLE), f) == f
    assert f.is_injective()
    assert f.image_ids() == {(0,), (2,), (0, 2)}


@pytest.mark.parametrize(
    "X, Y, n_maps",
    [(EDGE, EDGE, 3), (EDGE, TRIANGLE, 6), (TRIANGLE, EDGE, 4), (ENDS, TRIANGLE, 9)],
)
def test_enumerate_maps(X, Y, n_maps):
    maps = enumerate_maps(X, Y)
    assert len(maps) == n_maps
    assert len({f.key() for f in maps}) == n_maps
    for f in maps:
        f.check()


def test_enumerate_maps_from_the_empty_set():
    assert len(enumerate_maps(SimplicialSet(), EDGE)) == 1


def test_enumerate_maps_budget():
    with pytest.raises(BudgetExceededError) as excinfo:
        enumerate_maps(TRIANGLE, TRIANGLE, budget=3)
    assert excinfo.value.budget == 3


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 2)])
def test_product_of_simplices_is_contractible(p, q):
    XY, pr_x, pr_y = product(standard_simplex_set(p), standard_simplex_set(q))
    XY.check()
    assert XY.dimension == p + q
    assert euler_characteristic(XY) == 1
    assert homology(XY, p + q).betti == [1] + [0] * (p + q)
    assert pr_x.is_surjective() and pr_y.is_surjective()


def test_product_square():
    XY, _, _ = product(EDGE, EDGE)
    assert XY.counts() == [4, 5, 2]
    assert ((0,), (0,), ((0, 0),)) in XY


def test_product_with_keep():
    XY, _, _ = product(EDGE, EDGE, keep=lambda x, y: len(x) + len(y) <= 3)
    assert XY.counts() == [4, 4]
    assert homology(XY, 1).betti == [1, 1]


def test_pair_and_split():
    XY, _, _ = product(EDGE, EDGE)
    for s in XY:
        ref_a, ref_b = split_ref(SimplexRef(s))
        assert pair_ref(ref_a, ref_b, EDGE, EDGE) == SimplexRef(s)


def test_product_map_of_identities():
    XY, _, _ = product(EDGE, EDGE)
    f = product_map(identity(EDGE), identity(EDGE), XY, XY)
    f.check()
    assert f == identity(XY)


def test_colimit_glues_a_circle():
    arrows = [
        (0, 1, vertex_map(ENDS, EDGE, {0: 0, 1: 1})),
        (0, 2, vertex_map(ENDS, POINT, {0: 0, 1: 0})),
    ]
    result = colimit([ENDS, EDGE, POINT], arrows)
    result.space.check()
    assert result.space.counts() == [1, 1]
    assert homology(result.space, 1).betti == [1, 1]
    for f in result.maps:
        f.check()


def test_colimit_collapses_along_degeneracies():
    result = colimit([EDGE, POINT], [(0, 1, vertex_map(EDGE, POINT, {0: 0, 1: 0}))])
    assert result.space.counts() == [1]
    assert result.maps[0].images[(0, 1)].word == (0,)


def test_pushout_of_two_edges():
    f = vertex_map(POINT, EDGE, {0: 1})
    g = vertex_map(POINT, EDGE, {0: 0})
    result = pushout(f, g)
    assert result.space.counts() == [3, 2]
    assert len(result.maps) == 3


def test_colimit_checks_arrow_sources():
    with pytest.raises(MalformedInputError, match="wrong source"):
        colimit([EDGE, POINT], [(1, 0, vertex_map(EDGE, POINT, {0: 0, 1: 0}))])


@pytest.mark.parametrize("n, counts", [(0, [1]), (1, [3, 2]), (2, [7, 12, 6])])
def test_sd_counts(n, counts):
    sdX = sd(standard_simplex_set(n))
    sdX.check()
    assert sdX.counts() == counts


def test_sd_of_a_loop_keeps_homology():
    v = SimplexRef("v")
    loop = SimplicialSet([("v", 0, ()), ("e", 1, (v, v))])
    sd_loop = sd(loop)
    sd_loop.check()
    assert sd_loop.counts() == [2, 2]
    assert homology(sd_loop, 1).betti == homology(loop, 1).betti == [1, 1]


def test_sd_map_of_identity():
    sdX = sd(TRIANGLE)
    assert sd_map(identity(TRIANGLE), sdX, sdX) == identity(sdX)


def test_sd_map_of_a_collapse():
    f = vertex_map(TRIANGLE, EDGE, {0: 0, 1: 0, 2: 1})
    sd_f = sd_map(f)
    sd_f.check()
    assert sd_f.is_surjective()


def test_last_vertex_map():
    lv = last_vertex(TRIANGLE)
    lv.check()
    assert lv.is_surjective()
    assert not lv.is_injective()
    assert lv.images[(((0, 1, 2)), ((0, 1, 2),))] == SimplexRef((2,))
