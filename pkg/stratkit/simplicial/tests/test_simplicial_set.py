"""Test simplicial sets in normal form."""
# License: MIT

from itertools import combinations

import pytest

from stratkit.exceptions import MalformedInputError
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import SimplicialSet
from stratkit.simplicial import chain_ref
from stratkit.simplicial import disjoint_union
from stratkit.simplicial import euler_characteristic
from stratkit.simplicial import face_closure
from stratkit.simplicial import from_chains
from stratkit.simplicial import standard_simplex_set
from stratkit.simplicial import sub_simplicial_set
from stratkit.simplicial import surjection_from_word
from stratkit.simplicial import verify_simplicial_identities
from stratkit.simplicial import word_from_surjection

V = SimplexRef("v")


@pytest.fixture
def loop():
    return SimplicialSet([("v", 0, ()), ("e", 1, (V, V))])


@pytest.fixture
def projective_plane():
    # a single 2-simplex glued along e twice
    return SimplicialSet(
        [
            ("v", 0, ()),
            ("e", 1, (V, V)),
            ("t", 2, (SimplexRef("e"), SimplexRef("v", (0,)), SimplexRef("e"))),
        ]
    )


def test_words_and_surjections():
    assert surjection_from_word((2, 0), 4) == (0, 0, 1, 1, 2)
    assert word_from_surjection((0, 0, 1, 1, 2)) == (2, 0)
    assert word_from_surjection((0, 0, 1, 2, 2)) == (3, 0)
    assert word_from_surjection((0, 1, 2)) == ()


@pytest.mark.parametrize("n", range(5))
def test_words_and_surjections_are_inverse(n):
    for size in range(n + 1):
        for entries in combinations(range(n), size):
            word = tuple(reversed(entries))
            eta = surjection_from_word(word, n)
            assert len(eta) == n + 1
            assert eta[0] == 0 and eta[-1] == n - size
            assert all(b - a in (0, 1) for a, b in zip(eta, eta[1:]))
            assert word_from_surjection(eta) == word


def test_check_accepts_an_edge_and_a_triangle():
    a, b = SimplexRef("a"), SimplexRef("b")
    edge = SimplicialSet([("a", 0, ()), ("b", 0, ()), ("e", 1, (b, a))])
    assert edge.check() is edge
    assert edge.counts() == [2, 1]
    triangle = standard_simplex_set(2)
    assert triangle.check() is triangle
    assert from_chains([(0, 1, 2)]).counts() == [3, 3, 1]


def test_standard_simplex_faces():
    X = standard_simplex_set(2)
    assert X.counts() == [3, 3, 1]
    assert X.dimension == 2
    assert [f.nd_id for f in X.faces((0, 1, 2))] == [(1, 2), (0, 2), (0, 1)]
    assert X.vertices((0, 1, 2)) == ((0,), (1,), (2,))


def test_faces_of_degeneracies(loop):
    s0 = loop.degeneracy(SimplexRef("e"), 0)
    assert s0 == SimplexRef("e", (0,))
    assert loop.face(s0, 0) == SimplexRef("e")
    assert loop.face(s0, 1) == SimplexRef("e")
    assert loop.face(s0, 2) == SimplexRef("v", (0,))
    assert loop.degeneracy(s0, 0) == SimplexRef("e", (1, 0))


def test_vertices_of_a_degenerate_simplex():
    X = standard_simplex_set(1)
    assert X.vertices(SimplexRef((0, 1), (0,))) == ((0,), (0,), (1,))


def test_apply_operator():
    X = standard_simplex_set(2)
    assert X.apply_operator(SimplexRef((0, 1, 2)), [0, 0, 2]) == SimplexRef(
        (0, 2), (0,)
    )
    assert X.apply_operator(SimplexRef((0, 1, 2)), [1]) == SimplexRef((1,))
    with pytest.raises(MalformedInputError, match="not monotone"):
        X.apply_operator(SimplexRef((0, 1, 2)), [2, 1])


def test_normalize_operator_words(loop):
    ref = loop.normalize("e", [("s", 1), ("s", 0), ("d", 1)])
    assert ref == SimplexRef("e", (1,))
    with pytest.raises(MalformedInputError, match="Unknown operator"):
        loop.normalize("e", [("x", 0)])


@pytest.mark.parametrize("index", [-1, 2])
def test_face_index_out_of_range(index):
    X = standard_simplex_set(1)
    with pytest.raises(MalformedInputError, match="out of range"):
        X.face(SimplexRef((0, 1)), index)


@pytest.mark.parametrize(
    "simplices, err_msg",
    [
        ([("v", 0, ()), ("v", 0, ())], "Duplicated"),
        ([("v", 0, ()), ("e", 1, (V,))], "has 1 faces"),
        ([("v", 0, ()), ("e", 1, (V, SimplexRef("w")))], "not a simplex"),
        (
            [("v", 0, ()), ("e", 1, (V, V)), ("f", 1, (SimplexRef("e"), V))],
            "does not have dimension",
        ),
    ],
)
def test_check_face_data(simplices, err_msg):
    with pytest.raises(MalformedInputError, match=err_msg):
        SimplicialSet(simplices)


def test_check_simplicial_identities():
    verts = [(name, 0, ()) for name in "abc"]
    edges = [
        ("ab", 1, (SimplexRef("b"), SimplexRef("a"))),
        ("bc", 1, (SimplexRef("c"), SimplexRef("b"))),
        ("ac", 1, (SimplexRef("c"), SimplexRef("a"))),
    ]
    good = ("t", 2, (SimplexRef("bc"), SimplexRef("ac"), SimplexRef("ab")))
    bad = ("t", 2, (SimplexRef("ab"), SimplexRef("ac"), SimplexRef("bc")))
    SimplicialSet(verts + edges + [good])
    with pytest.raises(MalformedInputError, match="Simplicial identity"):
        SimplicialSet(verts + edges + [bad])


def test_verify_simplicial_identities(loop, projective_plane):
    assert verify_simplicial_identities(standard_simplex_set(3)) == []
    assert verify_simplicial_identities(loop) == []
    assert verify_simplicial_identities(projective_plane) == []


def test_from_chains_shares_faces():
    X = from_chains([(0, 1), (1, 2), (0, 2)])
    assert X.counts() == [3, 3]
    assert euler_characteristic(X) == 0


def test_chain_ref():
    X = standard_simplex_set(2)
    assert chain_ref(X, [0, 0, 2]) == SimplexRef((0, 2), (0,))
    assert chain_ref(from_chains([(0, 1)]), [1, 0]) is None


def test_sub_simplicial_set_and_closure():
    X = standard_simplex_set(2)
    closure = face_closure(X, [(0, 1)])
    assert closure == {(0,), (1,), (0, 1)}
    assert sub_simplicial_set(X, closure).counts() == [2, 1]
    with pytest.raises(MalformedInputError, match="missing"):
        sub_simplicial_set(X, [(0, 1)])


def test_disjoint_union(loop):
    U = disjoint_union(loop, standard_simplex_set(1))
    assert U.counts() == [3, 2]
    assert U.faces((0, "e")) == (SimplexRef((0, "v")), SimplexRef((0, "v")))


def test_equality_compares_face_data(loop):
    assert loop == SimplicialSet([("v", 0, ()), ("e", 1, (V, V))])
    assert loop != from_chains([("v",)])
