"""Test stratified simplicial sets, horns and homotopy classes."""
# License: MIT

import pytest

from stratkit.exceptions import MalformedInputError
from stratkit.poset import Poset
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import compose
from stratkit.simplicial import from_chains
from stratkit.simplicial import standard_simplex_set
from stratkit.stratified import StratifiedMap
from stratkit.stratified import StratifiedSimplicialSet
from stratkit.stratified import boundary
from stratkit.stratified import enumerate_stratified_maps
from stratkit.stratified import generating_cofibrations
from stratkit.stratified import generating_trivial_cofibrations
from stratkit.stratified import homotopy_classes
from stratkit.stratified import horn
from stratkit.stratified import is_admissible
from stratkit.stratified import is_degenerate_horn_flag
from stratkit.stratified import is_stratified_homotopy_equivalence
from stratkit.stratified import standard_simplex
from stratkit.stratified import stratification_map
from stratkit.stratified import stratified_disjoint_union
from stratkit.stratified import stratified_nerve
from stratkit.stratified import stratified_product
from stratkit.stratified import stratum
from stratkit.stratified import subcomplex

P2 = Poset([0, 1], [(0, 1)])
P3 = Poset([0, 1, 2], [(0, 1), (1, 2)])
EDGE = from_chains([(0, 1)])


def test_standard_simplex():
    K = standard_simplex(P2, (0, 0, 1))
    assert K.counts() == [3, 3, 1]
    assert K.flags[(1, 2)] == (0, 1)
    assert K.flag(SimplexRef((0, 1), (0,))) == (0, 0, 0)
    K.check()
    with pytest.raises(MalformedInputError, match="is not a flag"):
        standard_simplex(P2, (1, 0))


@pytest.mark.parametrize(
    "flags, err_msg",
    [
        ({(0,): (0, 0), (1,): (1,), (0, 1): (0, 1)}, "carries the flag"),
        ({(0,): (1,), (1,): (0,), (0, 1): (1, 0)}, "is not a flag"),
        ({(0,): (1,), (1,): (1,), (0, 1): (0, 1)}, "entry 1 deleted"),
    ],
)
def test_flags_must_match_faces(flags, err_msg):
    with pytest.raises(MalformedInputError, match=err_msg):
        StratifiedSimplicialSet(EDGE, P2, flags)


def test_stratified_simplicial_set_needs_a_poset():
    with pytest.raises(MalformedInputError, match="has to be one of"):
        StratifiedSimplicialSet(EDGE, [0, 1], {})


def test_stratified_map_preserves_flags():
    K, L = standard_simplex(P2, (0,)), standard_simplex(P2, (0, 1))
    StratifiedMap(K, L, {(0,): SimplexRef((0,))})
    with pytest.raises(MalformedInputError, match="does not preserve the flag"):
        StratifiedMap(K, L, {(0,): SimplexRef((1,))})


def test_boundary():
    A, inclusion = boundary(P2, (0, 0, 1))
    assert A.counts() == [3, 3]
    assert inclusion.is_injective()
    inclusion.check()
    empty, _ = boundary(P2, (1,))
    assert len(empty) == 0


def test_horn():
    A, inclusion = horn(P2, (0, 0, 1), 1)
    assert A.counts() == [3, 2]
    assert (0, 2) not in A
    inclusion.check()
    with pytest.raises(MalformedInputError, match="at least 2"):
        horn(P2, (0,), 0)
    with pytest.raises(MalformedInputError, match="range"):
        horn(P2, (0, 0, 1), 3)


@pytest.mark.parametrize(
    "J, admissible",
    [
        ((0, 0, 1), [True, True, False]),
        ((0, 1, 1), [False, True, True]),
        ((0, 1), [False, False]),
        ((0, 1, 2), [False, False, False]),
    ],
)
def test_is_admissible(J, admissible):
    assert [is_admissible(J, k) for k in range(len(J))] == admissible


def test_is_degenerate_horn_flag():
    assert is_degenerate_horn_flag((0, 0, 1), 1)
    assert not is_degenerate_horn_flag((0, 1, 2), 1)


def test_stratum():
    K = standard_simplex(P2, (0, 0, 1))
    assert stratum(K, 0).counts() == [2, 1]
    assert stratum(K, 1).counts() == [1]
    with pytest.raises(MalformedInputError, match="not an element"):
        stratum(K, 5)


def test_stratified_product():
    KS, pr_k, pr_s = stratified_product(standard_simplex(P2, (0, 1)), EDGE)
    KS.check()
    assert KS.counts() == [4, 5, 2]
    pr_k.check()
    pr_s.check()


def test_stratified_nerve_and_structure_map():
    NP = stratified_nerve(P3, 2)
    NP.check()
    K = standard_simplex(P3, (0, 1, 1, 2))
    g = stratification_map(K, NP)
    g.check()
    assert g.images[(0, 1, 2, 3)] == SimplexRef((0, 1, 2), (1,))


def test_subcomplex_and_union():
    K = standard_simplex(P2, (0, 0, 1))
    A, inclusion = subcomplex(K, [(0,), (1,), (0, 1)])
    assert A.counts() == [2, 1]
    inclusion.check()
    union = stratified_disjoint_union(A, K)
    union.check()
    assert union.counts() == [5, 4, 1]
    with pytest.raises(MalformedInputError, match="one poset"):
        stratified_disjoint_union(A, standard_simplex(P3, (0,)))


@pytest.mark.parametrize(
    "J, J2, n_maps", [((0,), (0, 0), 2), ((0, 1), (0, 0, 1, 1), 4), ((1,), (0, 0), 0)]
)
def test_enumerate_stratified_maps(J, J2, n_maps):
    maps = enumerate_stratified_maps(standard_simplex(P2, J), standard_simplex(P2, J2))
    assert len(maps) == n_maps
    for f in maps:
        f.check()


def test_homotopy_classes():
    point = standard_simplex(P2, (0,))
    two_points = stratified_disjoint_union(point, point)
    assert [len(c) for c in homotopy_classes(point, standard_simplex(P2, (0, 0)))] == [2]
    assert [len(c) for c in homotopy_classes(point, two_points)] == [1, 1]
    assert homotopy_classes(point, standard_simplex(P2, (1,))) == []


def test_homotopy_classes_are_stratified():
    # the two endpoints of Delta^(0,1) lie in different strata
    K = standard_simplex(P2, (0, 1))
    classes = homotopy_classes(K, standard_simplex(P2, (0, 1, 1)))
    assert [len(c) for c in classes] == [2]


def _spaces(name):
    point = standard_simplex(P2, (0,))
    if name == "points":
        return (
            point,
            stratified_disjoint_union(standard_simplex(P2, (0, 0)), point),
            stratified_disjoint_union(point, point),
        )
    return (
        standard_simplex(P2, (0, 1)),
        standard_simplex(P2, (0, 1, 1)),
        standard_simplex(P2, (0, 0, 1, 1)),
    )


@pytest.mark.parametrize("name", ["points", "edges"])
def test_composition_descends_to_homotopy_classes(name):
    K, L, M = _spaces(name)
    on_m = {
        f.key(): c for c, members in enumerate(homotopy_classes(K, M)) for f in members
    }
    for first in homotopy_classes(K, L):
        for second in homotopy_classes(L, M):
            images = {on_m[compose(g, f).key()] for f in first for g in second}
            assert len(images) == 1


def test_admissible_horn_is_a_homotopy_equivalence():
    _, inner = horn(P2, (0, 0, 1), 1)
    _, outer = horn(P2, (0, 0, 1), 2)
    assert is_stratified_homotopy_equivalence(inner)
    assert not is_stratified_homotopy_equivalence(outer)


def test_boundary_inclusion_is_not_a_homotopy_equivalence():
    _, inclusion = boundary(P2, (0, 1))
    assert not is_stratified_homotopy_equivalence(inclusion)


def test_generating_sets():
    cofibrations = generating_cofibrations(P2, 2)
    assert [J for J, _ in cofibrations] == [(0,), (1,), (0, 0), (0, 1), (1, 1)]
    trivial = generating_trivial_cofibrations(P2, 3)
    assert ((0, 0, 1), 1) in [(J, k) for J, k, _ in trivial]
    assert ((0, 0, 1), 2) not in [(J, k) for J, k, _ in trivial]
    assert all(is_admissible(J, k) for J, k, _ in trivial)


def test_product_with_an_interval_keeps_the_strata():
    KS, _, _ = stratified_product(standard_simplex(P2, (0, 1)), standard_simplex_set(1))
    assert stratum(KS, 0).counts() == [2, 1]
