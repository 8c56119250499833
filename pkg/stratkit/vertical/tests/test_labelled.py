"""Test labelled simplicial sets, verticalization and the functor U."""
# License: MIT

import pytest

from stratkit.diagrams import C_P
from stratkit.diagrams import Diagram
from stratkit.diagrams import is_cofibrant
from stratkit.exceptions import MalformedInputError
from stratkit.exceptions import NotCofibrantError
from stratkit.poset import Poset
from stratkit.simplicial import SimplexRef
from stratkit.simplicial import SimplicialMap
from stratkit.simplicial import from_chains
from stratkit.simplicial import is_isomorphic
from stratkit.simplicial import sd_map
from stratkit.simplicial import word_from_surjection
from stratkit.stratified import StratifiedMap
from stratkit.stratified import boundary
from stratkit.stratified import standard_simplex
from stratkit.subdivision import sd_P
from stratkit.subdivision import sd_P_map
from stratkit.vertical import LabelledSimplicialSet
from stratkit.vertical import U
from stratkit.vertical import U_map
from stratkit.vertical import diagram_to_labelled
from stratkit.vertical import is_label_preserving
from stratkit.vertical import is_vertical_map
from stratkit.vertical import label_subdivision
from stratkit.vertical import verticalize

P = Poset([0, 1], [(0, 1)])
EDGE = from_chains([("a", "b")])


def _edge(edge_label):
    labels = {("a",): (0, 1), ("b",): (0, 1), ("a", "b"): edge_label}
    return LabelledSimplicialSet(EDGE, P, labels)


def _vertex(s, q):
    return ((s,), (q,), ((0, 0),))


def _map_on_vertices(source, target, g):
    by_vertices = {target.vertices(y): y for y in target}
    images = {}
    for z in source:
        distinct, eta = [], []
        for v in source.vertices(z):
            if not distinct or distinct[-1] != g[v]:
                distinct.append(g[v])
            eta.append(len(distinct) - 1)
        images[z] = SimplexRef(by_vertices[tuple(distinct)], word_from_surjection(eta))
    return StratifiedMap(source, target, images)


def test_labels_must_shrink_along_cofaces():
    labels = {("a",): (0,), ("b",): (0, 1), ("a", "b"): (0, 1)}
    with pytest.raises(MalformedInputError, match="not contained"):
        LabelledSimplicialSet(EDGE, P, labels)


def test_labels_must_be_regular_flags():
    with pytest.raises(MalformedInputError, match="repeated"):
        LabelledSimplicialSet(from_chains([(0,)]), P, {(0,): (0, 0)})


def test_verticalize_a_point():
    S = LabelledSimplicialSet(from_chains([(0,)]), P, {(0,): (0, 1)})
    V = verticalize(S)
    assert V.counts() == [2, 1]
    assert is_isomorphic(
        V,
        standard_simplex(P, (0, 1)),
        x_label=V.flags.__getitem__,
        y_label=standard_simplex(P, (0, 1)).flags.__getitem__,
    )
    V.check()


def test_verticalize_keeps_thin_columns():
    V = verticalize(_edge((1,)))
    assert V.counts() == [4, 3]
    assert V.base.is_surjective()


def test_shear_is_not_vertical():
    W, W2 = verticalize(_edge((1,))), verticalize(_edge((0, 1)))
    g = {_vertex(s, q): _vertex(s, q) for s in "ab" for q in (0, 1)}
    g[_vertex("a", 1)] = _vertex("b", 1)
    f = _map_on_vertices(W, W2, g)
    assert is_vertical_map(f) == (False, None)


def test_verticalized_inclusion_is_vertical():
    W, W2 = verticalize(_edge((1,))), verticalize(_edge((0, 1)))
    f = _map_on_vertices(W, W2, {v: v for v in W.simplices(0)})
    vertical, base = is_vertical_map(f)
    assert vertical
    assert all(ref == SimplexRef(x) for x, ref in base.images.items())


def test_sd_P_of_a_map_is_vertical():
    A, B = standard_simplex(P, (0, 0)), standard_simplex(P, (0, 0, 1))
    f = StratifiedMap(A, B, {x: SimplexRef(x) for x in A})
    sdA, sdB = sd_P(A), sd_P(B)
    vertical, base = is_vertical_map(sd_P_map(f, sdA, sdB))
    assert vertical
    assert base == sd_map(f, sdA.subdivision, sdB.subdivision)


def test_is_vertical_map_needs_bases():
    K = standard_simplex(P, (0, 1))
    f = StratifiedMap(K, K, {x: SimplexRef(x) for x in K})
    with pytest.raises(MalformedInputError, match="base"):
        is_vertical_map(f)


@pytest.mark.parametrize("J", [(0,), (0, 1), (0, 0, 1), (0, 1, 1)])
def test_verticalized_labelled_subdivision_is_sd_P(J):
    K = standard_simplex(P, J)
    V = verticalize(label_subdivision(K))
    sdPK = sd_P(K)
    assert V.flags == sdPK.flags
    assert is_isomorphic(
        V, sdPK, x_label=V.flags.__getitem__, y_label=sdPK.flags.__getitem__
    )


def test_label_subdivision_of_a_boundary():
    K, _ = boundary(P, (0, 0, 1))
    S = label_subdivision(K)
    S.check()
    assert sorted(set(S.labels.values())) == [(0,), (0, 1), (1,)]


def test_U_of_a_subdivided_edge():
    F = U(label_subdivision(standard_simplex(P, (0, 1))))
    assert [F.values[I].counts() for I in F.flags] == [[2, 1], [1], [2, 1]]
    assert is_cofibrant(F) == (True, None)


@pytest.mark.parametrize("J", [(0, 1), (0, 0, 1)])
def test_C_P_of_U_is_the_verticalization(J):
    S = label_subdivision(standard_simplex(P, J))
    V = verticalize(S)
    K = C_P(U(S))
    assert is_isomorphic(K, V, x_label=K.flags.__getitem__, y_label=V.flags.__getitem__)


@pytest.mark.parametrize("J", [(0, 1), (0, 0, 1)])
def test_diagram_to_labelled_inverts_U(J):
    S = label_subdivision(standard_simplex(P, J))
    R = diagram_to_labelled(U(S))
    assert is_isomorphic(
        R, S, x_label=R.labels.__getitem__, y_label=S.labels.__getitem__
    )


def test_diagram_to_labelled_rejects_a_non_cofibrant_diagram():
    two, one = from_chains([(0,), (1,)]), from_chains([(0,)])
    collapse = SimplicialMap(two, one, {x: SimplexRef((0,)) for x in two})
    keep = SimplicialMap(two, two, {x: SimplexRef(x) for x in two})
    F = Diagram(
        P,
        {(0,): one, (0, 1): two, (1,): two},
        {((0,), (0, 1)): collapse, ((1,), (0, 1)): keep},
    )
    with pytest.raises(NotCofibrantError) as excinfo:
        diagram_to_labelled(F)
    assert excinfo.value.certificate[0] == "not-mono"


def test_U_map_of_a_label_preserving_map():
    S, S2 = _edge((1,)), _edge((0, 1))
    f = SimplicialMap(S, S2, {x: SimplexRef(x) for x in S})
    assert is_label_preserving(f)
    Uf = U_map(f)
    assert Uf.components[(0, 1)].source.counts() == [2]
    assert Uf.components[(0, 1)].target.counts() == [2, 1]
    with pytest.raises(MalformedInputError, match="preserve labels"):
        U_map(SimplicialMap(S2, S, {x: SimplexRef(x) for x in S2}))
