"""End to end checks of the constructions over the corpus."""
# License: MIT

import pytest

from stratkit.datasets import load_corpus
from stratkit.datasets import load_labelled_corpus
from stratkit.diagrams import C_P
from stratkit.diagrams import is_cofibrant
from stratkit.links import holink
from stratkit.links import induced_link_map
from stratkit.links import link
from stratkit.poset import Poset
from stratkit.poset import flags
from stratkit.poset import regular_flags
from stratkit.simplicial import from_chains
from stratkit.simplicial import homology
from stratkit.simplicial import is_isomorphic
from stratkit.simplicial import pi0
from stratkit.simplicial import product
from stratkit.simplicial import sd
from stratkit.simplicial import standard_simplex_set
from stratkit.simplicial import verify_simplicial_identities
from stratkit.stratified import boundary
from stratkit.stratified import generating_trivial_cofibrations
from stratkit.stratified import is_stratified_homotopy_equivalence
from stratkit.stratified import standard_simplex
from stratkit.subdivision import t_simplex_map
from stratkit.subdivision import verify_identities
from stratkit.utils.corpus_checks import parametrize_with_checks
from stratkit.vertical import U
from stratkit.vertical import diagram_to_labelled
from stratkit.vertical import verticalize
from stratkit.weq import PASSES
from stratkit.weq import REFUTED
from stratkit.weq import probe

P3 = Poset([0, 1, 2], [(0, 1), (1, 2)])
CORPUS = load_corpus()
LABELLED = load_labelled_corpus()


def _flagged_iso(K, L):
    return is_isomorphic(K, L, x_label=K.flags.__getitem__, y_label=L.flags.__getitem__)


def _is_point(X, max_deg):
    report = homology(X, max_deg)
    return report.betti == [1] + [0] * max_deg and not any(report.torsion)


def test_identity_suite_has_no_failures():
    report = verify_identities(P3, 4)
    assert [check for check in report if not check.passed] == []


@pytest.mark.parametrize("J", flags(P3, 4))
def test_t_is_an_epimorphism(J):
    assert t_simplex_map(P3, J).is_surjective()


def test_holinks_tell_a_simplex_from_its_boundary():
    J = (0, 1, 2)
    A, _ = boundary(P3, J)
    K = standard_simplex(P3, J)
    assert len(holink(A, J, 0)) == 0
    assert len(holink(K, J, 0)) > 0
    for I in regular_flags(P3):
        if I == J:
            continue
        LA, LK = link(A, I), link(K, I)
        assert len(pi0(LA)) == len(pi0(LK))
        assert homology(LA, 1).agrees_with(homology(LK, 1))


@parametrize_with_checks(CORPUS)
def test_corpus_checks(name, check):
    assert check(CORPUS[name])


@pytest.mark.parametrize("name", list(LABELLED))
def test_U_is_cofibrant_and_realizes_the_verticalization(name):
    S = LABELLED[name]
    F = U(S)
    assert is_cofibrant(F) == (True, None)
    assert _flagged_iso(C_P(F), verticalize(S))
    R = diagram_to_labelled(F)
    assert is_isomorphic(R, S, x_label=R.labels.__getitem__, y_label=S.labels.__getitem__)


@pytest.mark.parametrize(
    "J, k, inclusion",
    generating_trivial_cofibrations(P3, 3),
    ids=lambda value: str(value) if isinstance(value, (tuple, int)) else None,
)
def test_admissible_horn_inclusions(J, k, inclusion):
    assert probe(inclusion).verdict == PASSES
    assert is_stratified_homotopy_equivalence(inclusion)


def test_boundary_inclusion_is_refuted_at_the_top_flag():
    _, inclusion = boundary(P3, (0, 1, 2))
    report = probe(inclusion, max_deg=1)
    assert report.verdict == REFUTED
    assert report.certificate == (0, 1, 2)


@pytest.mark.parametrize("J", [J for J in flags(P3, 4) if len(J) > 1])
def test_links_of_admissible_horns(J):
    horns = [
        (k, inclusion)
        for J2, k, inclusion in generating_trivial_cofibrations(P3, len(J))
        if J2 == J
    ]
    for k, inclusion in horns:
        for I in regular_flags(P3):
            f = induced_link_map(inclusion, I)
            if f.is_injective() and f.is_surjective():
                continue
            assert _is_point(f.source, 2) and _is_point(f.target, 2), (k, I)


def test_core_simplicial_engine():
    for n in range(4):
        simplex = standard_simplex_set(n)
        assert homology(simplex, n).betti == [1] + [0] * n
        assert verify_simplicial_identities(simplex) == []
        if n == 0:
            continue
        faces = [tuple(v for v in range(n + 1) if v != i) for i in range(n + 1)]
        sphere = from_chains(faces)
        expected = [1] + [0] * n
        expected[n - 1] += 1
        assert homology(sphere, n).betti == expected
        assert homology(sd(sphere), n).agrees_with(homology(sphere, n))
    square, _, _ = product(standard_simplex_set(1), standard_simplex_set(1))
    assert square.counts() == [4, 5, 2]
