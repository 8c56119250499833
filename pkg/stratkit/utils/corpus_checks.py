"""Checks that every object of the corpus has to pass.

The test suite parametrizes over them with :func:`parametrize_with_checks`
and the ``corpus`` subcommand runs them through :func:`run_corpus_checks`.
"""

# License: MIT

import logging
from functools import lru_cache

from ..diagrams import C_P
from ..diagrams import is_cofibrant
from ..links import holink
from ..links import link
from ..poset import regular_flags
from ..simplicial import homology
from ..simplicial import is_isomorphic
from ..simplicial import pi0
from ..stratified import generating_trivial_cofibrations
from ..stratified import is_stratified_homotopy_equivalence
from ..subdivision import build_pairing_ex
from ..subdivision import build_pairing_ex_naiv
from ..subdivision import check_pairing
from ..subdivision import lv_P
from ..subdivision import sd_P
from ..vertical import U
from ..vertical import diagram_to_labelled
from ..vertical import label_subdivision
from ..vertical import verticalize
from ..weq import PASSES
from ..weq import probe

logger = logging.getLogger(__name__)


def _flagged_iso(K, L):
    return is_isomorphic(K, L, x_label=K.flags.__getitem__, y_label=L.flags.__getitem__)


def check_links_and_holinks(K, dim_bound=2):
    """``Link_I(K)`` and ``HoLink_I(K)`` have the same components and the
    same homology below ``dim_bound`` at every regular flag."""
    for I in regular_flags(K.poset):
        L, H = link(K, I), holink(K, I, dim_bound)
        if len(pi0(L)) != len(pi0(H)):
            logger.debug("Components of the links differ at %s.", I)
            return False
        if not homology(L, dim_bound - 1).agrees_with(homology(H, dim_bound - 1)):
            logger.debug("Homology of the links differs at %s.", I)
            return False
    return True


def check_verticalized_label_sd(K):
    """The verticalized labelled subdivision is ``sd_P(K)``."""
    return _flagged_iso(verticalize(label_subdivision(K)), sd_P(K))


def check_U_cofibrant(K):
    S = label_subdivision(K)
    F = U(S)
    cofibrant, witness = is_cofibrant(F)
    if not cofibrant:
        logger.debug("U is not cofibrant: %s.", witness)
        return False
    if not _flagged_iso(C_P(F), verticalize(S)):
        return False
    R = diagram_to_labelled(F)
    return is_isomorphic(
        R, S, x_label=R.labels.__getitem__, y_label=S.labels.__getitem__
    )


def check_pairing_ex_naiv(K, dim_bound=2):
    return check_pairing(build_pairing_ex_naiv(K, dim_bound=dim_bound)).passed


def check_pairing_ex(K, dim_bound=2):
    return check_pairing(build_pairing_ex(K, dim_bound=dim_bound)).passed


def check_last_vertex(K):
    return probe(lv_P(K)).verdict == PASSES


@lru_cache(maxsize=None)
def _admissible_horns_pass(P, max_len):
    for J, k, inclusion in generating_trivial_cofibrations(P, max_len):
        if probe(inclusion).verdict != PASSES:
            logger.debug("Horn %d of %s is refuted.", k, J)
            return False
        if not is_stratified_homotopy_equivalence(inclusion):
            logger.debug("Horn %d of %s is not a homotopy equivalence.", k, J)
            return False
    return True


def check_admissible_horns(K, max_len=3):
    """Admissible horn inclusions over the poset of ``K`` are weak
    equivalences and stratified homotopy equivalences."""
    return _admissible_horns_pass(K.poset, max_len)


def _yield_all_checks(K):
    yield check_verticalized_label_sd
    yield check_U_cofibrant
    yield check_links_and_holinks
    yield check_pairing_ex_naiv
    yield check_pairing_ex
    yield check_last_vertex
    yield check_admissible_horns


def check_id(check):
    """Name of a check as reported, ``check_U_cofibrant`` giving
    ``U-cofibrant``."""
    return check.__name__[len("check_") :].replace("_", "-")


def run_corpus_checks(K):
    """Run every check on ``K``.

    Yields
    ------
    check : str

    passed : bool
    """
    for check in _yield_all_checks(K):
        passed = bool(check(K))
        logger.info("%s: %s", check_id(check), passed)
        yield check_id(check), passed


def parametrize_with_checks(corpus):
    """Pytest decorator parametrizing a test over ``(name, check)``.

    Parameters
    ----------
    corpus : mapping of str to StratifiedSimplicialSet

    Returns
    -------
    decorator : `pytest.mark.parametrize`

    Examples
    --------
    >>> from stratkit.datasets import load_corpus
    >>> from stratkit.utils.corpus_checks import parametrize_with_checks
    >>> CORPUS = load_corpus()
    >>> @parametrize_with_checks(CORPUS)
    ... def test_corpus(name, check):
    ...     assert check(CORPUS[name])
    """
    import pytest

    params = [
        pytest.param(name, check, id=f"{name}-{check_id(check)}")
        for name, K in corpus.items()
        for check in _yield_all_checks(K)
    ]
    return pytest.mark.parametrize("name, check", params)
