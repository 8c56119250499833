"""Simplicial links of stratified simplicial sets."""

# License: MIT

import logging

from ..poset import underlying_regular
from ..simplicial import SimplicialMap
from ..simplicial import sd
from ..simplicial import sd_map
from ..simplicial import sub_simplicial_set

logger = logging.getLogger(__name__)


def _in_link(K, x, chain, I):
    flag = K.flags[x]
    return all(
        underlying_regular([flag[i] for i in subset]) == I for subset in chain
    )


def link(K, I, sdK=None):
    """The simplicial link ``Link_I(K)``.

    This is the fiber of ``sd(K) -> sd(N(P))`` over the vertex ``I``: the
    simplices of ``sd(K)`` all of whose vertices are barycenters of faces
    whose flag has the underlying regular flag ``I``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    I : tuple
        A regular flag of ``K.poset``.

    sdK : SimplicialSet, default=None
        An already computed ``sd(K)``.

    Returns
    -------
    link : SimplicialSet
        A subcomplex of ``sd(K)`` sharing its ids.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.links import link
    >>> P = Poset([0, 1], [(0, 1)])
    >>> link(standard_simplex(P, (0, 1)), (0, 1)).counts()
    [1]
    """
    I = K.poset.check_regular_flag(I)
    sdK = sd(K) if sdK is None else sdK
    ids = [(x, chain) for x, chain in sdK if _in_link(K, x, chain, I)]
    result = sub_simplicial_set(sdK, ids)
    logger.debug("Link at %s: %s non-degenerate simplices.", I, result.counts())
    return result


def induced_link_map(f, I, source_link=None, target_link=None, sd_f=None):
    """The map ``Link_I(f)`` induced by a stratified map.

    Parameters
    ----------
    f : StratifiedMap

    I : tuple

    source_link, target_link : SimplicialSet, default=None
        Already computed links of the source and target.

    sd_f : SimplicialMap, default=None
        An already computed ``sd(f)``.

    Returns
    -------
    link_f : SimplicialMap
    """
    sd_f = sd_map(f) if sd_f is None else sd_f
    source_link = (
        link(f.source, I, sd_f.source) if source_link is None else source_link
    )
    target_link = (
        link(f.target, I, sd_f.target) if target_link is None else target_link
    )
    return SimplicialMap(
        source_link,
        target_link,
        {a: sd_f.images[a] for a in source_link},
        validate=False,
    )
