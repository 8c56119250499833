"""Stratified and naive subdivision of arbitrary stratified simplicial sets."""

# License: MIT

import logging

from ..exceptions import MalformedInputError
from ..poset import nerve
from ..simplicial import SimplexRef
from ..simplicial import compose
from ..simplicial import identity
from ..simplicial import last_vertex
from ..simplicial import product
from ..simplicial import product_map
from ..simplicial import sd
from ..simplicial import sd_chain_ref
from ..simplicial import sd_map
from ..stratified import StratifiedMap
from ..stratified import StratifiedSimplicialSet

logger = logging.getLogger(__name__)


class StratifiedSubdivision(StratifiedSimplicialSet):
    """``sd_P(K)`` as the pullback of ``sd(K)`` and ``sd_P(N(P))``.

    A non-degenerate simplex has the id ``((x, chain), q, path)``: a
    simplex ``(x, chain)`` of ``sd(K)``, a regular flag ``q`` and a lattice
    path pairing them as in :func:`~stratkit.simplicial.product`. Every entry
    of ``q`` is a stratum of a vertex of ``chain[0]``.

    Attributes
    ----------
    space : StratifiedSimplicialSet
        The subdivided object ``K``.

    subdivision : SimplicialSet
        ``sd(K)``; ``base`` projects onto it.

    nerve : SimplicialSet
        The nerve of the poset.
    """

    def __init__(self, K, sdK=None):
        sdK = sd(K) if sdK is None else sdK
        NP = nerve(K.poset, K.poset.longest_chain() - 1)

        def keep(a, q):
            x, chain = a
            return set(q) <= {K.flags[x][i] for i in chain[0]}

        carrier, pr_sd, _ = product(sdK, NP, keep=keep)
        flags = {z: tuple(z[1][b] for _, b in z[2]) for z in carrier}
        super().__init__(carrier, K.poset, flags, base=pr_sd, validate=False)
        self.space = K
        self.subdivision = sdK
        self.nerve = NP
        logger.debug("sd_P with %s non-degenerate simplices.", self.counts())


def sd_P(K, sdK=None):
    """The stratified subdivision ``sd_P(K)``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    sdK : SimplicialSet, default=None
        An already computed ``sd(K)``.

    Returns
    -------
    sdPK : StratifiedSubdivision

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.subdivision import sd_P
    >>> sdPK = sd_P(standard_simplex(Poset([0, 1], [(0, 1)]), (0, 1)))
    >>> sdPK.counts()
    [4, 3]
    >>> sorted(sdPK.flags[v] for v in sdPK.simplices(0))
    [(0,), (0,), (1,), (1,)]
    """
    return StratifiedSubdivision(K, sdK)


def sd_P_map(f, source=None, target=None):
    """``sd_P(f)`` for a stratified map ``f``.

    Parameters
    ----------
    f : StratifiedMap

    source, target : StratifiedSubdivision, default=None
        Already computed ``sd_P`` of the source and target of ``f``.

    Returns
    -------
    sd_P_f : StratifiedMap
    """
    source = sd_P(f.source) if source is None else source
    target = sd_P(f.target) if target is None else target
    sd_f = sd_map(f, source.subdivision, target.subdivision)
    images = product_map(sd_f, identity(source.nerve), source, target).images
    return StratifiedMap(source, target, images, validate=False)


def lv_P(K, sdPK=None):
    """The stratified last vertex map ``l.v_P: sd_P(K) -> K``.

    The vertex ``(sigma, q)`` over a simplex ``x`` goes to the last vertex of
    ``sigma`` lying in the stratum ``q``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    sdPK : StratifiedSubdivision, default=None

    Returns
    -------
    lv : StratifiedMap
    """
    sdPK = sd_P(K) if sdPK is None else sdPK
    images = {}
    for z in sdPK:
        (x, chain), q, path = z
        flag = K.flags[x]
        alpha = [
            max(i for i in chain[a] if flag[i] == q[b]) for a, b in path
        ]
        images[z] = K.apply_operator(SimplexRef(x), alpha)
    return StratifiedMap(sdPK, K, images, validate=False)


def sd_P_naiv(K, sdK=None):
    """The naive subdivision: ``sd(K)`` stratified through the last vertex map.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.subdivision import sd_P_naiv
    >>> naive = sd_P_naiv(standard_simplex(Poset([0, 1], [(0, 1)]), (0, 1)))
    >>> [naive.flags[v] for v in naive.simplices(0)]
    [(0,), (1,), (1,)]
    """
    sdK = sd(K) if sdK is None else sdK
    flags = {
        (x, chain): tuple(K.flags[x][max(s)] for s in chain) for x, chain in sdK
    }
    return StratifiedSimplicialSet(sdK, K.poset, flags, validate=False)


def naive_last_vertex(K, naive=None):
    """The last vertex map ``sd_P^naiv(K) -> K``, a stratified map."""
    naive = sd_P_naiv(K) if naive is None else naive
    return StratifiedMap(naive, K, last_vertex(K, naive).images, validate=False)


def t_map(K, source=None, target=None):
    """The natural map ``t: sd_P(K) -> sd_P^naiv(K)``.

    Over a simplex ``x`` the vertex ``(sigma, r)`` goes to the barycenter of
    the vertices of ``sigma`` whose stratum is at most ``r``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    source : StratifiedSubdivision, default=None

    target : StratifiedSimplicialSet, default=None
        An already computed ``sd_P_naiv(K)`` built on ``source.subdivision``.

    Returns
    -------
    t : StratifiedMap
    """
    source = sd_P(K) if source is None else source
    target = sd_P_naiv(K, source.subdivision) if target is None else target
    leq = K.poset.leq
    images = {}
    for z in source:
        (x, chain), q, path = z
        flag = K.flags[x]
        sequence = [
            [i for i in chain[a] if leq(flag[i], q[b])] for a, b in path
        ]
        images[z] = sd_chain_ref(K, x, sequence)
    return StratifiedMap(source, target, images, validate=False)


def iterated_sd_P(K, n):
    """``sd_P^n(K)`` together with ``l.v_P^n: sd_P^n(K) -> K``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    n : int
        Number of subdivisions, at least 0.

    Returns
    -------
    sdPK : StratifiedSimplicialSet

    lv : StratifiedMap
    """
    if n < 0:
        raise MalformedInputError(f"n must be non-negative. Got {n} instead.")
    current = K
    lv = StratifiedMap(K, K, identity(K).images, validate=False)
    for _ in range(n):
        subdivided = sd_P(current)
        lv = compose(lv, lv_P(current, subdivided))
        current = subdivided
    return current, StratifiedMap(current, K, lv.images, validate=False)
