"""Subdivisions of a single stratified simplex and the maps between them.

Both ``sd_P(Delta^J)`` and ``sd_P^naiv(Delta^J)`` are ordered simplicial
complexes, so every map between them is determined by what it does on
vertices. A vertex of ``sd_P(Delta^J)`` is a pair ``(sigma, q)`` with
``sigma`` a sorted tuple of indices of ``J`` and ``q`` one of the strata
met by ``sigma``; a vertex of the naive subdivision is ``sigma`` alone.
"""

# License: MIT

import logging
from functools import lru_cache
from itertools import combinations
from itertools import permutations

import networkx as nx

from ..exceptions import MalformedInputError
from ..simplicial import from_chains
from ..simplicial import vertex_map
from ..stratified import StratifiedMap
from ..stratified import StratifiedSimplicialSet
from ..stratified import standard_simplex
from ..utils import check_index

logger = logging.getLogger(__name__)


def _subsets(n):
    full = range(n + 1)
    return [s for size in range(1, n + 2) for s in combinations(full, size)]


def _strata(J, sigma):
    return {J[i] for i in sigma}


def _related(J, u, v):
    # u < v in sd_P(Delta^J): a simplex is a chain whose strata all lie over
    # its first vertex, which is a pairwise condition
    (sigma, q), (sigma2, q2) = u, v
    return (
        u != v
        and set(sigma) <= set(sigma2)
        and J.index(q) <= J.index(q2)
        and q2 in _strata(J, sigma)
    )


def simplex_vertices(J):
    """Vertices of ``sd_P(Delta^J)`` ordered by size of ``sigma``, then
    ``sigma``, then the position of ``q`` in ``J``."""
    return [
        (sigma, q)
        for sigma in _subsets(len(J) - 1)
        for q in sorted(_strata(J, sigma), key=J.index)
    ]


@lru_cache(maxsize=None)
def simplex_model(P, J):
    """The stratified subdivision ``sd_P(Delta^J)`` as an ordered complex.

    Vertices are the pairs ``(sigma, q)`` with ``q`` a stratum of some
    vertex of ``sigma``. A chain ``(sigma_0, q_0) < ... < (sigma_k, q_k)``
    increasing in both components is a simplex when all the ``q_i`` are
    strata of vertices of ``sigma_0``. The stratum of a vertex is ``q``.

    Parameters
    ----------
    P : Poset

    J : tuple
        A flag of ``P``.

    Returns
    -------
    model : StratifiedSimplicialSet
        Simplex ids are tuples of vertices.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import simplex_model
    >>> P = Poset([0, 1], [(0, 1)])
    >>> simplex_model(P, (0, 1)).counts()
    [4, 3]
    >>> simplex_model(P, (0, 0)).counts()
    [3, 2]
    """
    J = P.check_flag(J)
    vertices = simplex_vertices(J)
    position = {v: i for i, v in enumerate(vertices)}

    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    for u, v in combinations(vertices, 2):
        if _related(J, u, v) or _related(J, v, u):
            graph.add_edge(u, v)
    # the relation is a strict order on every clique, so sorting recovers it
    chains = sorted(
        (tuple(sorted(c, key=position.__getitem__)) for c in nx.find_cliques(graph)),
        key=lambda c: [position[v] for v in c],
    )
    chains = [(v,) for v in vertices] + chains
    carrier = from_chains(chains)
    model = StratifiedSimplicialSet(
        carrier, P, {x: tuple(q for _, q in x) for x in carrier}, validate=False
    )
    logger.debug("sd_P of the simplex %s: %s", J, model.counts())
    return model


@lru_cache(maxsize=None)
def naive_model(P, J):
    """The naive subdivision ``sd_P^naiv(Delta^J)`` as an ordered complex.

    This is ``sd(Delta^n)`` with the barycenter of ``sigma`` in the stratum
    ``J[max(sigma)]``.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import naive_model
    >>> model = naive_model(Poset([0, 1], [(0, 1)]), (0, 1))
    >>> [model.flags[v] for v in model.simplices(0)]
    [(0,), (1,), (1,)]
    """
    J = P.check_flag(J)
    n = len(J) - 1
    order = {s: i for i, s in enumerate(_subsets(n))}
    chains = [(s,) for s in order]
    for perm in permutations(range(n + 1)):
        chains.append(tuple(tuple(sorted(perm[: i + 1])) for i in range(n + 1)))
    chains.sort(key=lambda c: (len(c), [order[s] for s in c]))
    carrier = from_chains(chains)
    return StratifiedSimplicialSet(
        carrier,
        P,
        {x: tuple(J[max(sigma)] for sigma in x) for x in carrier},
        validate=False,
    )


def repeat_entry(J, k):
    """The flag ``J^k`` obtained by repeating entry ``k``."""
    return tuple(J[: k + 1]) + tuple(J[k:])


def delete_entry(J, i):
    return tuple(J[:i]) + tuple(J[i + 1 :])


def _delta(i):
    return lambda a: a if a < i else a + 1


def _sigma(k):
    return lambda a: a if a <= k else a - 1


def _on_subset(func, sigma):
    return tuple(sorted({func(a) for a in sigma}))


def _union(func, sigma):
    result = set()
    for a in sigma:
        result |= set(func(a))
    return tuple(sorted(result))


def j_tilde(n, k, i):
    """The vertex formula of ``j^k`` on ``{i}`` inside ``sd(Delta^n)``.

    Examples
    --------
    >>> from stratkit.subdivision import j_tilde
    >>> j_tilde(2, 2, 0), j_tilde(2, 2, 2)
    ((0, 1, 2), (2,))
    """
    return tuple(range(i, n + 1)) if i < k else (i,)


def r_tilde(n, k, i):
    """The vertex formula of ``r^k: sd(Delta^{n+1}) -> sd(Delta^n)`` on ``{i}``.

    Examples
    --------
    >>> from stratkit.subdivision import r_tilde
    >>> [r_tilde(1, 0, i) for i in range(3)]
    [(0, 1), (0,), (1,)]
    """
    if i < k:
        return (i,)
    if i == k:
        return tuple(range(k, n + 1))
    return (i - 1,)


def moss_r_tilde(n, m, i):
    """The vertex formula of the classical retraction ``r_M^m`` on ``{i}``.

    It maps ``sd(Delta^{n+1})`` to ``sd(Delta^n)`` and folds the vertex
    ``m + 1`` onto the face ``{0, ..., m}``.
    """
    if i <= m:
        return (i,)
    if i == m + 1:
        return tuple(range(m + 1))
    return (i - 1,)


def moss_j_tilde(n, k, i):
    """The vertex formula of the classical ``j_M^k`` on ``{i}``."""
    return tuple(range(i + 1)) if i > n - k else (i,)


def face_vertex(i):
    """Vertex function of ``sd_P(d^i)``."""
    delta = _delta(i)
    return lambda v: (_on_subset(delta, v[0]), v[1])


def degeneracy_vertex(k):
    """Vertex function of ``sd_P(s^k)``."""
    sigma = _sigma(k)
    return lambda v: (_on_subset(sigma, v[0]), v[1])


def j_vertex(n, k):
    """Vertex function of ``j^k`` on ``sd_P(Delta^J)``, ``len(J) == n + 1``."""
    return lambda v: (_union(lambda a: j_tilde(n, k, a), v[0]), v[1])


def r_vertex(n, k):
    """Vertex function of ``r^k`` into ``sd_P(Delta^J)``, ``len(J) == n + 1``."""
    return lambda v: (_union(lambda a: r_tilde(n, k, a), v[0]), v[1])


def _stratified_vertex_map(source, target, func):
    f = vertex_map(source, target, func, validate=False)
    return StratifiedMap(source, target, f.images)


@lru_cache(maxsize=None)
def face_map(P, J, i):
    """``sd_P(d^i): sd_P(Delta^{d_i J}) -> sd_P(Delta^J)``."""
    J = P.check_flag(J)
    if len(J) < 2:
        raise MalformedInputError("A flag of length 1 has no faces.")
    i = check_index("i", i, 0, len(J) - 1)
    return _stratified_vertex_map(
        simplex_model(P, delete_entry(J, i)),
        simplex_model(P, J),
        face_vertex(i),
    )


@lru_cache(maxsize=None)
def degeneracy_map(P, J, k):
    """``sd_P(s^k): sd_P(Delta^{J^k}) -> sd_P(Delta^J)``."""
    J = P.check_flag(J)
    k = check_index("k", k, 0, len(J) - 1)
    return _stratified_vertex_map(
        simplex_model(P, repeat_entry(J, k)),
        simplex_model(P, J),
        degeneracy_vertex(k),
    )


@lru_cache(maxsize=None)
def j_map(P, J, k):
    """The endomorphism ``j^k`` of ``sd_P(Delta^J)``.

    It is ``j~^k x 1`` restricted to ``sd_P(Delta^J)``: the subset grows by
    the vertex formula of :func:`j_tilde` and the stratum is kept.

    Parameters
    ----------
    P : Poset

    J : tuple
        A flag of length ``n + 1``.

    k : int
        In ``[0, n]``.

    Returns
    -------
    j : StratifiedMap
    """
    J = P.check_flag(J)
    n = len(J) - 1
    k = check_index("k", k, 0, n)
    return _stratified_vertex_map(
        simplex_model(P, J),
        simplex_model(P, J),
        j_vertex(n, k),
    )


@lru_cache(maxsize=None)
def r_map(P, J, k):
    """The map ``r^k: sd_P(Delta^{J^k}) -> sd_P(Delta^J)``.

    Parameters
    ----------
    P : Poset

    J : tuple
        A flag of length ``n + 1``.

    k : int
        In ``[0, n]``; ``J^k`` repeats entry ``k``.

    Returns
    -------
    r : StratifiedMap

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import r_map
    >>> r = r_map(Poset([0, 1], [(0, 1)]), (0, 1), 0)
    >>> r.source.counts(), r.target.counts()
    ([10, 19, 10], [4, 3])
    """
    J = P.check_flag(J)
    n = len(J) - 1
    k = check_index("k", k, 0, n)
    return _stratified_vertex_map(
        simplex_model(P, repeat_entry(J, k)),
        simplex_model(P, J),
        r_vertex(n, k),
    )


@lru_cache(maxsize=None)
def naive_face_map(P, J, i):
    """``sd(d^i)`` between naive subdivisions."""
    J = P.check_flag(J)
    i = check_index("i", i, 0, len(J) - 1)
    delta = _delta(i)
    return _stratified_vertex_map(
        naive_model(P, delete_entry(J, i)),
        naive_model(P, J),
        lambda s: _on_subset(delta, s),
    )


@lru_cache(maxsize=None)
def naive_degeneracy_map(P, J, k):
    """``sd(s^k)`` between naive subdivisions."""
    J = P.check_flag(J)
    k = check_index("k", k, 0, len(J) - 1)
    sigma = _sigma(k)
    return _stratified_vertex_map(
        naive_model(P, repeat_entry(J, k)),
        naive_model(P, J),
        lambda s: _on_subset(sigma, s),
    )


@lru_cache(maxsize=None)
def moss_j_map(P, J, k):
    """The endomorphism ``j_M^k`` of ``sd_P^naiv(Delta^J)``."""
    J = P.check_flag(J)
    n = len(J) - 1
    k = check_index("k", k, 0, n)
    return _stratified_vertex_map(
        naive_model(P, J),
        naive_model(P, J),
        lambda s: _union(lambda a: moss_j_tilde(n, k, a), s),
    )


@lru_cache(maxsize=None)
def moss_r(P, J, m):
    """The map ``r_M^m: sd_P^naiv(Delta^{J^m}) -> sd_P^naiv(Delta^J)``.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import moss_r
    >>> r = moss_r(Poset([0, 1], [(0, 1)]), (0, 1), 0)
    >>> r.images[((0, 1, 2),)]
    SimplexRef(nd_id=((0, 1),), word=())
    """
    J = P.check_flag(J)
    n = len(J) - 1
    m = check_index("m", m, 0, n)
    return _stratified_vertex_map(
        naive_model(P, repeat_entry(J, m)),
        naive_model(P, J),
        lambda s: _union(lambda a: moss_r_tilde(n, m, a), s),
    )


def truncate_to_stratum(J, sigma, r, leq):
    """The vertices of ``sigma`` whose stratum is at most ``r``."""
    return tuple(i for i in sigma if leq(J[i], r))


@lru_cache(maxsize=None)
def t_simplex_map(P, J):
    """``t_J: sd_P(Delta^J) -> sd_P^naiv(Delta^J)``.

    The vertex ``(sigma, r)`` goes to the initial part of ``sigma`` made of
    the vertices of stratum at most ``r``. When ``r`` is the last stratum of
    ``sigma`` the whole of ``sigma`` is kept.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import t_simplex_map
    >>> t = t_simplex_map(Poset([0, 1], [(0, 1)]), (0, 1))
    >>> t.images[(((0, 1), 0),)]
    SimplexRef(nd_id=((0,),), word=())
    """
    J = P.check_flag(J)
    return _stratified_vertex_map(
        simplex_model(P, J),
        naive_model(P, J),
        lambda v: truncate_to_stratum(J, v[0], v[1], P.leq),
    )


@lru_cache(maxsize=None)
def lv_simplex_map(P, J):
    """``l.v_P: sd_P(Delta^J) -> Delta^J``; ``(sigma, q)`` goes to the last
    vertex of ``sigma`` in the stratum ``q``."""
    J = P.check_flag(J)
    return _stratified_vertex_map(
        simplex_model(P, J),
        standard_simplex(P, J),
        lambda v: max(i for i in v[0] if J[i] == v[1]),
    )


@lru_cache(maxsize=None)
def naive_lv_simplex_map(P, J):
    """``l.v: sd_P^naiv(Delta^J) -> Delta^J``."""
    J = P.check_flag(J)
    return _stratified_vertex_map(
        naive_model(P, J), standard_simplex(P, J), max
    )


@lru_cache(maxsize=None)
def factor_map_f(P, J):
    """The map ``f: sd_P^naiv(Delta^J) -> sd_P(Delta^J)`` with ``f o t_J = j^n``.

    A barycenter ``sigma`` goes to ``({min sigma, ..., n}, J[max sigma])``.
    """
    J = P.check_flag(J)
    n = len(J) - 1
    return _stratified_vertex_map(
        naive_model(P, J),
        simplex_model(P, J),
        lambda s: (tuple(range(min(s), n + 1)), J[max(s)]),
    )


@lru_cache(maxsize=None)
def g_map(P, J, k):
    """The map ``g: sd_P^naiv(Delta^{J^k}) -> sd_P^naiv(Delta^J)`` with
    ``t_J o r^k = g o t_{J^k}``.

    ``g(mu)`` keeps the vertices of ``r~^k(mu)`` whose stratum is at most the
    stratum of ``mu``.
    """
    J = P.check_flag(J)
    n = len(J) - 1
    k = check_index("k", k, 0, n)
    Jk = repeat_entry(J, k)

    def image(mu):
        top = Jk[max(mu)]
        spread = _union(lambda a: r_tilde(n, k, a), mu)
        return tuple(i for i in spread if P.leq(J[i], top))

    return _stratified_vertex_map(naive_model(P, Jk), naive_model(P, J), image)


def lift_naive_simplex(P, J, chain):
    """A simplex of ``sd_P(Delta^J)`` sent by ``t_J`` onto a given chain.

    Parameters
    ----------
    P : Poset

    J : tuple

    chain : sequence of tuple
        A strictly increasing chain ``sigma_0 < ... < sigma_k`` of non-empty
        subsets of indices of ``J``, a simplex of ``sd_P^naiv(Delta^J)``.

    Returns
    -------
    lift : tuple
        The vertices ``(sigma_i u sigma~, q_i)`` where ``q_i`` is the
        stratum of ``sigma_i`` and ``sigma~`` collects every vertex lying
        in the first ``sigma_i`` of its own stratum.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.subdivision import lift_naive_simplex
    >>> lift_naive_simplex(Poset([0, 1], [(0, 1)]), (0, 1), [(0,), (0, 1)])
    (((0, 1), 0), ((0, 1), 1))
    """
    J = P.check_flag(J)
    chain = [tuple(sorted(s)) for s in chain]
    strata = [J[max(s)] for s in chain]
    first = {}
    for position, q in enumerate(strata):
        first.setdefault(q, position)
    extra = {
        e for e in range(len(J)) if J[e] in first and e in chain[first[J[e]]]
    }
    return tuple(
        (tuple(sorted(set(s) | extra)), q) for s, q in zip(chain, strata)
    )
