"""The right adjoints ``Ex_P`` and ``Ex_P^naiv`` truncated at a dimension."""

# License: MIT

import logging
from numbers import Integral

from ._model import delete_entry
from ._model import degeneracy_map
from ._model import face_map
from ._model import j_map
from ._model import lv_simplex_map
from ._model import moss_j_map
from ._model import naive_degeneracy_map
from ._model import naive_face_map
from ._model import naive_lv_simplex_map
from ._model import naive_model
from ._model import simplex_model
from ._model import t_simplex_map
from ._sd_p import sd_P
from ..exceptions import MalformedInputError
from ..exceptions import raise_isinstance_error
from ..poset import flags
from ..simplicial import MappingComplex
from ..simplicial import ShapeFamily
from ..simplicial import SimplexRef
from ..simplicial import chain_ref
from ..simplicial import compose
from ..stratified import StratifiedMap
from ..stratified import StratifiedSimplicialSet
from ..stratified import enumerate_stratified_maps
from ..stratified import standard_simplex
from ..utils import Substitution
from ..utils import check_dim_bound
from ..utils._docstring import _budget_docstring
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)


class ExFamily(ShapeFamily):
    """Flags up to a length, each with its subdivided simplex as domain.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    dim_bound : int

    naive : bool, default=False
        Use ``sd_P^naiv(Delta^J)`` instead of ``sd_P(Delta^J)``.
    """

    def __init__(self, K, dim_bound, naive=False):
        self.K = K
        self.P = K.poset
        self.dim_bound = dim_bound
        self.naive = naive

    def shapes(self):
        return flags(self.P, self.dim_bound + 1)

    def dim(self, shape):
        return len(shape) - 1

    def domain(self, shape):
        if self.naive:
            return naive_model(self.P, shape)
        return simplex_model(self.P, shape)

    def coface(self, shape, i):
        face = naive_face_map if self.naive else face_map
        return delete_entry(shape, i), face(self.P, shape, i)

    def codegeneracy(self, shape, j):
        if shape[j] != shape[j + 1]:
            return None
        base = delete_entry(shape, j + 1)
        degeneracy = naive_degeneracy_map if self.naive else degeneracy_map
        return base, degeneracy(self.P, base, j)

    def hom(self, shape, budget=None):
        return enumerate_stratified_maps(self.domain(shape), self.K, budget=budget)

    def flag(self, shape):
        return shape


class ExComplex(StratifiedSimplicialSet):
    """``Ex_P(K)`` or ``Ex_P^naiv(K)`` up to a dimension.

    A non-degenerate simplex has the id ``(J, index)`` and stands for the
    stratified map ``maps[(J, index)]`` out of the subdivided simplex of
    flag ``J``.

    Attributes
    ----------
    space : StratifiedSimplicialSet
        The object ``K``.

    naive : bool

    maps : dict

    truncation : int
    """

    def __init__(self, K, dim_bound, naive=False, budget=None, n_jobs=None):
        family = ExFamily(K, dim_bound, naive)
        carrier = MappingComplex(family, dim_bound, budget=budget, n_jobs=n_jobs)
        super().__init__(
            carrier, K.poset, {x: x[0] for x in carrier}, validate=False
        )
        self.space = K
        self.naive = naive
        self.maps = carrier.maps

    def ref_of(self, tau, J):
        """Normal form of an arbitrary stratified map out of the simplex of ``J``."""
        return self.carrier.ref_of(tau, tuple(J))

    def domain(self, J):
        return self.carrier.family.domain(tuple(J))


def _check_depth(depth):
    if not isinstance(depth, Integral):
        raise_isinstance_error("depth", [int], depth)
    if depth < 1:
        raise MalformedInputError(f"depth must be at least 1. Got {depth} instead.")
    return int(depth)


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def ex_P(K, depth=1, dim_bound=2, budget=None, n_jobs=None):
    """``Ex_P^depth(K)`` truncated at ``dim_bound``.

    The ``J``-simplices are the stratified maps ``sd_P(Delta^J) -> K`` for
    flags ``J`` of length at most ``dim_bound + 1``; faces and degeneracies
    are precomposition with ``sd_P`` of cofaces and codegeneracies.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    depth : int, default=1
        Number of applications of ``Ex_P``.

    dim_bound : int, default=2

    {budget}

    {n_jobs}

    Returns
    -------
    ex : ExComplex

    Raises
    ------
    BudgetExceededError
        When enumerating the maps out of some ``sd_P(Delta^J)`` exceeds the
        budget.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.subdivision import ex_P
    >>> ex_P(standard_simplex(Poset([0, 1], [(0, 1)]), (0,)), dim_bound=2).counts()
    [1]
    """
    depth = _check_depth(depth)
    dim_bound = check_dim_bound(dim_bound)
    current = K
    for level_ in range(depth):
        current = ExComplex(current, dim_bound, budget=budget, n_jobs=n_jobs)
        logger.debug("Ex_P step %d: %s", level_ + 1, current.counts())
    return current


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def ex_P_naiv(K, depth=1, dim_bound=2, budget=None, n_jobs=None):
    """``(Ex_P^naiv)^depth(K)`` truncated at ``dim_bound``.

    Its ``J``-simplices are the stratified maps ``sd_P^naiv(Delta^J) -> K``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    depth : int, default=1

    dim_bound : int, default=2

    {budget}

    {n_jobs}

    Returns
    -------
    ex : ExComplex
    """
    depth = _check_depth(depth)
    dim_bound = check_dim_bound(dim_bound)
    current = K
    for _ in range(depth):
        current = ExComplex(
            current, dim_bound, naive=True, budget=budget, n_jobs=n_jobs
        )
    return current


def characteristic_map(K, x):
    """The stratified map ``Delta^J -> K`` of a non-degenerate simplex ``x``."""
    J = K.flags[x]
    simplex = standard_simplex(K.poset, J)
    images = {y: K.apply_operator(SimplexRef(x), y) for y in simplex}
    return StratifiedMap(simplex, K, images, validate=False)


def iota(K, ex):
    """The unit ``K -> Ex_P(K)``, adjoint to the last vertex map.

    A simplex ``x`` of flag ``J`` goes to ``x o l.v_P`` where ``x`` is seen
    as a map ``Delta^J -> K``. On a naive ``ex`` the naive last vertex map
    is used instead.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    ex : ExComplex
        ``Ex_P(K)`` or ``Ex_P^naiv(K)`` truncated at or above the dimension
        of ``K``.

    Returns
    -------
    iota : StratifiedMap

    Raises
    ------
    MalformedInputError
        If ``K`` has simplices above the truncation of ``ex``.
    """
    if ex.space is not K:
        raise MalformedInputError("ex must be built on K.")
    if K.dimension > ex.truncation:
        raise MalformedInputError(
            f"K has dimension {K.dimension} above the truncation "
            f"{ex.truncation}."
        )
    last = naive_lv_simplex_map if ex.naive else lv_simplex_map
    images = {}
    for x in K:
        J = K.flags[x]
        tau = compose(characteristic_map(K, x), last(K.poset, J))
        images[x] = ex.ref_of(tau, J)
    return StratifiedMap(K, ex, images, validate=False)


def naive_inclusion(naive, ex):
    """The inclusion ``Ex_P^naiv(K) -> Ex_P(K)``, precomposition with ``t``.

    Parameters
    ----------
    naive, ex : ExComplex
        Built on the same ``K`` with the same truncation.

    Returns
    -------
    inclusion : StratifiedMap
    """
    P = ex.poset
    images = {}
    for x in naive:
        J = x[0]
        images[x] = ex.ref_of(compose(naive.maps[x], t_simplex_map(P, J)), J)
    return StratifiedMap(naive, ex, images, validate=False)


def counit(ex, sd_ex=None):
    """The evaluation ``sd_P(Ex_P(K)) -> K``.

    Over a simplex ``x`` of ``Ex_P(K)``, standing for ``tau: sd_P(Delta^J)
    -> K``, a simplex of ``sd_P`` is a chain of pairs ``(sigma, q)`` and is
    sent through ``tau``.

    Parameters
    ----------
    ex : ExComplex
        Not naive.

    sd_ex : StratifiedSubdivision, default=None
        An already computed ``sd_P(ex)``.

    Returns
    -------
    epsilon : StratifiedMap
    """
    if ex.naive:
        raise MalformedInputError("The counit is defined on Ex_P, not Ex_P^naiv.")
    sd_ex = sd_P(ex) if sd_ex is None else sd_ex
    images = {}
    for z in sd_ex:
        (x, chain), q, path = z
        tau = ex.maps[x]
        ref = chain_ref(tau.source, [(chain[a], q[b]) for a, b in path])
        images[z] = tau.apply(ref)
    return StratifiedMap(sd_ex, ex.space, images, validate=False)


def level(ex, x):
    """The largest ``k`` with ``x o j^k = x``.

    On a naive ``ex`` the classical maps ``j_M^k`` are used.

    Parameters
    ----------
    ex : ExComplex

    x : hashable
        A non-degenerate simplex of ``ex``.

    Returns
    -------
    level : int
    """
    J = x[0]
    tau = ex.maps[x]
    j = moss_j_map if ex.naive else j_map
    for k in range(len(J) - 1, 0, -1):
        if compose(tau, j(ex.poset, J, k)) == tau:
            return k
    return 0


def jhat(ex):
    """Ids of the simplices of top level, ``x o j^n = x`` in dimension ``n``.

    For ``Ex_P(K)`` they span a sub-simplicial set lying inside
    ``Ex_P^naiv(K)``; for ``Ex_P^naiv(K)`` they are the image of ``K``.
    """
    return {x for x in ex if level(ex, x) == ex.dim(x)}
