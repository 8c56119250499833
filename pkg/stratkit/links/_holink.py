"""Truncated simplicial homotopy links and the diagram of all of them."""

# License: MIT

import logging

from joblib import Parallel, delayed

from ..diagrams import Diagram
from ..diagrams import DiagramMap
from ..poset import flag_subflag
from ..poset import regular_flags
from ..simplicial import MappingComplex
from ..simplicial import ShapeFamily
from ..simplicial import SimplicialMap
from ..simplicial import compose
from ..simplicial import from_chains
from ..simplicial import vertex_map
from ..stratified import StratifiedSimplicialSet
from ..stratified import enumerate_stratified_maps
from ..utils import Substitution
from ..utils import check_dim_bound
from ..utils import check_n_jobs
from ..utils._docstring import _budget_docstring
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)


def _grid_chains(m, n):
    chains = []

    def walk(path):
        a, b = path[-1]
        if (a, b) == (m, n):
            chains.append(tuple(path))
            return
        if a < m:
            walk(path + [(a + 1, b)])
        if b < n:
            walk(path + [(a, b + 1)])

    walk([(0, 0)])
    return chains


def prism(P, I, n):
    """The stratified product ``Delta^I x Delta^n`` as an ordered complex.

    Vertices are the pairs ``(a, b)``; the vertex ``(a, b)`` lies in the
    stratum ``I[a]``.
    """
    carrier = from_chains(_grid_chains(len(I) - 1, n))
    flags = {x: tuple(I[a] for a, _ in x) for x in carrier}
    return StratifiedSimplicialSet(carrier, P, flags, validate=False)


class HolinkFamily(ShapeFamily):
    """Shapes ``0..dim_bound`` with domains ``Delta^I x Delta^n``."""

    def __init__(self, K, I, dim_bound):
        self.K = K
        self.I = I
        self.dim_bound = dim_bound
        self._domains = {}
        self._cofaces = {}
        self._codegeneracies = {}

    def shapes(self):
        return list(range(self.dim_bound + 1))

    def dim(self, shape):
        return shape

    def domain(self, shape):
        if shape not in self._domains:
            self._domains[shape] = prism(self.K.poset, self.I, shape)
        return self._domains[shape]

    def coface(self, shape, i):
        if (shape, i) not in self._cofaces:
            self._cofaces[(shape, i)] = vertex_map(
                self.domain(shape - 1),
                self.domain(shape),
                lambda v: (v[0], v[1] if v[1] < i else v[1] + 1),
                validate=False,
            )
        return shape - 1, self._cofaces[(shape, i)]

    def codegeneracy(self, shape, j):
        if (shape, j) not in self._codegeneracies:
            self._codegeneracies[(shape, j)] = vertex_map(
                self.domain(shape),
                self.domain(shape - 1),
                lambda v: (v[0], v[1] if v[1] <= j else v[1] - 1),
                validate=False,
            )
        return shape - 1, self._codegeneracies[(shape, j)]

    def hom(self, shape, budget=None):
        return enumerate_stratified_maps(self.domain(shape), self.K, budget=budget)


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def holink(K, I, dim_bound, budget=None, n_jobs=None):
    """The homotopy link ``HoLink_I(K)`` truncated at ``dim_bound``.

    The ``n``-simplices for ``n <= dim_bound`` are the stratified maps
    ``Delta^I x Delta^n -> K``; faces and degeneracies act by precomposition.
    Nothing is added above ``dim_bound``, so homology is trusted in degrees
    below ``dim_bound`` only.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    I : tuple
        A regular flag of ``K.poset``.

    dim_bound : int

    {budget}

    {n_jobs}

    Returns
    -------
    holink : MappingComplex
        ``holink.maps[x]`` is the stratified map standing for ``x`` and
        ``holink.truncation`` is ``dim_bound``.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import boundary, standard_simplex
    >>> from stratkit.links import holink
    >>> P = Poset([0, 1, 2], [(0, 1), (1, 2)])
    >>> len(holink(standard_simplex(P, (0, 1, 2)), (0, 1, 2), 0))
    1
    >>> len(holink(boundary(P, (0, 1, 2))[0], (0, 1, 2), 0))
    0
    """
    I = K.poset.check_regular_flag(I)
    dim_bound = check_dim_bound(dim_bound)
    return MappingComplex(
        HolinkFamily(K, I, dim_bound), dim_bound, budget=budget, n_jobs=n_jobs
    )


def induced_holink_map(f, source, target):
    """The map ``HoLink_I(f)`` given by postcomposition with ``f``.

    Parameters
    ----------
    f : StratifiedMap

    source, target : MappingComplex
        Homotopy links of ``f.source`` and ``f.target`` at the same flag and
        truncation.
    """
    images = {}
    for x in source:
        shape = source.shape_of(x)
        images[x] = target.ref_of(compose(f, source.maps[x]), shape)
    return SimplicialMap(source, target, images, validate=False)


def holink_restriction(large, small):
    """The restriction ``HoLink_I2(K) -> HoLink_I(K)`` for ``I`` inside ``I2``.

    A simplex ``tau: Delta^I2 x Delta^n -> K`` goes to its precomposition
    with the face ``Delta^I x Delta^n -> Delta^I2 x Delta^n``.
    """
    I, I2 = small.family.I, large.family.I
    position = {a: I2.index(p) for a, p in enumerate(I)}
    faces = {}
    images = {}
    for x in large:
        shape = large.shape_of(x)
        if shape not in faces:
            faces[shape] = vertex_map(
                small.family.domain(shape),
                large.family.domain(shape),
                lambda v: (position[v[0]], v[1]),
                validate=False,
            )
        images[x] = small.ref_of(compose(large.maps[x], faces[shape]), shape)
    return SimplicialMap(large, small, images, validate=False)


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def diagram_D(K, dim_bound, budget=None, n_jobs=None):
    """The diagram ``D_P(K)`` of all truncated homotopy links.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    dim_bound : int

    {budget}

    {n_jobs}

    Returns
    -------
    D : Diagram
        ``D.values[I]`` is ``holink(K, I, dim_bound)``; restrictions are
        precomposition with flag inclusions.
    """
    dim_bound = check_dim_bound(dim_bound)
    flags = regular_flags(K.poset)
    holinks = Parallel(n_jobs=check_n_jobs(n_jobs), prefer="threads")(
        delayed(holink)(K, I, dim_bound, budget, 1) for I in flags
    )
    values = dict(zip(flags, holinks))
    restrictions = {
        (I, I2): holink_restriction(values[I2], values[I])
        for I2 in flags
        for I in flags
        if I != I2 and flag_subflag(I, I2)
    }
    logger.debug("Diagram of homotopy links over %d flags.", len(flags))
    return Diagram(K.poset, values, restrictions, validate=False)


def diagram_D_map(f, source, target):
    """The map ``D_P(f)`` between two diagrams built by :func:`diagram_D`."""
    return DiagramMap(
        source,
        target,
        {
            I: induced_holink_map(f, source.values[I], target.values[I])
            for I in source.flags
        },
        validate=False,
    )
