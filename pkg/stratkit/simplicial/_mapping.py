"""Truncated simplicial sets of maps out of a cosimplicial family of shapes.

Both the homotopy links and ``Ex_P`` are presheaves of the form
``shape -> Hom(domain(shape), K)``, with faces and degeneracies given by
precomposition. :class:`MappingComplex` builds the non-degenerate part of
such a presheaf up to a dimension bound.
"""

# License: MIT

import logging
from abc import ABCMeta, abstractmethod

from joblib import Parallel, delayed

from ._maps import compose
from ._simplicial_set import SimplexRef
from ._simplicial_set import SimplicialSet
from ._simplicial_set import surjection_from_word
from ._simplicial_set import word_from_surjection
from ..utils import check_n_jobs

logger = logging.getLogger(__name__)


class ShapeFamily(metaclass=ABCMeta):
    """A truncated cosimplicial object of domains.

    Subclasses list the shapes, give each one a domain and a dimension, and
    provide the coface and codegeneracy maps between domains.
    """

    @abstractmethod
    def shapes(self):
        """All shapes up to the truncation, in increasing dimension."""

    @abstractmethod
    def dim(self, shape):
        """Simplicial dimension of the simplices of a given shape."""

    @abstractmethod
    def domain(self, shape):
        """The domain object whose maps are the simplices of ``shape``."""

    @abstractmethod
    def coface(self, shape, i):
        """``(face_shape, delta)`` with ``delta: domain(face_shape) -> domain(shape)``."""

    @abstractmethod
    def codegeneracy(self, shape, j):
        """``(base_shape, sigma)`` with ``sigma: domain(shape) -> domain(base_shape)``.

        ``None`` when ``shape`` is not the ``j``-th degeneracy of a shape.
        """

    @abstractmethod
    def hom(self, shape, budget=None):
        """All admissible maps ``domain(shape) -> target``."""

    def flag(self, shape):
        return None


class MappingComplex(SimplicialSet):
    """The truncated presheaf of maps out of a :class:`ShapeFamily`.

    Non-degenerate simplices have the ids ``(shape, index)``; the map they
    stand for is ``maps[(shape, index)]``.

    Parameters
    ----------
    family : ShapeFamily

    truncation : int
        The dimension bound. Recorded as ``truncation``; homology computed
        from this object is trusted below it only.

    budget : int, default=None
        Enumeration budget for each shape.

    n_jobs : int, default=None
        Number of workers enumerating the shapes.
    """

    def __init__(self, family, truncation, budget=None, n_jobs=None):
        self.family = family
        self.truncation = truncation
        shapes = list(family.shapes())
        homs = Parallel(n_jobs=check_n_jobs(n_jobs), prefer="threads")(
            delayed(family.hom)(shape, budget) for shape in shapes
        )
        self.maps = {}
        self._index = {}
        self._shape_dims = {}
        self._nd_dims = {}
        by_shape = {}
        for shape, maps in zip(shapes, homs):
            self._shape_dims[shape] = family.dim(shape)
            by_shape[shape] = []
            for tau in maps:
                if self._degenerate_at(tau, shape) is None:
                    nd_id = (shape, len(by_shape[shape]))
                    by_shape[shape].append(nd_id)
                    self.maps[nd_id] = tau
                    self._index[(shape, tau.key())] = nd_id
                    self._nd_dims[nd_id] = family.dim(shape)

        data = []
        for shape in shapes:
            n = self._shape_dims[shape]
            for nd_id in by_shape[shape]:
                faces = ()
                if n > 0:
                    faces = tuple(
                        self.ref_of(*self._precompose(self.maps[nd_id], shape, i))
                        for i in range(n + 1)
                    )
                data.append((nd_id, n, faces))
        super().__init__(data, validate=False)
        logger.debug(
            "Mapping complex truncated at %d: %s non-degenerate simplices.",
            truncation,
            self.counts(),
        )

    def _precompose(self, tau, shape, i):
        face_shape, delta = self.family.coface(shape, i)
        return compose(tau, delta), face_shape

    def _degenerate_at(self, tau, shape):
        """An index ``j`` with ``tau = (tau o delta_j) o sigma_j``, or ``None``."""
        for j in range(self.family.dim(shape)):
            codegeneracy = self.family.codegeneracy(shape, j)
            if codegeneracy is None:
                continue
            _, sigma = codegeneracy
            face, _ = self._precompose(tau, shape, j)
            if compose(face, sigma) == tau:
                return j
        return None

    def ref_of(self, tau, shape):
        """Normal form of an arbitrary map of the given shape."""
        j = self._degenerate_at(tau, shape)
        if j is None:
            return SimplexRef(self._index[(shape, tau.key())])
        inner = self.ref_of(*self._precompose(tau, shape, j))
        n = self._nd_dims[inner[0]] + len(inner[1])
        eta = surjection_from_word(tuple(inner[1]), n)
        return SimplexRef(
            inner[0],
            word_from_surjection([eta[i] if i <= j else eta[i - 1] for i in range(n + 2)]),
        )

    def shape_of(self, nd_id):
        return nd_id[0]

    def flag(self, ref):
        """Flag of a simplex when the family is stratified."""
        base = self.family.flag(ref[0][0])
        if base is None:
            return None
        eta = self.surjection(ref)
        return tuple(base[e] for e in eta)
