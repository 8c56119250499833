"""Simplicial maps and their enumeration by backtracking."""

# License: MIT

import logging

from ._simplicial_set import SimplexRef
from ._simplicial_set import chain_ref
from ._simplicial_set import word_from_surjection
from ..exceptions import BudgetExceededError
from ..exceptions import MalformedInputError
from ..utils import Substitution
from ..utils import check_budget
from ..utils._docstring import _budget_docstring

logger = logging.getLogger(__name__)


class SimplicialMap:
    """A map of finite simplicial sets.

    Parameters
    ----------
    source, target : SimplicialSet

    images : dict
        Assigns to every non-degenerate simplex of ``source`` a
        :class:`SimplexRef` of ``target`` of the same dimension.

    validate : bool, default=True
        Whether to check that faces are preserved.
    """

    def __init__(self, source, target, images, validate=True):
        self.source = source
        self.target = target
        self.images = {x: SimplexRef(*images[x]) for x in source}
        if validate:
            self.check()

    def __repr__(self):
        return f"SimplicialMap({len(self.source)} nd simplices -> {len(self.target)})"

    def key(self):
        """Hashable value identifying the map among maps with the same source."""
        return tuple(self.images[x] for x in self.source)

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        if self.source is not other.source and list(self.source) != list(
            other.source
        ):
            return False
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def apply(self, ref):
        """Image of an arbitrary simplex of the source."""
        if not isinstance(ref, SimplexRef):
            ref = SimplexRef(ref)
        image = self.images[ref[0]]
        if not ref[1]:
            return image
        theta = self.target.surjection(image)
        eta = self.source.surjection(ref)
        return SimplexRef(image[0], word_from_surjection([theta[e] for e in eta]))

    def check(self):
        """Validate dimensions and compatibility with faces."""
        for x in self.source:
            image = self.images[x]
            if image[0] not in self.target:
                raise MalformedInputError(f"Image of {x!r} is not a simplex.")
            if self.target.ref_dim(image) != self.source.dim(x):
                raise MalformedInputError(
                    f"Image of {x!r} does not have dimension {self.source.dim(x)}."
                )
            for i, face in enumerate(self.source.faces(x)):
                if self.apply(face) != self.target.face(image, i):
                    raise MalformedInputError(
                        f"The map does not commute with d_{i} on {x!r}."
                    )
        return self

    def is_injective(self):
        """Whether the map is a monomorphism."""
        images = [self.images[x] for x in self.source]
        return all(not ref[1] for ref in images) and len(set(images)) == len(images)

    def is_surjective(self):
        """Whether the map is an epimorphism, i.e. surjective in every degree.

        A non-degenerate simplex of the target can only be hit by a
        non-degenerate simplex of the source, and degenerate ones are then
        hit by degeneracies of the preimages.
        """
        hit = {ref[0] for ref in self.images.values() if not ref[1]}
        return all(y in hit for y in self.target)

    def image_ids(self):
        """Non-degenerate ids of the target hit by non-degenerate simplices."""
        return {self.images[x][0] for x in self.source}


def compose(g, f):
    """The composite ``g o f``."""
    return SimplicialMap(
        f.source,
        g.target,
        {x: g.apply(f.images[x]) for x in f.source},
        validate=False,
    )


def identity(X):
    """Identity map of ``X``."""
    return SimplicialMap(X, X, {x: SimplexRef(x) for x in X}, validate=False)


def vertex_map(source, target, func, validate=True):
    """Map between ordered complexes determined by a vertex function.

    Parameters
    ----------
    source, target : SimplicialSet
        Ordered complexes as built by :func:`from_chains`.

    func : callable or dict
        Sends a source vertex label to a target vertex label.

    Raises
    ------
    MalformedInputError
        If some simplex is not sent to a simplex.
    """
    if isinstance(func, dict):
        func = func.__getitem__
    images = {}
    for x in source:
        ref = chain_ref(target, [func(v) for v in x])
        if ref is None:
            raise MalformedInputError(
                f"The vertex function does not send {x!r} to a simplex."
            )
        images[x] = ref
    return SimplicialMap(source, target, images, validate=validate)


class _CandidateIndex:
    """Simplices of a target grouped by faces (and an optional label)."""

    def __init__(self, target, label=None):
        self.target = target
        self.label = label
        self._by_dim = {}

    def lookup(self, dim, faces, label):
        if dim not in self._by_dim:
            index = {}
            for ref in self.target.all_refs(dim):
                faces_key = (
                    tuple(self.target.face(ref, i) for i in range(dim + 1))
                    if dim > 0
                    else ()
                )
                key = (faces_key, self.label(ref) if self.label else None)
                index.setdefault(key, []).append(ref)
            self._by_dim[dim] = index
        return self._by_dim[dim].get((faces, label), [])


@Substitution(budget=_budget_docstring)
def enumerate_maps(X, Y, budget=None, source_label=None, target_label=None):
    """All simplicial maps ``X -> Y``.

    Non-degenerate simplices of ``X`` are assigned in order of increasing
    dimension; a candidate image must have the already assigned images of
    the faces as faces. The result order is deterministic.

    Parameters
    ----------
    X, Y : SimplicialSet

    {budget}

    source_label, target_label : callable, default=None
        When given, an image ``y`` of ``x`` must satisfy
        ``target_label(y) == source_label(x)``. Used for stratified maps.

    Returns
    -------
    maps : list of SimplicialMap

    Raises
    ------
    BudgetExceededError
        When more candidates than ``budget`` are tried.

    Examples
    --------
    >>> from stratkit.simplicial import enumerate_maps, standard_simplex_set
    >>> len(enumerate_maps(standard_simplex_set(1), standard_simplex_set(1)))
    3
    """
    budget = check_budget(budget)
    order = sorted(X, key=X.dim)
    index = _CandidateIndex(Y, target_label)
    images = {}
    maps = []
    expansions = 0

    def candidates(x):
        faces = tuple(_image(images, Y, X, f) for f in X.faces(x))
        label = source_label(x) if source_label else None
        return index.lookup(X.dim(x), faces, label)

    if not order:
        return [SimplicialMap(X, Y, {}, validate=False)]
    pending = [candidates(order[0])]
    cursor = [0]
    while pending:
        position = len(pending) - 1
        if cursor[position] == len(pending[position]):
            images.pop(order[position], None)
            pending.pop()
            cursor.pop()
            continue
        ref = pending[position][cursor[position]]
        cursor[position] += 1
        expansions += 1
        if expansions > budget:
            raise BudgetExceededError(budget, "map enumeration")
        images[order[position]] = ref
        if position + 1 == len(order):
            maps.append(SimplicialMap(X, Y, dict(images), validate=False))
        else:
            pending.append(candidates(order[position + 1]))
            cursor.append(0)
    logger.debug(
        "Enumerated %d maps with %d candidate expansions.", len(maps), expansions
    )
    return maps


def _image(images, Y, X, ref):
    image = images[ref[0]]
    if not ref[1]:
        return image
    theta = Y.surjection(image)
    eta = X.surjection(ref)
    return SimplexRef(image[0], word_from_surjection([theta[e] for e in eta]))
