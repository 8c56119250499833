"""Colimits of finite diagrams of simplicial sets."""

# License: MIT

import logging
from collections import deque
from typing import List, NamedTuple

from ._maps import SimplicialMap
from ._simplicial_set import SimplexRef
from ._simplicial_set import SimplicialSet
from ._simplicial_set import surjection_from_word
from ._simplicial_set import word_from_surjection
from ..exceptions import MalformedInputError

logger = logging.getLogger(__name__)


class Colimit(NamedTuple):
    """A colimit together with its structure maps."""

    space: SimplicialSet
    maps: List[SimplicialMap]


class _Quotient(SimplicialSet):
    """Disjoint union of the objects, with identifications applied lazily.

    Nodes are ``(object index, nd id)``. A node is either a root of the
    union-find forest, merged into another node of the same dimension, or
    collapsed onto a degenerate simplex of lower-dimensional nodes.
    """

    def __init__(self, objects):
        data = []
        for index, X in enumerate(objects):
            for x in X:
                data.append(
                    (
                        (index, x),
                        X.dim(x),
                        tuple(SimplexRef((index, f[0]), f[1]) for f in X.faces(x)),
                    )
                )
        super().__init__(data, validate=False)
        self.order = {node: position for position, node in enumerate(self)}
        self.parent = {}
        self.collapsed = {}

    def find(self, node):
        root = node
        while root in self.parent:
            root = self.parent[root]
        while node != root:
            self.parent[node], node = root, self.parent[node]
        return root

    def canon(self, ref):
        node, word = ref[0], tuple(ref[1])
        while True:
            node = self.find(node)
            if node not in self.collapsed:
                return SimplexRef(node, word)
            target = self.collapsed[node]
            eta = surjection_from_word(word, self._dims[node] + len(word))
            theta = surjection_from_word(target[1], self._dims[node])
            node, word = target[0], word_from_surjection([theta[e] for e in eta])

    def _face_ref(self, nd_id, i):
        return self.canon(self._faces[nd_id][i])

    def stored_faces(self, node):
        return self._faces[node]


def _section_through(eta, k):
    """A section of the surjection ``eta`` whose image contains ``k``."""
    section = {}
    for i, e in enumerate(eta):
        section.setdefault(e, i)
    section[eta[k]] = k
    return [section[v] for v in range(eta[-1] + 1)]


def colimit(objects, arrows):
    """Colimit of a finite diagram of simplicial sets.

    Simplices are identified along the arrows and the identifications are
    propagated to faces. Two degenerate simplices ``eta1^* a = eta2^* b``
    are resolved with sections of the two surjections, which collapses one
    of the non-degenerate simplices onto a degenerate simplex.

    Parameters
    ----------
    objects : list of SimplicialSet

    arrows : list of (int, int, SimplicialMap)
        ``(i, j, f)`` with ``f: objects[i] -> objects[j]``.

    Returns
    -------
    result : Colimit
        ``result.space`` has the ids ``(object index, nd id)`` of the
        surviving representatives and ``result.maps[i]`` is the structure
        map out of ``objects[i]``.

    Examples
    --------
    >>> from stratkit.simplicial import colimit, from_chains, vertex_map
    >>> edge, point = from_chains([(0, 1)]), from_chains([(0,)])
    >>> ends = from_chains([(0,), (1,)])
    >>> arrows = [
    ...     (0, 1, vertex_map(ends, edge, {0: 0, 1: 1})),
    ...     (0, 2, vertex_map(ends, point, {0: 0, 1: 0})),
    ... ]
    >>> colimit([ends, edge, point], arrows).space.counts()
    [1, 1]
    """
    quotient = _Quotient(objects)
    relations = deque()
    for i, j, f in arrows:
        if f.source is not objects[i] and list(f.source) != list(objects[i]):
            raise MalformedInputError(f"Arrow {i} -> {j} has the wrong source.")
        for x in f.source:
            image = f.images[x]
            relations.append(
                (SimplexRef((i, x)), SimplexRef((j, image[0]), image[1]))
            )

    steps = 0
    while relations:
        steps += 1
        first, second = relations.popleft()
        first, second = quotient.canon(first), quotient.canon(second)
        if first == second:
            continue
        (a, word_a), (b, word_b) = first, second
        if word_a == word_b:
            # same operator on two non-degenerate simplices of equal dimension
            if quotient.order[b] < quotient.order[a]:
                a, b = b, a
            quotient.parent[b] = a
            if quotient.dim(a) > 0:
                relations.extend(
                    zip(quotient.stored_faces(a), quotient.stored_faces(b))
                )
            continue
        if not word_a or not word_b:
            if word_a:
                first, second = second, first
            node = first[0]
            quotient.collapsed[node] = second
            for i, face in enumerate(quotient.stored_faces(node)):
                relations.append((face, quotient.face(second, i)))
            continue
        eta_a = quotient.surjection(first)
        eta_b = quotient.surjection(second)
        k = next(i for i in range(len(eta_a)) if eta_a[i] != eta_b[i])
        delta_a = _section_through(eta_a, k)
        delta_b = _section_through(eta_b, k)
        relations.append(
            (
                SimplexRef(a),
                quotient.apply_operator(SimplexRef(b), [eta_b[v] for v in delta_a]),
            )
        )
        relations.append(
            (
                SimplexRef(b),
                quotient.apply_operator(SimplexRef(a), [eta_a[v] for v in delta_b]),
            )
        )
        relations.append((first, second))

    survivors = [
        node
        for node in quotient
        if node not in quotient.parent and node not in quotient.collapsed
    ]
    space = SimplicialSet(
        [
            (
                node,
                quotient.dim(node),
                tuple(
                    quotient.canon(face) for face in quotient.stored_faces(node)
                ),
            )
            for node in survivors
        ],
        validate=False,
    )
    maps = [
        SimplicialMap(
            X,
            space,
            {x: quotient.canon(SimplexRef((index, x))) for x in X},
            validate=False,
        )
        for index, X in enumerate(objects)
    ]
    logger.debug(
        "Colimit of %d objects: %s non-degenerate simplices after %d steps.",
        len(objects),
        space.counts(),
        steps,
    )
    return Colimit(space, maps)


def pushout(f, g):
    """Pushout of ``X <- A -> Y`` given ``f: A -> X`` and ``g: A -> Y``.

    Returns
    -------
    result : Colimit
        Structure maps are listed for ``A``, ``X`` and ``Y`` in this order.
    """
    return colimit([f.source, f.target, g.target], [(0, 1, f), (0, 2, g)])
