"""The left adjoint ``C_P`` from diagrams to stratified simplicial sets."""

# License: MIT

import logging

from ..simplicial import colimit
from ..simplicial import identity
from ..simplicial import product_map
from ..simplicial import vertex_map
from ..stratified import StratifiedSimplicialSet
from ..stratified import standard_simplex
from ..stratified import stratified_product

logger = logging.getLogger(__name__)


def flag_inclusion(P, I, I2):
    """The stratified face ``Delta^I -> Delta^I2`` of a subflag."""
    position = {a: I2.index(p) for a, p in enumerate(I)}
    return vertex_map(standard_simplex(P, I), standard_simplex(P, I2), position)


def C_P(F):
    """Realize a diagram as a stratified simplicial set.

    The result is the coend of ``Delta^I x F(I)`` over the regular flags:
    the disjoint union of the products, glued along ``Delta^I x F(I2)`` for
    every strict inclusion ``I < I2``.

    Parameters
    ----------
    F : Diagram

    Returns
    -------
    K : StratifiedSimplicialSet
        Ids are ``(cell index, (x, y, path))`` where the cell index refers to
        the position of ``I`` in ``F.flags``.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.diagrams import C_P, representable
    >>> K = C_P(representable(Poset([0, 1], [(0, 1)]), (0, 1)))
    >>> K.counts(), sorted(K.flags.values())
    ([2, 1], [(0,), (0, 1), (1,)])
    """
    P = F.poset
    simplices = {I: standard_simplex(P, I) for I in F.flags}
    objects = []
    arrows = []
    cells = {}
    for I in F.flags:
        cells[I] = len(objects)
        objects.append(stratified_product(simplices[I], F.values[I])[0])
    for I, I2 in F.inclusions():
        if not len(F.values[I2]):
            continue
        overlap = stratified_product(simplices[I], F.values[I2])[0]
        position = len(objects)
        objects.append(overlap)
        arrows.append(
            (
                position,
                cells[I2],
                product_map(
                    flag_inclusion(P, I, I2),
                    identity(F.values[I2]),
                    overlap,
                    objects[cells[I2]],
                ),
            )
        )
        arrows.append(
            (
                position,
                cells[I],
                product_map(
                    identity(simplices[I]),
                    F.restriction(I, I2),
                    overlap,
                    objects[cells[I]],
                ),
            )
        )
    result = colimit(objects, arrows)
    flags = {node: objects[node[0]].flags[node[1]] for node in result.space}
    K = StratifiedSimplicialSet(result.space, P, flags, validate=False)
    logger.debug("C_P of a diagram: %s non-degenerate simplices.", K.counts())
    return K
