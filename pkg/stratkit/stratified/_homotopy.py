"""Stratified homotopy classes and stratified homotopy equivalences."""

# License: MIT

import logging

import networkx as nx

from ._stratified import StratifiedMap
from ._stratified import enumerate_stratified_maps
from ._stratified import stratified_product
from ..simplicial import SimplexRef
from ..simplicial import compose
from ..simplicial import identity
from ..simplicial import pair_ref
from ..simplicial import standard_simplex_set
from ..utils import Substitution
from ..utils._docstring import _budget_docstring

logger = logging.getLogger(__name__)


def _end_inclusion(K, cylinder, interval, end):
    images = {}
    for x in K:
        n = K.dim(x)
        vertex = SimplexRef((end,), tuple(range(n - 1, -1, -1)))
        images[x] = pair_ref(SimplexRef(x), vertex, K, interval)
    return StratifiedMap(K, cylinder, images, validate=False)


@Substitution(budget=_budget_docstring)
def homotopy_classes(K, L, budget=None):
    """The set ``[K, L]_P`` of stratified homotopy classes.

    Two maps are identified when a chain of elementary stratified homotopies
    ``K x Delta^1 -> L`` connects them, in either direction. The classes are
    the connected components of the graph whose edges are the elementary
    homotopies, so they can be coarser than the single-step relation.

    Parameters
    ----------
    K, L : StratifiedSimplicialSet

    {budget}

    Returns
    -------
    classes : list of list of StratifiedMap
        Every stratified map ``K -> L`` in exactly one class. Classes and
        their members follow the enumeration order.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import homotopy_classes, standard_simplex
    >>> P = Poset([0, 1], [(0, 1)])
    >>> classes = homotopy_classes(standard_simplex(P, (0,)),
    ...                            standard_simplex(P, (0, 0)))
    >>> [len(c) for c in classes]
    [2]
    """
    maps = enumerate_stratified_maps(K, L, budget=budget)
    position = {f.key(): i for i, f in enumerate(maps)}
    interval = standard_simplex_set(1)
    cylinder, _, _ = stratified_product(K, interval)
    start = _end_inclusion(K, cylinder, interval, 0)
    end = _end_inclusion(K, cylinder, interval, 1)

    graph = nx.Graph()
    graph.add_nodes_from(range(len(maps)))
    homotopies = enumerate_stratified_maps(cylinder, L, budget=budget)
    for H in homotopies:
        graph.add_edge(
            position[compose(H, start).key()], position[compose(H, end).key()]
        )
    classes = sorted(
        (sorted(component) for component in nx.connected_components(graph)),
        key=lambda c: c[0],
    )
    logger.debug(
        "%d stratified maps, %d elementary homotopies, %d classes.",
        len(maps),
        len(homotopies),
        len(classes),
    )
    return [[maps[i] for i in component] for component in classes]


def _class_index(classes):
    return {f.key(): c for c, members in enumerate(classes) for f in members}


@Substitution(budget=_budget_docstring)
def find_homotopy_inverse(f, budget=None):
    """A stratified homotopy inverse of ``f``, or ``None``.

    Parameters
    ----------
    f : StratifiedMap

    {budget}

    Returns
    -------
    g : StratifiedMap or None
        The first map ``g`` in enumeration order with ``g o f ~ id`` and
        ``f o g ~ id``.
    """
    K, L = f.source, f.target
    on_k = _class_index(homotopy_classes(K, K, budget=budget))
    on_l = _class_index(homotopy_classes(L, L, budget=budget))
    id_k = on_k[identity(K).key()]
    id_l = on_l[identity(L).key()]
    for g in enumerate_stratified_maps(L, K, budget=budget):
        if on_k[compose(g, f).key()] == id_k and on_l[compose(f, g).key()] == id_l:
            return g
    return None


@Substitution(budget=_budget_docstring)
def is_stratified_homotopy_equivalence(f, budget=None):
    """Whether ``f`` is a stratified homotopy equivalence.

    Parameters
    ----------
    f : StratifiedMap

    {budget}

    Returns
    -------
    is_equivalence : bool
    """
    return find_homotopy_inverse(f, budget=budget) is not None
