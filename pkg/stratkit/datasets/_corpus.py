"""Named corpus of small stratified simplicial sets.

 ID    Name           Object                                  Poset
 1     simplex_0      Delta^[0]                               0<1
 2     simplex_01     Delta^[0<1]                             0<1
 3     simplex_001    Delta^[0<=0<1]                          0<1
 4     simplex_012    Delta^[0<1<2]                           0<1<2
 5     boundary_012   boundary of Delta^[0<1<2]               0<1<2
 6     horn_001       admissible horn Lambda_1^[0<=0<1]       0<1
 7     figure_eight   two loops in stratum 1 through a point  0<1
 8     cylinder       Delta^[0<1] x Delta^1                   0<1
 9     circle_001     boundary of Delta^[0<=0<1]              0<1
"""

# License: MIT

from collections import OrderedDict

from ..exceptions import MalformedInputError
from ..poset import Poset
from ..simplicial import from_chains
from ..simplicial import standard_simplex_set
from ..stratified import StratifiedSimplicialSet
from ..stratified import boundary
from ..stratified import horn
from ..stratified import standard_simplex
from ..stratified import stratified_product
from ..vertical import LabelledSimplicialSet
from ..vertical import label_subdivision

CHAIN_2 = Poset([0, 1], [(0, 1)])
CHAIN_3 = Poset([0, 1, 2], [(0, 1), (1, 2)])


def make_figure_eight():
    """The figure eight over ``0 < 1``.

    The wedge point ``p`` is the only vertex in stratum 0; each loop is a
    triangle of edges ``p -> a1 -> a2 <- p`` whose other vertices lie in
    stratum 1.

    Returns
    -------
    K : StratifiedSimplicialSet

    Examples
    --------
    >>> from stratkit.datasets import make_figure_eight
    >>> make_figure_eight().counts()
    [5, 6]
    """
    chains = []
    for loop in "ab":
        first, second = f"{loop}1", f"{loop}2"
        chains += [("p", first), ("p", second), (first, second)]
    carrier = from_chains(chains)
    stratum = {v: 0 if v == "p" else 1 for v in "p a1 a2 b1 b2".split()}
    flags = {x: tuple(stratum[v] for v in x) for x in carrier}
    return StratifiedSimplicialSet(carrier, CHAIN_2, flags)


def make_stratified_cylinder():
    """``Delta^[0<1] x Delta^1`` stratified through the first factor."""
    K, _, _ = stratified_product(
        standard_simplex(CHAIN_2, (0, 1)), standard_simplex_set(1)
    )
    return K


def _builders():
    return OrderedDict(
        [
            ("simplex_0", lambda: standard_simplex(CHAIN_2, (0,))),
            ("simplex_01", lambda: standard_simplex(CHAIN_2, (0, 1))),
            ("simplex_001", lambda: standard_simplex(CHAIN_2, (0, 0, 1))),
            ("simplex_012", lambda: standard_simplex(CHAIN_3, (0, 1, 2))),
            ("boundary_012", lambda: boundary(CHAIN_3, (0, 1, 2))[0]),
            ("horn_001", lambda: horn(CHAIN_2, (0, 0, 1), 1)[0]),
            ("figure_eight", make_figure_eight),
            ("cylinder", make_stratified_cylinder),
            ("circle_001", lambda: boundary(CHAIN_2, (0, 0, 1))[0]),
        ]
    )


MAP_NAME_ID = {name: i + 1 for i, name in enumerate(_builders())}
MAP_ID_NAME = {i: name for name, i in MAP_NAME_ID.items()}


def _select(filter_data):
    if filter_data is None:
        return list(MAP_NAME_ID)
    selected = []
    for it in filter_data:
        if isinstance(it, str):
            if it not in MAP_NAME_ID:
                raise MalformedInputError(
                    f"{it} is not in the corpus. The available objects are "
                    f"{list(MAP_NAME_ID)}"
                )
            selected.append(it)
        elif isinstance(it, int):
            if it not in MAP_ID_NAME:
                raise MalformedInputError(
                    f"The object with the ID={it} is not in the corpus. The IDs "
                    f"are {range(1, len(MAP_ID_NAME) + 1)}"
                )
            selected.append(MAP_ID_NAME[it])
        else:
            raise MalformedInputError(
                f"The value in the tuple should be str or int. Got {type(it)} "
                "instead."
            )
    return selected


def load_corpus(filter_data=None):
    """Load the corpus of stratified simplicial sets.

    Parameters
    ----------
    filter_data : tuple of str or int, default=None
        Names or IDs (see the module docstring) of the objects to load.
        ``None`` loads all of them.

    Returns
    -------
    corpus : OrderedDict of StratifiedSimplicialSet
        Ordered as ``filter_data``, or by ID.

    Examples
    --------
    >>> from stratkit.datasets import load_corpus
    >>> list(load_corpus(filter_data=(2, "horn_001")))
    ['simplex_01', 'horn_001']
    """
    builders = _builders()
    return OrderedDict((name, builders[name]()) for name in _select(filter_data))


def load_labelled_corpus(filter_data=None):
    """Labelled subdivisions of the corpus and a labelled point.

    The key ``sd_<name>`` holds the labelled subdivision of ``<name>``;
    ``point_01`` is a point labelled by ``[0<1]``.

    Returns
    -------
    corpus : OrderedDict of LabelledSimplicialSet
    """
    corpus = OrderedDict(
        (f"sd_{name}", label_subdivision(K))
        for name, K in load_corpus(filter_data).items()
    )
    corpus["point_01"] = LabelledSimplicialSet(
        from_chains([(0,)]), CHAIN_2, {(0,): (0, 1)}
    )
    return corpus
