"""P-labelled simplicial sets, verticalization and the diagram functor ``U``."""

# License: MIT

import logging

from ..diagrams import Diagram
from ..diagrams import DiagramMap
from ..diagrams import is_cofibrant
from ..exceptions import MalformedInputError
from ..exceptions import NotCofibrantError
from ..exceptions import raise_isinstance_error
from ..poset import Poset
from ..poset import flag_subflag
from ..poset import nerve
from ..poset import regular_flags
from ..poset import underlying_regular
from ..simplicial import SimplexRef
from ..simplicial import SimplicialMap
from ..simplicial import SimplicialSet
from ..simplicial import colimit
from ..simplicial import product
from ..simplicial import sd
from ..simplicial import sub_simplicial_set
from ..stratified import StratifiedSimplicialSet

logger = logging.getLogger(__name__)


class LabelledSimplicialSet(SimplicialSet):
    """A simplicial set with a regular flag on every non-degenerate simplex.

    Labels shrink along cofaces: if ``y`` is a face of ``x`` then
    ``labels[x]`` is a subflag of ``labels[y]``.

    Parameters
    ----------
    carrier : SimplicialSet
        Ids and faces are shared with the carrier.

    poset : Poset

    labels : dict
        Non-degenerate id to a regular flag.

    validate : bool, default=True

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.simplicial import SimplexRef, from_chains
    >>> from stratkit.vertical import LabelledSimplicialSet
    >>> point = from_chains([(0,)])
    >>> S = LabelledSimplicialSet(point, Poset([0, 1], [(0, 1)]), {(0,): (0, 1)})
    >>> S.label(S.degeneracy(SimplexRef((0,)), 0))
    (0, 1)
    """

    def __init__(self, carrier, poset, labels, validate=True):
        if not isinstance(poset, Poset):
            raise_isinstance_error("poset", [Poset], poset)
        super().__init__(
            ((x, carrier.dim(x), carrier.faces(x)) for x in carrier), validate=False
        )
        self.carrier = carrier
        self.poset = poset
        self.labels = {x: tuple(labels[x]) for x in carrier}
        if validate:
            self.check()

    def __repr__(self):
        return f"LabelledSimplicialSet(nd counts by dimension={self.counts()})"

    def label(self, ref):
        """Label of an arbitrary simplex, the label of its non-degenerate part."""
        if isinstance(ref, SimplexRef):
            ref = ref.nd_id
        return self.labels[ref]

    def check(self):
        super().check()
        for x in self:
            self.poset.check_regular_flag(self.labels[x])
            for face in self.faces(x):
                if not flag_subflag(self.labels[x], self.labels[face.nd_id]):
                    raise MalformedInputError(
                        f"The label of {x!r} is not contained in the label of "
                        f"its face {face.nd_id!r}."
                    )
        return self


class Verticalization(StratifiedSimplicialSet):
    """``V(S)``, the union of ``Im(x) x Delta^label(x)`` in ``S x N(P)``.

    Ids are ``(x, c, path)`` as in :func:`~stratkit.simplicial.product`;
    ``base`` is the first projection, the recorded embedding.

    Attributes
    ----------
    labelled : LabelledSimplicialSet

    nerve : SimplicialSet
    """

    def __init__(self, S):
        NP = nerve(S.poset, S.poset.longest_chain() - 1)

        def keep(x, c):
            return flag_subflag(c, S.labels[x])

        carrier, pr_S, _ = product(S, NP, keep=keep)
        flags = {z: tuple(z[1][b] for _, b in z[2]) for z in carrier}
        super().__init__(carrier, S.poset, flags, base=pr_S, validate=False)
        self.labelled = S
        self.nerve = NP


def verticalize(S):
    """The verticalization of a labelled simplicial set.

    Parameters
    ----------
    S : LabelledSimplicialSet

    Returns
    -------
    V : Verticalization

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.simplicial import from_chains
    >>> from stratkit.vertical import LabelledSimplicialSet, verticalize
    >>> P = Poset([0, 1], [(0, 1)])
    >>> V = verticalize(LabelledSimplicialSet(from_chains([(0,)]), P, {(0,): (0, 1)}))
    >>> V.counts(), sorted(V.flags.values())
    ([2, 1], [(0,), (0, 1), (1,)])
    """
    V = Verticalization(S)
    logger.debug("Verticalization with %s non-degenerate simplices.", V.counts())
    return V


def label_subdivision(K, sdK=None):
    """The labelled subdivision ``(sd(K), label)`` of a stratified object.

    A simplex ``(x, chain)`` of ``sd(K)`` is labelled by the regular flag
    underlying the face ``chain[0]`` of ``x``.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    sdK : SimplicialSet, default=None

    Returns
    -------
    S : LabelledSimplicialSet

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.vertical import label_subdivision
    >>> S = label_subdivision(standard_simplex(Poset([0, 1], [(0, 1)]), (0, 1)))
    >>> [S.labels[v] for v in S.simplices(0)]
    [(0,), (1,), (0, 1)]
    """
    sdK = sd(K) if sdK is None else sdK
    labels = {
        (x, chain): underlying_regular([K.flags[x][i] for i in chain[0]])
        for x, chain in sdK
    }
    return LabelledSimplicialSet(sdK, K.poset, labels, validate=False)


def U(S):
    """The diagram ``I -> {x | I is a subflag of label(x)}``.

    Parameters
    ----------
    S : LabelledSimplicialSet

    Returns
    -------
    F : Diagram
        Values are sub-simplicial sets of ``S`` and restrictions are
        inclusions.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.simplicial import from_chains
    >>> from stratkit.vertical import LabelledSimplicialSet, U
    >>> P = Poset([0, 1], [(0, 1)])
    >>> F = U(LabelledSimplicialSet(from_chains([(0,)]), P, {(0,): (0, 1)}))
    >>> [F.values[I].counts() for I in F.flags]
    [[1], [1], [1]]
    """
    P = S.poset
    values = {}
    for I in regular_flags(P):
        values[I] = sub_simplicial_set(
            S, [x for x in S if flag_subflag(I, S.labels[x])]
        )
    restrictions = {}
    for I2, value in values.items():
        for I in values:
            if I != I2 and flag_subflag(I, I2):
                restrictions[(I, I2)] = SimplicialMap(
                    value, values[I], {x: SimplexRef(x) for x in value}, validate=False
                )
    return Diagram(P, values, restrictions)


def is_label_preserving(f):
    """Whether ``label(x)`` is a subflag of ``label(f(x))`` for every ``x``."""
    return all(
        flag_subflag(f.source.labels[x], f.target.label(f.images[x])) for x in f.source
    )


def U_map(f, source=None, target=None):
    """``U(f)`` for a label preserving map of labelled simplicial sets.

    Raises
    ------
    MalformedInputError
        If ``f`` does not preserve labels.
    """
    if not is_label_preserving(f):
        raise MalformedInputError("The map does not preserve labels.")
    source = U(f.source) if source is None else source
    target = U(f.target) if target is None else target
    components = {
        I: SimplicialMap(
            source.values[I],
            target.values[I],
            {x: f.images[x] for x in source.values[I]},
            validate=False,
        )
        for I in source.flags
    }
    return DiagramMap(source, target, components)


def diagram_to_labelled(F):
    """The labelled simplicial set of a cofibrant diagram.

    The carrier is the colimit of the values along the restrictions, and a
    simplex is labelled by the largest flag whose value contains it.

    Parameters
    ----------
    F : Diagram

    Returns
    -------
    S : LabelledSimplicialSet

    Raises
    ------
    NotCofibrantError
        If ``F`` is not cofibrant.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.diagrams import representable
    >>> from stratkit.vertical import diagram_to_labelled
    >>> S = diagram_to_labelled(representable(Poset([0, 1], [(0, 1)]), (0, 1)))
    >>> list(S.labels.values())
    [(0, 1)]
    """
    cofibrant, certificate = is_cofibrant(F)
    if not cofibrant:
        raise NotCofibrantError(certificate)
    position = {I: i for i, I in enumerate(F.flags)}
    objects = [F.values[I] for I in F.flags]
    arrows = [
        (position[I2], position[I], F.restrictions[(I, I2)])
        for I, I2 in F.inclusions()
    ]
    result = colimit(objects, arrows)
    containing = {s: [] for s in result.space}
    for I in F.flags:
        for ref in result.maps[position[I]].images.values():
            if not ref.word:
                containing[ref.nd_id].append(I)
    labels = {}
    for s, found in containing.items():
        label = max(found, key=len)
        if not all(flag_subflag(I, label) for I in found):
            raise NotCofibrantError(("label", s))
        labels[s] = label
    return LabelledSimplicialSet(result.space, F.poset, labels)


def is_vertical_map(f):
    """Whether a stratified map between verticalizations descends to the bases.

    Parameters
    ----------
    f : StratifiedMap
        Between two :class:`Verticalization` objects.

    Returns
    -------
    is_vertical : bool

    base_map : SimplicialMap or None
        The unique ``g`` with ``pr o f = g o pr`` when it exists.
    """
    source, target = f.source, f.target
    for V in (source, target):
        if V.base is None:
            raise MalformedInputError("Both objects must record a base projection.")
    pr, pr2 = source.base, target.base
    images = {}
    for z in source:
        ref = pr.images[z]
        if not ref.word and ref.nd_id not in images:
            images[ref.nd_id] = pr2.apply(f.images[z])
    S = pr.target
    if set(images) != set(S):
        return False, None
    base_map = SimplicialMap(S, pr2.target, images, validate=False)
    for z in source:
        if pr2.apply(f.images[z]) != base_map.apply(pr.images[z]):
            return False, None
    return True, base_map
