"""Diagrams of simplicial sets indexed by the regular flags of a poset."""

# License: MIT

import logging
from itertools import combinations

from ..exceptions import MalformedInputError
from ..poset import flag_subflag
from ..poset import regular_flags
from ..simplicial import SimplicialMap
from ..simplicial import SimplicialSet
from ..simplicial import compose
from ..simplicial import from_chains
from ..simplicial import identity

logger = logging.getLogger(__name__)


def _empty():
    return SimplicialSet([], validate=False)


class Diagram:
    """A presheaf of finite simplicial sets on the regular flags of a poset.

    Parameters
    ----------
    poset : Poset

    values : dict
        Regular flag to :class:`~stratkit.simplicial.SimplicialSet`. Missing
        flags get the empty simplicial set.

    restrictions : dict
        ``(I, I2)`` to the map ``values[I2] -> values[I]`` for every strict
        inclusion ``I < I2``. Restrictions out of an empty value may be
        omitted.

    validate : bool, default=True
        Whether to check that the restrictions compose.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.diagrams import representable
    >>> F = representable(Poset([0, 1], [(0, 1)]), (0,))
    >>> [F.values[I].counts() for I in F.flags]
    [[1], [], []]
    """

    def __init__(self, poset, values, restrictions, validate=True):
        self.poset = poset
        self.flags = regular_flags(poset)
        self.values = {
            I: _empty() if values.get(I) is None else values[I] for I in self.flags
        }
        for I in values:
            if I not in self.values:
                raise MalformedInputError(f"{I!r} is not a regular flag of the poset.")
        self.restrictions = {}
        for I, I2 in self.inclusions():
            source, target = self.values[I2], self.values[I]
            f = restrictions.get((I, I2))
            if f is None:
                if len(source):
                    raise MalformedInputError(f"Missing restriction {I!r} <= {I2!r}.")
                f = SimplicialMap(source, target, {}, validate=False)
            elif f.source is not source or f.target is not target:
                f = SimplicialMap(source, target, f.images, validate=validate)
            self.restrictions[(I, I2)] = f
        if validate:
            self.check()

    def __repr__(self):
        return f"Diagram(flags={self.flags})"

    def inclusions(self):
        """Strict inclusions ``(I, I2)`` of regular flags, in flag order."""
        return [
            (I, I2)
            for I2 in self.flags
            for I in self.flags
            if I != I2 and flag_subflag(I, I2)
        ]

    def restriction(self, I, I2):
        """The map ``F(I2) -> F(I)``; the identity when ``I == I2``."""
        if I == I2:
            return identity(self.values[I])
        return self.restrictions[(I, I2)]

    def check(self):
        """Check that restrictions along composable inclusions compose."""
        for I, I2 in self.inclusions():
            for I3 in self.flags:
                if I3 not in (I, I2) and flag_subflag(I2, I3):
                    lhs = compose(self.restriction(I, I2), self.restriction(I2, I3))
                    if lhs.key() != self.restriction(I, I3).key():
                        raise MalformedInputError(
                            f"Restrictions {I!r} <= {I2!r} <= {I3!r} do not compose."
                        )
        return self


class DiagramMap:
    """A natural transformation of diagrams.

    Parameters
    ----------
    source, target : Diagram

    components : dict
        Regular flag to the map ``source.values[I] -> target.values[I]``.
    """

    def __init__(self, source, target, components, validate=True):
        self.source = source
        self.target = target
        self.components = {}
        for I in source.flags:
            f = components.get(I)
            if f is None:
                if len(source.values[I]):
                    raise MalformedInputError(f"Missing component at {I!r}.")
                f = SimplicialMap(source.values[I], target.values[I], {}, validate=False)
            self.components[I] = f
        if validate:
            self.check()

    def check(self):
        """Check naturality against every restriction."""
        for I, I2 in self.source.inclusions():
            lhs = compose(self.components[I], self.source.restriction(I, I2))
            rhs = compose(self.target.restriction(I, I2), self.components[I2])
            if lhs.key() != rhs.key():
                raise MalformedInputError(
                    f"The map is not natural along {I!r} <= {I2!r}."
                )
        return self


def identity_map(F):
    """The identity natural transformation of ``F``."""
    return DiagramMap(F, F, {I: identity(F.values[I]) for I in F.flags})


def generator(P, S, I):
    """The diagram ``S^I``: ``S`` at the subflags of ``I``, empty elsewhere.

    Parameters
    ----------
    P : Poset

    S : SimplicialSet

    I : tuple
        A regular flag of ``P``.

    Returns
    -------
    F : Diagram
    """
    I = P.check_regular_flag(I)
    values = {J: S for J in regular_flags(P) if flag_subflag(J, I)}
    restrictions = {
        (J, J2): identity(S)
        for J in values
        for J2 in values
        if J != J2 and flag_subflag(J, J2)
    }
    return Diagram(P, values, restrictions)


def representable(P, I):
    """The diagram represented by ``I``, that is ``(Delta^0)^I``."""
    return generator(P, from_chains([(0,)]), I)


def _union_flag(P, I1, I2):
    union = set(I1) | set(I2)
    for a, b in combinations(union, 2):
        if not (P.leq(a, b) or P.leq(b, a)):
            return None
    return tuple(sorted(union, key=lambda p: sum(P.leq(q, p) for q in union)))


def _image(f):
    return {f.images[x][0] for x in f.source}


def is_cofibrant(F):
    """Decide cofibrancy with the monomorphism and intersection conditions.

    A diagram is cofibrant when all restrictions are monomorphisms and, for
    two regular flags ``I1, I2`` meeting in ``I0``, the images of ``F(I1)``
    and ``F(I2)`` in ``F(I0)`` meet exactly in the image of ``F(I1 u I2)``
    when the union is a flag, and not at all otherwise.

    Parameters
    ----------
    F : Diagram

    Returns
    -------
    is_cofibrant : bool

    certificate : tuple or None
        ``("not-mono", I, I2)`` or ``("intersection", I1, I2)`` for the first
        violated instance.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.diagrams import is_cofibrant, representable
    >>> is_cofibrant(representable(Poset([0, 1], [(0, 1)]), (0, 1)))
    (True, None)
    """
    for I, I2 in F.inclusions():
        if not F.restrictions[(I, I2)].is_injective():
            return False, ("not-mono", I, I2)
    P = F.poset
    for I1, I2 in combinations(F.flags, 2):
        if flag_subflag(I1, I2) or flag_subflag(I2, I1):
            continue
        common = set(I1) & set(I2)
        if not common:
            continue
        I0 = tuple(p for p in I1 if p in common)
        meet = _image(F.restriction(I0, I1)) & _image(F.restriction(I0, I2))
        I3 = _union_flag(P, I1, I2)
        expected = set() if I3 is None else _image(F.restriction(I0, I3))
        if meet != expected:
            return False, ("intersection", I1, I2)
    return True, None

