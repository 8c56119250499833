"""Simplicial sets stratified over a finite poset."""

# License: MIT

import logging

from ..exceptions import MalformedInputError
from ..poset import Poset
from ..poset import nerve
from ..simplicial import SimplexRef
from ..simplicial import SimplicialMap
from ..simplicial import SimplicialSet
from ..simplicial import chain_ref
from ..simplicial import disjoint_union
from ..simplicial import enumerate_maps
from ..simplicial import from_chains
from ..simplicial import product
from ..simplicial import sub_simplicial_set
from ..utils import Substitution
from ..utils import check_index
from ..utils._docstring import _budget_docstring
from ..exceptions import raise_isinstance_error

logger = logging.getLogger(__name__)


class StratifiedSimplicialSet(SimplicialSet):
    """A simplicial set with a flag on every simplex.

    The flags describe the structure map to the nerve of the poset: a
    non-degenerate ``n``-simplex carries a flag of length ``n + 1`` and the
    face ``d_i`` carries the same flag with entry ``i`` deleted.

    Parameters
    ----------
    carrier : SimplicialSet
        The underlying simplicial set. Its ids and faces are shared.

    poset : Poset

    flags : dict
        Non-degenerate id to flag.

    base : SimplicialMap, default=None
        A recorded projection of the carrier onto a simplicial set, used
        when the object is the verticalization of a labelled simplicial set.

    validate : bool, default=True
        Whether to check the flags against the face data.

    Attributes
    ----------
    truncation : int or None
        Copied from the carrier when it is a truncated mapping complex.
    """

    def __init__(self, carrier, poset, flags, base=None, validate=True):
        if not isinstance(poset, Poset):
            raise_isinstance_error("poset", [Poset], poset)
        super().__init__(
            ((x, carrier.dim(x), carrier.faces(x)) for x in carrier), validate=False
        )
        self.carrier = carrier
        self.poset = poset
        self.flags = {x: tuple(flags[x]) for x in carrier}
        self.base = base
        self.truncation = getattr(carrier, "truncation", None)
        if validate:
            self.check()

    def __repr__(self):
        return f"StratifiedSimplicialSet(nd counts by dimension={self.counts()})"

    def __eq__(self, other):
        return (
            isinstance(other, StratifiedSimplicialSet)
            and super().__eq__(other)
            and self.poset == other.poset
            and self.flags == other.flags
        )

    def __hash__(self):
        return super().__hash__()

    def flag(self, ref):
        """Flag of an arbitrary simplex; degeneracies repeat entries."""
        if not isinstance(ref, SimplexRef):
            ref = SimplexRef(ref)
        base = self.flags[ref[0]]
        return tuple(base[e] for e in self.surjection(ref))

    def check(self):
        """Validate the face data and the compatibility of the flags."""
        super().check()
        for x in self:
            flag = self.flags[x]
            if len(flag) != self.dim(x) + 1:
                raise MalformedInputError(
                    f"Simplex {x!r} of dimension {self.dim(x)} carries the flag "
                    f"{list(flag)!r}."
                )
            self.poset.check_flag(flag)
            for i, face in enumerate(self.faces(x)):
                if self.flag(face) != flag[:i] + flag[i + 1 :]:
                    raise MalformedInputError(
                        f"The flag of d_{i} {x!r} is not the flag of {x!r} with "
                        f"entry {i} deleted."
                    )
        return self


class StratifiedMap(SimplicialMap):
    """A simplicial map between stratified simplicial sets preserving flags."""

    def check(self):
        super().check()
        for x in self.source:
            if self.target.flag(self.images[x]) != self.source.flags[x]:
                raise MalformedInputError(f"The map does not preserve the flag of {x!r}.")
        return self


def as_stratified_map(f):
    """View a simplicial map between stratified objects as a stratified map."""
    return StratifiedMap(f.source, f.target, f.images, validate=False)


def _simplex_faces(n, skip=()):
    return [
        tuple(j for j in range(n + 1) if j != i)
        for i in reversed(range(n + 1))
        if i not in skip
    ]


def _on_indices(P, J, chains):
    carrier = from_chains(chains)
    return StratifiedSimplicialSet(
        carrier, P, {x: tuple(J[i] for i in x) for x in carrier}, validate=False
    )


def _inclusion(A, K):
    return StratifiedMap(A, K, {x: SimplexRef(x) for x in A}, validate=False)


def standard_simplex(P, J):
    """The stratified simplex ``Delta^J``.

    Vertex ``k`` of the ``n``-simplex lies in the stratum ``J[k]``. Ids are
    tuples of vertex indices.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> P = Poset([0, 1], [(0, 1)])
    >>> standard_simplex(P, (0, 0, 1)).flags[(0, 1, 2)]
    (0, 0, 1)
    """
    J = P.check_flag(J)
    return _on_indices(P, J, [tuple(range(len(J)))])


def boundary(P, J):
    """The boundary ``dDelta^J`` and its inclusion into ``Delta^J``.

    For a flag of length 1 the boundary is empty.

    Returns
    -------
    boundary : StratifiedSimplicialSet

    inclusion : StratifiedMap
    """
    J = P.check_flag(J)
    n = len(J) - 1
    simplex = standard_simplex(P, J)
    faces = _simplex_faces(n) if n > 0 else []
    A = _on_indices(P, J, faces)
    return A, _inclusion(A, simplex)


def horn(P, J, k):
    """The horn ``Lambda_k^J``: all faces of ``Delta^J`` except ``d_k``.

    Returns
    -------
    horn : StratifiedSimplicialSet

    inclusion : StratifiedMap

    Raises
    ------
    MalformedInputError
        If ``J`` has length 1 or ``k`` is out of range.
    """
    J = P.check_flag(J)
    n = len(J) - 1
    if n < 1:
        raise MalformedInputError("Horns need a flag of length at least 2.")
    k = check_index("k", k, 0, n)
    simplex = standard_simplex(P, J)
    A = _on_indices(P, J, _simplex_faces(n, skip=(k,)))
    return A, _inclusion(A, simplex)


def is_admissible(J, k):
    """Whether the horn ``Lambda_k^J`` is admissible.

    Examples
    --------
    >>> from stratkit.stratified import is_admissible
    >>> is_admissible((0, 0, 1), 1), is_admissible((0, 0, 1), 2)
    (True, False)
    """
    J = tuple(J)
    n = len(J) - 1
    check_index("k", k, 0, n)
    return (k < n and J[k] == J[k + 1]) or (k > 0 and J[k] == J[k - 1])


def is_degenerate_horn_flag(J, k):
    """Whether ``J`` is the ``k``-th or ``(k - 1)``-th degeneracy of a flag."""
    J = tuple(J)
    for j in (k - 1, k):
        if 0 <= j < len(J) - 1:
            shorter = J[:j] + J[j + 1 :]
            if shorter[: j + 1] + shorter[j:] == J:
                return True
    return False


def stratum(K, p):
    """The subcomplex of simplices whose flag is constant at ``p``.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex, stratum
    >>> K = standard_simplex(Poset([0, 1], [(0, 1)]), (0, 0, 1))
    >>> stratum(K, 0).counts()
    [2, 1]
    """
    K.poset.index(p)
    return sub_simplicial_set(K, [x for x in K if set(K.flags[x]) == {p}])


def stratified_product(K, S):
    """The product ``K x S`` stratified through the first projection.

    Returns
    -------
    KS : StratifiedSimplicialSet

    pr_k, pr_s : SimplicialMap
    """
    KS, pr_k, pr_s = product(K, S)
    flags = {z: K.flag(pr_k.images[z]) for z in KS}
    KS = StratifiedSimplicialSet(KS, K.poset, flags, validate=False)
    return (
        KS,
        SimplicialMap(KS, K, pr_k.images, validate=False),
        SimplicialMap(KS, S, pr_s.images, validate=False),
    )


def stratified_nerve(P, dim_bound):
    """The nerve of ``P`` with its tautological stratification."""
    NP = nerve(P, dim_bound)
    return StratifiedSimplicialSet(NP, P, {x: x for x in NP}, validate=False)


def stratification_map(K, NP):
    """The structure map ``K -> N(P)`` as a simplicial map."""
    return SimplicialMap(
        K, NP, {x: chain_ref(NP, K.flags[x]) for x in K}, validate=False
    )


def subcomplex(K, ids):
    """The stratified subcomplex on ``ids`` with its inclusion."""
    A = sub_simplicial_set(K, ids)
    A = StratifiedSimplicialSet(A, K.poset, K.flags, validate=False)
    return A, _inclusion(A, K)


def stratified_disjoint_union(K, L):
    """Coproduct of two stratified simplicial sets over the same poset."""
    if K.poset != L.poset:
        raise MalformedInputError("Both objects must be stratified over one poset.")
    union = disjoint_union(K, L)
    flags = {(tag, z): (K, L)[tag].flags[z] for tag, z in union}
    return StratifiedSimplicialSet(union, K.poset, flags, validate=False)


@Substitution(budget=_budget_docstring)
def enumerate_stratified_maps(K, L, budget=None):
    """All stratified maps ``K -> L``.

    Parameters
    ----------
    K, L : StratifiedSimplicialSet

    {budget}

    Returns
    -------
    maps : list of StratifiedMap

    Raises
    ------
    BudgetExceededError
        When more candidates than ``budget`` are tried.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import enumerate_stratified_maps, standard_simplex
    >>> P = Poset([0, 1], [(0, 1)])
    >>> len(enumerate_stratified_maps(standard_simplex(P, (0,)),
    ...                               standard_simplex(P, (0, 0))))
    2
    """
    if K.poset != L.poset:
        raise MalformedInputError("Both objects must be stratified over one poset.")
    maps = enumerate_maps(
        K, L, budget=budget, source_label=K.flags.__getitem__, target_label=L.flag
    )
    return [StratifiedMap(K, L, f.images, validate=False) for f in maps]
