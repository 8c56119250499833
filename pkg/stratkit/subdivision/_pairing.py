"""Pairings certifying strong anodyne extensions, and the pairings of the
inclusions ``K -> Ex_P^naiv(K)`` and ``J^ -> Ex_P(K)``."""

# License: MIT

import logging
from typing import Dict, FrozenSet, NamedTuple

import networkx as nx

from ._ex import ex_P
from ._ex import ex_P_naiv
from ._ex import jhat
from ._ex import level
from ._model import delete_entry
from ._model import face_map
from ._model import moss_r
from ._model import naive_face_map
from ._model import r_map
from ._model import repeat_entry
from ..exceptions import MalformedInputError
from ..simplicial import SimplexRef
from ..simplicial import compose
from ..simplicial import face_closure
from ..stratified import is_admissible
from ..stratified import subcomplex
from ..utils import Substitution
from ..utils._docstring import _budget_docstring
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)


class Pairing(NamedTuple):
    """A pairing on the inclusion of ``subcomplex`` into ``space``.

    Attributes
    ----------
    space : StratifiedSimplicialSet
        The object ``B``.

    subcomplex : frozenset
        Non-degenerate ids of ``A``, closed under faces.

    type_i, type_ii : frozenset
        A partition of the remaining non-degenerate ids.

    partner : dict
        The bijection ``T`` from type II ids to type I ids.

    deferred : frozenset
        Type II ids of top dimension whose partner lies above the
        truncation of ``space``. They carry no partner.
    """

    space: object
    subcomplex: FrozenSet
    type_i: FrozenSet
    type_ii: FrozenSet
    partner: Dict
    deferred: FrozenSet = frozenset()


class PairingCheck(NamedTuple):
    proper: bool
    admissible: bool
    regular: bool

    @property
    def passed(self):
        return self.proper and self.admissible and self.regular


def _check_well_formed(pairing):
    B = pairing.space
    A = set(pairing.subcomplex)
    type_i, type_ii = set(pairing.type_i), set(pairing.type_ii)
    deferred = set(pairing.deferred)
    if type_i & type_ii or (type_i | type_ii) & A:
        raise MalformedInputError("Type I, type II and A must be disjoint.")
    if A | type_i | type_ii != set(B):
        raise MalformedInputError(
            "Type I and type II do not cover the simplices outside A."
        )
    if not deferred <= type_ii:
        raise MalformedInputError("Deferred simplices must be of type II.")
    paired = type_ii - deferred
    if set(pairing.partner) != paired:
        raise MalformedInputError("T must be defined on the type II simplices.")
    images = [pairing.partner[x] for x in paired]
    if len(set(images)) != len(images) or set(images) != type_i:
        raise MalformedInputError("T is not a bijection onto the type I simplices.")


def _face_indices(B, sigma, tau):
    return [i for i, face in enumerate(B.faces(tau)) if face == SimplexRef(sigma)]


def check_pairing(pairing):
    """Decide whether a pairing is proper, admissible and regular.

    Proper means every type II simplex is a face of its partner in exactly
    one way. Admissible means that if ``sigma = d_k T(sigma)`` the horn
    ``Lambda_k`` of the flag of ``T(sigma)`` is admissible. Regular means the
    relation ``sigma < tau`` whenever ``sigma != tau`` is a face of ``T(tau)``
    has no cycle.

    Parameters
    ----------
    pairing : Pairing

    Returns
    -------
    check : PairingCheck

    Raises
    ------
    MalformedInputError
        If the sets do not partition the simplices outside the subcomplex,
        or ``T`` is not a bijection.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import standard_simplex
    >>> from stratkit.subdivision import Pairing, check_pairing
    >>> B = standard_simplex(Poset([0, 1], [(0, 1)]), (0, 0, 1))
    >>> horn = {(0,), (1,), (2,), (0, 1), (1, 2)}
    >>> pairing = Pairing(B, frozenset(horn), frozenset({(0, 1, 2)}),
    ...                   frozenset({(0, 2)}), {(0, 2): (0, 1, 2)})
    >>> check_pairing(pairing)
    PairingCheck(proper=True, admissible=True, regular=True)
    """
    _check_well_formed(pairing)
    B = pairing.space
    proper = admissible = True
    for sigma, tau in pairing.partner.items():
        indices = _face_indices(B, sigma, tau)
        if len(indices) != 1:
            proper = False
        if not any(is_admissible(B.flags[tau], k) for k in indices):
            admissible = False

    ancestry = nx.DiGraph()
    ancestry.add_nodes_from(pairing.type_ii)
    for tau, partner in pairing.partner.items():
        for sigma in face_closure(B, [partner]) & pairing.type_ii:
            if sigma != tau:
                ancestry.add_edge(sigma, tau)
    regular = nx.is_directed_acyclic_graph(ancestry)
    logger.debug(
        "Pairing with %d pairs: proper=%s admissible=%s regular=%s.",
        len(pairing.partner),
        proper,
        admissible,
        regular,
    )
    return PairingCheck(proper, admissible, regular)


def restrict_pairing(pairing, intermediate):
    """Split a pairing on ``A -> B`` along ``A -> B1 -> B``.

    Parameters
    ----------
    pairing : Pairing

    intermediate : iterable
        Non-degenerate ids of ``B1``, closed under faces and containing
        ``A``.

    Returns
    -------
    lower : Pairing
        On ``A -> B1``.

    upper : Pairing
        On ``B1 -> B``.

    Raises
    ------
    MalformedInputError
        If ``B1`` does not contain ``A`` or ``T`` sends a type II simplex of
        ``B1`` outside ``B1``.
    """
    B1 = frozenset(intermediate)
    if not pairing.subcomplex <= B1:
        raise MalformedInputError("The intermediate object must contain A.")
    for sigma, tau in pairing.partner.items():
        if sigma in B1 and tau not in B1:
            raise MalformedInputError(
                f"T sends {sigma!r} in the intermediate object to {tau!r} outside it."
            )
    space, _ = subcomplex(pairing.space, B1)
    lower = Pairing(
        space,
        pairing.subcomplex,
        pairing.type_i & B1,
        pairing.type_ii & B1,
        {s: t for s, t in pairing.partner.items() if s in B1},
        pairing.deferred & B1,
    )
    upper = Pairing(
        pairing.space,
        B1,
        pairing.type_i - B1,
        pairing.type_ii - B1,
        {s: t for s, t in pairing.partner.items() if s not in B1},
        pairing.deferred - B1,
    )
    return lower, upper


def _nd_root(x, image):
    if image.word:
        logger.debug("The partner of %s is degenerate, keeping its root.", x)
    return image.nd_id


def _build(ex, A, is_type_i, partner):
    type_i, type_ii, deferred, T = set(), set(), set(), {}
    for x in ex:
        if x in A:
            continue
        if is_type_i(x):
            type_i.add(x)
        elif ex.dim(x) == ex.truncation:
            type_ii.add(x)
            deferred.add(x)
        else:
            type_ii.add(x)
            T[x] = partner(x)
    logger.info(
        "Pairing on %d simplices outside A: %d pairs, %d deferred.",
        len(type_i) + len(type_ii),
        len(T),
        len(deferred),
    )
    return Pairing(
        ex, frozenset(A), frozenset(type_i), frozenset(type_ii), T, frozenset(deferred)
    )


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def build_pairing_ex_naiv(K, dim_bound=2, ex=None, budget=None, n_jobs=None):
    """The pairing on ``K -> Ex_P^naiv(K)`` obtained from the retractions
    ``r_M^m`` of naive subdivisions.

    A simplex ``f`` of flag ``J`` of dimension ``n`` and level ``k`` lies in
    ``K`` when ``k = n``. Otherwise, with ``m = n - k``, it is of type I when
    ``k >= 1``, ``J[m] = J[m+1]`` and ``f = d_(m+1)(f) o r_M^m``; it is of
    type II with partner ``f o r_M^m``, of flag ``J^m``, else. A degenerate
    partner is replaced by its non-degenerate root.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    dim_bound : int, default=2

    ex : ExComplex, default=None
        An already computed ``Ex_P^naiv(K)``.

    {budget}

    {n_jobs}

    Returns
    -------
    pairing : Pairing
    """
    if ex is None:
        ex = ex_P_naiv(K, dim_bound=dim_bound, budget=budget, n_jobs=n_jobs)
    P = ex.poset
    levels = {x: level(ex, x) for x in ex}
    A = {x for x in ex if levels[x] == ex.dim(x)}

    def is_type_i(x):
        J, tau = x[0], ex.maps[x]
        k = levels[x]
        m = len(J) - 1 - k
        if k < 1 or J[m] != J[m + 1]:
            return False
        face = compose(tau, naive_face_map(P, J, m + 1))
        return compose(face, moss_r(P, delete_entry(J, m + 1), m)) == tau

    def partner(x):
        J = x[0]
        m = len(J) - 1 - levels[x]
        image = ex.ref_of(compose(ex.maps[x], moss_r(P, J, m)), repeat_entry(J, m))
        return _nd_root(x, image)

    return _build(ex, A, is_type_i, partner)


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def build_pairing_ex(K, dim_bound=2, ex=None, budget=None, n_jobs=None):
    """The pairing on ``J^ -> Ex_P(K)`` given by ``T(f) = f o r^k``.

    A simplex ``f`` of flag ``J`` of dimension ``n`` and level ``k`` lies in
    ``J^`` when ``k = n``. Otherwise it is of type I when ``k >= 1``,
    ``J[k-1] = J[k]`` and ``f = d_(k-1)(f) o r^(k-1)``; it is of type II
    with partner ``f o r^k``, of flag ``J^k``, else.

    Parameters
    ----------
    K : StratifiedSimplicialSet

    dim_bound : int, default=2

    ex : ExComplex, default=None
        An already computed ``Ex_P(K)``.

    {budget}

    {n_jobs}

    Returns
    -------
    pairing : Pairing
    """
    if ex is None:
        ex = ex_P(K, dim_bound=dim_bound, budget=budget, n_jobs=n_jobs)
    P = ex.poset
    levels = {x: level(ex, x) for x in ex}
    A = jhat(ex)

    def is_type_i(x):
        J, tau = x[0], ex.maps[x]
        k = levels[x]
        if k < 1 or J[k - 1] != J[k]:
            return False
        face = compose(tau, face_map(P, J, k - 1))
        return compose(face, r_map(P, delete_entry(J, k - 1), k - 1)) == tau

    def partner(x):
        J = x[0]
        k = levels[x]
        image = ex.ref_of(compose(ex.maps[x], r_map(P, J, k)), repeat_entry(J, k))
        return _nd_root(x, image)

    return _build(ex, A, is_type_i, partner)
