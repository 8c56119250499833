"""Boundary and admissible horn inclusions over all short flags."""

# License: MIT

from ._stratified import boundary
from ._stratified import horn
from ._stratified import is_admissible
from ..poset import flags


def generating_cofibrations(P, max_len):
    """Boundary inclusions ``dDelta^J -> Delta^J`` for flags up to ``max_len``.

    Returns
    -------
    inclusions : list of (tuple, StratifiedMap)
        Pairs of the flag and the inclusion, in flag order.
    """
    return [(J, boundary(P, J)[1]) for J in flags(P, max_len)]


def generating_trivial_cofibrations(P, max_len):
    """Admissible horn inclusions ``Lambda_k^J -> Delta^J``.

    Returns
    -------
    inclusions : list of (tuple, int, StratifiedMap)

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import generating_trivial_cofibrations
    >>> P = Poset([0, 1], [(0, 1)])
    >>> [(J, k) for J, k, _ in generating_trivial_cofibrations(P, 2)]
    [((0, 0), 0), ((0, 0), 1), ((1, 1), 0), ((1, 1), 1)]
    """
    return [
        (J, k, horn(P, J, k)[1])
        for J in flags(P, max_len)
        for k in range(len(J))
        if len(J) > 1 and is_admissible(J, k)
    ]
