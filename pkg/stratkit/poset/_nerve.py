"""The dimension-truncated nerve of a finite poset."""

# License: MIT

from ._poset import regular_flags
from ..simplicial import from_chains
from ..utils import check_dim_bound


def nerve(P, dim_bound):
    """The nerve ``N(P)`` truncated at ``dim_bound``.

    Non-degenerate ``n``-simplices are the regular flags of length ``n + 1``
    and their ids are the flags themselves; vertices are 1-tuples. The face
    ``d_i`` deletes entry ``i``. The truncation is exact as soon as
    ``dim_bound + 1`` reaches the length of a longest chain of ``P``.

    Parameters
    ----------
    P : Poset

    dim_bound : int

    Returns
    -------
    NP : SimplicialSet

    Examples
    --------
    >>> from stratkit.poset import Poset, nerve
    >>> nerve(Poset([0, 1, 2], [(0, 1), (1, 2)]), 2).counts()
    [3, 3, 1]
    """
    dim_bound = check_dim_bound(dim_bound)
    chains = [I for I in regular_flags(P) if len(I) <= dim_bound + 1]
    return from_chains(chains)
