"""Barycentric subdivision and the last vertex map."""

# License: MIT

import logging
from itertools import combinations

from ._maps import SimplicialMap
from ._simplicial_set import SimplexRef
from ._simplicial_set import SimplicialSet
from ._simplicial_set import word_from_surjection

logger = logging.getLogger(__name__)


def _interior_chains(n):
    """Strict chains of non-empty subsets of ``{0..n}`` ending at the full set.

    Chains are sorted by length, then lexicographically.
    """
    full = tuple(range(n + 1))
    subsets = [
        c for size in range(1, n + 1) for c in combinations(full, size)
    ]
    chains = []

    def extend(chain):
        chains.append(chain + (full,))
        for s in subsets:
            if not chain or set(chain[-1]) < set(s):
                extend(chain + (s,))

    extend(())
    chains.sort(key=lambda c: (len(c), c))
    return chains


def sd_chain_ref(X, x, sequence):
    """Ref in ``sd(X)`` of a weakly increasing sequence of index sets of ``x``.

    Parameters
    ----------
    X : SimplicialSet

    x : hashable
        A non-degenerate simplex of ``X`` of dimension ``n``.

    sequence : sequence of iterable of int
        Subsets ``nu_0 <= ... <= nu_k`` of ``{0..n}``.

    Returns
    -------
    ref : SimplexRef
        The simplex of ``sd(X)`` spanned by the barycenters of the faces
        ``nu_j`` of ``x``, in normal form.
    """
    top = sorted(set(sequence[-1]))
    ref = X.apply_operator(SimplexRef(x), top)
    eta = X.surjection(ref)
    position = {v: i for i, v in enumerate(top)}
    chain = []
    degeneracy = []
    for subset in sequence:
        image = tuple(sorted({eta[position[v]] for v in subset}))
        if not chain or chain[-1] != image:
            chain.append(image)
        degeneracy.append(len(chain) - 1)
    return SimplexRef((ref[0], tuple(chain)), word_from_surjection(degeneracy))


def sd(X):
    """Barycentric subdivision of a finite simplicial set.

    The non-degenerate ``k``-simplices are the pairs ``(x, chain)`` with
    ``x`` a non-degenerate ``n``-simplex and ``chain`` a strictly
    increasing chain of ``k + 1`` non-empty subsets of ``{0..n}`` that ends
    with the full set. This is the colimit of ``sd(Delta^n)`` over the
    simplices of ``X``, each non-degenerate simplex contributing its interior.

    Parameters
    ----------
    X : SimplicialSet

    Returns
    -------
    sdX : SimplicialSet

    Examples
    --------
    >>> from stratkit.simplicial import sd, standard_simplex_set
    >>> sd(standard_simplex_set(1)).counts()
    [3, 2]
    >>> sd(standard_simplex_set(2)).counts()
    [7, 12, 6]
    """
    chains_by_dim = {}
    simplices = []
    for x in X:
        n = X.dim(x)
        if n not in chains_by_dim:
            chains_by_dim[n] = _interior_chains(n)
        for chain in chains_by_dim[n]:
            simplices.append((x, chain))
    simplices.sort(key=lambda s: len(s[1]))

    data = []
    for x, chain in simplices:
        k = len(chain) - 1
        faces = []
        if k > 0:
            for i in range(k):
                faces.append(SimplexRef((x, chain[:i] + chain[i + 1 :])))
            faces.append(sd_chain_ref(X, x, chain[:-1]))
        data.append(((x, chain), k, tuple(faces)))
    sdX = SimplicialSet(data, validate=False)
    logger.debug("Subdivision with %s non-degenerate simplices.", sdX.counts())
    return sdX


def sd_map(f, sd_source=None, sd_target=None):
    """The subdivision ``sd(f)`` of a simplicial map.

    Parameters
    ----------
    f : SimplicialMap

    sd_source, sd_target : SimplicialSet, default=None
        Already computed subdivisions of the source and target.

    Returns
    -------
    sd_f : SimplicialMap
    """
    sd_source = sd(f.source) if sd_source is None else sd_source
    sd_target = sd(f.target) if sd_target is None else sd_target
    images = {}
    for x, chain in sd_source:
        image = f.images[x]
        theta = f.target.surjection(image)
        images[(x, chain)] = sd_chain_ref(
            f.target, image[0], [{theta[v] for v in subset} for subset in chain]
        )
    return SimplicialMap(sd_source, sd_target, images, validate=False)


def last_vertex(X, sdX=None):
    """The last vertex map ``sd(X) -> X``.

    The barycenter of a face ``sigma`` of ``x`` goes to the vertex
    ``max(sigma)`` of ``x``.

    Examples
    --------
    >>> from stratkit.simplicial import last_vertex, standard_simplex_set
    >>> lv = last_vertex(standard_simplex_set(1))
    >>> sorted(lv.images[v][0] for v in lv.source.simplices(0))
    [(0,), (1,), (1,)]
    """
    sdX = sd(X) if sdX is None else sdX
    images = {
        (x, chain): X.apply_operator(SimplexRef(x), [max(s) for s in chain])
        for x, chain in sdX
    }
    return SimplicialMap(sdX, X, images, validate=False)
