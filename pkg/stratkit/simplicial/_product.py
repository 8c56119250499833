"""Products of simplicial sets."""

# License: MIT

import logging

from ._maps import SimplicialMap
from ._simplicial_set import SimplexRef
from ._simplicial_set import SimplicialSet
from ._simplicial_set import surjection_from_word
from ._simplicial_set import word_from_surjection

logger = logging.getLogger(__name__)


def _lattice_paths(p, q):
    """Paths from ``(0, 0)`` to ``(p, q)`` with steps (1, 0), (0, 1), (1, 1)."""
    paths = []

    def walk(path):
        a, b = path[-1]
        if (a, b) == (p, q):
            paths.append(tuple(path))
            return
        for da, db in ((1, 0), (0, 1), (1, 1)):
            if a + da <= p and b + db <= q:
                walk(path + [(a + da, b + db)])

    walk([(0, 0)])
    return paths


def pair_ref(ref_a, ref_b, X, Y):
    """Ref in ``X x Y`` of the pair of two simplices of the same dimension.

    Parameters
    ----------
    ref_a : SimplexRef
        A simplex of ``X``.

    ref_b : SimplexRef
        A simplex of ``Y`` of the same dimension.

    X, Y : SimplicialSet

    Returns
    -------
    ref : SimplexRef
        Common degeneracies of the two components are collected in the word
        and the non-degenerate part has the id ``(x, y, path)``.
    """
    alpha = X.surjection(ref_a)
    beta = Y.surjection(ref_b)
    points = []
    eta = []
    for point in zip(alpha, beta):
        if not points or points[-1] != point:
            points.append(point)
        eta.append(len(points) - 1)
    return SimplexRef(
        (ref_a[0], ref_b[0], tuple(points)), word_from_surjection(eta)
    )


def split_ref(ref):
    """The two components of a simplex of a product.

    Returns
    -------
    ref_a, ref_b : SimplexRef
    """
    x, y, path = ref[0]
    eta = surjection_from_word(tuple(ref[1]), len(path) - 1 + len(ref[1]))
    alpha = [path[e][0] for e in eta]
    beta = [path[e][1] for e in eta]
    return (
        SimplexRef(x, word_from_surjection(alpha)),
        SimplexRef(y, word_from_surjection(beta)),
    )


def product(X, Y, keep=None):
    """Categorical product of two finite simplicial sets.

    A non-degenerate ``m``-simplex is a pair ``(alpha^* x, beta^* y)`` of
    degeneracies of non-degenerate simplices without a common degeneracy.
    It is stored with the id ``(x, y, path)`` where ``path`` lists the
    points ``(alpha(i), beta(i))``.

    Parameters
    ----------
    X, Y : SimplicialSet

    keep : callable, default=None
        Optional predicate on pairs of non-degenerate ids. Only simplices
        whose components satisfy it are kept; the predicate must be closed
        under taking faces of both components.

    Returns
    -------
    XY : SimplicialSet

    pr_x, pr_y : SimplicialMap
        The two projections.

    Examples
    --------
    >>> from stratkit.simplicial import product, standard_simplex_set
    >>> XY, _, _ = product(standard_simplex_set(1), standard_simplex_set(1))
    >>> XY.counts()
    [4, 5, 2]
    """
    simplices = []
    for x in X:
        p = X.dim(x)
        for y in Y:
            if keep is not None and not keep(x, y):
                continue
            q = Y.dim(y)
            for path in _lattice_paths(p, q):
                simplices.append((x, y, path))
    simplices.sort(key=lambda s: len(s[2]))

    data = []
    for x, y, path in simplices:
        m = len(path) - 1
        ref_a = SimplexRef(x, word_from_surjection([a for a, _ in path]))
        ref_b = SimplexRef(y, word_from_surjection([b for _, b in path]))
        faces = tuple(
            pair_ref(X.face(ref_a, i), Y.face(ref_b, i), X, Y) for i in range(m + 1)
        ) if m > 0 else ()
        data.append(((x, y, path), m, faces))
    XY = SimplicialSet(data, validate=False)
    logger.debug("Product with %s non-degenerate simplices.", XY.counts())

    pr_x = SimplicialMap(
        XY,
        X,
        {s: SimplexRef(s[0], word_from_surjection([a for a, _ in s[2]])) for s in XY},
        validate=False,
    )
    pr_y = SimplicialMap(
        XY,
        Y,
        {s: SimplexRef(s[1], word_from_surjection([b for _, b in s[2]])) for s in XY},
        validate=False,
    )
    return XY, pr_x, pr_y


def product_map(f, g, source, target):
    """The map ``f x g`` between two products built by :func:`product`."""
    images = {}
    for s in source:
        ref_a, ref_b = split_ref(SimplexRef(s))
        images[s] = pair_ref(f.apply(ref_a), g.apply(ref_b), f.target, g.target)
    return SimplicialMap(source, target, images, validate=False)
