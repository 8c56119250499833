"""Integral homology of finite simplicial sets."""

# License: MIT

import logging
import warnings
from typing import List, NamedTuple, Optional

import numpy as np
from scipy import sparse
from scipy.linalg import null_space
from scipy.sparse.csgraph import connected_components

from ..exceptions import HomologyOverflowError
from ..exceptions import TruncationWarning

logger = logging.getLogger(__name__)

_INT_LIMIT = 2 ** 62


class HomologyReport(NamedTuple):
    """Betti numbers and torsion invariant factors by degree.

    ``valid_up_to`` is the highest degree that can be trusted when the
    simplicial set is a truncation, and ``None`` otherwise.
    """

    betti: List[int]
    torsion: List[List[int]]
    valid_up_to: Optional[int] = None

    def agrees_with(self, other, max_deg=None):
        """Compare Betti numbers and torsion up to ``max_deg``."""
        top = len(self.betti) - 1 if max_deg is None else max_deg
        return (
            self.betti[: top + 1] == other.betti[: top + 1]
            and self.torsion[: top + 1] == other.torsion[: top + 1]
        )


def boundary_matrix(X, k):
    """Matrix of the normalized boundary ``C_k -> C_{k-1}``.

    Rows are indexed by ``X.simplices(k - 1)`` and columns by
    ``X.simplices(k)``. Degenerate faces contribute zero.
    """
    rows = {x: i for i, x in enumerate(X.simplices(k - 1))}
    cols = X.simplices(k)
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if k == 0:
        return matrix
    for j, x in enumerate(cols):
        for i, face in enumerate(X.faces(x)):
            if not face.word:
                matrix[rows[face.nd_id], j] += (-1) ** i
    return matrix


def _check_combination(target, source, factor):
    bound = int(np.abs(target).max(initial=0)) + abs(int(factor)) * int(
        np.abs(source).max(initial=0)
    )
    if bound >= _INT_LIMIT:
        raise HomologyOverflowError(
            "Smith normal form left the int64 range; the complex is too large "
            "for exact arithmetic."
        )


def _add_row(A, target, source, factor):
    _check_combination(A[target], A[source], factor)
    A[target] += factor * A[source]


def _add_col(A, target, source, factor):
    _check_combination(A[:, target], A[:, source], factor)
    A[:, target] += factor * A[:, source]


def smith_normal_form(matrix):
    """Invariant factors of an integer matrix.

    Parameters
    ----------
    matrix : array-like of shape (n_rows, n_cols)

    Returns
    -------
    diagonal : list of int
        The non-zero invariant factors ``d_1 | d_2 | ...``.

    Raises
    ------
    HomologyOverflowError
        If an intermediate entry would leave the int64 range.

    Examples
    --------
    >>> from stratkit.simplicial import smith_normal_form
    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    A = np.array(matrix, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = A.reshape(0, 0)
    n_rows, n_cols = A.shape
    diagonal = []
    t = 0
    while t < min(n_rows, n_cols):
        block = A[t:, t:]
        nonzero = np.argwhere(block != 0)
        if nonzero.size == 0:
            break
        values = np.abs(block[nonzero[:, 0], nonzero[:, 1]])
        i, j = nonzero[np.argmin(values)] + t
        A[[t, i]] = A[[i, t]]
        A[:, [t, j]] = A[:, [j, t]]
        while True:
            pivot = A[t, t]
            for r in range(t + 1, n_rows):
                if A[r, t]:
                    _add_row(A, r, t, -(A[r, t] // pivot))
            for c in range(t + 1, n_cols):
                if A[t, c]:
                    _add_col(A, c, t, -(A[t, c] // pivot))
            rest_col = np.flatnonzero(A[t + 1 :, t])
            rest_row = np.flatnonzero(A[t, t + 1 :])
            if rest_col.size:
                r = t + 1 + rest_col[np.argmin(np.abs(A[t + 1 + rest_col, t]))]
                A[[t, r]] = A[[r, t]]
                continue
            if rest_row.size:
                c = t + 1 + rest_row[np.argmin(np.abs(A[t, t + 1 + rest_row]))]
                A[:, [t, c]] = A[:, [c, t]]
                continue
            # invariant factors must divide each other
            remainder = np.argwhere(A[t + 1 :, t + 1 :] % pivot != 0)
            if remainder.size:
                _add_row(A, t, t + 1 + remainder[0][0], 1)
                continue
            break
        diagonal.append(abs(int(A[t, t])))
        t += 1
    return diagonal


def homology(X, max_deg):
    """Integral homology of the normalized chain complex.

    Parameters
    ----------
    X : SimplicialSet
        When ``X`` has a ``truncation`` attribute, degrees from
        ``truncation`` on are not trusted and a
        :class:`~stratkit.exceptions.TruncationWarning` is emitted if they
        are requested.

    max_deg : int
        Highest degree computed.

    Returns
    -------
    report : HomologyReport

    Examples
    --------
    >>> from stratkit.simplicial import from_chains, homology
    >>> circle = from_chains([(0, 1), (1, 2), (0, 2)])
    >>> homology(circle, 1).betti
    [1, 1]
    """
    ranks = {}
    diagonals = {}
    for k in range(max_deg + 2):
        diagonals[k] = smith_normal_form(boundary_matrix(X, k))
        ranks[k] = len(diagonals[k])
    counts = X.counts()
    betti = []
    torsion = []
    for k in range(max_deg + 1):
        n_chains = counts[k] if k < len(counts) else 0
        betti.append(n_chains - ranks[k] - ranks[k + 1])
        torsion.append([d for d in diagonals[k + 1] if d > 1])

    valid_up_to = None
    truncation = getattr(X, "truncation", None)
    if truncation is not None:
        valid_up_to = min(max_deg, truncation - 1)
        if max_deg > truncation - 1:
            warnings.warn(
                f"Homology in degrees >= {truncation} of a simplicial set "
                f"truncated at dimension {truncation} is not trusted.",
                TruncationWarning,
            )
    logger.debug("Homology up to degree %d: betti=%s", max_deg, betti)
    return HomologyReport(betti, torsion, valid_up_to)


def pi0(X):
    """Connected components of a simplicial set.

    Returns
    -------
    components : list of list
        Vertex ids of each component, in vertex order; components are sorted
        by their first vertex.

    Examples
    --------
    >>> from stratkit.simplicial import from_chains, pi0
    >>> pi0(from_chains([(0, 1), (2,)]))
    [[(0,), (1,)], [(2,)]]
    """
    if getattr(X, "truncation", None) == 0:
        warnings.warn(
            "Components of a simplicial set truncated at dimension 0 are only "
            "its vertices.",
            TruncationWarning,
        )
    vertices = X.simplices(0)
    if not vertices:
        return []
    index = {v: i for i, v in enumerate(vertices)}
    rows, cols = [], []
    for e in X.simplices(1):
        a, b = X.vertices(e)
        rows.append(index[a])
        cols.append(index[b])
    graph = sparse.coo_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)),
        shape=(len(vertices), len(vertices)),
    )
    n_components, labels = connected_components(graph, directed=False)
    components = [[] for _ in range(n_components)]
    for v, label in zip(vertices, labels):
        components[label].append(v)
    components.sort(key=lambda c: index[c[0]])
    return components


def chain_map_matrix(f, k):
    """Matrix of ``f`` on normalized ``k``-chains.

    Rows are indexed by ``f.target.simplices(k)`` and columns by
    ``f.source.simplices(k)``. A simplex sent to a degenerate simplex
    contributes zero.
    """
    rows = {y: i for i, y in enumerate(f.target.simplices(k))}
    cols = f.source.simplices(k)
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, x in enumerate(cols):
        ref = f.images[x]
        if not ref.word:
            matrix[rows[ref.nd_id], j] = 1
    return matrix


def _rank(matrix):
    return 0 if matrix.size == 0 else int(np.linalg.matrix_rank(matrix))


def _cycles(X, k):
    """Columns spanning the rational ``k``-cycles."""
    boundary = boundary_matrix(X, k).astype(float)
    n = boundary.shape[1]
    if n == 0 or not boundary.any():
        return np.eye(n)
    return null_space(boundary)


def induced_homology_rank(f, k):
    """Rank of ``H_k(f)`` with rational coefficients.

    Returns
    -------
    rank : int

    source_betti, target_betti : int
        Rational Betti numbers of the source and target in degree ``k``.
    """
    source_cycles = _cycles(f.source, k)
    target_cycles = _cycles(f.target, k)
    source_boundaries = boundary_matrix(f.source, k + 1).astype(float)
    target_boundaries = boundary_matrix(f.target, k + 1).astype(float)
    pushed = chain_map_matrix(f, k).astype(float) @ source_cycles
    rank_target_boundaries = _rank(target_boundaries)
    rank = _rank(np.hstack([pushed, target_boundaries])) - rank_target_boundaries
    source_betti = source_cycles.shape[1] - _rank(source_boundaries)
    target_betti = target_cycles.shape[1] - rank_target_boundaries
    return rank, source_betti, target_betti


def is_homology_isomorphism(f, max_deg):
    """Whether ``f`` induces isomorphisms on homology up to ``max_deg``.

    The induced maps are compared with rational coefficients, and the integral
    torsion of both sides is required to agree.

    Parameters
    ----------
    f : SimplicialMap

    max_deg : int

    Returns
    -------
    is_isomorphism : bool

    Examples
    --------
    >>> from stratkit.simplicial import from_chains, vertex_map
    >>> from stratkit.simplicial import is_homology_isomorphism
    >>> circle = from_chains([(0, 1), (1, 2), (0, 2)])
    >>> is_homology_isomorphism(vertex_map(circle, circle, lambda v: v), 1)
    True
    >>> is_homology_isomorphism(vertex_map(circle, circle, lambda v: 0), 1)
    False
    """
    source = homology(f.source, max_deg)
    target = homology(f.target, max_deg)
    if source.torsion[: max_deg + 1] != target.torsion[: max_deg + 1]:
        return False
    for k in range(max_deg + 1):
        rank, source_betti, target_betti = induced_homology_rank(f, k)
        if not rank == source_betti == target_betti:
            logger.debug(
                "H_%d(f) has rank %d between Betti numbers %d and %d.",
                k,
                rank,
                source_betti,
                target_betti,
            )
            return False
    return True
