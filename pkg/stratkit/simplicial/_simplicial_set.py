"""Finite simplicial sets stored through their non-degenerate simplices."""

# License: MIT

import logging
from functools import lru_cache
from itertools import combinations
from typing import Hashable, NamedTuple, Tuple

from ..exceptions import MalformedInputError

logger = logging.getLogger(__name__)


class SimplexRef(NamedTuple):
    """A simplex in Eilenberg-Zilber normal form.

    ``SimplexRef(x, (j1, ..., jr))`` denotes ``s_{j1} ... s_{jr} x`` with
    ``j1 > ... > jr`` and ``x`` non-degenerate.
    """

    nd_id: Hashable
    word: Tuple[int, ...] = ()


@lru_cache(maxsize=None)
def surjection_from_word(word, n):
    """Monotone surjection ``[n] -> [n - len(word)]`` of a degeneracy word."""
    return tuple(i - sum(1 for j in word if j < i) for i in range(n + 1))


def word_from_surjection(eta):
    """Strictly decreasing degeneracy word of a monotone surjection."""
    return tuple(j for j in range(len(eta) - 2, -1, -1) if eta[j] == eta[j + 1])


def _check_word(word, n):
    word = tuple(word)
    if any(a <= b for a, b in zip(word, word[1:])):
        raise MalformedInputError(
            f"Degeneracy word {list(word)} is not strictly decreasing."
        )
    if word and (word[-1] < 0 or word[0] > n - 1):
        raise MalformedInputError(
            f"Degeneracy word {list(word)} is out of range for dimension {n}."
        )
    return word


class SimplicialSet:
    """A finite simplicial set.

    The set is given by its non-degenerate simplices. Each one has a dimension
    and, for every face index, a :class:`SimplexRef` to its face. Degenerate
    simplices are never stored; they are the ``SimplexRef`` with a non-empty
    degeneracy word.

    Parameters
    ----------
    simplices : iterable of (nd_id, dim, faces)
        ``faces`` lists the refs of ``d_0, ..., d_dim`` (empty for vertices).
        Ids are arbitrary hashable values and keep their insertion order.

    validate : bool, default=True
        Whether to check the face data and the simplicial identities.

    Examples
    --------
    >>> from stratkit.simplicial import SimplicialSet, SimplexRef
    >>> X = SimplicialSet([
    ...     ("v", 0, ()),
    ...     ("e", 1, (SimplexRef("v"), SimplexRef("v"))),
    ... ])
    >>> X.face(SimplexRef("e"), 0)
    SimplexRef(nd_id='v', word=())
    >>> X.face(X.degeneracy(SimplexRef("v"), 0), 1)
    SimplexRef(nd_id='v', word=())
    """

    def __init__(self, simplices=(), validate=True):
        self._dims = {}
        self._faces = {}
        for nd_id, dim, faces in simplices:
            if nd_id in self._dims:
                raise MalformedInputError(f"Duplicated simplex id {nd_id!r}.")
            self._dims[nd_id] = int(dim)
            self._faces[nd_id] = tuple(SimplexRef(f[0], tuple(f[1])) for f in faces)
        self._vertex_cache = {}
        if validate:
            self.check()

    def __repr__(self):
        counts = self.counts()
        return f"SimplicialSet(nd counts by dimension={counts})"

    def __iter__(self):
        return iter(self._dims)

    def __len__(self):
        return len(self._dims)

    def __contains__(self, nd_id):
        return nd_id in self._dims

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialSet)
            and self._dims == other._dims
            and self._faces == other._faces
        )

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    @property
    def dimension(self):
        """Largest dimension of a non-degenerate simplex, ``-1`` when empty."""
        return max(self._dims.values(), default=-1)

    def counts(self):
        """Number of non-degenerate simplices in each dimension."""
        counts = [0] * (self.dimension + 1)
        for dim in self._dims.values():
            counts[dim] += 1
        return counts

    def dim(self, nd_id):
        try:
            return self._dims[nd_id]
        except KeyError:
            raise MalformedInputError(f"Unknown simplex id {nd_id!r}.")

    def ref_dim(self, ref):
        return self.dim(ref[0]) + len(ref[1])

    def simplices(self, dim=None):
        """Ids of the non-degenerate simplices, optionally of one dimension."""
        if dim is None:
            return list(self._dims)
        return [x for x, d in self._dims.items() if d == dim]

    def faces(self, nd_id):
        return self._faces[nd_id]

    def _face_ref(self, nd_id, i):
        return self._faces[nd_id][i]

    def surjection(self, ref):
        return surjection_from_word(tuple(ref[1]), self.ref_dim(ref))

    def make_ref(self, nd_id, eta):
        """Ref of ``eta^* x`` for a monotone surjection ``eta`` onto ``[dim x]``."""
        return SimplexRef(nd_id, word_from_surjection(tuple(eta)))

    def face(self, ref, i):
        """The face ``d_i`` of a simplex, in normal form."""
        n = self.ref_dim(ref)
        if n == 0 or not 0 <= i <= n:
            raise MalformedInputError(
                f"Face index {i} is out of range for a simplex of dimension {n}."
            )
        x = ref[0]
        eta = self.surjection(ref)
        rest = eta[:i] + eta[i + 1 :]
        if len(set(rest)) == self._dims[x] + 1:
            return self.make_ref(x, rest)
        missing = eta[i]
        lowered = [e if e < missing else e - 1 for e in rest]
        y_ref = self._face_ref(x, missing)
        theta = self.surjection(y_ref)
        return self.make_ref(y_ref.nd_id, [theta[e] for e in lowered])

    def degeneracy(self, ref, j):
        """The degeneracy ``s_j`` of a simplex, in normal form."""
        n = self.ref_dim(ref)
        if not 0 <= j <= n:
            raise MalformedInputError(
                f"Degeneracy index {j} is out of range for dimension {n}."
            )
        eta = self.surjection(ref)
        return self.make_ref(
            ref[0], [eta[i] if i <= j else eta[i - 1] for i in range(n + 2)]
        )

    def apply_operator(self, ref, alpha):
        """Act on a simplex by a monotone map ``alpha: [k] -> [n]``.

        Parameters
        ----------
        ref : SimplexRef
            A simplex of dimension ``n``.

        alpha : sequence of int
            Values ``alpha(0) <= ... <= alpha(k)``.

        Returns
        -------
        ref : SimplexRef
            ``alpha^* ref`` in normal form.
        """
        n = self.ref_dim(ref)
        alpha = tuple(alpha)
        if not alpha or any(a < 0 or a > n for a in alpha):
            raise MalformedInputError(f"Operator {list(alpha)} is out of range.")
        if any(a > b for a, b in zip(alpha, alpha[1:])):
            raise MalformedInputError(f"Operator {list(alpha)} is not monotone.")
        eta = self.surjection(ref)
        composite = [eta[a] for a in alpha]
        image = sorted(set(composite))
        position = {v: k for k, v in enumerate(image)}
        restricted = SimplexRef(ref[0])
        kept = set(image)
        for i in range(self._dims[ref[0]], -1, -1):
            if i not in kept:
                restricted = self.face(restricted, i)
        theta = self.surjection(restricted)
        return self.make_ref(restricted.nd_id, [theta[position[v]] for v in composite])

    def normalize(self, nd_id, operators):
        """Normal form of a raw word of operators applied to ``nd_id``.

        Parameters
        ----------
        nd_id : hashable
            A non-degenerate simplex.

        operators : sequence of (str, int)
            Pairs ``("d", i)`` or ``("s", j)`` applied in the given order.

        Returns
        -------
        ref : SimplexRef
        """
        ref = SimplexRef(nd_id)
        self.dim(nd_id)
        for kind, index in operators:
            if kind == "d":
                ref = self.face(ref, index)
            elif kind == "s":
                ref = self.degeneracy(ref, index)
            else:
                raise MalformedInputError(f"Unknown operator {kind!r}.")
        return ref

    def vertices(self, ref):
        """Vertex ids of a simplex, in order."""
        if not isinstance(ref, SimplexRef):
            ref = SimplexRef(ref)
        x = ref[0]
        if x not in self._vertex_cache:
            if self._dims[x] == 0:
                verts = (x,)
            else:
                front = self.vertices(self._faces[x][self._dims[x]])
                back = self.vertices(self._faces[x][0])
                verts = front + (back[-1],)
            self._vertex_cache[x] = verts
        verts = self._vertex_cache[x]
        return tuple(verts[e] for e in self.surjection(ref))

    def all_refs(self, dim):
        """Every simplex of dimension ``dim``, degenerate ones included."""
        refs = []
        for y, e in self._dims.items():
            if e > dim:
                continue
            for positions in combinations(range(dim), dim - e):
                refs.append(SimplexRef(y, tuple(sorted(positions, reverse=True))))
        return refs

    def check(self):
        """Validate face data and the identities ``d_i d_j = d_{j-1} d_i``."""
        for x, dim in self._dims.items():
            faces = self._faces[x]
            if dim < 0:
                raise MalformedInputError(f"Negative dimension for {x!r}.")
            if len(faces) != (dim + 1 if dim > 0 else 0):
                raise MalformedInputError(
                    f"Simplex {x!r} of dimension {dim} has {len(faces)} faces."
                )
            for face in faces:
                if face.nd_id not in self._dims:
                    raise MalformedInputError(
                        f"Face {face.nd_id!r} of {x!r} is not a simplex."
                    )
                _check_word(face.word, self.ref_dim(face))
                if self.ref_dim(face) != dim - 1:
                    raise MalformedInputError(
                        f"Face {face!r} of {x!r} does not have dimension {dim - 1}."
                    )
        for x, dim in self._dims.items():
            if dim < 2:
                continue
            for j in range(dim + 1):
                for i in range(j):
                    lhs = self.face(self._faces[x][j], i)
                    rhs = self.face(self._faces[x][i], j - 1)
                    if lhs != rhs:
                        raise MalformedInputError(
                            f"Simplicial identity d_{i} d_{j} = d_{j - 1} d_{i} "
                            f"fails on {x!r}: {lhs} != {rhs}."
                        )
        return self


def verify_simplicial_identities(X):
    """Exhaustively check the simplicial identities on one level of degeneracies.

    Returns
    -------
    violations : list of str
        Empty when every identity holds.
    """
    violations = []
    for x in X:
        base = SimplexRef(x)
        candidates = [base] + [
            X.degeneracy(base, j) for j in range(X.dim(x) + 1)
        ]
        for ref in candidates:
            n = X.ref_dim(ref)
            for j in range(n + 1):
                s = X.degeneracy(ref, j)
                for i in range(n + 2):
                    lhs = X.face(s, i)
                    if i in (j, j + 1):
                        rhs = ref
                    elif i < j:
                        rhs = X.degeneracy(X.face(ref, i), j - 1)
                    else:
                        rhs = X.degeneracy(X.face(ref, i - 1), j)
                    if lhs != rhs:
                        violations.append(f"d_{i} s_{j} on {ref}")
                for i in range(j + 1):
                    lhs = X.degeneracy(X.degeneracy(ref, j), i)
                    rhs = X.degeneracy(X.degeneracy(ref, i), j + 1)
                    if lhs != rhs:
                        violations.append(f"s_{i} s_{j} on {ref}")
            if n < 2:
                continue
            for j in range(n + 1):
                for i in range(j):
                    lhs = X.face(X.face(ref, j), i)
                    rhs = X.face(X.face(ref, i), j - 1)
                    if lhs != rhs:
                        violations.append(f"d_{i} d_{j} on {ref}")
    return violations


def from_chains(chains):
    """Ordered simplicial complex spanned by vertex chains.

    Every non-empty subsequence of a chain becomes a non-degenerate simplex
    whose id is the vertex tuple itself; vertices have 1-tuples as ids.

    Parameters
    ----------
    chains : iterable of sequence
        Vertex sequences listed in the order of the complex.

    Returns
    -------
    X : SimplicialSet

    Examples
    --------
    >>> from stratkit.simplicial import from_chains
    >>> from_chains([(0, 1, 2)]).counts()
    [3, 3, 1]
    """
    discovery = {}
    found = set()
    for chain in chains:
        chain = tuple(chain)
        for v in chain:
            discovery.setdefault(v, len(discovery))
        for size in range(1, len(chain) + 1):
            for sub in combinations(chain, size):
                found.add(sub)
    ordered = sorted(found, key=lambda c: (len(c), [discovery[v] for v in c]))
    simplices = [
        (
            c,
            len(c) - 1,
            tuple(SimplexRef(c[:i] + c[i + 1 :]) for i in range(len(c)))
            if len(c) > 1
            else (),
        )
        for c in ordered
    ]
    return SimplicialSet(simplices, validate=False)


def chain_ref(X, sequence):
    """Ref of a weakly repeating vertex sequence in an ordered complex.

    Consecutive repeats become degeneracies; ``None`` is returned when the
    deduplicated sequence is not a simplex of ``X``.
    """
    distinct = []
    eta = []
    for v in sequence:
        if not distinct or distinct[-1] != v:
            distinct.append(v)
        eta.append(len(distinct) - 1)
    distinct = tuple(distinct)
    if distinct not in X:
        return None
    return SimplexRef(distinct, word_from_surjection(eta))


def sub_simplicial_set(X, ids):
    """The sub-simplicial set on the given non-degenerate ids.

    Raises
    ------
    MalformedInputError
        If the ids are not closed under faces.
    """
    keep = set(ids)
    simplices = []
    for x in X:
        if x in keep:
            for face in X.faces(x):
                if face.nd_id not in keep:
                    raise MalformedInputError(
                        f"Face {face.nd_id!r} of {x!r} is missing from the subset."
                    )
            simplices.append((x, X.dim(x), X.faces(x)))
    return SimplicialSet(simplices, validate=False)


def face_closure(X, ids):
    """Ids of all non-degenerate simplices that are iterated faces of ``ids``."""
    closure = set()
    stack = list(ids)
    while stack:
        x = stack.pop()
        if x in closure:
            continue
        closure.add(x)
        stack.extend(face.nd_id for face in X.faces(x))
    return closure


def disjoint_union(X, Y):
    """Coproduct with ids tagged ``(0, x)`` and ``(1, y)``."""
    simplices = []
    for tag, Z in enumerate((X, Y)):
        for z in Z:
            simplices.append(
                (
                    (tag, z),
                    Z.dim(z),
                    tuple(SimplexRef((tag, f.nd_id), f.word) for f in Z.faces(z)),
                )
            )
    return SimplicialSet(simplices, validate=False)


def standard_simplex_set(n):
    """The unstratified simplex ``Delta^n`` as an ordered complex on ``0..n``."""
    return from_chains([tuple(range(n + 1))])


def euler_characteristic(X):
    """Alternating sum of the non-degenerate simplex counts."""
    return sum((-1) ** d * c for d, c in enumerate(X.counts()))
