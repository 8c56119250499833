"""Finite posets, flags and regular flags."""

# License: MIT

import logging
from itertools import combinations_with_replacement

import numpy as np

from ..exceptions import MalformedInputError

logger = logging.getLogger(__name__)


class Poset:
    """A finite partially ordered set.

    Elements keep the enumeration order in which they are given, so that every
    flag enumeration derived from the poset is deterministic.

    Parameters
    ----------
    elements : iterable of hashable
        The elements of the poset. Must be non-empty and free of duplicates.

    leq : iterable of pairs, default=()
        Generating relations ``(a, b)`` meaning ``a <= b``. The reflexive and
        transitive closure is taken at construction.

    Attributes
    ----------
    elements : tuple
        The elements in their fixed enumeration order.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> P = Poset([0, 1, 2], [(0, 1), (1, 2)])
    >>> P.leq(0, 2)
    True
    >>> P.lt(2, 2)
    False
    """

    def __init__(self, elements, leq=()):
        self.elements = tuple(elements)
        if not self.elements:
            raise MalformedInputError("A poset needs at least one element.")
        self._index = {p: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise MalformedInputError("Poset elements must be distinct.")

        n_elements = len(self.elements)
        order = np.eye(n_elements, dtype=bool)
        for a, b in leq:
            order[self.index(a), self.index(b)] = True
        # Warshall closure
        for k in range(n_elements):
            order |= order[:, k, None] & order[None, k, :]
        clash = order & order.T & ~np.eye(n_elements, dtype=bool)
        if clash.any():
            i, j = map(int, np.argwhere(clash)[0])
            raise MalformedInputError(
                "The relation is not antisymmetric: "
                f"{self.elements[i]!r} and {self.elements[j]!r} are mutually below "
                "each other."
            )
        self._order = order
        self._order.setflags(write=False)

    def __repr__(self):
        pairs = [
            (a, b)
            for a in self.elements
            for b in self.elements
            if a != b and self.leq(a, b)
        ]
        return f"Poset({list(self.elements)!r}, {pairs!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and np.array_equal(self._order, other._order)
        )

    def __hash__(self):
        return hash((self.elements, self._order.tobytes()))

    def __contains__(self, p):
        try:
            return p in self._index
        except TypeError:
            return False

    def __len__(self):
        return len(self.elements)

    def index(self, p):
        """Position of ``p`` in the fixed enumeration."""
        try:
            return self._index[p]
        except (KeyError, TypeError):
            raise MalformedInputError(f"{p!r} is not an element of the poset.")

    def leq(self, a, b):
        """Return whether ``a <= b``."""
        return bool(self._order[self.index(a), self.index(b)])

    def lt(self, a, b):
        """Return whether ``a < b``."""
        return a != b and self.leq(a, b)

    def covers(self):
        """Hasse diagram edges ``(a, b)`` with ``a < b`` and nothing in between."""
        strict = self._order & ~np.eye(len(self), dtype=bool)
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        hasse = strict & ~two_step
        return [
            (self.elements[i], self.elements[j]) for i, j in np.argwhere(hasse)
        ]

    def longest_chain(self):
        """Number of elements of a longest strictly increasing chain."""
        return max(len(flag) for flag in regular_flags(self))

    def is_flag(self, entries):
        """Return whether ``entries`` is a non-empty weakly increasing sequence."""
        entries = tuple(entries)
        if not entries or any(p not in self for p in entries):
            return False
        return all(self.leq(a, b) for a, b in zip(entries, entries[1:]))

    def is_regular_flag(self, entries):
        """Return whether ``entries`` is a non-empty strictly increasing sequence."""
        entries = tuple(entries)
        return self.is_flag(entries) and all(
            a != b for a, b in zip(entries, entries[1:])
        )

    def check_flag(self, entries):
        """Validate a flag and return it as a tuple."""
        entries = tuple(entries)
        if not self.is_flag(entries):
            raise MalformedInputError(
                f"{list(entries)!r} is not a flag of the poset {self!r}."
            )
        return entries

    def check_regular_flag(self, entries):
        """Validate a regular flag and return it as a tuple."""
        entries = self.check_flag(entries)
        if not self.is_regular_flag(entries):
            raise MalformedInputError(f"{list(entries)!r} has repeated entries.")
        return entries

    def sort_key(self, flag):
        """Lexicographic key on element positions."""
        return tuple(self.index(p) for p in flag)


def underlying_regular(J):
    """Delete repeated entries of a flag.

    Parameters
    ----------
    J : sequence
        A flag, i.e. a weakly increasing sequence of poset elements.

    Returns
    -------
    I : tuple
        The strictly increasing sequence of the distinct entries of ``J``.

    Examples
    --------
    >>> from stratkit.poset import underlying_regular
    >>> underlying_regular((0, 0, 1))
    (0, 1)
    >>> underlying_regular((1, 1, 1))
    (1,)
    """
    regular = []
    for p in J:
        if not regular or regular[-1] != p:
            regular.append(p)
    return tuple(regular)


def regular_flags(P):
    """All strictly increasing chains of a poset.

    Parameters
    ----------
    P : Poset

    Returns
    -------
    flags : list of tuple
        Every regular flag exactly once, sorted lexicographically by the
        positions of their entries in ``P.elements``.

    Examples
    --------
    >>> from stratkit.poset import Poset, regular_flags
    >>> regular_flags(Poset([0, 1], [(0, 1)]))
    [(0,), (0, 1), (1,)]
    """
    flags = []

    def extend(chain):
        flags.append(tuple(chain))
        for p in P.elements:
            if P.lt(chain[-1], p):
                extend(chain + [p])

    for p in P.elements:
        extend([p])
    flags.sort(key=P.sort_key)
    return flags


def flags(P, max_len):
    """All flags (repeats allowed) of length at most ``max_len``.

    Returns
    -------
    flags : list of tuple
        Sorted by length, then lexicographically.
    """
    result = []
    for length in range(1, max_len + 1):
        for entries in combinations_with_replacement(P.elements, length):
            for candidate in _orderings(P, entries):
                result.append(candidate)
    result = sorted(set(result), key=lambda J: (len(J), P.sort_key(J)))
    return result


def _orderings(P, entries):
    # combinations_with_replacement follows the enumeration order, which need
    # not be a linear extension, so every weakly increasing arrangement is tried
    seen = set()

    def place(prefix, remaining):
        if not remaining:
            key = tuple(prefix)
            if key not in seen:
                seen.add(key)
                yield key
            return
        for i, p in enumerate(remaining):
            if not prefix or P.leq(prefix[-1], p):
                yield from place(prefix + [p], remaining[:i] + remaining[i + 1 :])

    yield from place([], list(entries))


def flag_subflag(I, I2):
    """Return whether the entries of ``I`` are entries of ``I2``.

    Examples
    --------
    >>> from stratkit.poset import flag_subflag
    >>> flag_subflag((0, 2), (0, 1, 2))
    True
    >>> flag_subflag((1,), (0,))
    False
    """
    return set(I) <= set(I2)
