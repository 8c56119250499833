"""Isomorphism testing of finite simplicial sets."""

# License: MIT

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher


def face_graph(X, label=None):
    """Directed graph of non-degenerate simplices and their faces.

    Each node carries its dimension (and ``label(x)`` when given); the edge
    ``x -> y`` carries the sorted face indices and degeneracy words under
    which ``y`` appears as a face of ``x``.
    """
    graph = nx.DiGraph()
    for x in X:
        key = (X.dim(x), label(x) if label is not None else None)
        graph.add_node(x, key=key, hash_key=repr(key))
    for x in X:
        faces = {}
        for i, face in enumerate(X.faces(x)):
            faces.setdefault(face.nd_id, []).append((i, tuple(face.word)))
        for y, entries in faces.items():
            key = tuple(sorted(entries))
            graph.add_edge(x, y, key=key, hash_key=repr(key))
    return graph


def _match(a, b):
    return a["key"] == b["key"]


def find_isomorphism(X, Y, x_label=None, y_label=None):
    """An isomorphism ``X -> Y`` as a dict of non-degenerate ids, or ``None``.

    Weisfeiler-Lehman hashes of the face graphs rule out most non-isomorphic
    pairs before the VF2 search runs.

    Parameters
    ----------
    X, Y : SimplicialSet

    x_label, y_label : callable, default=None
        Labels that the isomorphism must preserve (for example flags).
    """
    if X.counts() != Y.counts():
        return None
    gx = face_graph(X, x_label)
    gy = face_graph(Y, y_label)
    hash_x = nx.weisfeiler_lehman_graph_hash(
        gx, node_attr="hash_key", edge_attr="hash_key"
    )
    hash_y = nx.weisfeiler_lehman_graph_hash(
        gy, node_attr="hash_key", edge_attr="hash_key"
    )
    if hash_x != hash_y:
        return None
    matcher = DiGraphMatcher(gx, gy, node_match=_match, edge_match=_match)
    for mapping in matcher.isomorphisms_iter():
        return dict(mapping)
    return None


def is_isomorphic(X, Y, x_label=None, y_label=None):
    """Whether two finite simplicial sets are isomorphic.

    Examples
    --------
    >>> from stratkit.simplicial import from_chains, is_isomorphic
    >>> is_isomorphic(from_chains([(0, 1)]), from_chains([("a", "b")]))
    True
    >>> is_isomorphic(from_chains([(0, 1)]), from_chains([(0,), (1,)]))
    False
    """
    return find_isomorphism(X, Y, x_label, y_label) is not None
