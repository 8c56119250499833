"""JSON documents for posets, simplicial objects, maps, diagrams and reports."""

# License: MIT

import json
import logging
import sys

from ..diagrams import Diagram
from ..exceptions import MalformedInputError
from ..poset import Poset
from ..simplicial import SimplexRef
from ..simplicial import SimplicialMap
from ..simplicial import SimplicialSet
from ..stratified import StratifiedMap
from ..stratified import StratifiedSimplicialSet
from ..subdivision import Pairing
from ..vertical import LabelledSimplicialSet

logger = logging.getLogger(__name__)


def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInputError(f"Missing key {key!r} in the JSON document.")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise MalformedInputError(
            f"{key!r} has to be a {kind.__name__}. Got {type(value).__name__}."
        )
    return value


def _element(p):
    return p if isinstance(p, (int, str)) else str(p)


def _flag_key(I):
    return json.dumps([_element(p) for p in I], separators=(",", ":"))


def _parse_flag_key(text):
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{text!r} is not a flag.") from exc
    if not isinstance(entries, list):
        raise MalformedInputError(f"{text!r} is not a flag.")
    return tuple(entries)


def _names(X):
    """String names of the non-degenerate ids, kept when they already are."""
    if all(isinstance(x, str) for x in X):
        return {x: x for x in X}
    return {x: f"s{i}" for i, x in enumerate(X)}


def _ref(names, ref):
    return [names[ref[0]], list(ref[1])]


def _parse_ref(entry, ids):
    if not isinstance(entry, list) or len(entry) != 2:
        raise MalformedInputError(f"{entry!r} is not an [id, word] pair.")
    nd_id, word = entry
    if nd_id not in ids:
        raise MalformedInputError(f"Unknown simplex id {nd_id!r}.")
    return SimplexRef(nd_id, tuple(word))


def poset_to_json(P):
    """``{"elements": [...], "leq": [[a, b], ...]}`` with the cover relations."""
    return {
        "elements": [_element(p) for p in P.elements],
        "leq": [[_element(a), _element(b)] for a, b in P.covers()],
    }


def poset_from_json(doc):
    """Read a poset; ``leq`` lists generating pairs."""
    elements = _require(doc, "elements", list)
    leq = doc.get("leq", [])
    if any(not isinstance(pair, list) or len(pair) != 2 for pair in leq):
        raise MalformedInputError("'leq' has to list pairs of elements.")
    return Poset(elements, [tuple(pair) for pair in leq])


def simplicial_to_json(X, names=None, extra=None):
    """Serialize a simplicial set.

    Parameters
    ----------
    X : SimplicialSet

    names : dict, default=None
        Non-degenerate id to string. Ids are renamed ``s0, s1, ...`` in
        enumeration order unless they are all strings.

    extra : callable, default=None
        Returns a dict of additional fields for a non-degenerate id.

    Returns
    -------
    doc : dict
        ``{"simplices": [{"id": ..., "dim": ..., "faces": [[id, word], ...]}]}``
        and ``"truncation"`` for truncated mapping complexes.
    """
    names = _names(X) if names is None else names
    simplices = []
    for x in X:
        entry = {
            "id": names[x],
            "dim": X.dim(x),
            "faces": [_ref(names, face) for face in X.faces(x)],
        }
        if extra is not None:
            entry.update(extra(x))
        simplices.append(entry)
    doc = {"simplices": simplices}
    if getattr(X, "truncation", None) is not None:
        doc["truncation"] = X.truncation
    return doc


def _simplex_entries(doc):
    entries = _require(doc, "simplices", list)
    for entry in entries:
        for key in ("id", "dim"):
            _require(entry, key)
    return entries


def simplicial_from_json(doc):
    """Read a simplicial set; face data is validated.

    Examples
    --------
    >>> from stratkit.io import simplicial_from_json
    >>> X = simplicial_from_json({"simplices": [
    ...     {"id": "v", "dim": 0, "faces": []},
    ...     {"id": "e", "dim": 1, "faces": [["v", []], ["v", []]]},
    ... ]})
    >>> X.counts()
    [1, 1]
    """
    entries = _simplex_entries(doc)
    ids = {entry["id"] for entry in entries}
    simplices = [
        (
            entry["id"],
            entry["dim"],
            tuple(_parse_ref(face, ids) for face in entry.get("faces", [])),
        )
        for entry in entries
    ]
    return SimplicialSet(simplices)


def stratified_to_json(K, names=None):
    """Simplicial format with a ``"flag"`` per simplex and the poset."""
    doc = simplicial_to_json(
        K, names, extra=lambda x: {"flag": [_element(p) for p in K.flags[x]]}
    )
    doc["poset"] = poset_to_json(K.poset)
    return doc


def _poset_of(doc, poset):
    if poset is not None:
        return poset
    if "poset" not in doc:
        raise MalformedInputError("The document does not embed a poset; pass one.")
    return poset_from_json(doc["poset"])


def stratified_from_json(doc, poset=None):
    """Read a stratified simplicial set.

    Parameters
    ----------
    doc : dict

    poset : Poset, default=None
        Used when the document does not embed ``"poset"``.
    """
    P = _poset_of(doc, poset)
    X = simplicial_from_json(doc)
    flags = {
        entry["id"]: tuple(_require(entry, "flag", list))
        for entry in _simplex_entries(doc)
    }
    return StratifiedSimplicialSet(X, P, flags)


def labelled_to_json(S, names=None):
    """Simplicial format with a ``"label"`` per simplex and the poset."""
    doc = simplicial_to_json(
        S, names, extra=lambda x: {"label": [_element(p) for p in S.labels[x]]}
    )
    doc["poset"] = poset_to_json(S.poset)
    return doc


def labelled_from_json(doc, poset=None):
    """Read a labelled simplicial set."""
    P = _poset_of(doc, poset)
    X = simplicial_from_json(doc)
    labels = {
        entry["id"]: tuple(_require(entry, "label", list))
        for entry in _simplex_entries(doc)
    }
    return LabelledSimplicialSet(X, P, labels)


def _object_to_json(X):
    if isinstance(X, StratifiedSimplicialSet):
        return stratified_to_json(X)
    if isinstance(X, LabelledSimplicialSet):
        return labelled_to_json(X)
    return simplicial_to_json(X)


def map_to_json(f):
    """``{"source": ..., "target": ..., "images": {id: [id, word]}}``."""
    source_names, target_names = _names(f.source), _names(f.target)
    return {
        "source": _object_to_json(f.source),
        "target": _object_to_json(f.target),
        "images": {
            source_names[x]: _ref(target_names, f.images[x]) for x in f.source
        },
    }


def _images_from_json(doc, source, target):
    images = _require(doc, "images", dict)
    ids = set(target)
    missing = [x for x in source if x not in images]
    if missing:
        raise MalformedInputError(f"No image given for {missing[0]!r}.")
    return {x: _parse_ref(images[x], ids) for x in source}


def map_from_json(doc, poset=None):
    """Read a map; it is stratified when both ends carry flags.

    Returns
    -------
    f : StratifiedMap or SimplicialMap
        Validated against faces, and against flags when stratified.
    """
    source_doc = _require(doc, "source", dict)
    target_doc = _require(doc, "target", dict)
    entries = _simplex_entries(source_doc) + _simplex_entries(target_doc)
    if entries and all("flag" in entry for entry in entries):
        source = stratified_from_json(source_doc, poset)
        target = stratified_from_json(target_doc, source.poset)
        return StratifiedMap(source, target, _images_from_json(doc, source, target))
    source = simplicial_from_json(source_doc)
    target = simplicial_from_json(target_doc)
    return SimplicialMap(source, target, _images_from_json(doc, source, target))


def diagram_to_json(F):
    """``{"poset": ..., "values": {"[0,1]": ...}, "restrictions": {"[0]<=[0,1]": ...}}``.

    Restrictions carry only their ``"images"``; source and target are the
    values at the two flags.
    """
    names = {I: _names(F.values[I]) for I in F.flags}
    values = {
        _flag_key(I): simplicial_to_json(F.values[I], names[I]) for I in F.flags
    }
    restrictions = {}
    for I, I2 in F.inclusions():
        f = F.restrictions[(I, I2)]
        restrictions[f"{_flag_key(I)}<={_flag_key(I2)}"] = {
            "images": {names[I2][x]: _ref(names[I], f.images[x]) for x in f.source}
        }
    return {
        "poset": poset_to_json(F.poset),
        "values": values,
        "restrictions": restrictions,
    }


def diagram_from_json(doc, poset=None):
    """Read a diagram; missing values are empty."""
    P = _poset_of(doc, poset)
    values = {
        _parse_flag_key(key): simplicial_from_json(value)
        for key, value in _require(doc, "values", dict).items()
    }
    restrictions = {}
    for key, value in doc.get("restrictions", {}).items():
        if "<=" not in key:
            raise MalformedInputError(f"{key!r} is not an inclusion 'I<=I2'.")
        small, large = (_parse_flag_key(part) for part in key.split("<=", 1))
        for I in (small, large):
            if I not in values:
                raise MalformedInputError(f"No value given at {list(I)!r}.")
        source, target = values[large], values[small]
        restrictions[(small, large)] = SimplicialMap(
            source, target, _images_from_json(value, source, target)
        )
    return Diagram(P, values, restrictions)


def pairing_to_json(pairing):
    """A pairing with its ambient stratified object."""
    names = _names(pairing.space)

    def listed(ids):
        return [names[x] for x in pairing.space if x in ids]

    return {
        "space": stratified_to_json(pairing.space, names),
        "subcomplex": listed(pairing.subcomplex),
        "type_i": listed(pairing.type_i),
        "type_ii": listed(pairing.type_ii),
        "partner": {
            names[x]: names[pairing.partner[x]]
            for x in pairing.space
            if x in pairing.partner
        },
        "deferred": listed(pairing.deferred),
    }


def pairing_from_json(doc, poset=None):
    """Read a pairing written by :func:`pairing_to_json`."""
    K = stratified_from_json(_require(doc, "space", dict), poset)

    def ids(key):
        found = frozenset(doc.get(key, []))
        unknown = [x for x in found if x not in K]
        if unknown:
            raise MalformedInputError(f"Unknown simplex id {unknown[0]!r} in {key!r}.")
        return found

    partner = _require(doc, "partner", dict)
    return Pairing(
        K,
        ids("subcomplex"),
        ids("type_i"),
        ids("type_ii"),
        dict(partner),
        ids("deferred"),
    )


def homology_to_json(report):
    return {
        "betti": list(report.betti),
        "torsion": [list(t) for t in report.torsion],
        "valid_up_to": report.valid_up_to,
    }


def probe_report_to_json(report):
    """Verdict, certificate and per-flag comparisons of a probe."""
    return {
        "mode": report.mode,
        "max_deg": report.max_deg,
        "truncation": report.truncation,
        "verdict": report.verdict,
        "certificate": None
        if report.certificate is None
        else [_element(p) for p in report.certificate],
        "levels": [
            {
                "flag": [_element(p) for p in level.flag],
                "pi0_bijective": level.pi0_bijective,
                "homology_isomorphic": level.homology_isomorphic,
                "passed": level.passed,
            }
            for level in report.levels
        ],
    }


def read_json(path):
    """Load a JSON document from a path, ``-`` meaning standard input."""
    try:
        if str(path) == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except UnicodeDecodeError as exc:
        raise MalformedInputError(f"{path} is not UTF-8 text: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc
    except OSError as exc:
        raise MalformedInputError(f"Cannot read {path}: {exc}") from exc


def dumps(doc):
    """Deterministic text of a document."""
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
