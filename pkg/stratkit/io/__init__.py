"""
The :mod:`stratkit.io` module includes the JSON documents read and written by
the command line: posets, simplicial, stratified and labelled simplicial
sets, maps, diagrams, pairings and reports.
"""

from ._json import diagram_from_json
from ._json import diagram_to_json
from ._json import dumps
from ._json import homology_to_json
from ._json import labelled_from_json
from ._json import labelled_to_json
from ._json import map_from_json
from ._json import map_to_json
from ._json import pairing_from_json
from ._json import pairing_to_json
from ._json import poset_from_json
from ._json import poset_to_json
from ._json import probe_report_to_json
from ._json import read_json
from ._json import simplicial_from_json
from ._json import simplicial_to_json
from ._json import stratified_from_json
from ._json import stratified_to_json

__all__ = [
    "diagram_from_json",
    "diagram_to_json",
    "dumps",
    "homology_to_json",
    "labelled_from_json",
    "labelled_to_json",
    "map_from_json",
    "map_to_json",
    "pairing_from_json",
    "pairing_to_json",
    "poset_from_json",
    "poset_to_json",
    "probe_report_to_json",
    "read_json",
    "simplicial_from_json",
    "simplicial_to_json",
    "stratified_from_json",
    "stratified_to_json",
]
