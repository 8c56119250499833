"""
The :mod:`stratkit.subdivision` module includes the stratified and naive
subdivisions, the last vertex maps, the truncated right adjoints ``Ex_P``
and ``Ex_P^naiv``, the maps ``j^k`` and ``r^k`` with their relations, and
pairings certifying strong anodyne extensions.
"""

from ._model import degeneracy_map
from ._model import delete_entry
from ._model import face_map
from ._model import factor_map_f
from ._model import g_map
from ._model import j_map
from ._model import j_tilde
from ._model import lift_naive_simplex
from ._model import lv_simplex_map
from ._model import moss_j_map
from ._model import moss_j_tilde
from ._model import moss_r
from ._model import moss_r_tilde
from ._model import naive_degeneracy_map
from ._model import naive_face_map
from ._model import naive_lv_simplex_map
from ._model import naive_model
from ._model import r_map
from ._model import r_tilde
from ._model import repeat_entry
from ._model import simplex_model
from ._model import simplex_vertices
from ._model import t_simplex_map

from ._sd_p import StratifiedSubdivision
from ._sd_p import iterated_sd_P
from ._sd_p import lv_P
from ._sd_p import naive_last_vertex
from ._sd_p import sd_P
from ._sd_p import sd_P_map
from ._sd_p import sd_P_naiv
from ._sd_p import t_map

from ._identities import IdentityCheck
from ._identities import verify_identities

from ._ex import ExComplex
from ._ex import ExFamily
from ._ex import characteristic_map
from ._ex import counit
from ._ex import ex_P
from ._ex import ex_P_naiv
from ._ex import iota
from ._ex import jhat
from ._ex import level
from ._ex import naive_inclusion

from ._pairing import Pairing
from ._pairing import PairingCheck
from ._pairing import build_pairing_ex
from ._pairing import build_pairing_ex_naiv
from ._pairing import check_pairing
from ._pairing import restrict_pairing

__all__ = [
    "ExComplex",
    "ExFamily",
    "IdentityCheck",
    "Pairing",
    "PairingCheck",
    "StratifiedSubdivision",
    "build_pairing_ex",
    "build_pairing_ex_naiv",
    "characteristic_map",
    "check_pairing",
    "counit",
    "degeneracy_map",
    "delete_entry",
    "ex_P",
    "ex_P_naiv",
    "face_map",
    "factor_map_f",
    "g_map",
    "iota",
    "iterated_sd_P",
    "j_map",
    "j_tilde",
    "jhat",
    "level",
    "lift_naive_simplex",
    "lv_P",
    "lv_simplex_map",
    "moss_j_map",
    "moss_j_tilde",
    "moss_r",
    "moss_r_tilde",
    "naive_degeneracy_map",
    "naive_face_map",
    "naive_inclusion",
    "naive_last_vertex",
    "naive_lv_simplex_map",
    "naive_model",
    "r_map",
    "r_tilde",
    "repeat_entry",
    "restrict_pairing",
    "sd_P",
    "sd_P_map",
    "sd_P_naiv",
    "simplex_model",
    "simplex_vertices",
    "t_map",
    "t_simplex_map",
    "verify_identities",
]
