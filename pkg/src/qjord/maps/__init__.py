"""Deformation-map registry — maps map keys to ready-to-use map objects."""

from __future__ import annotations

from qjord.catalog.base import Representation
from qjord.core.errors import UnknownRep
from qjord.maps.base import DeformationMap, DeformedGeneratorSet, jordan_pair, log_over_h
from qjord.maps.functions import (
    PHI_RULES,
    PSI_RULES,
    MapFunctionSet,
    SeriesRing,
    direct_functions,
    inverse_functions,
)
from qjord.maps.osp import OSPJordanianMap, OSPSuperMap, inverse_osp_jordanian
from qjord.maps.sl import SLNMap, corner_element, sl3_direct
from qjord.maps.sl21 import SL21Map
from qjord.maps.twist import (
    TwistOperator,
    disentanglement,
    h_truncate,
    hdiag_g_series,
    minimal_g_closed,
    twist_operator,
)
from qjord.settings import MAX_RANK

MAPS: dict[str, DeformationMap] = {
    **{f"slN:{n}": SLNMap(n) for n in range(2, MAX_RANK + 1)},
    "osp_super": OSPSuperMap(),
    "osp_jordanian": OSPJordanianMap(),
    "sl21": SL21Map(),
}


def get_map(key: str) -> DeformationMap:
    try:
        return MAPS[key]
    except KeyError:
        raise UnknownRep(f"unknown map {key!r} (known: {', '.join(MAPS)})") from None


def deform(key: str, rep: Representation, variant: str = "default") -> DeformedGeneratorSet:
    """Apply the map ``key`` to a classical representation."""
    return get_map(key).apply(rep, variant)


__all__ = [
    "MAPS",
    "PHI_RULES",
    "PSI_RULES",
    "DeformationMap",
    "DeformedGeneratorSet",
    "MapFunctionSet",
    "OSPJordanianMap",
    "OSPSuperMap",
    "SL21Map",
    "SLNMap",
    "SeriesRing",
    "TwistOperator",
    "corner_element",
    "deform",
    "direct_functions",
    "disentanglement",
    "get_map",
    "h_truncate",
    "hdiag_g_series",
    "inverse_functions",
    "inverse_osp_jordanian",
    "jordan_pair",
    "log_over_h",
    "minimal_g_closed",
    "sl3_direct",
    "twist_operator",
]
