"""Contraction registry — maps family keys to ready-to-use contraction families."""

from __future__ import annotations

import re

from qjord.contraction.base import (
    ROUTES,
    ContractionFamily,
    GaugeSpec,
    RMatrixResult,
    conjugate_and_limit,
    gauge,
    limit_matrix,
)
from qjord.contraction.families import (
    OSPContraction,
    SL2Contraction,
    SL3Contraction,
    SL21Contraction,
    SLNContraction,
    cartan_pairing,
    display_sl3_rq,
    exchange_exponentials,
    q_corner,
    universal_sl3_rq,
)
from qjord.contraction.talpha import t_alpha, t_alpha_conjugated, t_alpha_printed, t_operator
from qjord.core.errors import UnknownFamily
from qjord.core.scalars import ScalarContext
from qjord.settings import MAX_RANK

FAMILIES: dict[str, ContractionFamily] = {
    "sl2": SL2Contraction(),
    "sl3": SL3Contraction(),
    **{f"sl{n}": SLNContraction(n) for n in range(4, MAX_RANK + 1)},
    "osp": OSPContraction(),
    "sl21": SL21Contraction(),
}


def get_family(key: str) -> ContractionFamily:
    try:
        return FAMILIES[key]
    except KeyError:
        raise UnknownFamily(f"unknown family {key!r} (known: {', '.join(FAMILIES)})") from None


LABEL_PREFIX = {"sl2": "spin-", "osp12": "j="}


def _label(algebra: str, text: str) -> str:
    """Bare spins such as ``1/2`` get the catalog prefix of the algebra."""
    text = text.strip()
    prefix = LABEL_PREFIX.get(algebra)
    if prefix and re.fullmatch(r"\d+(/\d+)?", text):
        return prefix + text
    return text


def parse_pair(family: str, text: str | None) -> tuple[str, str]:
    """``1/2,1`` → ("j=1/2", "j=1") for osp; None gives the family default."""
    fam = get_family(family)
    if not text:
        return fam.default_pair
    first, sep, second = text.partition(",")
    if not sep:
        second = first
    return (_label(fam.algebra, first), _label(fam.algebra, second))


def rq_matrix(
    family: str, pair: tuple[str, str], ctx: ScalarContext, route: str = "",
) -> RMatrixResult:
    return get_family(family).rq(ctx, pair, route)


def contract(family: str, pair: tuple[str, str], ctx: ScalarContext) -> RMatrixResult:
    """lim (G⁻¹ ⊗ G⁻¹) R_q (G ⊗ G) for the family's gauge."""
    return get_family(family).contract(ctx, pair)


def closed_rh(family: str, pair: tuple[str, str], ctx: ScalarContext) -> RMatrixResult:
    return get_family(family).closed(ctx, pair)


def universal_rh(
    family: str, pair: tuple[str, str], ctx: ScalarContext, variant: str = "",
) -> RMatrixResult:
    return get_family(family).universal(ctx, pair, variant)


def r_matrix(
    family: str, pair: tuple[str, str], ctx: ScalarContext, route: str = "contracted",
    variant: str = "",
) -> RMatrixResult:
    """Dispatch on a route name, as used by the command line."""
    if route == "contracted":
        return contract(family, pair, ctx)
    if route == "closed_form":
        return closed_rh(family, pair, ctx)
    if route == "universal":
        return universal_rh(family, pair, ctx, variant)
    if route == "rq":
        return rq_matrix(family, pair, ctx, variant)
    raise UnknownFamily(f"unknown route {route!r} (known: {', '.join(ROUTES)})")


__all__ = [
    "FAMILIES",
    "ROUTES",
    "ContractionFamily",
    "GaugeSpec",
    "OSPContraction",
    "RMatrixResult",
    "SL21Contraction",
    "SL2Contraction",
    "SL3Contraction",
    "SLNContraction",
    "cartan_pairing",
    "closed_rh",
    "conjugate_and_limit",
    "contract",
    "display_sl3_rq",
    "exchange_exponentials",
    "gauge",
    "get_family",
    "limit_matrix",
    "parse_pair",
    "q_corner",
    "r_matrix",
    "rq_matrix",
    "t_alpha",
    "t_alpha_conjugated",
    "t_alpha_printed",
    "t_operator",
    "universal_rh",
]
