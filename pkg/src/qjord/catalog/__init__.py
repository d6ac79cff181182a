"""Representation registry — maps algebra ids to ready-to-use families."""

from __future__ import annotations

from qjord.catalog.base import (
    Representation,
    RepFamily,
    adjoint_rep,
    cartan_power,
    tensor_rep,
)
from qjord.catalog.osp import OSPFamily
from qjord.catalog.sl import SL2Family, SLNFamily, spin_label, spin_of
from qjord.catalog.sl21 import SL21Family
from qjord.core.errors import UnknownRep
from qjord.core.scalars import ScalarContext
from qjord.dsl.builtins import builtin
from qjord.settings import MAX_RANK

FAMILIES: dict[str, RepFamily] = {
    "sl2": SL2Family(),
    **{f"sl{n}": SLNFamily(n) for n in range(3, MAX_RANK + 1)},
    "osp12": OSPFamily(),
    "sl21": SL21Family(),
}


def family(algebra: str) -> RepFamily:
    try:
        return FAMILIES[algebra]
    except KeyError:
        raise UnknownRep(f"unknown algebra {algebra!r} (known: {', '.join(FAMILIES)})") from None


def classical_rep(algebra: str, label: str, ctx: ScalarContext) -> Representation:
    fam = family(algebra)
    if label == "adjoint":
        faithful = fam.classical(fam.faithful_label, ctx)
        return adjoint_rep(builtin(fam.presentation), faithful)
    return fam.classical(label, ctx)


def q_rep(algebra: str, label: str, ctx: ScalarContext) -> Representation:
    fam = family(algebra)
    if label == "adjoint":
        raise UnknownRep(f"{algebra}:adjoint has no q-deformed counterpart in the catalog")
    return fam.quantum(label, ctx)


def parse_selector(selector: str) -> tuple[str, str]:
    """``sl2:spin-1`` → ("sl2", "spin-1")."""
    algebra, sep, label = selector.partition(":")
    if not sep or not label:
        raise UnknownRep(f"representation selector must be algebra:label, got {selector!r}")
    return algebra, label


def resolve(selector: str, ctx: ScalarContext, quantum: bool = False) -> Representation:
    algebra, label = parse_selector(selector)
    return (q_rep if quantum else classical_rep)(algebra, label, ctx)


def selectors() -> list[str]:
    """Every addressable representation selector."""
    return [
        f"{key}:{label}" for key, fam in FAMILIES.items() for label in [*fam.labels(), "adjoint"]
    ]


__all__ = [
    "FAMILIES",
    "OSPFamily",
    "RepFamily",
    "Representation",
    "SL21Family",
    "SL2Family",
    "SLNFamily",
    "adjoint_rep",
    "cartan_power",
    "classical_rep",
    "family",
    "parse_selector",
    "q_rep",
    "resolve",
    "selectors",
    "spin_label",
    "spin_of",
    "tensor_rep",
]
