"""Defining representation of sl(2|1) and U_q(sl(2|1)), basis parity (0, 0, 1)."""

from __future__ import annotations

from fractions import Fraction

from qjord.catalog.base import Representation, RepFamily
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import ScalarContext

PARITY = (0, 0, 1)

# (row, col) of the matrix unit carried by each root generator
_UNITS = {
    "e1": (0, 1), "e2": (1, 2), "e3": (0, 2),
    "f1": (1, 0), "f2": (2, 1), "f3": (2, 0),
}
_CARTAN = {
    "h1": (1, -1, 0),
    "h2": (0, 1, 1),
    "h3": (1, 0, 1),
}


class SL21Family(RepFamily):
    @property
    def algebra(self) -> str:
        return "sl21"

    @property
    def presentation(self) -> str:
        return "classical_sl21"

    def labels(self) -> list[str]:
        return ["fund"]

    def classical(self, label: str, ctx: ScalarContext) -> Representation:
        if label != "fund":
            raise self.unknown(label)
        gens = {name: GradedMatrix.diagonal(ctx, d, PARITY) for name, d in _CARTAN.items()}
        for name, (i, j) in _UNITS.items():
            gens[name] = GradedMatrix.unit(ctx, PARITY, i, j)
        return Representation(self.algebra, label, ctx, PARITY, gens)

    def quantum(self, label: str, ctx: ScalarContext) -> Representation:
        base = self.classical(label, ctx)
        gens = {k: v for k, v in base.generators.items() if k not in ("e3", "f3")}
        for i in (1, 2):
            half = [ctx.qpow(Fraction(x, 2)) for x in _CARTAN[f"h{i}"]]
            gens[f"K{i}"] = GradedMatrix.diagonal(ctx, half, PARITY)
        return Representation(self.algebra, label, ctx, PARITY, gens, deformed=True)
