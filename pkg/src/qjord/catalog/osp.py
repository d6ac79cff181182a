"""(4j+1)-dimensional representations of U_q(osp(1|2)) and their q → 1 limits.

Basis |m⟩ for m = j, j−1/2, …, −j with parity r mod 2 (r the position).
ê|m⟩ = |m+1/2⟩ and

    f̂|m⟩ = −[j+m]·[[j−m+1/2]] |m−1/2⟩   when j−m is an integer,
    f̂|m⟩ =  [[j+m]]·[j−m+1/2] |m−1/2⟩   otherwise.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

from qjord.catalog.base import Representation, RepFamily
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import ScalarContext, qnumber

MAX_TWICE_J = 3


def osp_label(j: Fraction) -> str:
    return f"j={Fraction(j)}"


class OSPFamily(RepFamily):
    @property
    def algebra(self) -> str:
        return "osp12"

    @property
    def presentation(self) -> str:
        return "classical_osp12"

    @property
    def faithful_label(self) -> str:
        return "j=1/2"

    def labels(self) -> list[str]:
        return [osp_label(Fraction(k, 2)) for k in range(1, MAX_TWICE_J + 1)]

    def spin(self, label: str) -> Fraction:
        if not label.startswith("j="):
            raise self.unknown(label)
        try:
            j = Fraction(label[2:])
        except ValueError:
            raise self.unknown(label) from None
        if j <= 0 or (2 * j).denominator != 1 or 2 * j > MAX_TWICE_J:
            raise self.unknown(label)
        return j

    def quantum(self, label: str, ctx: ScalarContext) -> Representation:
        j = self.spin(label)
        dim = int(4 * j) + 1
        parity = tuple(r % 2 for r in range(dim))
        weights = [j - Fraction(r, 2) for r in range(dim)]
        f = {}
        for r, m in enumerate(weights[:-1]):
            if (j - m).denominator == 1:
                v = -qnumber("bracket", j + m, ctx) * qnumber(
                    "double_bracket", j - m + Fraction(1, 2), ctx
                )
            else:
                v = qnumber("double_bracket", j + m, ctx) * qnumber(
                    "bracket", j - m + Fraction(1, 2), ctx
                )
            f[(r + 1, r)] = v
        gens = {
            "e": GradedMatrix.from_entries(ctx, {(r - 1, r): 1 for r in range(1, dim)}, parity),
            "f": GradedMatrix.from_entries(ctx, f, parity),
            "h0": GradedMatrix.diagonal(ctx, [2 * m for m in weights], parity),
            "K": GradedMatrix.diagonal(ctx, [ctx.qpow(m) for m in weights], parity),
            "t": GradedMatrix.diagonal(ctx, [ctx.qpow(2 * m) for m in weights], parity),
        }
        return Representation(self.algebra, osp_label(j), ctx, parity, gens, deformed=True)

    def classical(self, label: str, ctx: ScalarContext) -> Representation:
        limit = self.quantum(label, ctx).at_q1()
        e, f = limit["e"], limit["f"]
        gens = {"h0": limit["h0"], "e": e, "f": f, "bp": e @ e, "bm": -(f @ f)}
        return replace(limit, generators=gens)
