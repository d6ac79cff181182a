"""sl(2) spin-j and sl(N) fundamental representations.

sl(2) uses the asymmetric integer basis |m⟩, m = j, j−1, …, −j:
J₊|m⟩ = |m+1⟩, J₋|m⟩ = (j+m)(j−m+1)|m−1⟩, J₀|m⟩ = 2m|m⟩, stored as
e1, f1, h1.  The q-deformed matrices replace the J₋ factors by q-numbers
and add K1 = q^{h1/2}.
"""

from __future__ import annotations

from fractions import Fraction

from qjord.catalog.base import Representation, RepFamily
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import ScalarContext, qnumber
from qjord.settings import MAX_TWICE_SPIN


def spin_of(label: str) -> Fraction:
    """``spin-3/2`` → 3/2; ``fund`` is spin 1/2."""
    if label == "fund":
        return Fraction(1, 2)
    if not label.startswith("spin-"):
        raise ValueError(label)
    return Fraction(label[len("spin-"):])


def spin_label(j: Fraction) -> str:
    return f"spin-{Fraction(j)}"


class SL2Family(RepFamily):
    """Spin-j representations of sl(2) and U_q(sl(2))."""

    @property
    def algebra(self) -> str:
        return "sl2"

    @property
    def presentation(self) -> str:
        return "classical_slN(2)"

    @property
    def faithful_label(self) -> str:
        return "spin-1/2"

    def labels(self) -> list[str]:
        return [spin_label(Fraction(k, 2)) for k in range(1, MAX_TWICE_SPIN + 1)]

    def _spin(self, label: str) -> Fraction:
        try:
            j = spin_of(label)
        except ValueError:
            raise self.unknown(label) from None
        if j <= 0 or (2 * j).denominator != 1 or 2 * j > MAX_TWICE_SPIN:
            raise self.unknown(label)
        return j

    def _matrices(self, label: str, ctx: ScalarContext, quantum: bool) -> Representation:
        j = self._spin(label)
        dim = int(2 * j) + 1
        parity = (0,) * dim
        weights = [j - r for r in range(dim)]
        e = {(r - 1, r): 1 for r in range(1, dim)}
        f = {}
        for r, m in enumerate(weights[:-1]):
            if quantum:
                f[(r + 1, r)] = qnumber("bracket", j + m, ctx) * qnumber("bracket", j - m + 1, ctx)
            else:
                f[(r + 1, r)] = (j + m) * (j - m + 1)
        gens = {
            "e1": GradedMatrix.from_entries(ctx, e, parity),
            "f1": GradedMatrix.from_entries(ctx, f, parity),
            "h1": GradedMatrix.diagonal(ctx, [2 * m for m in weights], parity),
        }
        if quantum:
            gens["K1"] = GradedMatrix.diagonal(ctx, [ctx.qpow(m) for m in weights], parity)
        return Representation(self.algebra, spin_label(j), ctx, parity, gens, quantum)

    def classical(self, label: str, ctx: ScalarContext) -> Representation:
        return self._matrices(label, ctx, quantum=False)

    def quantum(self, label: str, ctx: ScalarContext) -> Representation:
        return self._matrices(label, ctx, quantum=True)


class SLNFamily(RepFamily):
    """Defining representation of sl(N), N ≥ 3 (U_q(sl(N)) shares the matrices)."""

    def __init__(self, n: int):
        self.n = n

    @property
    def algebra(self) -> str:
        return f"sl{self.n}"

    @property
    def presentation(self) -> str:
        return f"classical_slN({self.n})"

    def labels(self) -> list[str]:
        return ["fund"]

    def _matrices(self, label: str, ctx: ScalarContext, quantum: bool) -> Representation:
        if label != "fund":
            raise self.unknown(label)
        n = self.n
        parity = (0,) * n
        gens: dict[str, GradedMatrix] = {}
        for i in range(1, n):
            gens[f"e{i}"] = GradedMatrix.unit(ctx, parity, i - 1, i)
            gens[f"f{i}"] = GradedMatrix.unit(ctx, parity, i, i - 1)
            gens[f"h{i}"] = GradedMatrix.from_entries(ctx, {(i - 1, i - 1): 1, (i, i): -1}, parity)
            if quantum:
                half = [Fraction(0)] * n
                half[i - 1], half[i] = Fraction(1, 2), Fraction(-1, 2)
                gens[f"K{i}"] = GradedMatrix.diagonal(ctx, [ctx.qpow(x) for x in half], parity)
        if n == 3:
            gens["e3"] = GradedMatrix.unit(ctx, parity, 0, 2)
            gens["f3"] = GradedMatrix.unit(ctx, parity, 2, 0)
            gens["h3"] = gens["h1"] + gens["h2"]
        return Representation(self.algebra, "fund", ctx, parity, gens, quantum)

    def classical(self, label: str, ctx: ScalarContext) -> Representation:
        return self._matrices(label, ctx, quantum=False)

    def quantum(self, label: str, ctx: ScalarContext) -> Representation:
        return self._matrices(label, ctx, quantum=True)
