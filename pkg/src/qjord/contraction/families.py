"""R_q matrices, closed forms and universal R_h for each contraction family.

Block matrices put the first (fundamental) factor outside: block (a, b)
is an operator on the second factor sitting at rows a·m.., cols b·m...
"""

from __future__ import annotations

import logging
from fractions import Fraction

from qjord.catalog.base import Representation, cartan_power, rational_value
from qjord.contraction.base import ContractionFamily, GaugeSpec, RMatrixResult
from qjord.core.errors import UnknownFamily, UnknownRep
from qjord.core.matrix import (
    GradedMatrix,
    block_matrix,
    graded_kron,
    kron_parity,
    ordered_product,
    relabel_legs,
)
from qjord.core.scalars import ScalarContext
from qjord.core.series import nil_apply, nil_exp, nil_power, qexp_brace
from qjord.maps import get_map, twist_operator
from qjord.maps.base import jordan_pair, log_over_h
from qjord.maps.sl import cartan_sum, corner_element

log = logging.getLogger("qjord")

# inverse Cartan matrix of sl(3)
SL3_INVERSE_CARTAN = ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))

SL21_RQ_DIAGONAL = {0: 1, 4: 1, 8: -2}
SL21_RQ_LAMBDA = ((1, 3), (2, 6), (5, 7))


def _lam(ctx: ScalarContext):
    return ctx.q - ctx.q**-1


def _require(pair: tuple[str, str], first: tuple[str, ...], key: str) -> None:
    if pair[0] not in first:
        raise UnknownRep(f"{key}: the first factor must be {first[0]}, got {pair[0]}")


def exchange_exponentials(left, right, h, coefficient: int = 1) -> GradedMatrix:
    """exp(−h X ⊗ TH) · exp(c·h TH ⊗ X) on left ⊗ right.

    ``left`` and ``right`` map "X" and "TH" to matrices.
    """
    first = nil_exp(-graded_kron(left["X"], right["TH"]).scale(h))
    second = nil_exp(graded_kron(left["TH"], right["X"]).scale(h * coefficient))
    return first @ second


def q_corner(rep: Representation, n: int) -> GradedMatrix:
    """ê₁N as nested q-commutators ê_i x − q⁻¹ x ê_i."""
    qinv = rep.ctx.q**-1
    out = rep[f"e{n - 1}"]
    for i in range(n - 2, 0, -1):
        e = rep[f"e{i}"]
        out = e @ out - (out @ e).scale(qinv)
    return out


# ── sl(2) ─────────────────────────────────────────────────────


class SL2Contraction(ContractionFamily):
    @property
    def key(self) -> str:
        return "sl2"

    @property
    def algebra(self) -> str:
        return "sl2"

    @property
    def gauge_spec(self) -> GaugeSpec:
        return GaugeSpec("sl2", "J+", "qexp", 1, lambda rep: rep["e1"])

    @property
    def default_pair(self) -> tuple[str, str]:
        return ("spin-1/2", "spin-1/2")

    def contraction_pair(self, pair: tuple[str, str]) -> tuple[str, str]:
        _require(pair, ("spin-1/2", "fund"), self.key)
        return ("spin-1/2", pair[1])

    def rq(self, ctx: ScalarContext, pair: tuple[str, str], route: str = "") -> RMatrixResult:
        pair = self.contraction_pair(pair)
        first, second = self.q_reps(ctx, pair)
        q = ctx.q
        blocks = {
            (0, 0): cartan_power(second, {"h1": Fraction(1, 2)}),
            (0, 1): second["f1"].scale(ctx.qpow(Fraction(1, 2)) * (ctx.one - q**-2)),
            (1, 1): cartan_power(second, {"h1": Fraction(-1, 2)}),
        }
        matrix = block_matrix(ctx, blocks, 2, second.parity, first.parity)
        return RMatrixResult(matrix, self.key, pair, "rq")

    def closed(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        pair = self.contraction_pair(pair)
        first, second = self.classical_reps(ctx, pair)
        d = get_map("slN:2").apply(second)
        h = ctx.h
        t, tinv = d["T"], d["Tinv"]
        blocks = {
            (0, 0): t,
            (0, 1): -d["H"].scale(h) + (t - tinv).scale(h / 2),
            (1, 1): tinv,
        }
        matrix = block_matrix(ctx, blocks, 2, second.parity, first.parity)
        return RMatrixResult(matrix, self.key, pair, "closed_form")

    def universal(
        self, ctx: ScalarContext, pair: tuple[str, str], variant: str = "",
    ) -> RMatrixResult:
        sets = [get_map("slN:2").apply(r) for r in self.classical_reps(ctx, pair)]
        legs = [{"X": d["X"], "TH": d["T"] @ d["H"]} for d in sets]
        matrix = exchange_exponentials(legs[0], legs[1], ctx.h)
        return RMatrixResult(matrix, self.key, pair, "universal")


# ── sl(N) ─────────────────────────────────────────────────────


class SLNContraction(ContractionFamily):
    """Universal R_h of U_h(sl(N)) built on the corner sl(2)."""

    VARIANTS = {"antisymmetric": 1, "printed": 2}

    def __init__(self, n: int):
        self.n = n

    @property
    def key(self) -> str:
        return f"sl{self.n}"

    @property
    def algebra(self) -> str:
        return f"sl{self.n}"

    def corner_legs(self, rep: Representation) -> dict[str, GradedMatrix]:
        h = rep.ctx.h
        t, _, root = jordan_pair(corner_element(rep, self.n).scale(h))
        return {"X": log_over_h(t), "TH": t @ root @ cartan_sum(rep, self.n)}

    def universal(
        self, ctx: ScalarContext, pair: tuple[str, str], variant: str = "",
    ) -> RMatrixResult:
        variant = variant or "antisymmetric"
        if variant not in self.VARIANTS:
            raise UnknownFamily(f"{self.key} universal variant {variant!r}")
        left, right = (self.corner_legs(r) for r in self.classical_reps(ctx, pair))
        matrix = exchange_exponentials(left, right, ctx.h, self.VARIANTS[variant])
        return RMatrixResult(matrix, self.key, pair, "universal", variant)


class SL3Contraction(SLNContraction):
    """sl(3): R_q by the universal formula or the fund ⊗ arbitrary display."""

    RQ_ROUTES = ("universal", "display", "display_printed")

    def __init__(self):
        super().__init__(3)

    @property
    def gauge_spec(self) -> GaugeSpec:
        return GaugeSpec("sl3", "e1 e2 - q^-1 e2 e1", "qexp", 1, lambda rep: q_corner(rep, 3))

    @property
    def contraction_route(self) -> str:
        return "universal"

    def contraction_pair(self, pair: tuple[str, str]) -> tuple[str, str]:
        if tuple(pair) != ("fund", "fund"):
            raise UnknownRep(f"sl3 contraction is available for fund (x) fund, got {pair}")
        return ("fund", "fund")

    def rq(self, ctx: ScalarContext, pair: tuple[str, str], route: str = "") -> RMatrixResult:
        route = route or "universal"
        if route not in self.RQ_ROUTES:
            raise UnknownFamily(f"sl3 R_q route {route!r} (known: {', '.join(self.RQ_ROUTES)})")
        first, second = self.q_reps(ctx, pair)
        if route == "universal":
            matrix = universal_sl3_rq(first, second)
        else:
            matrix = display_sl3_rq(first, second, printed=route == "display_printed")
        return RMatrixResult(matrix, self.key, tuple(pair), "rq", route)

    def closed(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        _require(pair, ("fund",), self.key)
        first, second = self.classical_reps(ctx, pair)
        h = ctx.h
        t, tinv, _ = jordan_pair(second["e3"].scale(h))
        half, inv_half = nil_power(t, Fraction(1, 2)), nil_power(t, Fraction(-1, 2))
        blocks = {
            (0, 0): t,
            (0, 1): (inv_half @ second["e2"]).scale(2 * h),
            (0, 2): -((t + tinv) @ second["h3"]).scale(h / 2) + (t - tinv).scale(h / 2),
            (1, 1): second.identity(),
            (1, 2): -(half @ second["e1"]).scale(2 * h),
            (2, 2): tinv,
        }
        matrix = block_matrix(ctx, blocks, 3, second.parity, first.parity)
        return RMatrixResult(matrix, self.key, tuple(pair), "closed_form")


def cartan_pairing(
    first: Representation, second: Representation, form, names: tuple[str, ...],
) -> GradedMatrix:
    """q^{Σ form_ij h_i ⊗ h_j} for diagonal Cartan generators on both legs."""
    blocks = {}
    for a in range(first.dim):
        weights = {
            names[j]: sum(
                (form[i][j] * rational_value(first[names[i]].entry(a, a))
                 for i in range(len(names))),
                Fraction(0),
            )
            for j in range(len(names))
        }
        blocks[(a, a)] = cartan_power(second, weights)
    return block_matrix(first.ctx, blocks, first.dim, second.parity, first.parity)


def _sl3_roots(rep: Representation) -> dict[str, GradedMatrix]:
    q = rep.ctx.q
    f1, f2 = rep["f1"], rep["f2"]
    return {
        "e1": rep["e1"], "e2": rep["e2"], "e3": q_corner(rep, 3),
        "f1": f1, "f2": f2, "f3": f2 @ f1 - (f1 @ f2).scale(q),
    }


_SL3_HALF_WEIGHTS = {
    "1": {"h1": Fraction(1, 2)},
    "2": {"h2": Fraction(1, 2)},
    "3": {"h1": Fraction(1, 2), "h2": Fraction(1, 2)},
}


def universal_sl3_rq(first: Representation, second: Representation) -> GradedMatrix:
    """q^{Σ (a⁻¹)_ij h_i ⊗ h_j} · exp_{q⁻²}(λ ê₂ …) · exp_{q⁻²}(λ ê₃ …) · exp_{q⁻²}(λ ê₁ …)."""
    ctx = first.ctx
    lam = _lam(ctx)
    r1, r2 = _sl3_roots(first), _sl3_roots(second)
    series = qexp_brace(-2)
    factors = [cartan_pairing(first, second, SL3_INVERSE_CARTAN, ("h1", "h2"))]
    for k in ("2", "3", "1"):
        up = _SL3_HALF_WEIGHTS[k]
        down = {n: -c for n, c in up.items()}
        arg = graded_kron(r1[f"e{k}"] @ cartan_power(first, up),
                          cartan_power(second, down) @ r2[f"f{k}"])
        factors.append(nil_apply(series, arg.scale(lam)))
    log.debug("sl3 universal R_q on %s (x) %s", first.selector, second.selector)
    return ordered_product(factors)


def display_sl3_rq(
    first: Representation, second: Representation, printed: bool = False,
) -> GradedMatrix:
    """The fund ⊗ arbitrary block form; ``printed`` keeps q^{−1/2} in front of Λ₁₃."""
    ctx = second.ctx
    lam = _lam(ctx)
    roots = _sl3_roots(second)

    def power(**weights):
        return cartan_power(second, {k: Fraction(v) for k, v in weights.items()})

    c0 = power(h1=Fraction(2, 3), h2=Fraction(1, 3))
    c1 = power(h1=Fraction(-1, 3), h2=Fraction(1, 3))
    c2 = power(h1=Fraction(-1, 3), h2=Fraction(-2, 3))
    lead = ctx.qpow(Fraction(-1, 2)) * lam
    lam12 = (power(h1=Fraction(-1, 2)) @ roots["f1"]).scale(lead)
    lam23 = (power(h2=Fraction(-1, 2)) @ roots["f2"]).scale(lead)
    sign13 = Fraction(-1, 2) if printed else Fraction(1, 2)
    lam13 = (roots["f3"] @ power(h1=Fraction(-1, 2), h2=Fraction(-1, 2))).scale(
        ctx.qpow(sign13) * lam
    )
    blocks = {
        (0, 0): c0, (0, 1): c0 @ lam12, (0, 2): c0 @ lam13,
        (1, 1): c1, (1, 2): c1 @ lam23,
        (2, 2): c2,
    }
    return block_matrix(ctx, blocks, 3, second.parity, first.parity)


# ── osp(1|2) ──────────────────────────────────────────────────


class OSPContraction(ContractionFamily):
    """Super-Jordanian R_h by contraction; the Jordanian one by its twist."""

    @property
    def key(self) -> str:
        return "osp"

    @property
    def algebra(self) -> str:
        return "osp12"

    @property
    def gauge_spec(self) -> GaugeSpec:
        return GaugeSpec("osp", "e^2", "qexp_q2", 2, lambda rep: rep["e"] @ rep["e"])

    @property
    def default_pair(self) -> tuple[str, str]:
        return ("j=1/2", "j=1")

    def contraction_pair(self, pair: tuple[str, str]) -> tuple[str, str]:
        _require(pair, ("j=1/2", "fund"), self.key)
        return ("j=1/2", pair[1])

    def rq(self, ctx: ScalarContext, pair: tuple[str, str], route: str = "") -> RMatrixResult:
        pair = self.contraction_pair(pair)
        first, second = self.q_reps(ctx, pair)
        q = ctx.q
        omega = _lam(ctx)
        f, k = second["f"], second["K"]
        blocks = {
            (0, 0): second["t"],
            (0, 1): -(k @ f).scale(omega),
            (0, 2): -(f @ f).scale(omega * (ctx.one + q**-1)),
            (1, 1): second.identity(),
            (1, 2): (cartan_power(second, {"h0": Fraction(-1, 2)}) @ f).scale(
                omega * ctx.qpow(Fraction(-1, 2))
            ),
            (2, 2): cartan_power(second, {"h0": -1}),
        }
        matrix = block_matrix(ctx, blocks, 3, second.parity, first.parity)
        return RMatrixResult(matrix, self.key, pair, "rq")

    def closed(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        """R_h and its reading as the L operator, with L⁻¹."""
        pair = self.contraction_pair(pair)
        first, second = self.classical_reps(ctx, pair)
        d = get_map("osp_super").apply(second)
        h = ctx.h
        t, tinv, big_h, big_e = d["T"], d["Tinv"], d["H"], d["E"]
        half, inv_half = d["Thalf"], nil_power(t, Fraction(-1, 2))
        one = second.identity()
        spread = (t - tinv).scale(h / 4)
        l_blocks = {
            (0, 0): t,
            (0, 1): (half @ big_e).scale(h),
            (0, 2): -big_h.scale(h) + spread,
            (1, 1): one,
            (1, 2): -(inv_half @ big_e).scale(h),
            (2, 2): tinv,
        }
        inv_blocks = {
            (0, 0): tinv,
            (0, 1): -(inv_half @ big_e).scale(h),
            (0, 2): big_h.scale(h) + spread,
            (1, 1): one,
            (1, 2): (half @ big_e).scale(h),
            (2, 2): t,
        }
        lop = block_matrix(ctx, l_blocks, 3, second.parity, first.parity)
        linv = block_matrix(ctx, inv_blocks, 3, second.parity, first.parity)
        return RMatrixResult(lop, self.key, pair, "closed_form", extras={"L": lop, "Linv": linv})

    def universal(
        self, ctx: ScalarContext, pair: tuple[str, str], variant: str = "",
    ) -> RMatrixResult:
        """ℛ = G₂₁⁻¹ G for the minimal Jordanian twist."""
        variant = variant or "minimal"
        if variant != "minimal":
            raise UnknownFamily(f"osp universal R_h needs an exact twist, not {variant!r}")
        jmap = get_map("osp_jordanian")
        left, right = (jmap.apply(r, variant) for r in self.classical_reps(ctx, pair))
        big_g = twist_operator(variant, left, right).G
        swapped = twist_operator(variant, right, left).G
        g21 = relabel_legs(swapped, [left.parity, right.parity], [1, 0])
        matrix = g21.inverse() @ big_g
        return RMatrixResult(matrix, self.key, tuple(pair), "universal", f"jordanian:{variant}")


# ── sl(2|1) ───────────────────────────────────────────────────


class SL21Contraction(ContractionFamily):
    @property
    def key(self) -> str:
        return "sl21"

    @property
    def algebra(self) -> str:
        return "sl21"

    @property
    def gauge_spec(self) -> GaugeSpec:
        return GaugeSpec("sl21", "e1", "qexp", 1, lambda rep: rep["e1"])

    def contraction_pair(self, pair: tuple[str, str]) -> tuple[str, str]:
        if tuple(pair) != ("fund", "fund"):
            raise UnknownRep(f"sl21 R_q is tabulated for fund (x) fund only, got {pair}")
        return ("fund", "fund")

    def rq(self, ctx: ScalarContext, pair: tuple[str, str], route: str = "") -> RMatrixResult:
        pair = self.contraction_pair(pair)
        first, second = self.q_reps(ctx, pair)
        entries = {(i, i): ctx.one for i in range(9)}
        for i, power in SL21_RQ_DIAGONAL.items():
            entries[(i, i)] = ctx.q**power
        for i, j in SL21_RQ_LAMBDA:
            entries[(i, j)] = _lam(ctx)
        parity = kron_parity(first.parity, second.parity)
        matrix = GradedMatrix.from_entries(ctx, entries, parity)
        return RMatrixResult(matrix, self.key, pair, "rq")

    def closed(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        _require(pair, ("fund",), self.key)
        first, second = self.classical_reps(ctx, pair)
        d = get_map("sl21").apply(second)
        h = ctx.h
        t, tinv = d["T"], d["Tinv"]
        blocks = {
            (0, 0): t,
            (0, 1): -d["H1"].scale(h) + (t - tinv).scale(h / 2),
            (1, 1): tinv,
            (2, 2): second.identity(),
        }
        matrix = block_matrix(ctx, blocks, 3, second.parity, first.parity)
        return RMatrixResult(matrix, self.key, tuple(pair), "closed_form")

    def universal(
        self, ctx: ScalarContext, pair: tuple[str, str], variant: str = "",
    ) -> RMatrixResult:
        sl21 = get_map("sl21")
        legs = []
        for rep in self.classical_reps(ctx, pair):
            d = sl21.apply(rep)
            legs.append({"X": log_over_h(d["T"]), "TH": d["T"] @ d["H1"]})
        matrix = exchange_exponentials(legs[0], legs[1], ctx.h)
        return RMatrixResult(matrix, self.key, tuple(pair), "universal")
