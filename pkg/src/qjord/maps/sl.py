"""Jordanian generators of U_h(sl(N)) written in classical sl(N) generators.

The corner element e₁N = [e₁, [e₂, … [e_{N−2}, e_{N−1}]]] carries the
deformation: T^{±1} = ±h e₁N + sqrt(1 + h² e₁N²), and with
δ_i = δ_{i1} + δ_{i,N−1} and Σh = h₁ + … + h_{N−1}

    E_i = T^{δ_i/2} e_i
    F_i = T^{−δ_i/2} (f_i + h/2 · T [f_i, e₁N] Σh)
    H_i = h_i − δ_i h/2 · e₁N T⁻¹ Σh

For N = 2 the set also carries Ohn's generators H, X, Y and for N = 3
the corner triple E3, H3, F3.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from qjord.catalog.base import Representation
from qjord.core.errors import EvaluationError
from qjord.core.matrix import GradedMatrix, super_bracket
from qjord.core.series import nil_apply, nil_power
from qjord.dsl.builtins import delta
from qjord.maps.base import DeformationMap, DeformedGeneratorSet, jordan_pair, log_over_h, over_h

log = logging.getLogger("qjord")


def corner_element(rep: Representation, n: int) -> GradedMatrix:
    """e₁N as the nested commutator of the simple root generators."""
    out = rep[f"e{n - 1}"]
    for i in range(n - 2, 0, -1):
        out = super_bracket(rep[f"e{i}"], out)
    return out


def cartan_sum(rep: Representation, n: int) -> GradedMatrix:
    out = rep["h1"]
    for i in range(2, n):
        out = out + rep[f"h{i}"]
    return out


def ohn_extras(x: GradedMatrix, h0: GradedMatrix, f: GradedMatrix, t: GradedMatrix,
               root: GradedMatrix) -> tuple[dict[str, GradedMatrix], str]:
    """H, X, Y of the sl(2) corner spanned by (x = e, h0 = h, f).

    The sign in front of the h² correction of Y is the one that makes
    [X, Y] = H hold; the choice is returned as a note.
    """
    ctx = x.ctx
    h = ctx.h
    big_h = root @ h0
    big_x = over_h(nil_apply("arcsinh", x.scale(h)))
    correction = (x @ (h0 @ h0).plus_scalar(-1)).scale(h * h / 4)
    chosen = None
    for sign, y in (("-", f - correction), ("+", f + correction)):
        if super_bracket(big_x, y) == big_h:
            chosen = (sign, y)
            break
    if chosen is None:
        raise EvaluationError("neither sign of the h² correction gives [X, Y] = H")
    log.debug("Y map: picked %s sign for the h^2 correction", chosen[0])
    extras = {"H": big_h, "X": big_x, "Y": chosen[1], "T": t}
    return extras, f"Y = f {chosen[0]} (h^2/4) e (h0^2 - 1)"


class SLNMap(DeformationMap):
    """Rank-N Jordanian map for one fixed N."""

    def __init__(self, n: int):
        self.n = n

    @property
    def key(self) -> str:
        return f"slN:{self.n}"

    @property
    def algebra(self) -> str:
        return f"sl{self.n}"

    @property
    def presentation(self) -> str:
        return {2: "ohn_sl2", 3: "uh_sl3"}.get(self.n, f"uh_slN({self.n})")

    def apply(self, rep: Representation, variant: str = "default") -> DeformedGeneratorSet:
        self.check_source(rep)
        n = self.n
        ctx = rep.ctx
        h = ctx.h
        corner = corner_element(rep, n)
        t, tinv, root = jordan_pair(corner.scale(h))
        total = cartan_sum(rep, n)
        halves = {
            0: GradedMatrix.identity(ctx, rep.parity),
            1: nil_power(t, Fraction(1, 2)),
            2: t,
        }
        inv_halves = {0: halves[0], 1: nil_power(t, Fraction(-1, 2)), 2: tinv}
        gens: dict[str, GradedMatrix] = {"T": t, "Tinv": tinv}
        for i in range(1, n):
            d = delta(i, n)
            e, f, hi = rep[f"e{i}"], rep[f"f{i}"], rep[f"h{i}"]
            gens[f"E{i}"] = halves[d] @ e
            twisted = t @ super_bracket(f, corner) @ total
            gens[f"F{i}"] = inv_halves[d] @ (f + twisted.scale(h / 2))
            gens[f"H{i}"] = hi - (corner @ tinv @ total).scale(h * d / 2)
        notes: list[str] = []
        if n == 2:
            extras, note = ohn_extras(rep["e1"], rep["h1"], rep["f1"], t, root)
            gens.update(extras)
            notes.append(note)
        if n == 3:
            gens.update(corner_triple(rep, t, root))
            gens["Thalf"] = halves[1]
        log.debug("deformed %s by %s (corner nilpotent, T unipotent)", rep.selector, self.key)
        return DeformedGeneratorSet(rep.algebra, self.key, rep, gens, tuple(notes))


def corner_triple(rep: Representation, t: GradedMatrix, root: GradedMatrix) -> dict:
    """E3, H3, F3 of sl(3): an Ohn-type sl(2) on (e3, h3, f3)."""
    h = rep.ctx.h
    e3, h3, f3 = rep["e3"], rep["h3"], rep["f3"]
    correction = (e3 @ (h3 @ h3).plus_scalar(-1)).scale(h * h / 4)
    return {
        "E3": log_over_h(t),
        "H3": root @ h3,
        "F3": f3 - correction,
    }


def sl3_direct(rep: Representation) -> dict[str, GradedMatrix]:
    """The sl(3) generators from the square-root forms, without the rank-N machinery.

    T^{±1/2} are taken as sqrt(±h e3 + sqrt(1 + h² e3²)) and
    H1, H2 as T⁻¹(sqrt(1 + h² e3²) h_i ± h/2 · e3 (h1 − h2)).
    """
    h = rep.ctx.h
    e3, h1, h2, h3 = rep["e3"], rep["h1"], rep["h2"], rep["h3"]
    t, tinv, root = jordan_pair(e3.scale(h))
    half = nil_power(t, Fraction(1, 2))
    inv_half = nil_power(tinv, Fraction(1, 2))
    skew = (e3 @ (h1 - h2)).scale(h / 2)
    return {
        "T": t,
        "E1": half @ rep["e1"],
        "E2": half @ rep["e2"],
        "F1": inv_half @ rep["f1"] + (half @ rep["e2"] @ h3).scale(h / 2),
        "F2": inv_half @ rep["f2"] - (half @ rep["e1"] @ h3).scale(h / 2),
        "H1": tinv @ (root @ h1 + skew),
        "H2": tinv @ (root @ h2 - skew),
    }
