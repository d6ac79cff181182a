"""Super-Jordanian and Jordanian generators of U_h(osp(1|2)).

Both maps are driven by the even generator b₊ = e², nilpotent in every
finite-dimensional representation, so all functions of it terminate.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from qjord.catalog.base import Representation
from qjord.core.errors import UnknownRep
from qjord.core.matrix import GradedMatrix
from qjord.core.series import nil_power
from qjord.maps.base import DeformationMap, DeformedGeneratorSet, jordan_pair, log_over_h
from qjord.maps.functions import PHI_RULES, PSI_RULES, direct_functions, inverse_functions

log = logging.getLogger("qjord")


def _index(m: GradedMatrix) -> int:
    return m.nilpotency_index() or m.dim + 1


class OSPSuperMap(DeformationMap):
    """E = e, T = T̃, H = H̃ and the corrected odd lowering generator F."""

    @property
    def key(self) -> str:
        return "osp_super"

    @property
    def algebra(self) -> str:
        return "osp12"

    @property
    def presentation(self) -> str:
        return "uh_osp12_super"

    def apply(self, rep: Representation, variant: str = "default") -> DeformedGeneratorSet:
        self.check_source(rep)
        ctx = rep.ctx
        h = ctx.h
        e, f, h0 = rep["e"], rep["f"], rep["h0"]
        t, tinv, root = jordan_pair((e @ e).scale(h))
        # (T + 1)⁻¹ = ((T + 1)/2)⁻¹ / 2 with (T + 1)/2 unipotent
        half_sum = t.plus_scalar(1).scale(Fraction(1, 2))
        ratio = t.plus_scalar(-1) @ half_sum.inverse().scale(Fraction(1, 2))
        big_f = f + (ratio @ e).scale(h / 4) - (ratio @ e @ h0).scale(h / 2)
        gens = {
            "E": e,
            "F": big_f,
            "H": root @ h0,
            "T": t,
            "Tinv": tinv,
            "Y": -(big_f @ big_f),
            "Thalf": nil_power(t, Fraction(1, 2)),
        }
        return DeformedGeneratorSet(rep.algebra, self.key, rep, gens, ("Y = -F^2",))


class OSPJordanianMap(DeformationMap):
    """Bold generators from a choice of φ₁ (``minimal`` or ``hdiag``)."""

    @property
    def key(self) -> str:
        return "osp_jordanian"

    @property
    def algebra(self) -> str:
        return "osp12"

    @property
    def presentation(self) -> str:
        return "uh_osp12_jordanian"

    @property
    def variants(self) -> tuple[str, ...]:
        return tuple(PHI_RULES)

    def apply(self, rep: Representation, variant: str = "minimal") -> DeformedGeneratorSet:
        self.check_source(rep)
        if variant == "default":
            variant = "minimal"
        if variant not in PHI_RULES:
            raise UnknownRep(f"osp_jordanian variant {variant!r} (known: {', '.join(PHI_RULES)})")
        ctx = rep.ctx
        h = ctx.h
        e, f, h0 = rep["e"], rep["f"], rep["h0"]
        bp = e @ e
        fs = direct_functions(ctx, PHI_RULES[variant], _index(bp))
        phi1, phi2, phi3 = (fs.evaluate(k, bp) for k in ("phi1", "phi2", "phi3"))
        u1, u2 = fs.evaluate("u1", bp), fs.evaluate("u2", bp)
        t, tinv = fs.evaluate("T", bp), fs.evaluate("Tinv", bp)
        big_e = phi1 @ e
        big_h = phi2 @ h0
        big_f = phi3 @ f + u1 @ e + u2 @ e @ h0
        spread = t - tinv
        tail = (
            (spread @ big_h @ big_h).scale(h / 8)
            + (spread @ big_e @ big_f).scale(h / 4)
            + ((t @ t) - (tinv @ tinv)) @ big_h.scale(h * 3 / 16)
            + spread.scale(h / 4)
            + (spread @ spread @ spread).scale(h * 9 / 128)
        )
        gens = {
            "E": big_e,
            "F": big_f,
            "H": big_h,
            "T": t,
            "Tinv": tinv,
            "X": log_over_h(t),
            "Y": tail - big_f @ big_f,
            "Thalf": nil_power(t, Fraction(1, 2)),
        }
        log.debug("osp_jordanian[%s] on %s: b+ nilpotency %d", variant, rep.selector,
                  _index(bp))
        note = "Y fixed by the F^2 relation"
        return DeformedGeneratorSet(rep.algebra, f"{self.key}:{variant}", rep, gens, (note,))


def inverse_osp_jordanian(deformed, variant: str = "minimal") -> Representation:
    """Classical (e, h0, f) recovered from bold generators.

    ``deformed`` is anything indexable by E, H, F, T with ``ctx`` and
    ``parity`` (a deformed set or the coproduct images on a tensor space).
    """
    if variant not in PSI_RULES:
        raise UnknownRep(f"osp_jordanian variant {variant!r} (known: {', '.join(PSI_RULES)})")
    ctx = deformed.ctx
    big_e, big_h, big_f, t = (deformed[k] for k in ("E", "H", "F", "T"))
    y = t.plus_scalar(-1)
    fs = inverse_functions(ctx, PSI_RULES[variant], _index(y))
    psi1, psi2, psi3 = (fs.evaluate(k, y) for k in ("psi1", "psi2", "psi3"))
    w1, w2 = fs.evaluate("w1", y), fs.evaluate("w2", y)
    e = psi1 @ big_e
    f = psi3 @ big_f + w1 @ big_e + w2 @ big_e @ big_h
    gens = {"e": e, "h0": psi2 @ big_h, "f": f, "bp": e @ e, "bm": -(f @ f)}
    algebra = getattr(deformed, "algebra", "osp12")
    return Representation(algebra, f"inverse:{variant}", ctx, deformed.parity, gens)
