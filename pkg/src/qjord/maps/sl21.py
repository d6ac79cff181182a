"""Jordanian U_h(sl(2|1)) generators from the classical sl(2|1) ones.

The deformation lives on the even sl(2) corner (e1, h1, f1); the odd root
vectors pick up h² corrections so that the deformed relation list closes.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from qjord.catalog.base import Representation
from qjord.core.series import nil_power
from qjord.maps.base import DeformationMap, DeformedGeneratorSet, jordan_pair

log = logging.getLogger("qjord")


class SL21Map(DeformationMap):
    @property
    def key(self) -> str:
        return "sl21"

    @property
    def algebra(self) -> str:
        return "sl21"

    @property
    def presentation(self) -> str:
        return "uh_sl21"

    def apply(self, rep: Representation, variant: str = "default") -> DeformedGeneratorSet:
        self.check_source(rep)
        h = rep.ctx.h
        e1, f1, h1 = rep["e1"], rep["f1"], rep["h1"]
        e2, f2, h2 = rep["e2"], rep["f2"], rep["h2"]
        e3, f3, h3 = rep["e3"], rep["f3"], rep["h3"]
        t, tinv, root = jordan_pair(e1.scale(h))
        shifted = h1.scale(2).plus_scalar(1)
        lift = (e1 @ e1 @ h1).scale(h * h / 2)
        gens = {
            "T": t,
            "Tinv": tinv,
            "Thalf": nil_power(t, Fraction(1, 2)),
            "H1": root @ h1,
            "F1": f1 - (e1 @ (h1 @ h1).plus_scalar(-1)).scale(h * h / 4),
            "H2": h2 - lift,
            "E2": e2 - (e1 @ e3 @ shifted).scale(h * h / 4),
            "F2": f2,
            "H3": h3 + lift,
            "E3": e3,
            "F3": f3 + (e1 @ f2 @ shifted).scale(h * h / 4),
        }
        log.debug("deformed %s by sl21 (e1 nilpotency %s)", rep.selector, e1.nilpotency_index())
        return DeformedGeneratorSet(rep.algebra, self.key, rep, gens)
