"""Mapping functions of the osp(1|2) Jordanian maps as truncated one-variable series.

Direct maps take a choice of φ₁(b₊) and derive the rest:

    φ₂ = sqrt(1 + h² b₊² φ₁⁴) φ₁ / (φ₁ + 2 b₊ φ₁′)     φ₃ = 1/φ₁
    u₁ = −h²/4 · b₊ φ₁³                               u₂ = (1 − sqrt(…) φ₂) / (2 b₊ φ₁)

Inverse maps take ψ₁(T) and derive, in the variable y = T − 1,

    ψ₂ = 2ψ₁ / ((T + T⁻¹) ψ₁ + 2 (T² − 1) ψ₁′)        ψ₃ = 1/ψ₁
    w₁ = h (T − T⁻¹) / (8 ψ₁)                          w₂ = h (T + T⁻¹ − 2ψ₂) / (2 (T − T⁻¹) ψ₁)
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from sympy.polys.ring_series import rs_diff, rs_mul, rs_nth_root, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from qjord.core.errors import EvaluationError
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import ScalarContext

log = logging.getLogger("qjord")


class SeriesRing:
    """Truncated power series in one variable over the scalar field."""

    def __init__(self, ctx: ScalarContext, prec: int):
        self.ctx = ctx
        self.prec = prec
        self.ring, self.x = ring("x", ctx.domain)

    def const(self, c) -> PolyElement:
        return self.ring(self.ctx.const(c))

    def mul(self, *factors: PolyElement) -> PolyElement:
        out = factors[0]
        for f in factors[1:]:
            out = rs_mul(out, f, self.x, self.prec)
        return out

    def inv(self, p: PolyElement) -> PolyElement:
        return rs_series_inversion(p, self.x, self.prec)

    def root(self, p: PolyElement, n: int) -> PolyElement:
        """p^(1/n) for p with constant term 1 (negative n gives p^(−1/|n|))."""
        return rs_nth_root(p, n, self.x, self.prec)

    def diff(self, p: PolyElement) -> PolyElement:
        return rs_diff(p, self.x)

    def shift_down(self, p: PolyElement) -> PolyElement:
        """p / x; p must vanish at x = 0."""
        terms = {}
        for (k,), c in p.terms():
            if k == 0:
                if c:
                    raise EvaluationError("series does not vanish at 0, cannot divide by x")
                continue
            terms[(k - 1,)] = c
        return self.ring(terms)

    def trunc(self, p: PolyElement) -> PolyElement:
        return rs_trunc(p, self.x, self.prec)

    def evaluate(self, p: PolyElement, m: GradedMatrix) -> GradedMatrix:
        """Σ c_k m^k."""
        ident = GradedMatrix.identity(m.ctx, m.parity)
        out = GradedMatrix.zeros(m.ctx, m.parity)
        power = ident
        degree = 0
        for (k,), c in sorted(p.terms()):
            while degree < k:
                power = power @ m
                degree += 1
            out = out + power.scale(self.ctx.const(c))
        return out


@dataclass(frozen=True)
class MapFunctionSet:
    """Named series in one variable (b₊ for direct maps, T − 1 for inverse maps)."""

    variable: str
    series: SeriesRing
    functions: dict[str, PolyElement] = field(default_factory=dict)

    def __getitem__(self, name: str) -> PolyElement:
        return self.functions[name]

    def evaluate(self, name: str, m: GradedMatrix) -> GradedMatrix:
        return self.series.evaluate(self.functions[name], m)

    def at_zero(self) -> dict[str, object]:
        """Constant terms, i.e. the value of each function at the origin."""
        return {name: p.coeff(1) for name, p in self.functions.items()}


PhiRule = Callable[[SeriesRing], PolyElement]


def phi_minimal(sr: SeriesRing) -> PolyElement:
    """φ₁ = (1 − 2h b₊)^(−1/4)."""
    h = sr.ctx.h
    return sr.root(sr.const(1) - sr.x * (2 * h), -4)


def phi_hdiag(sr: SeriesRing) -> PolyElement:
    """φ₁ = (1 − h² b₊²/4)^(−1/2)."""
    h = sr.ctx.h
    return sr.root(sr.const(1) - sr.x**2 * (h * h / 4), -2)


def psi_minimal(sr: SeriesRing) -> PolyElement:
    """ψ₁ = T^(−1/2)."""
    return sr.root(sr.const(1) + sr.x, -2)


def psi_hdiag(sr: SeriesRing) -> PolyElement:
    """ψ₁ = sech(hX/2) = 2 T^(1/2) / (T + 1)."""
    return sr.mul(sr.root(sr.const(1) + sr.x, 2), sr.inv(sr.const(2) + sr.x)) * 2


PHI_RULES: dict[str, PhiRule] = {"minimal": phi_minimal, "hdiag": phi_hdiag}
PSI_RULES: dict[str, PhiRule] = {"minimal": psi_minimal, "hdiag": psi_hdiag}


def direct_functions(ctx: ScalarContext, phi1: PhiRule, prec: int) -> MapFunctionSet:
    """φ₁, φ₂, φ₃, u₁, u₂ and T^{±1} as series in b₊ modulo b₊^prec."""
    sr = SeriesRing(ctx, prec + 2)
    h = ctx.h
    x = sr.x
    p1 = phi1(sr)
    p1_sq = sr.mul(p1, p1)
    root = sr.root(sr.const(1) + sr.mul(x * x, p1_sq, p1_sq) * (h * h), 2)
    p2 = sr.mul(root, p1, sr.inv(p1 + sr.mul(x, sr.diff(p1)) * 2))
    inv_p1 = sr.inv(p1)
    u1 = sr.mul(x, p1_sq, p1) * (-(h * h) / 4)
    u2 = sr.mul(sr.shift_down(sr.const(1) - sr.mul(root, p2)), sr.inv(p1 * 2))
    lead = sr.mul(x, p1_sq) * h
    funcs = {
        "phi1": p1, "phi2": p2, "phi3": inv_p1, "u1": u1, "u2": u2,
        "T": lead + root, "Tinv": root - lead, "root": root,
    }
    log.debug("direct map functions computed to order %d", prec)
    return MapFunctionSet("b+", sr, {k: sr.trunc(v) for k, v in funcs.items()})


def inverse_functions(ctx: ScalarContext, psi1: PhiRule, prec: int) -> MapFunctionSet:
    """ψ₁, ψ₂, ψ₃, w₁, w₂ as series in y = T − 1 modulo y^prec."""
    sr = SeriesRing(ctx, prec + 2)
    h = ctx.h
    y = sr.x
    t = sr.const(1) + y
    tinv = sr.inv(t)
    q1 = psi1(sr)
    denom = sr.mul(t + tinv, q1) + sr.mul(sr.mul(t, t) - 1, sr.diff(q1)) * 2
    q2 = sr.mul(q1, sr.inv(denom)) * 2
    w1 = sr.mul(t - tinv, sr.inv(q1 * 8)) * h
    gap = sr.shift_down(t + tinv - q2 * 2)
    spread = sr.shift_down(t - tinv)
    w2 = sr.mul(gap, sr.inv(sr.mul(spread, q1) * 2)) * h
    funcs = {"psi1": q1, "psi2": q2, "psi3": sr.inv(q1), "w1": w1, "w2": w2}
    return MapFunctionSet("T-1", sr, {k: sr.trunc(v) for k, v in funcs.items()})
