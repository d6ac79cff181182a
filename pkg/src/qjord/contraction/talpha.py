"""The operators 𝒯_(α) = E_q⁻¹(ηJ₊) E_q(q^α ηJ₊) and their q → 1 limits.

In the limit 𝒯_(1) becomes the Jordanian T of the spin-j representation,
and 𝒯_(α) its α-th power.
"""

from __future__ import annotations

from fractions import Fraction

from qjord.catalog.base import Representation, cartan_power
from qjord.contraction.base import limit_matrix
from qjord.core.matrix import GradedMatrix
from qjord.core.series import nil_apply


def _eta(rep: Representation):
    ctx = rep.ctx
    return ctx.h / (ctx.q - ctx.one)


def t_operator(alpha: int, rep_q: Representation) -> GradedMatrix:
    """𝒯_(α) before the limit."""
    eta = _eta(rep_q)
    e = rep_q["e1"]
    gauge = nil_apply("qexp", e.scale(eta))
    shifted = nil_apply("qexp", e.scale(eta * rep_q.ctx.qpow(alpha)))
    return gauge.inverse() @ shifted


def t_alpha(alpha: int, rep_q: Representation) -> GradedMatrix:
    """lim_{q→1} 𝒯_(α)."""
    return limit_matrix(t_operator(alpha, rep_q))


def t_alpha_conjugated(alpha: int, rep_q: Representation) -> GradedMatrix:
    """lim E_q⁻¹(ηJ₊) q^{αJ₀/2} E_q(ηJ₊), which equals lim 𝒯_(α) q^{αJ₀/2}."""
    eta = _eta(rep_q)
    gauge = nil_apply("qexp", rep_q["e1"].scale(eta))
    kalpha = cartan_power(rep_q, {"h1": Fraction(alpha, 2)})
    return limit_matrix(gauge.inverse() @ kalpha @ gauge)


def t_alpha_printed(alpha: int, rep_q: Representation) -> GradedMatrix:
    """lim E_q⁻¹(ηJ₊) q^{αJ₀/2} E_q(q^α ηJ₊), with the shifted exponential on the right."""
    eta = _eta(rep_q)
    e = rep_q["e1"]
    gauge = nil_apply("qexp", e.scale(eta))
    shifted = nil_apply("qexp", e.scale(eta * rep_q.ctx.qpow(alpha)))
    kalpha = cartan_power(rep_q, {"h1": Fraction(alpha, 2)})
    return limit_matrix(gauge.inverse() @ kalpha @ shifted)
