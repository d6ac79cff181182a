"""Terminating power series of nilpotent matrices."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from qjord.core.errors import NotNilpotent
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import Scalar, ScalarContext, qnumber

log = logging.getLogger("qjord")


@dataclass(frozen=True)
class SeriesDef:
    """A power series Σ c_k x^k given by its coefficient rule.

    ``shifted`` series take their argument as I + N and expand in N.
    """

    key: str
    coefficient: Callable[[int, ScalarContext], Scalar]
    shifted: bool = False

    def coefficients(self, n: int, ctx: ScalarContext) -> list[Scalar]:
        return [self.coefficient(k, ctx) for k in range(n)]


def binomial(alpha: Fraction | int, k: int) -> Fraction:
    """Generalised binomial coefficient (alpha choose k)."""
    alpha = Fraction(alpha)
    out = Fraction(1)
    for i in range(k):
        out *= alpha - i
    return out / factorial(k)


def _rational(rule: Callable[[int], Fraction]) -> Callable[[int, ScalarContext], Scalar]:
    return lambda k, ctx: ctx.const(rule(k))


def _arcsinh(k: int) -> Fraction:
    if k % 2 == 0:
        return Fraction(0)
    n = (k - 1) // 2
    return Fraction((-1) ** n * factorial(2 * n), 4**n * factorial(n) ** 2 * (2 * n + 1))


def power_series(alpha: Fraction | int) -> SeriesDef:
    """(1 + x)^alpha."""
    alpha = Fraction(alpha)
    return SeriesDef(f"pow({alpha})", _rational(lambda k: binomial(alpha, k)))


def qexp(base: int = 1) -> SeriesDef:
    """E_{q^b}(x) = Σ x^k / [k]_{q^b}!."""
    return SeriesDef(
        f"qexp(q^{base})", lambda k, ctx: ctx.one / qnumber("bracket_fact", k, ctx, base),
    )


def qexp_brace(base: int = 1) -> SeriesDef:
    """exp_{q^b}(x) = Σ x^k / {k}_{q^b}!."""
    return SeriesDef(
        f"qexp_brace(q^{base})", lambda k, ctx: ctx.one / qnumber("brace_fact", k, ctx, base),
    )


SERIES: dict[str, SeriesDef] = {
    "sqrt1p": SeriesDef("sqrt1p", _rational(lambda k: binomial(Fraction(1, 2), k))),
    "invsqrt1p": SeriesDef("invsqrt1p", _rational(lambda k: binomial(Fraction(-1, 2), k))),
    "neumann_inv": SeriesDef("neumann_inv", _rational(lambda k: Fraction((-1) ** k)), True),
    "exp": SeriesDef("exp", _rational(lambda k: Fraction(1, factorial(k)))),
    "log1p": SeriesDef(
        "log1p", _rational(lambda k: Fraction((-1) ** (k + 1), k) if k else Fraction(0)),
    ),
    "arcsinh": SeriesDef("arcsinh", _rational(_arcsinh)),
    "qexp": qexp(1),
    "qexp_q2": qexp(2),
    "qexp_qm2": qexp(-2),
    "qexp_brace": qexp_brace(1),
    "qexp_brace_qm2": qexp_brace(-2),
}


def nil_apply(series: SeriesDef | str, m: GradedMatrix) -> GradedMatrix:
    """Σ c_k X^k with X = m (or m − I for shifted series), cut at the nilpotency index."""
    if isinstance(series, str):
        series = SERIES[series]
    ctx = m.ctx
    x = m.plus_scalar(-1) if series.shifted else m
    ident = GradedMatrix.identity(ctx, m.parity)
    result = ident.scale(series.coefficient(0, ctx))
    power = ident
    for k in range(1, m.dim + 1):
        power = power @ x
        if power.is_zero:
            log.debug("series %s truncated at order %d (dim %d)", series.key, k, m.dim)
            return result
        c = series.coefficient(k, ctx)
        if c:
            result = result + power.scale(c)
    raise NotNilpotent(f"argument of {series.key} is not nilpotent (dim {m.dim})")


def nil_exp(m: GradedMatrix) -> GradedMatrix:
    return nil_apply(SERIES["exp"], m)


def nil_log(m: GradedMatrix) -> GradedMatrix:
    """ln(m) for unipotent m."""
    return nil_apply(SERIES["log1p"], m.plus_scalar(-1))


def nil_power(m: GradedMatrix, alpha: Fraction | int) -> GradedMatrix:
    """m^alpha for unipotent m via the binomial series in m − I."""
    return nil_apply(power_series(alpha), m.plus_scalar(-1))


def jordan_t_coefficients(n: int, sign: int = 1) -> list[Fraction]:
    """Coefficients of T^{±1} = ±x + sqrt(1 + x²) in powers of x = hJ₊."""
    out = []
    for k in range(n):
        c = Fraction(sign) if k == 1 else Fraction(0)
        if k % 2 == 0:
            c += binomial(Fraction(1, 2), k // 2)
        out.append(c)
    return out
