"""Scalar tower Q ⊂ Q[h, 1/h] ⊂ Q(s)[h, 1/h] with q = s^d.

All scalars are elements of one sympy rational-function field.  In the
default (formal) mode the field is Q(s, h); with a rational ``h_value`` it
is Q(s) and h is a constant.  Fractions are kept gcd-reduced by sympy, so
equality of two scalars is a plain ``==``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

from sympy import QQ
from sympy.polys.fields import FracElement, field

from qjord.core.errors import (
    ContextMismatch,
    EvaluationError,
    HalfPowerUnrepresentable,
    PoleAtOne,
)

log = logging.getLogger("qjord")

Scalar = FracElement
Rational = Union[int, Fraction]
ScalarLike = Union[int, Fraction, FracElement]

# Kinds accepted by qnumber
QNUMBER_KINDS = (
    "bracket", "brace", "double_bracket", "bracket_fact", "brace_fact", "double_fact",
)


def to_qq(x: Rational):
    """Convert an int or Fraction into sympy's QQ."""
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def from_qq(c) -> Fraction:
    """Convert a QQ coefficient back into a Fraction."""
    return Fraction(int(c.numerator), int(c.denominator))


@dataclass(frozen=True)
class ScalarContext:
    """Parameters shared by every scalar of one computation.

    ``root_degree`` is d in q = s^d.  ``h_value`` of None keeps h formal.
    """

    root_degree: int = 6
    h_value: Fraction | None = None

    def __post_init__(self) -> None:
        if int(self.root_degree) < 1:
            raise ValueError(f"root_degree must be >= 1, got {self.root_degree}")
        object.__setattr__(self, "root_degree", int(self.root_degree))
        if self.h_value is not None:
            object.__setattr__(self, "h_value", Fraction(self.h_value))

    @property
    def formal(self) -> bool:
        return self.h_value is None

    @cached_property
    def _generators(self):
        if self.h_value is None:
            fld, s, h = field("s,h", QQ)
        else:
            fld, s = field("s", QQ)
            h = fld.ground_new(to_qq(self.h_value))
        return fld, s, h

    @property
    def field(self):
        return self._generators[0]

    @property
    def s(self) -> Scalar:
        return self._generators[1]

    @property
    def h(self) -> Scalar:
        return self._generators[2]

    @cached_property
    def domain(self):
        """The sympy domain wrapping ``field``, used by DomainMatrix."""
        return self.field.to_domain()

    @cached_property
    def q(self) -> Scalar:
        return self.s**self.root_degree

    @property
    def zero(self) -> Scalar:
        return self.field.zero

    @property
    def one(self) -> Scalar:
        return self.field.one

    def const(self, x: ScalarLike) -> Scalar:
        """Coerce an int, Fraction or scalar of this context into the field."""
        if isinstance(x, FracElement):
            if x.field != self.field:
                raise ContextMismatch(f"scalar {x} belongs to another context")
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            return self.field(x)
        if isinstance(x, Fraction):
            return self.field.ground_new(to_qq(x))
        raise TypeError(f"cannot use {type(x).__name__} as a scalar")

    def qpow(self, x: Rational) -> Scalar:
        """q^x for rational x, provided d·x is an integer."""
        exponent = Fraction(x) * self.root_degree
        if exponent.denominator != 1:
            raise HalfPowerUnrepresentable(
                f"q^{Fraction(x)} needs root_degree divisible by {Fraction(x).denominator}"
            )
        return self.s**int(exponent)

    def hpow(self, n: int) -> Scalar:
        return self.h**n


# ── q-numbers ─────────────────────────────────────────────────


def qnumber(kind: str, x: Rational, ctx: ScalarContext, base: int = 1) -> Scalar:
    """q-numbers and their factorials, with q optionally replaced by q^base.

    bracket [x] = (q^x − q^−x)/(q − q^−1); brace {x} = (1 − q^x)/(1 − q);
    double_bracket [[x]] = (q^x − (−1)^{2x} q^−x)/(q^{1/2} + q^{−1/2}).
    The ``*_fact`` kinds multiply k = 1..n of the matching kind.
    """
    if kind not in QNUMBER_KINDS:
        raise ValueError(f"unknown q-number kind {kind!r}")
    if kind.endswith("_fact"):
        n = Fraction(x)
        if n.denominator != 1 or n < 0:
            raise ValueError(f"{kind} needs a non-negative integer, got {x}")
        single = kind.replace("_fact", "")
        if single == "double":
            single = "double_bracket"
        result = ctx.one
        for k in range(1, int(n) + 1):
            result *= qnumber(single, k, ctx, base)
        return result

    x = Fraction(x)

    def qp(y: Fraction) -> Scalar:
        return ctx.qpow(y * base)

    if kind == "bracket":
        return (qp(x) - qp(-x)) / (qp(Fraction(1)) - qp(Fraction(-1)))
    if kind == "brace":
        return (ctx.one - qp(x)) / (ctx.one - qp(Fraction(1)))
    twice = 2 * x
    if twice.denominator != 1:
        raise ValueError(f"double_bracket needs 2x integral, got {x}")
    sign = -1 if int(twice) % 2 else 1
    half = Fraction(1, 2)
    return (qp(x) - sign * qp(-x)) / (qp(half) + qp(-half))


# ── Limits and substitutions ──────────────────────────────────


def _substitute(x: Scalar, gen: Scalar, value: Rational, what: str) -> Scalar:
    point = gen.to_poly()
    denom = x.denom.subs(point, to_qq(value))
    if not denom:
        raise PoleAtOne(f"{what}: denominator of {x} vanishes")
    numer = x.numer.subs(point, to_qq(value))
    return x.field.new(numer, denom)


def limit_q1(x: Scalar, ctx: ScalarContext) -> Scalar:
    """The q → 1 limit: s = 1 in the gcd-reduced fraction."""
    return _substitute(ctx.const(x), ctx.s, 1, "q -> 1 limit")


def at_h_zero(x: Scalar, ctx: ScalarContext) -> Scalar:
    """Evaluate at h = 0 (formal mode only)."""
    if not ctx.formal:
        raise EvaluationError("h = 0 evaluation needs a formal h")
    try:
        return _substitute(ctx.const(x), ctx.h, 0, "h -> 0")
    except PoleAtOne as exc:
        raise EvaluationError(str(exc)) from exc


def is_s_free(x: Scalar) -> bool:
    """True when x does not depend on s (q-independent)."""
    return all(m[0] == 0 for m in x.numer.monoms()) and all(
        m[0] == 0 for m in x.denom.monoms()
    )


def _split(monom: tuple[int, ...], formal: bool) -> tuple[int, int]:
    return monom[0], (monom[1] if formal else 0)


def laurent_terms(x: Scalar, ctx: ScalarContext) -> dict[int, Fraction] | None:
    """x as {h-exponent: coefficient} when x is an s-free Laurent polynomial in h."""
    if not is_s_free(x):
        return None
    den_terms = x.denom.terms()
    if len(den_terms) != 1:
        return None
    (dmonom, dcoeff), = den_terms
    _, dh = _split(dmonom, ctx.formal)
    dc = from_qq(dcoeff)
    out: dict[int, Fraction] = {}
    for monom, coeff in x.numer.terms():
        _, eh = _split(monom, ctx.formal)
        out[eh - dh] = from_qq(coeff) / dc
    return out


# ── Canonical strings ─────────────────────────────────────────


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_str(c: Fraction, mono: str) -> str:
    if not mono:
        return _coeff_str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_coeff_str(c)}*{mono}"


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _poly_str(poly, ctx: ScalarContext) -> str:
    rows = []
    for monom, coeff in poly.terms():
        es, eh = _split(monom, ctx.formal)
        mono = "*".join(p for p in (_power("s", es), _power("h", eh)) if p)
        rows.append(((eh, es), _term_str(from_qq(coeff), mono)))
    rows.sort(key=lambda r: r[0], reverse=True)
    return _join([r[1] for r in rows])


def format_scalar(x: Scalar, ctx: ScalarContext) -> str:
    """Canonical text: terms by descending h-degree, then descending s-degree.

    s-free Laurent polynomials print as ``-1/2*h^2 + h``; anything else as
    ``(numerator)/(denominator)``.
    """
    x = ctx.const(x)
    terms = laurent_terms(x, ctx)
    if terms is not None:
        ordered = sorted(terms.items(), reverse=True)
        return _join([_term_str(c, _power("h", e)) for e, c in ordered if c])
    numer = _poly_str(x.numer, ctx)
    if x.denom == 1:
        return numer
    return f"({numer})/({_poly_str(x.denom, ctx)})"
