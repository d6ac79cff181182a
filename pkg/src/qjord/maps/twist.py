"""Twisting elements of the Jordanian osp(1|2) maps and their antipode transforms.

The minimal map is twisted by G = exp(h TH ⊗ X) exactly.  The H-diagonal
map only has the twist as a series in h, available to second order.
Everything here works on matrices: ``left`` and ``right`` are anything
indexable by the bold generator names (a deformed set, or the coproduct
images on a tensor space for cocycle checks).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from qjord.core.errors import EvaluationError, NotNilpotent, OrderUnavailable, UnknownRep
from qjord.core.matrix import GradedMatrix, graded_kron
from qjord.core.scalars import laurent_terms
from qjord.core.series import nil_exp, nil_log
from qjord.dsl.builtins import builtin
from qjord.dsl.evaluate import Evaluator

log = logging.getLogger("qjord")

MAX_SERIES_ORDER = 2

# 𝒢 of the H-diagonal map: (coefficient of h^k, k, left word, right word)
HDIAG_TWIST_TERMS: tuple[tuple[Fraction, int, str, str], ...] = (
    (Fraction(1), 0, "", ""),
    (Fraction(1, 2), 1, "H", "X"),
    (Fraction(-1, 2), 1, "X", "H"),
    (Fraction(1, 8), 2, "HH", "XX"),
    (Fraction(-1, 8), 2, "HX", "XH"),
    (Fraction(-1, 8), 2, "XH", "HX"),
    (Fraction(1, 8), 2, "XX", "HH"),
    (Fraction(1, 8), 2, "H", "XX"),
    (Fraction(1, 8), 2, "XX", "H"),
)


@dataclass(frozen=True)
class TwistOperator:
    """G on a tensor space and g on the first factor.

    ``order`` is None for exact operators; otherwise both matrices are
    known modulo h^(order + 1).
    """

    variant: str
    G: GradedMatrix
    g: GradedMatrix
    order: int | None = None

    @property
    def exact(self) -> bool:
        return self.order is None


def h_truncate(m: GradedMatrix, order: int) -> GradedMatrix:
    """Drop every h^k with k > order from the entries of m."""
    ctx = m.ctx
    entries = {}
    for (i, j), v in m.items():
        terms = laurent_terms(v, ctx)
        if terms is None:
            raise EvaluationError(f"entry ({i}, {j}) is not a Laurent polynomial in h")
        kept = sum(
            (ctx.const(c) * ctx.hpow(k) for k, c in terms.items() if k <= order),
            ctx.zero,
        )
        if kept:
            entries[(i, j)] = kept
    return GradedMatrix.from_entries(ctx, entries, m.parity)


def antipode_images(source, names: tuple[str, ...]) -> dict[str, GradedMatrix]:
    """S(x) for each named Jordanian generator, read off the built-in antipodes."""
    p = builtin("uh_osp12_jordanian")
    ev = Evaluator(source.assignment(), p.parities)
    return {name: ev.matrix(p.antipodes[name]) for name in names}


def _word(source, word: str) -> GradedMatrix:
    out = GradedMatrix.identity(source.ctx, source.parity)
    for letter in word:
        out = out @ source[letter]
    return out


def _antipode_word(images: dict[str, GradedMatrix], ident: GradedMatrix, word: str):
    out = ident
    for letter in reversed(word):
        out = out @ images[letter]
    return out


def _mu_series(a: GradedMatrix, b: GradedMatrix, scale) -> GradedMatrix:
    """Σ_k scale^k / k! · a^k b^k, b nilpotent."""
    if b.nilpotency_index() is None:
        raise NotNilpotent(f"right factor of a multiplied series is not nilpotent (dim {b.dim})")
    out = GradedMatrix.identity(a.ctx, a.parity)
    pa, pb = out, out
    for k in range(1, b.dim + 1):
        pb = pb @ b
        if pb.is_zero:
            return out
        pa = pa @ a
        out = out + (pa @ pb).scale(a.ctx.const(scale) ** k / factorial(k))
    return out


def minimal_twist(left, right) -> TwistOperator:
    """G = exp(h TH ⊗ X) on left ⊗ right and g = μ(id ⊗ S)G on left."""
    h = left.ctx.h
    th = left["T"] @ left["H"]
    big_g = nil_exp(graded_kron(th, right["X"]).scale(h))
    s_x = antipode_images(left, ("X",))["X"]
    g = _mu_series(th, s_x, h)
    log.debug("minimal twist on %d x %d", len(left.parity), len(right.parity))
    return TwistOperator("minimal", big_g, g)


def hdiag_twist(left, right, order: int = MAX_SERIES_ORDER) -> TwistOperator:
    """𝒢 and g = μ(id ⊗ S)𝒢 of the H-diagonal map modulo h^(order + 1)."""
    if order > MAX_SERIES_ORDER or order < 0:
        raise OrderUnavailable(
            f"the H-diagonal twist is known to order {MAX_SERIES_ORDER}, asked for {order}"
        )
    ctx = left.ctx
    images = antipode_images(left, ("H", "X"))
    ident = GradedMatrix.identity(ctx, left.parity)
    big_g = GradedMatrix.zeros(ctx, graded_kron(ident, right["X"]).parity)
    g = GradedMatrix.zeros(ctx, left.parity)
    for c, k, lw, rw in HDIAG_TWIST_TERMS:
        if k > order:
            continue
        coeff = ctx.const(c) * ctx.hpow(k)
        big_g = big_g + graded_kron(_word(left, lw), _word(right, rw)).scale(coeff)
        g = g + (_word(left, lw) @ _antipode_word(images, ident, rw)).scale(coeff)
    return TwistOperator("hdiag", h_truncate(big_g, order), h_truncate(g, order), order)


def twist_operator(variant: str, left, right, order: int | None = None) -> TwistOperator:
    if variant == "minimal":
        return minimal_twist(left, right)
    if variant == "hdiag":
        return hdiag_twist(left, right, MAX_SERIES_ORDER if order is None else order)
    raise UnknownRep(f"no twist for osp_jordanian variant {variant!r}")


# ── Closed forms ──────────────────────────────────────────────


def minimal_g_closed(source) -> GradedMatrix:
    """g = exp(−½ TH (1 − T⁻²))."""
    t, big_h = source["T"], source["H"]
    tinv = t.inverse()
    return nil_exp(-(t @ big_h @ (-(tinv @ tinv)).plus_scalar(1)).scale(Fraction(1, 2)))


def hdiag_g_series(
    source, order: int = MAX_SERIES_ORDER, leading_one: bool = True,
) -> GradedMatrix:
    """g = 1 − hX + ½ h² X² modulo h^(order + 1); without ``leading_one`` the unit is dropped."""
    if order > MAX_SERIES_ORDER:
        raise OrderUnavailable(f"g is known to order {MAX_SERIES_ORDER}, asked for {order}")
    h = source.ctx.h
    x = source["X"]
    out = -x.scale(h) + (x @ x).scale(h * h / 2)
    if leading_one:
        out = out.plus_scalar(1)
    return h_truncate(out, order)


def disentanglement(rep) -> tuple[GradedMatrix, GradedMatrix]:
    """Both sides of μ[exp(½ h0 ⊗ ln(1 − 2h b₊))] = exp(−h h0 b₊) in a classical rep."""
    h = rep.ctx.h
    h0, bp = rep["h0"], rep["bp"]
    log_part = nil_log((-bp.scale(2 * h)).plus_scalar(1))
    lhs = _mu_series(h0, log_part, Fraction(1, 2))
    rhs = nil_exp(-(h0 @ bp).scale(h))
    return lhs, rhs
