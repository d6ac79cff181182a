"""Tests for the scalar field, graded matrices and terminating series."""

from fractions import Fraction

import pytest


def _make_ctx(**kwargs):
    from qjord.core.scalars import ScalarContext

    return ScalarContext(**kwargs)


def _make_nilpotent(ctx, dim=2, scale=None):
    """Unit superdiagonal on an even space, optionally scaled."""
    from qjord.core.matrix import GradedMatrix

    m = GradedMatrix.from_entries(ctx, {(i, i + 1): 1 for i in range(dim - 1)}, (0,) * dim)
    return m if scale is None else m.scale(scale)


# ── Scalar context ──────────────────────────────────────────


def test_q_is_a_power_of_the_root():
    ctx = _make_ctx()

    assert ctx.root_degree == 6
    assert ctx.q == ctx.s**6
    assert ctx.qpow(Fraction(1, 2)) == ctx.s**3
    assert ctx.qpow(-1) == ctx.s**-6


def test_half_power_needs_a_divisible_root_degree():
    from qjord.core.errors import HalfPowerUnrepresentable

    ctx = _make_ctx(root_degree=1)
    with pytest.raises(HalfPowerUnrepresentable):
        ctx.qpow(Fraction(1, 2))


def test_root_degree_must_be_positive():
    with pytest.raises(ValueError):
        _make_ctx(root_degree=0)


def test_specialised_h_is_a_rational_constant():
    ctx = _make_ctx(h_value=Fraction(1, 2))

    assert not ctx.formal
    assert ctx.h == ctx.const(Fraction(1, 2))


def test_const_rejects_foreign_scalars():
    from qjord.core.errors import ContextMismatch

    formal = _make_ctx()
    special = _make_ctx(h_value=1)
    with pytest.raises(ContextMismatch):
        special.const(formal.h)
    with pytest.raises(TypeError):
        formal.const(True)


# ── q-numbers ───────────────────────────────────────────────


def test_qnumber_closed_forms():
    from qjord.core.scalars import qnumber

    ctx = _make_ctx()
    q = ctx.q

    assert qnumber("bracket", 2, ctx) == q + q**-1
    assert qnumber("brace", 2, ctx) == ctx.one + q
    assert qnumber("brace", 2, ctx, base=2) == ctx.one + q**2
    assert qnumber("double_bracket", Fraction(1, 2), ctx) == ctx.one


def test_qnumbers_tend_to_integers():
    from qjord.core.scalars import limit_q1, qnumber

    ctx = _make_ctx()

    assert limit_q1(qnumber("bracket", 3, ctx), ctx) == ctx.const(3)
    assert limit_q1(qnumber("brace", 4, ctx), ctx) == ctx.const(4)
    assert limit_q1(qnumber("bracket_fact", 3, ctx), ctx) == ctx.const(6)
    assert limit_q1(qnumber("double_bracket", 1, ctx), ctx) == ctx.zero


def test_qnumber_rejects_unknown_kinds():
    from qjord.core.scalars import qnumber

    ctx = _make_ctx()
    with pytest.raises(ValueError):
        qnumber("curly", 2, ctx)
    with pytest.raises(ValueError):
        qnumber("bracket_fact", Fraction(1, 2), ctx)


# ── Limits ──────────────────────────────────────────────────


def test_limit_cancels_removable_poles():
    from qjord.core.scalars import limit_q1

    ctx = _make_ctx()
    ratio = (ctx.q**2 - ctx.one) / (ctx.q - ctx.one)

    assert limit_q1(ratio, ctx) == ctx.const(2)


def test_limit_reports_a_genuine_pole():
    from qjord.core.errors import PoleAtOne
    from qjord.core.scalars import limit_q1

    ctx = _make_ctx()
    with pytest.raises(PoleAtOne):
        limit_q1(ctx.h / (ctx.q - ctx.one), ctx)


def test_h_zero_needs_formal_h():
    from qjord.core.errors import EvaluationError
    from qjord.core.scalars import at_h_zero

    ctx = _make_ctx()
    assert at_h_zero(ctx.h + ctx.one, ctx) == ctx.one

    special = _make_ctx(h_value=2)
    with pytest.raises(EvaluationError):
        at_h_zero(special.h, special)


# ── Canonical strings ───────────────────────────────────────


def test_format_orders_terms_by_descending_h_power():
    from qjord.core.scalars import format_scalar

    ctx = _make_ctx()
    h = ctx.h

    assert format_scalar(h - h**2 * ctx.const(Fraction(1, 2)), ctx) == "-1/2*h^2 + h"
    assert format_scalar(h**2, ctx) == "h^2"
    assert format_scalar(-h, ctx) == "-h"
    assert format_scalar(ctx.zero, ctx) == "0"
    assert format_scalar(h**-1, ctx) == "h^-1"
    assert format_scalar(ctx.const(Fraction(-3, 4)), ctx) == "-3/4"


def test_format_keeps_surviving_q_dependence():
    from qjord.core.scalars import format_scalar, is_s_free

    ctx = _make_ctx()

    assert not is_s_free(ctx.q)
    assert is_s_free(ctx.h)
    assert format_scalar(ctx.q, ctx) == "s^6"
    assert format_scalar(ctx.one / (ctx.one + ctx.h), ctx) == "(1)/(h + 1)"


def test_format_with_specialised_h():
    from qjord.core.scalars import format_scalar

    ctx = _make_ctx(h_value=Fraction(1, 2))
    assert format_scalar(ctx.h, ctx) == "1/2"


def test_laurent_terms():
    from qjord.core.scalars import laurent_terms

    ctx = _make_ctx()

    assert laurent_terms(ctx.h**2 + ctx.const(3), ctx) == {2: Fraction(1), 0: Fraction(3)}
    assert laurent_terms(ctx.q, ctx) is None


# ── Graded matrices ─────────────────────────────────────────


def test_kron_parity_is_first_factor_major():
    from qjord.core.matrix import kron_parity

    assert kron_parity((0, 1), (0, 1)) == (0, 1, 1, 0)


def test_graded_kron_sign_on_odd_columns():
    from qjord.core.matrix import GradedMatrix, graded_kron

    ctx = _make_ctx()
    parity = (0, 1)
    a = GradedMatrix.identity(ctx, parity)
    b = GradedMatrix.unit(ctx, parity, 0, 1)
    out = graded_kron(a, b)

    assert out.entry(0, 1) == ctx.one
    assert out.entry(2, 3) == -ctx.one
    assert out.degree == 1


def test_degree_of_homogeneous_and_mixed_matrices():
    from qjord.core.matrix import GradedMatrix

    ctx = _make_ctx()
    parity = (0, 1)
    odd = GradedMatrix.unit(ctx, parity, 0, 1)
    even = GradedMatrix.identity(ctx, parity)

    assert odd.degree == 1
    assert even.degree == 0
    assert (odd + even).degree is None
    assert [d for d, _ in (odd + even).homogeneous_parts()] == [0, 1]


def test_super_bracket_of_odd_units_is_anticommutator():
    from qjord.core.matrix import GradedMatrix, super_bracket

    ctx = _make_ctx()
    parity = (0, 1)
    up = GradedMatrix.unit(ctx, parity, 0, 1)
    down = GradedMatrix.unit(ctx, parity, 1, 0)

    assert super_bracket(up, down).is_identity


def test_graded_flip_is_an_involution():
    from qjord.core.matrix import graded_flip

    ctx = _make_ctx()
    flip = graded_flip((0, 1), (0, 1), ctx)

    assert (flip @ flip).is_identity
    with pytest.raises(ValueError):
        graded_flip((0,), (0, 1), ctx)


def test_flip_swaps_even_factors():
    from qjord.core.matrix import GradedMatrix, graded_flip, graded_kron

    ctx = _make_ctx()
    parity = (0, 1)
    a = GradedMatrix.unit(ctx, parity, 0, 0)
    b = GradedMatrix.unit(ctx, parity, 1, 1, 3)
    flip = graded_flip(parity, parity, ctx)

    assert flip @ graded_kron(a, b) @ flip == graded_kron(b, a)


def test_unipotent_inverse_and_negative_powers():
    from qjord.core.matrix import GradedMatrix

    ctx = _make_ctx()
    n = _make_nilpotent(ctx, 3, ctx.h)
    m = n.plus_scalar(1)

    assert (m @ m.inverse()).is_identity
    assert m**-1 == m.inverse()
    assert m.inverse() == GradedMatrix.identity(ctx, m.parity) - n + n @ n


def test_nilpotency_index():
    ctx = _make_ctx()

    assert _make_nilpotent(ctx, 2).nilpotency_index() == 2
    assert _make_nilpotent(ctx, 4).nilpotency_index() == 4
    assert _make_nilpotent(ctx, 2).plus_scalar(1).nilpotency_index() is None


def test_matrices_are_immutable_and_checked():
    from qjord.core.matrix import GradedMatrix

    ctx = _make_ctx()
    m = GradedMatrix.identity(ctx, (0, 0))

    with pytest.raises(AttributeError):
        m.parity = (0, 1)
    with pytest.raises(ValueError):
        m + GradedMatrix.identity(ctx, (0, 1))


# ── Series ──────────────────────────────────────────────────


def test_jordan_coefficients():
    from qjord.core.series import jordan_t_coefficients

    half, eighth = Fraction(1, 2), Fraction(-1, 8)
    assert jordan_t_coefficients(6) == [1, 1, half, 0, eighth, 0]
    assert jordan_t_coefficients(6, -1) == [1, -1, half, 0, eighth, 0]


def test_binomial():
    from qjord.core.series import binomial

    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(5, 2) == 10
    assert binomial(-1, 3) == -1


def test_exp_and_log_invert_each_other():
    from qjord.core.series import nil_exp, nil_log

    ctx = _make_ctx()
    n = _make_nilpotent(ctx, 3, ctx.h)
    expected = n.plus_scalar(1) + (n @ n).scale(Fraction(1, 2))

    assert nil_exp(n) == expected
    assert nil_log(nil_exp(n)) == n


def test_binomial_power_of_unipotent():
    from qjord.core.series import nil_power

    ctx = _make_ctx()
    n = _make_nilpotent(ctx, 2, ctx.h)
    m = n.plus_scalar(1)

    assert nil_power(m, Fraction(1, 2)) == n.scale(Fraction(1, 2)).plus_scalar(1)
    assert nil_power(m, -1) == m.inverse()


def test_q_exponential_of_square_zero():
    from qjord.core.series import nil_apply

    ctx = _make_ctx()
    n = _make_nilpotent(ctx, 2, ctx.h)

    assert nil_apply("qexp", n) == n.plus_scalar(1)


def test_series_of_non_nilpotent_raises():
    from qjord.core.errors import NotNilpotent
    from qjord.core.matrix import GradedMatrix
    from qjord.core.series import nil_exp

    ctx = _make_ctx()
    with pytest.raises(NotNilpotent):
        nil_exp(GradedMatrix.identity(ctx, (0, 0)))
