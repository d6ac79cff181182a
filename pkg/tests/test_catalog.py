"""Tests for the representation catalog."""

from fractions import Fraction

import pytest


def _make_ctx():
    from qjord.core.scalars import ScalarContext

    return ScalarContext()


# ── Selectors ───────────────────────────────────────────────


def test_selectors_cover_every_family():
    from qjord.catalog import selectors

    names = selectors()
    for expected in ["sl2:spin-1/2", "sl2:spin-3", "sl3:fund", "sl6:fund", "osp12:j=3/2",
                     "sl21:fund", "sl2:adjoint", "osp12:adjoint"]:
        assert expected in names


def test_parse_selector():
    from qjord.catalog import parse_selector
    from qjord.core.errors import UnknownRep

    assert parse_selector("osp12:j=1") == ("osp12", "j=1")
    with pytest.raises(UnknownRep):
        parse_selector("sl2")
    with pytest.raises(UnknownRep):
        parse_selector("sl2:")


@pytest.mark.parametrize("selector", ["sl2:spin-0", "sl2:spin-1/3", "sl2:spin-7/2",
                                      "sl2:nonsense", "sl3:adj", "osp12:j=2", "e8:fund"])
def test_unknown_representations(selector):
    from qjord.catalog import resolve
    from qjord.core.errors import UnknownRep

    with pytest.raises(UnknownRep):
        resolve(selector, _make_ctx())


def test_adjoint_has_no_q_counterpart():
    from qjord.catalog import q_rep
    from qjord.core.errors import UnknownRep

    with pytest.raises(UnknownRep):
        q_rep("sl2", "adjoint", _make_ctx())


# ── sl(2) ───────────────────────────────────────────────────


def test_sl2_spin_one_matrices():
    from qjord.catalog import classical_rep
    from qjord.core.matrix import GradedMatrix

    ctx = _make_ctx()
    rep = classical_rep("sl2", "spin-1", ctx)
    parity = (0, 0, 0)

    assert rep.dim == 3
    assert rep.selector == "sl2:spin-1"
    assert rep["e1"] == GradedMatrix.from_entries(ctx, {(0, 1): 1, (1, 2): 1}, parity)
    assert rep["f1"] == GradedMatrix.from_entries(ctx, {(1, 0): 2, (2, 1): 2}, parity)
    assert rep["h1"] == GradedMatrix.diagonal(ctx, [2, 0, -2], parity)


def test_q_spin_reduces_to_classical():
    from qjord.catalog import classical_rep, q_rep

    ctx = _make_ctx()
    for label in ["spin-1/2", "spin-1", "spin-3/2"]:
        quantum = q_rep("sl2", label, ctx)
        limit = quantum.at_q1()
        classical = classical_rep("sl2", label, ctx)

        assert quantum.deformed
        assert not limit.deformed
        for name in ["e1", "f1", "h1"]:
            assert limit[name] == classical[name]
        assert limit["K1"].is_identity


def test_q_spin_carries_cartan_power():
    from qjord.catalog import q_rep
    from qjord.core.matrix import GradedMatrix

    ctx = _make_ctx()
    rep = q_rep("sl2", "spin-1/2", ctx)
    half = Fraction(1, 2)

    assert rep["K1"] == GradedMatrix.diagonal(ctx, [ctx.qpow(half), ctx.qpow(-half)], (0, 0))


def test_missing_generator():
    from qjord.catalog import classical_rep
    from qjord.core.errors import UnknownRep

    with pytest.raises(UnknownRep):
        classical_rep("sl2", "spin-1/2", _make_ctx())["K1"]


# ── sl(N), osp(1|2), sl(2|1) ────────────────────────────────


def test_sl3_fundamental():
    from qjord.catalog import classical_rep, q_rep
    from qjord.core.matrix import GradedMatrix, super_bracket

    ctx = _make_ctx()
    rep = classical_rep("sl3", "fund", ctx)

    assert rep["e3"] == super_bracket(rep["e1"], rep["e2"])
    assert rep["h3"] == rep["h1"] + rep["h2"]
    k1 = q_rep("sl3", "fund", ctx)["K1"]
    half = Fraction(1, 2)
    assert k1 == GradedMatrix.diagonal(ctx, [ctx.qpow(half), ctx.qpow(-half), 1], (0, 0, 0))


def test_osp_half_spin_matrices():
    from qjord.catalog import classical_rep
    from qjord.core.matrix import GradedMatrix, super_bracket

    ctx = _make_ctx()
    rep = classical_rep("osp12", "j=1/2", ctx)
    parity = (0, 1, 0)

    assert rep.parity == parity
    assert rep["f"] == GradedMatrix.from_entries(ctx, {(1, 0): -1, (2, 1): 1}, parity)
    assert rep["bp"] == GradedMatrix.unit(ctx, parity, 0, 2)
    assert rep["bm"] == GradedMatrix.unit(ctx, parity, 2, 0)
    assert super_bracket(rep["e"], rep["f"]) == -rep["h0"]
    assert rep["e"].degree == 1


def test_osp_dimensions():
    from qjord.catalog import classical_rep

    ctx = _make_ctx()
    assert [classical_rep("osp12", f"j={j}", ctx).dim for j in ["1/2", "1", "3/2"]] == [3, 5, 7]


def test_sl21_fundamental():
    from qjord.catalog import classical_rep, q_rep
    from qjord.core.matrix import super_bracket

    ctx = _make_ctx()
    rep = classical_rep("sl21", "fund", ctx)

    assert rep.parity == (0, 0, 1)
    assert rep["e2"].degree == 1
    assert super_bracket(rep["e2"], rep["f2"]) == rep["h2"]
    assert super_bracket(rep["e1"], rep["f1"]) == rep["h1"]
    assert "e3" not in q_rep("sl21", "fund", ctx).generators


# ── Derived representations ─────────────────────────────────


def test_primitive_tensor_product():
    from qjord.catalog import classical_rep, tensor_rep
    from qjord.core.matrix import graded_kron

    ctx = _make_ctx()
    a = classical_rep("sl2", "spin-1/2", ctx)
    b = classical_rep("sl2", "spin-1", ctx)
    ab = tensor_rep(a, b)

    assert ab.dim == 6
    assert ab.label == "spin-1/2(x)spin-1"
    assert ab["h1"] == graded_kron(a["h1"], b.identity()) + graded_kron(a.identity(), b["h1"])


def test_tensor_of_different_algebras_is_rejected():
    from qjord.catalog import classical_rep, tensor_rep
    from qjord.core.errors import UnknownRep

    ctx = _make_ctx()
    with pytest.raises(UnknownRep):
        tensor_rep(classical_rep("sl2", "spin-1/2", ctx), classical_rep("sl3", "fund", ctx))


def test_adjoint_of_sl2():
    from qjord.catalog import classical_rep
    from qjord.core.matrix import super_bracket

    ctx = _make_ctx()
    ad = classical_rep("sl2", "adjoint", ctx)

    assert ad.dim == 3
    assert ad["h1"].entry(0, 0) == ctx.const(2)
    assert super_bracket(ad["e1"], ad["f1"]) == ad["h1"]


def test_osp_adjoint_drops_dependent_generators():
    from qjord.catalog import classical_rep

    ad = classical_rep("osp12", "adjoint", _make_ctx())
    assert ad.dim == 5
    assert sorted(ad.parity) == [0, 0, 0, 1, 1]
