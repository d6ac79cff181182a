"""Tests for the nonlinear deformation maps and the Jordanian twists."""

import pytest


def _make_ctx():
    from qjord.core.scalars import ScalarContext

    return ScalarContext()


def _make_rep(algebra, label, ctx=None):
    from qjord.catalog import classical_rep

    return classical_rep(algebra, label, ctx or _make_ctx())


# ── Registry ────────────────────────────────────────────────


def test_map_registry():
    from qjord.maps import MAPS

    for key in ["slN:2", "slN:3", "slN:6", "osp_super", "osp_jordanian", "sl21"]:
        assert key in MAPS
    assert MAPS["osp_jordanian"].variants == ("minimal", "hdiag")
    assert MAPS["slN:3"].presentation == "uh_sl3"
    assert MAPS["slN:4"].presentation == "uh_slN(4)"


def test_unknown_map():
    from qjord.core.errors import UnknownRep
    from qjord.maps import get_map

    with pytest.raises(UnknownRep):
        get_map("slN:1")


def test_map_needs_classical_source_of_its_algebra():
    from qjord.catalog import q_rep
    from qjord.core.errors import UnknownRep
    from qjord.maps import deform

    ctx = _make_ctx()
    with pytest.raises(UnknownRep):
        deform("slN:2", q_rep("sl2", "spin-1/2", ctx))
    with pytest.raises(UnknownRep):
        deform("slN:3", _make_rep("sl2", "spin-1/2", ctx))


def test_unknown_jordanian_variant():
    from qjord.core.errors import UnknownRep
    from qjord.maps import deform

    with pytest.raises(UnknownRep):
        deform("osp_jordanian", _make_rep("osp12", "j=1/2"), "maximal")


# ── sl(N) ───────────────────────────────────────────────────


def test_sl2_map_on_spin_half():
    from qjord.maps import deform

    ctx = _make_ctx()
    rep = _make_rep("sl2", "spin-1/2", ctx)
    d = deform("slN:2", rep)
    shift = rep["e1"].scale(ctx.h)

    assert d["T"] == shift.plus_scalar(1)
    assert d["Tinv"] == (-shift).plus_scalar(1)
    assert d["X"] == rep["e1"]
    assert d["Y"] == rep["f1"]
    assert d["H"] == rep["h1"]
    assert d.label == "slN:2[sl2:spin-1/2]"
    assert d.notes


@pytest.mark.parametrize("label", ["spin-1", "spin-3/2", "spin-2"])
def test_sl2_map_reduces_at_h_zero(label):
    from qjord.maps import deform

    rep = _make_rep("sl2", label)
    d = deform("slN:2", rep)
    limit = d.at_h0()

    assert limit["E1"] == rep["e1"]
    assert limit["F1"] == rep["f1"]
    assert limit["H1"] == rep["h1"]
    assert limit["T"].is_identity
    assert (d["T"] @ d["Tinv"]).is_identity


def test_sl3_map_on_fundamental():
    from qjord.maps import corner_element, deform

    ctx = _make_ctx()
    rep = _make_rep("sl3", "fund", ctx)
    d = deform("slN:3", rep)
    corner = corner_element(rep, 3)

    assert corner == rep["e3"]
    assert d["T"] == corner.scale(ctx.h).plus_scalar(1)
    assert d["E1"] == rep["e1"]
    assert d.at_h0()["F2"] == rep["f2"]


def test_h_zero_needs_formal_h():
    from fractions import Fraction

    from qjord.core.errors import EvaluationError
    from qjord.core.scalars import ScalarContext
    from qjord.maps import deform

    ctx = ScalarContext(h_value=Fraction(1, 2))
    d = deform("slN:2", _make_rep("sl2", "spin-1/2", ctx))
    with pytest.raises(EvaluationError):
        d.at_h0()


# ── osp(1|2) ────────────────────────────────────────────────


def test_super_map_keeps_raising_generator():
    from qjord.maps import deform

    ctx = _make_ctx()
    rep = _make_rep("osp12", "j=1/2", ctx)
    d = deform("osp_super", rep)

    assert d["E"] == rep["e"]
    assert d["T"] == rep["bp"].scale(ctx.h).plus_scalar(1)
    assert d["Y"] == -(d["F"] @ d["F"])


@pytest.mark.parametrize("variant", ["minimal", "hdiag"])
def test_jordanian_map_reduces_at_h_zero(variant):
    from qjord.maps import deform

    rep = _make_rep("osp12", "j=1")
    d = deform("osp_jordanian", rep, variant)
    limit = d.at_h0()

    assert d.variant == f"osp_jordanian:{variant}"
    assert limit["E"] == rep["e"]
    assert limit["H"] == rep["h0"]
    assert limit["F"] == rep["f"]
    assert limit["T"].is_identity
    assert (d["T"] @ d["Tinv"]).is_identity
    assert d["Thalf"] @ d["Thalf"] == d["T"]


def test_jordanian_default_variant_is_minimal():
    from qjord.maps import deform

    d = deform("osp_jordanian", _make_rep("osp12", "j=1/2"))
    assert d.variant == "osp_jordanian:minimal"


def test_inverse_map_returns_classical_generators():
    from qjord.maps import deform, inverse_osp_jordanian

    d = deform("osp_jordanian", _make_rep("osp12", "j=1/2"), "minimal")
    back = inverse_osp_jordanian(d, "minimal")

    assert set(back.generators) == {"e", "h0", "f", "bp", "bm"}
    assert back.label == "inverse:minimal"
    assert back["bp"] == back["e"] @ back["e"]


# ── sl(2|1) ─────────────────────────────────────────────────


def test_sl21_map_on_fundamental():
    from qjord.maps import deform

    ctx = _make_ctx()
    rep = _make_rep("sl21", "fund", ctx)
    d = deform("sl21", rep)

    assert d["T"] == rep["e1"].scale(ctx.h).plus_scalar(1)
    assert d["H1"] == rep["h1"]
    assert d["F1"] == rep["f1"]
    assert d["H2"] == rep["h2"]
    assert d["E3"] == rep["e3"]


# ── Twists ──────────────────────────────────────────────────


def test_twist_operators():
    from qjord.maps import deform, twist_operator

    rep = _make_rep("osp12", "j=1/2")
    minimal = deform("osp_jordanian", rep, "minimal")
    hdiag = deform("osp_jordanian", rep, "hdiag")

    exact = twist_operator("minimal", minimal, minimal)
    assert exact.exact
    assert exact.G.dim == 9

    series = twist_operator("hdiag", hdiag, hdiag)
    assert not series.exact
    assert series.order == 2


def test_hdiag_twist_order_is_bounded():
    from qjord.core.errors import OrderUnavailable, UnknownRep
    from qjord.maps import deform, twist_operator

    hdiag = deform("osp_jordanian", _make_rep("osp12", "j=1/2"), "hdiag")

    assert twist_operator("hdiag", hdiag, hdiag, order=1).order == 1
    with pytest.raises(OrderUnavailable):
        twist_operator("hdiag", hdiag, hdiag, order=3)
    with pytest.raises(UnknownRep):
        twist_operator("maximal", hdiag, hdiag)


def test_h_truncate_drops_high_orders():
    from qjord.core.matrix import GradedMatrix
    from qjord.maps import h_truncate

    ctx = _make_ctx()
    h = ctx.h
    m = GradedMatrix.diagonal(ctx, [1 + h + h**2 + h**3, h**4], (0, 0))

    assert h_truncate(m, 2) == GradedMatrix.diagonal(ctx, [1 + h + h**2, 0], (0, 0))
