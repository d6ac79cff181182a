"""Tests for verdicts, the discrepancy ledger and the verification suites."""

import pytest


def _make_ctx():
    from qjord.core.scalars import ScalarContext

    return ScalarContext()


def _make_ledger():
    from qjord.settings import LEDGER_PATH
    from qjord.verify import load_ledger

    return load_ledger(LEDGER_PATH)


def _write_ledger(tmp_path, text):
    path = tmp_path / "ledger.yml"
    path.write_text(text, encoding="utf-8")
    return path


# ── Judging ─────────────────────────────────────────────────


def test_judge_verdicts():
    from qjord.core.matrix import GradedMatrix
    from qjord.verify import FAILS, HOLDS, HOLDS_WITH_VARIANT, judge

    ctx = _make_ctx()
    zero = GradedMatrix.zeros(ctx, (0, 0))
    one = GradedMatrix.identity(ctx, (0, 0))

    assert judge("a", lambda: zero).verdict == HOLDS
    assert judge("b", lambda: [zero, zero]).verdict == HOLDS

    fixed = judge("c", lambda: one, [("suite/c", lambda: zero)])
    assert fixed.verdict == HOLDS_WITH_VARIANT
    assert fixed.ledger_key == "suite/c"

    failed = judge("d", lambda: [zero, one], [("suite/d", lambda: one)])
    assert failed.verdict == FAILS
    assert failed.residual == one
    assert failed.detail.startswith("2 nonzero residual entries, first (0, 0) = 1")


def test_engine_errors_become_failures():
    from qjord.core.errors import NotNilpotent
    from qjord.verify import FAILS, judge

    def broken():
        raise NotNilpotent("not nilpotent")

    result = judge("broken", broken)
    assert result.verdict == FAILS
    assert result.detail == "NotNilpotent: not nilpotent"
    assert result.residual is None


def test_report_sorts_and_counts():
    from qjord.core.matrix import GradedMatrix
    from qjord.verify import VerificationReport, judge

    ctx = _make_ctx()
    report = VerificationReport("demo", "setting")
    report.add(judge("zeta", lambda: GradedMatrix.zeros(ctx, (0,))))
    report.add(judge("alpha", lambda: GradedMatrix.identity(ctx, (0,))))

    assert [r.identity for r in report.results] == ["alpha", "zeta"]
    assert report.counts == {"holds": 1, "holds_with_variant": 0, "fails": 1}
    assert not report.ok
    assert report.verdict_of("zeta") == "holds"
    with pytest.raises(KeyError):
        report.result("missing")

    doc = report.to_dict()
    assert doc["suite"] == "demo"
    assert doc["results"][0]["residual"] == [[0, 0, "1"]]


# ── Ledger ──────────────────────────────────────────────────


def test_missing_ledger_is_empty(tmp_path):
    from qjord.verify import load_ledger

    assert len(load_ledger(tmp_path / "absent.yml")) == 0


def test_load_ledger_entries(tmp_path):
    from qjord.verify import load_ledger

    path = _write_ledger(tmp_path, """\
entries:
  - key: "uh_sl21/coproduct:H3"
    variant: "H3 (x) 1 + 1 (x) H3"
    note: "primitive part"
  - key: "talpha/composition"
    variant: "conjugated"
""")
    ledger = load_ledger(path)

    assert len(ledger) == 2
    entry = ledger.get("uh_sl21", "coproduct:H3")
    assert entry.suite == "uh_sl21"
    assert entry.definition == ("coproduct", "H3")
    assert ledger.get("talpha", "composition").definition is None
    assert [e.key for e in ledger.definitions("uh_sl21")] == ["uh_sl21/coproduct:H3"]


@pytest.mark.parametrize("text", [
    "entries: [unclosed",
    "entries: 3\n",
    "entries:\n  - key: \"a/b\"\n",
    "entries:\n  - variant: \"x\"\n",
    "entries:\n  - key: \"nosuite\"\n    variant: \"x\"\n",
])
def test_malformed_ledger(tmp_path, text):
    from qjord.core.errors import LedgerError
    from qjord.verify import load_ledger

    with pytest.raises(LedgerError):
        load_ledger(_write_ledger(tmp_path, text))


def test_ledger_path_honours_environment(tmp_path):
    from unittest.mock import patch

    from qjord.settings import LEDGER_PATH, ledger_path

    override = tmp_path / "other.yml"
    with patch.dict("os.environ", {"QJORD_LEDGER": str(override)}):
        assert ledger_path() == override
    with patch.dict("os.environ", {}, clear=True):
        assert ledger_path() == LEDGER_PATH


def test_shipped_ledger_loads():
    ledger = _make_ledger()

    assert ledger.get("talpha", "composition").variant == "conjugated"
    assert ledger.get("osp_twist", "hdiag_g").variant == "leading_one"


# ── Suite registry ──────────────────────────────────────────


def test_suite_registry():
    from qjord.verify import SUITES, get_suite

    for name in ["uq_sl2", "uh_sl21", "uh_slN", "talpha", "osp_twist", "sl2_rmatrix",
                 "osp_classical_r", "sl21_classical_automorphism"]:
        assert name in SUITES
    assert get_suite("uh_slN(4)").name == "uh_slN(4)"


def test_unknown_suite():
    from qjord.core.errors import UnknownPresentation
    from qjord.verify import get_suite

    with pytest.raises(UnknownPresentation):
        get_suite("nonexistent")


def test_missing_qalg_file(tmp_path):
    from qjord.core.errors import UnknownPresentation
    from qjord.verify import SuiteOptions, run_suite

    options = SuiteOptions(ctx=_make_ctx(), rep="sl2:spin-1/2")
    with pytest.raises(UnknownPresentation):
        run_suite(str(tmp_path / "absent.qalg"), options)


# ── Presentations ───────────────────────────────────────────


def test_sl21_counit_needs_ledger_coproduct():
    from qjord.verify import SuiteOptions, run_suite
    from qjord.verify.ledger import Ledger

    ctx = _make_ctx()
    printed = run_suite("uh_sl21", SuiteOptions(ctx=ctx, ledger=Ledger()))
    corrected = run_suite("uh_sl21", SuiteOptions(ctx=ctx, ledger=_make_ledger()))

    assert printed.verdict_of("counit:H3") == "fails"
    assert corrected.verdict_of("counit:H3") in ("holds", "holds_with_variant")
    assert corrected.result("counit:H3").ledger_key in (None, "uh_sl21/coproduct:H3")


def test_deformed_automorphism_of_sl21():
    from qjord.verify import SuiteOptions, run_suite

    report = run_suite("sl21_automorphism", SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger()))

    assert report.ok
    assert report.verdict_of("relation:H1T") == "holds"
    assert report.verdict_of("relation:H1E3") == "holds_with_variant"
    assert report.result("relation:H1E3").ledger_key == "sl21_automorphism/E3"


def test_classical_automorphism_of_sl21():
    from qjord.verify import SuiteOptions, run_suite

    report = run_suite("sl21_classical_automorphism", SuiteOptions(ctx=_make_ctx()))

    assert report.results
    assert report.ok


# ── Operator identities ─────────────────────────────────────


def test_talpha_laws_and_composition():
    from qjord.verify.identities import verify_talpha

    ctx = _make_ctx()
    labels = ("spin-1/2", "spin-1")
    printed = verify_talpha(ctx, labels)
    corrected = verify_talpha(ctx, labels, ledger=_make_ledger())

    for label in labels:
        assert printed.verdict_of(f"{label}:t") == "holds"
        for alpha in (-2, -1, 0, 1, 2):
            assert printed.verdict_of(f"{label}:power:{alpha}") == "holds"
        assert printed.verdict_of(f"{label}:composition:2") == "fails"
        assert corrected.verdict_of(f"{label}:composition:2") == "holds_with_variant"


def test_osp_operator_identity_first_power():
    from qjord.verify.identities import ope_residual, verify_ope

    ctx = _make_ctx()

    assert ope_residual(1, "j=1/2", ctx).is_zero
    assert verify_ope(ctx, ("j=1/2",)).verdict_of("j=1/2:n=1") == "holds"


def test_hdiag_g_needs_leading_one():
    from qjord.verify.identities import verify_twist

    ctx = _make_ctx()
    printed = verify_twist("hdiag", ctx)
    corrected = verify_twist("hdiag", ctx, ledger=_make_ledger())

    assert printed.verdict_of("hdiag_g") == "fails"
    assert corrected.verdict_of("hdiag_g") == "holds_with_variant"


def test_minimal_twist_identities_are_judged():
    from qjord.verify.identities import verify_twist
    from qjord.verify.report import VERDICTS

    report = verify_twist("minimal", _make_ctx())
    names = {r.identity for r in report.results}

    for phi in ("e", "h0", "f"):
        assert f"minimal:twist:{phi}" in names
        assert f"minimal:antipode:{phi}" in names
    assert {"minimal:g", "minimal:cocycle", "minimal:disentanglement"} <= names
    assert all(r.verdict in VERDICTS for r in report.results)
    assert report.verdict_of("minimal:cocycle") == "holds"
    assert report.ok


# ── Classical limit ─────────────────────────────────────────


def test_osp_classical_r_matrices():
    from qjord.verify.rmatrix import verify_classical_r

    report = verify_classical_r(_make_ctx())

    for name in ("r1", "r2", "r3"):
        assert report.verdict_of(f"cybe:{name}") == "holds"
    assert report.verdict_of("first_order:super") == "holds"
    assert report.verdict_of("first_order:jordanian") == "holds"


def test_first_order_needs_formal_h():
    from fractions import Fraction

    from qjord.core.errors import EvaluationError
    from qjord.core.matrix import GradedMatrix
    from qjord.core.scalars import ScalarContext
    from qjord.verify.rmatrix import first_order

    ctx = ScalarContext(h_value=Fraction(1, 2))
    with pytest.raises(EvaluationError):
        first_order(GradedMatrix.identity(ctx, (0,)))


def test_first_order_splits_polynomial_entries():
    from qjord.core.matrix import GradedMatrix
    from qjord.verify.rmatrix import first_order

    ctx = _make_ctx()
    h = ctx.h
    m = GradedMatrix.diagonal(ctx, [1 + 3 * h + h**2, 2 * h], (0, 0))
    lead, linear = first_order(m)

    assert lead == GradedMatrix.diagonal(ctx, [1, 0], (0, 0))
    assert linear == GradedMatrix.diagonal(ctx, [3, 2], (0, 0))


# ── R-matrix suites ─────────────────────────────────────────


@pytest.mark.parametrize("family, reps", [("sl2", "1/2"), ("sl2", "1/2,1"), ("osp", "1/2")])
def test_rmatrix_suite_has_no_failures(family, reps):
    from qjord.verify import SuiteOptions, run_suite

    options = SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger(), reps=reps)
    report = run_suite(f"{family}_rmatrix", options)
    names = {r.identity for r in report.results}

    assert report.verdict_of("ybe") == "holds"
    assert any(name.startswith("intertwine:") for name in names)
    assert report.counts["fails"] == 0, [r.identity for r in report.failures]


def test_sl21_rmatrix_is_triangular():
    from qjord.verify.rmatrix import verify_rmatrix

    report = verify_rmatrix("sl21", ("fund", "fund"), _make_ctx(), ledger=_make_ledger())

    assert report.verdict_of("ybe") == "holds"
    assert report.verdict_of("triangularity") == "holds"


def test_osp_super_coproducts_are_intertwined_opposite():
    from qjord.verify.rmatrix import verify_rmatrix

    report = verify_rmatrix("osp", ("j=1/2", "j=1/2"), _make_ctx())

    for sym in ("H", "E", "F", "Y"):
        assert report.verdict_of(f"intertwine:{sym}") == "holds"


def test_sl3_routes_agree_on_the_corner():
    from qjord.verify import SuiteOptions, run_suite

    report = run_suite("sl3_rmatrix", SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger()))
    names = {r.identity for r in report.results}

    assert report.verdict_of("contracted=closed_form") == "holds"
    for route in ("contracted", "closed_form"):
        assert f"{route}=universal" not in names
        result = report.result(f"{route}=universal:corner")
        assert result.verdict == "holds_with_variant"
        assert result.ledger_key == "sl3_rmatrix/universal"
    for sym in ("T", "H3", "F3"):
        assert report.verdict_of(f"intertwine:{sym}") == "holds"


def test_corner_block_keeps_principal_entries():
    from qjord.core.matrix import GradedMatrix
    from qjord.verify.rmatrix import corner_block

    ctx = _make_ctx()
    m = GradedMatrix.from_entries(ctx, {(0, 8): 5, (0, 1): 7, (2, 6): 3}, (0,) * 9)
    block = corner_block(m, 3, (0, 2))

    assert block == GradedMatrix.from_entries(ctx, {(0, 3): 5, (1, 2): 3}, (0,) * 4)


# ── Acceptance runs ─────────────────────────────────────────


@pytest.mark.parametrize("suite, rep, variant", [
    ("ohn_sl2", "sl2:spin-1/2", None),
    ("ohn_sl2", "sl2:spin-1", None),
    ("ohn_sl2", "sl2:spin-3/2", None),
    ("uh_sl3", "sl3:fund", None),
    ("uh_sl3", "sl3:adjoint", None),
    ("uh_sl3_chevalley", "sl3:fund", None),
    ("uh_sl3_chevalley", "sl3:adjoint", None),
    ("uh_slN", "sl2:fund", None),
    ("uh_slN", "sl3:fund", None),
    ("uh_slN", "sl4:fund", None),
    ("uh_slN", "sl5:fund", None),
    ("uh_osp12_super", "osp12:j=1/2", None),
    ("uh_osp12_super", "osp12:j=1", None),
    ("uh_osp12_super", "osp12:j=3/2", None),
    ("uh_osp12_jordanian", "osp12:j=1/2", "minimal"),
    ("uh_osp12_jordanian", "osp12:j=1", "minimal"),
    ("uh_osp12_jordanian", "osp12:j=1/2", "hdiag"),
    ("uh_osp12_jordanian", "osp12:j=1", "hdiag"),
    ("uh_sl21", "sl21:fund", None),
    ("uh_sl21", "sl21:adjoint", None),
    ("uq_sl3", "sl3:fund", None),
])
def test_presentation_suite_has_no_failures(suite, rep, variant):
    from qjord.verify import SuiteOptions, run_suite

    options = SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger(), rep=rep, variant=variant)
    report = run_suite(suite, options)

    assert report.results
    assert report.counts["fails"] == 0, [r.identity for r in report.failures]


def test_sl21_corrected_relations_hold():
    from qjord.verify import SuiteOptions, run_suite

    report = run_suite("uh_sl21", SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger()))

    assert report.verdict_of("relation:TF1") == "holds"
    assert report.verdict_of("relation:H1H2") == "holds"
    assert report.verdict_of("antipode:F3") == "holds"


@pytest.mark.parametrize("suite, reps", [
    ("osp_frt", "1/2,1/2"),
    ("osp_frt", "1/2,1"),
    ("osp_twist", None),
])
def test_function_suite_has_no_failures(suite, reps):
    from qjord.verify import SuiteOptions, run_suite

    options = SuiteOptions(ctx=_make_ctx(), ledger=_make_ledger(), reps=reps)
    report = run_suite(suite, options)

    assert report.results
    assert report.ok, [r.identity for r in report.failures]
