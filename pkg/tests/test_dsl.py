"""Tests for the .qalg language: parser, canonical serializer, evaluator and built-ins."""

import random

import pytest

_SMALL = """\
# two even generators and an odd one
presentation small;
anchor "test algebra";
generator A, B even;
generator C odd;
relation b_rel: [A, B] = 2*B;
relation a_rel: C^2;
coproduct A = A (x) 1 + 1 (x) A;
coproduct C = C (x) 1 + 1 (x) C;
antipode A = -A;
counit A = 0;
"""


def _make_small():
    from qjord.dsl.parser import parse

    return parse(_SMALL)


def _random_expr(rng: random.Random, depth: int):
    """A random well-formed expression tree over A, B, C, Ainv, h and q."""
    from qjord.dsl.expr import BinOp, Bracket, Gen, Neg, Num, Pow, Sym, is_scalar

    if depth == 0 or rng.random() < 0.25:
        pick = rng.randrange(3)
        if pick == 0:
            return Gen(rng.choice(["A", "B", "C", "Ainv"]))
        if pick == 1:
            return Num(rng.randrange(10))
        return Sym(rng.choice(["h", "q"]))
    pick = rng.randrange(5)
    if pick == 0:
        return BinOp(rng.choice("+-*"), _random_expr(rng, depth - 1), _random_expr(rng, depth - 1))
    if pick == 1:
        divisor = rng.choice([Num(rng.randrange(1, 9)), Sym("h"), Sym("q")])
        return BinOp("/", _random_expr(rng, depth - 1), divisor)
    if pick == 2:
        return Neg(_random_expr(rng, depth - 1))
    if pick == 3:
        base = _random_expr(rng, depth - 1)
        exponent = rng.randrange(4)
        if is_scalar(base) and rng.random() < 0.5:
            exponent = -exponent
        return Pow(base, exponent)
    return Bracket(
        _random_expr(rng, depth - 1), _random_expr(rng, depth - 1), anti=rng.random() < 0.5,
    )


# ── Parsing ─────────────────────────────────────────────────


def test_parse_small_presentation():
    p = _make_small()

    assert p.name == "small"
    assert p.anchors == ["test algebra"]
    assert p.generators == [("A", 0), ("B", 0), ("C", 1)]
    assert [r.name for r in p.relations] == ["a_rel", "b_rel"]
    assert p.parities["Ainv"] == 0
    assert p.parities["Cinv"] == 1
    assert p.coalgebra_symbols() == ["A", "C"]


def test_relation_lookup():
    from qjord.dsl.expr import BinOp, Gen, Num

    p = _make_small()
    rel = p.relation("b_rel")

    assert rel.rhs == BinOp("*", Num(2), Gen("B"))
    with pytest.raises(KeyError):
        p.relation("missing")


def test_syntax_error_carries_position():
    from qjord.core.errors import QalgSyntaxError
    from qjord.dsl.parser import parse

    text = "presentation x;\ngenerator a even;\nrelation r: a + ;\n"
    with pytest.raises(QalgSyntaxError) as err:
        parse(text)

    assert (err.value.line, err.value.col) == (3, 17)
    assert err.value.found == ";"
    assert str(err.value) == "line 3, col 17: expected an expression, found ';'"


def test_unknown_character_is_a_syntax_error():
    from qjord.core.errors import QalgSyntaxError
    from qjord.dsl.parser import parse

    with pytest.raises(QalgSyntaxError) as err:
        parse("presentation x;\ngenerator a even;\nrelation r: a ! a;\n")
    assert err.value.line == 3


def test_undeclared_generator():
    from qjord.core.errors import UndeclaredSymbol
    from qjord.dsl.parser import parse

    with pytest.raises(UndeclaredSymbol):
        parse("presentation x;\ngenerator a even;\nrelation r: a*b;\n")


def test_mixed_parity_relation():
    from qjord.core.errors import ParityMismatch
    from qjord.dsl.parser import parse

    with pytest.raises(ParityMismatch):
        parse("presentation x;\ngenerator a even;\ngenerator c odd;\nrelation r: a + c;\n")


@pytest.mark.parametrize("statement", [
    "relation r: a (x) a;",
    "coproduct a = a;",
    "counit a = a;",
    "generator a odd;",
    "generator h even;",
])
def test_structural_errors(statement):
    from qjord.core.errors import QalgSyntaxError
    from qjord.dsl.parser import parse

    with pytest.raises(QalgSyntaxError):
        parse(f"presentation x;\ngenerator a even;\n{statement}\n")


def test_negative_power_of_generator_is_rejected():
    from qjord.core.errors import QalgSyntaxError
    from qjord.dsl.parser import parse_expression

    with pytest.raises(QalgSyntaxError):
        parse_expression("A^-1", _make_small())


def test_generators_and_scalars_in_expressions():
    from qjord.dsl.expr import generators_in, is_scalar
    from qjord.dsl.parser import parse_expression

    p = _make_small()

    assert generators_in(parse_expression("[A, B] + 2*C*C", p)) == {"A", "B", "C"}
    assert is_scalar(parse_expression("h^2/(q + 1)", p))
    assert not is_scalar(parse_expression("h*A", p))


def test_equation_reads_as_difference():
    from qjord.dsl.expr import BinOp, Gen, Num
    from qjord.dsl.parser import parse_expression

    e = parse_expression("A = 2", _make_small())
    assert e == BinOp("-", Gen("A"), Num(2))


# ── Built-ins and canonical text ────────────────────────────


def test_builtin_names():
    from qjord.dsl.builtins import QALG_FILES, builtin_names

    names = builtin_names()
    assert set(QALG_FILES) <= set(names)
    assert "uh_slN(N)" in names
    assert "classical_slN(N)" in names


@pytest.mark.parametrize("name", [
    "ohn_sl2", "uq_sl2", "uq_sl3", "uh_sl3", "uh_sl3_chevalley", "uq_osp12",
    "uh_osp12_super", "uh_osp12_jordanian", "classical_osp12", "classical_sl21",
    "uq_sl21", "uh_sl21", "uh_slN(4)", "classical_slN(3)",
])
def test_builtin_round_trips(name):
    from qjord.dsl.builtins import builtin
    from qjord.dsl.parser import parse
    from qjord.dsl.serializer import serialize

    p = builtin(name)
    text = serialize(p)

    assert parse(text) == p
    assert serialize(parse(text)) == text


def test_unknown_builtin():
    from qjord.core.errors import UnknownPresentation
    from qjord.dsl.builtins import builtin

    with pytest.raises(UnknownPresentation):
        builtin("uq_e8")
    with pytest.raises(UnknownPresentation):
        builtin("uh_slN(1)")



def test_rank_one_template_is_ohn():
    from qjord.dsl.builtins import builtin

    p = builtin("uh_slN(2)")
    ohn = builtin("ohn_sl2")

    assert p.name == "uh_slN_2"
    assert p.generator_names == ohn.generator_names
    assert p.relations == ohn.relations


def test_serialize_orders_relations_and_symbols():
    from qjord.dsl.serializer import serialize

    lines = serialize(_make_small()).splitlines()

    assert lines[0] == "presentation small;"
    assert lines[1] == 'anchor "test algebra";'
    assert lines[2:5] == ["generator A even;", "generator B even;", "generator C odd;"]
    assert lines[5] == "relation a_rel: C^2;"
    assert lines[6] == "relation b_rel: [A, B] = 2*B;"
    assert lines[7] == "coproduct A = A (x) 1 + 1 (x) A;"


def test_render_keeps_needed_parentheses():
    from qjord.dsl.parser import parse_expression
    from qjord.dsl.serializer import render

    p = _make_small()
    for text in ["A - (B - C)", "(-A)*B", "-A*B", "A*(-B)", "(A^2)^3", "(A + B)/(2*h)"]:
        assert render(parse_expression(text, p)) == text


def test_fuzz_well_formed_round_trip():
    from qjord.dsl.parser import parse_expression
    from qjord.dsl.serializer import render

    p = _make_small()
    rng = random.Random(20240611)
    for _ in range(1000):
        e = _random_expr(rng, 4)
        assert parse_expression(render(e), p) == e


def test_fuzz_malformed_never_crashes():
    from qjord.core.errors import QalgSyntaxError, QjordError
    from qjord.dsl.parser import parse_expression
    from qjord.dsl.serializer import render

    p = _make_small()
    rng = random.Random(7)
    noise = "()[]{},+-*/^=;:"
    syntax_errors = 0
    for _ in range(1000):
        text = render(_random_expr(rng, 3))
        pos = rng.randrange(len(text) + 1)
        if rng.random() < 0.5 and text:
            text = text[:pos] + text[pos + 1:]
        else:
            text = text[:pos] + rng.choice(noise) + text[pos:]
        try:
            parse_expression(text, p)
        except QalgSyntaxError as exc:
            syntax_errors += 1
            assert exc.line == 1
            assert 1 <= exc.col <= len(text) + 1
            assert str(exc).startswith(f"line 1, col {exc.col}: expected ")
        except QjordError:
            pass

    assert syntax_errors > 0


# ── Evaluation ──────────────────────────────────────────────


def test_evaluate_classical_relation():
    from qjord.catalog import classical_rep
    from qjord.core.scalars import ScalarContext
    from qjord.dsl.builtins import builtin
    from qjord.dsl.evaluate import Evaluator
    from qjord.dsl.parser import parse_expression

    ctx = ScalarContext()
    p = builtin("classical_slN(2)")
    ev = Evaluator(classical_rep("sl2", "spin-1", ctx).assignment(), p.parities)

    assert ev.matrix(parse_expression("[e1, f1] = h1", p)).is_zero
    assert ev.matrix(parse_expression("[h1, e1] = 2*e1", p)).is_zero
    assert not ev.matrix(parse_expression("e1^2", p)).is_zero
    assert ev.matrix(parse_expression("e1^3", p)).is_zero


def test_evaluate_errors():
    from qjord.catalog import classical_rep
    from qjord.core.errors import EvaluationError
    from qjord.core.scalars import ScalarContext
    from qjord.dsl.builtins import builtin
    from qjord.dsl.evaluate import Evaluator
    from qjord.dsl.parser import parse_expression

    ctx = ScalarContext()
    p = builtin("classical_slN(2)")
    ev = Evaluator(classical_rep("sl2", "spin-1/2", ctx).assignment(), p.parities)

    with pytest.raises(EvaluationError):
        ev.value(parse_expression("e1/0", p))
    with pytest.raises(EvaluationError):
        ev.value(parse_expression("e1 (x) f1", p, allow_tensor=True))
    with pytest.raises(EvaluationError):
        ev.scalar(parse_expression("e1", p))


def test_assignment_inverse_fallback():
    from qjord.catalog import q_rep
    from qjord.core.errors import EvaluationError
    from qjord.core.scalars import ScalarContext

    ctx = ScalarContext()
    assignment = q_rep("sl2", "spin-1/2", ctx).assignment()
    k = assignment.lookup("K1")

    assert (assignment.lookup("K1inv") @ k).is_identity
    assert assignment.covers(["e1", "K1inv"])
    assert not assignment.covers(["X"])
    with pytest.raises(EvaluationError):
        assignment.lookup("X")


def test_expand_tensor_of_q_coproduct():
    from qjord.dsl.builtins import builtin
    from qjord.dsl.evaluate import expand_tensor
    from qjord.dsl.expr import Gen

    p = builtin("uq_sl2")
    terms = expand_tensor(p.coproducts["e1"], p.parities)

    assert [(t.left, t.right) for t in terms] == [
        (Gen("e1"), Gen("K1")), (Gen("K1inv"), Gen("e1")),
    ]


def test_tensor_rep_with_q_coproduct():
    from qjord.catalog import q_rep, tensor_rep
    from qjord.core.matrix import graded_kron
    from qjord.core.scalars import ScalarContext
    from qjord.dsl.builtins import builtin

    ctx = ScalarContext()
    rep = q_rep("sl2", "spin-1/2", ctx)
    pair = tensor_rep(rep, rep, builtin("uq_sl2"))

    assert pair.dim == 4
    assert pair["K1"] == graded_kron(rep["K1"], rep["K1"])
