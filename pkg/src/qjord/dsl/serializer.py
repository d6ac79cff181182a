"""Canonical .qalg text for presentations and expressions."""

from __future__ import annotations

from qjord.dsl.expr import AlgebraPresentation, BinOp, Bracket, Expr, Gen, Neg, Num, Pow, Sym
from qjord.dsl.parser import OPERATOR_PREC

# Binding power of the node kinds that are not binary operators
_NEG_PREC = 2.5
_POW_PREC = 5
_ATOM_PREC = 6


def _prec(e: Expr) -> float:
    if isinstance(e, BinOp):
        return OPERATOR_PREC[e.op]
    if isinstance(e, Neg):
        return _NEG_PREC
    if isinstance(e, Pow):
        return _POW_PREC
    return _ATOM_PREC


def _wrap(e: Expr, need: float) -> str:
    text = render(e)
    return f"({text})" if _prec(e) < need else text


def render(e: Expr) -> str:
    """Expression text that parses back to the same tree."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, OPERATOR_PREC["*"])
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _ATOM_PREC)}^{e.exponent}"
    if isinstance(e, Bracket):
        opening, closing = ("{", "}") if e.anti else ("[", "]")
        return f"{opening}{render(e.left)}, {render(e.right)}{closing}"
    p = OPERATOR_PREC[e.op]
    sep = e.op if e.op in "*/^" else f" {e.op} "
    # a negation directly under * or / would re-parse with a wider operand
    left_need = p if p < OPERATOR_PREC["*"] else _ATOM_PREC if isinstance(e.left, Neg) else p
    return f"{_wrap(e.left, left_need)}{sep}{_wrap(e.right, p + 1)}"


def serialize(p: AlgebraPresentation) -> str:
    """Canonical text: generators in declaration order, relations by name."""
    lines = [f"presentation {p.name};"]
    lines += [f'anchor "{a}";' for a in p.anchors]
    for name, par in p.generators:
        lines.append(f"generator {name} {'odd' if par else 'even'};")
    for rel in sorted(p.relations, key=lambda r: r.name):
        body = render(rel.lhs)
        if rel.rhs is not None:
            body += f" = {render(rel.rhs)}"
        lines.append(f"relation {rel.name}: {body};")
    for keyword, table in (
        ("coproduct", p.coproducts), ("antipode", p.antipodes), ("counit", p.counits),
    ):
        for sym in _symbol_order(p, table):
            lines.append(f"{keyword} {sym} = {render(table[sym])};")
    return "\n".join(lines) + "\n"


def _symbol_order(p: AlgebraPresentation, table: dict) -> list[str]:
    declared = list(p.parities)
    return sorted(table, key=declared.index)
