"""Tokenizer and precedence-climbing parser for .qalg presentations.

    presentation uq_sl2;
    anchor "standard relations";
    generator E, F even;
    generator K even;
    relation KE: K*E*Kinv = q^2*E;
    coproduct E = E (x) K + 1 (x) E;
    antipode E = -E*Kinv;
    counit E = 0;

``#`` starts a comment.  The three characters ``(x)`` always form the
tensor operator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from qjord.core.errors import ParityMismatch, QalgSyntaxError, UndeclaredSymbol
from qjord.dsl.expr import (
    RESERVED,
    TENSOR,
    AlgebraPresentation,
    BinOp,
    Bracket,
    Expr,
    Gen,
    Neg,
    Num,
    Pow,
    Relation,
    Sym,
    has_tensor,
    is_scalar,
    parity,
)

# Operator groups in increasing binding power
OPERATORS = [
    [("+", "left"), ("-", "left")],
    [(TENSOR, "left")],
    [("*", "left"), ("/", "left")],
]
OPERATOR_PREC = {op: idx + 1 for idx, group in enumerate(OPERATORS) for op, _ in group}
OPERATOR_ASSOC = {op: assoc for group in OPERATORS for op, assoc in group}
# Operand of a unary minus binds like the right side of '*'
NEG_OPERAND_PREC = OPERATOR_PREC["*"]

KEYWORDS = ("presentation", "anchor", "generator", "relation", "coproduct", "antipode", "counit")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<tensor>\(x\))
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[-+*/^()\[\]{},;:=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise QalgSyntaxError(line, col, "a token", text[pos])
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind == "tensor":
            tokens.append(Token("op", TENSOR, line, col))
        elif kind == "punct":
            tokens.append(Token("op", m.group(), line, col))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.pres = AlgebraPresentation(name="anonymous")
        self.seen_header = False
        self.allow_tensor = False

    # ── Token stream ──

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, tok: Token, expected: str):
        raise QalgSyntaxError(tok.line, tok.col, expected, tok.text or "end of input")

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.kind != "op" or tok.text != text:
            self.fail(tok, repr(text))
        return tok

    def ident(self) -> Token:
        tok = self.next()
        if tok.kind != "ident":
            self.fail(tok, "an identifier")
        return tok

    # ── Statements ──

    def parse(self) -> AlgebraPresentation:
        while self.peek().kind != "eof":
            tok = self.next()
            if tok.kind != "ident" or tok.text not in KEYWORDS:
                self.fail(tok, "a statement keyword")
            getattr(self, f"stmt_{tok.text}")(tok)
        self.pres.relations = sorted(self.pres.relations, key=lambda r: r.name)
        return self.pres

    def stmt_presentation(self, tok: Token) -> None:
        if self.seen_header or self.pres.generators:
            self.fail(tok, "presentation header before any other statement")
        self.pres.name = self.ident().text
        self.seen_header = True
        self.expect(";")

    def stmt_anchor(self, tok: Token) -> None:
        s = self.next()
        if s.kind != "string":
            self.fail(s, "a quoted string")
        self.pres.anchors.append(s.text[1:-1])
        self.expect(";")

    def stmt_generator(self, tok: Token) -> None:
        names = [self.ident()]
        while self.peek().text == ",":
            self.next()
            names.append(self.ident())
        kind = self.ident()
        if kind.text not in ("even", "odd"):
            self.fail(kind, "'even' or 'odd'")
        for name in names:
            if name.text in RESERVED or name.text in KEYWORDS:
                self.fail(name, "a generator name that is not reserved")
            if self.pres.is_declared(name.text):
                self.fail(name, f"a new generator name ({name.text} already declared)")
            self.pres.generators.append((name.text, 1 if kind.text == "odd" else 0))
        self.expect(";")

    def stmt_relation(self, tok: Token) -> None:
        name = self.ident()
        if any(r.name == name.text for r in self.pres.relations):
            self.fail(name, f"a new relation name ({name.text} already used)")
        self.expect(":")
        lhs = self.expression()
        rhs = None
        if self.peek().text == "=":
            self.next()
            rhs = self.expression()
        self.expect(";")
        rel = Relation(name.text, lhs, rhs)
        if parity(rel.expr, self.pres.parities) is None:
            raise ParityMismatch(
                f"line {tok.line}: relation {name.text} mixes even and odd terms"
            )
        self.pres.relations.append(rel)

    def _target(self, table: dict) -> Token:
        sym = self.ident()
        if not self.pres.is_declared(sym.text):
            raise UndeclaredSymbol(f"line {sym.line}, col {sym.col}: {sym.text}")
        if sym.text in table:
            self.fail(sym, f"a single definition for {sym.text}")
        self.expect("=")
        return sym

    def _check_parity(self, tok: Token, sym: Token, e: Expr, what: str) -> None:
        declared = self.pres.parities[sym.text]
        found = parity(e, self.pres.parities)
        if found is not None and found != declared and not is_scalar(e):
            raise ParityMismatch(
                f"line {tok.line}: {what} of {sym.text} has parity {found}, expected {declared}"
            )
        if found is None:
            raise ParityMismatch(f"line {tok.line}: {what} of {sym.text} mixes parities")

    def stmt_coproduct(self, tok: Token) -> None:
        sym = self._target(self.pres.coproducts)
        start = self.peek()
        e = self.expression(allow_tensor=True)
        self.expect(";")
        if not _tensorial(e):
            self.fail(start, "a sum of tensor terms")
        self._check_parity(tok, sym, e, "coproduct")
        self.pres.coproducts[sym.text] = e

    def stmt_antipode(self, tok: Token) -> None:
        sym = self._target(self.pres.antipodes)
        e = self.expression()
        self.expect(";")
        self._check_parity(tok, sym, e, "antipode")
        self.pres.antipodes[sym.text] = e

    def stmt_counit(self, tok: Token) -> None:
        sym = self._target(self.pres.counits)
        start = self.peek()
        e = self.expression()
        self.expect(";")
        if not is_scalar(e):
            self.fail(start, "a scalar counit value")
        self.pres.counits[sym.text] = e

    # ── Expressions ──

    def expression(self, allow_tensor: bool = False) -> Expr:
        self.allow_tensor = allow_tensor
        return self.climb(1)

    def climb(self, min_prec: int) -> Expr:
        lhs = self.unary()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in OPERATOR_PREC:
                return lhs
            op_prec = OPERATOR_PREC[tok.text]
            if op_prec < min_prec:
                return lhs
            self.next()
            if tok.text == TENSOR:
                if not self.allow_tensor:
                    self.fail(tok, "an operator other than (x) outside a coproduct")
                if has_tensor(lhs):
                    self.fail(tok, "at most one (x) per tensor term")
            next_prec = op_prec + 1 if OPERATOR_ASSOC[tok.text] == "left" else op_prec
            rhs = self.climb(next_prec)
            if tok.text == TENSOR and has_tensor(rhs):
                self.fail(tok, "at most one (x) per tensor term")
            if tok.text == "/" and not is_scalar(rhs):
                self.fail(tok, "a scalar divisor")
            lhs = BinOp(tok.text, lhs, rhs)

    def unary(self) -> Expr:
        if self.peek().text == "-" and self.peek().kind == "op":
            self.next()
            return Neg(self.climb(NEG_OPERAND_PREC))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        while self.peek().text == "^":
            caret = self.next()
            negative = False
            if self.peek().text == "-":
                self.next()
                negative = True
            tok = self.next()
            if tok.kind != "int":
                self.fail(tok, "an integer exponent")
            exponent = -int(tok.text) if negative else int(tok.text)
            if exponent < 0 and not is_scalar(base):
                self.fail(caret, "a non-negative exponent on a generator expression")
            base = Pow(base, exponent)
        return base

    def atom(self) -> Expr:
        tok = self.next()
        if tok.kind == "int":
            return Num(int(tok.text))
        if tok.kind == "ident":
            if tok.text in RESERVED:
                return Sym(tok.text)
            if not self.pres.is_declared(tok.text):
                raise UndeclaredSymbol(f"line {tok.line}, col {tok.col}: {tok.text}")
            return Gen(tok.text)
        if tok.text == "(":
            inner = self.climb(1)
            self.expect(")")
            return inner
        if tok.text in ("[", "{"):
            left = self.climb(1)
            self.expect(",")
            right = self.climb(1)
            self.expect("]" if tok.text == "[" else "}")
            if has_tensor(left) or has_tensor(right):
                self.fail(tok, "tensor-free bracket arguments")
            return Bracket(left, right, anti=tok.text == "{")
        self.fail(tok, "an expression")


def _tensorial(e: Expr) -> bool:
    """Every additive term carries exactly one (x) at product level."""
    if isinstance(e, BinOp) and e.op == TENSOR:
        return True
    if isinstance(e, BinOp) and e.op in "+-":
        return _tensorial(e.left) and _tensorial(e.right)
    if isinstance(e, Neg):
        return _tensorial(e.operand)
    if isinstance(e, BinOp) and e.op == "*":
        if is_scalar(e.left):
            return _tensorial(e.right)
        if is_scalar(e.right):
            return _tensorial(e.left)
        return _tensorial(e.left) and _tensorial(e.right)
    if isinstance(e, BinOp) and e.op == "/":
        return _tensorial(e.left)
    if isinstance(e, Pow):
        return e.exponent >= 0 and _tensorial(e.base)
    return False


def parse(text: str) -> AlgebraPresentation:
    """Parse .qalg text into a validated presentation."""
    return _Parser(text).parse()



def parse_expression(
    text: str, presentation: AlgebraPresentation, allow_tensor: bool = False,
) -> Expr:
    """One expression over the generators of ``presentation``.

    ``lhs = rhs`` is accepted and read as lhs − (rhs), as in relations.
    """
    p = _Parser(text)
    p.pres = presentation
    lhs = p.expression(allow_tensor)
    if p.peek().text == "=":
        p.next()
        lhs = BinOp("-", lhs, p.expression(allow_tensor))
    if p.peek().kind != "eof":
        p.fail(p.peek(), "end of expression")
    return lhs
