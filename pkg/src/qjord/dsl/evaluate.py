"""Evaluate .qalg expressions as exact matrices.

An :class:`Assignment` gives every generator symbol a matrix on one graded
space.  Tensor expressions ``A (x) B`` need a second assignment for each leg;
products of tensor terms are ordinary products on the tensor space.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from qjord.core.errors import EvaluationError
from qjord.core.matrix import GradedMatrix, Parity, graded_kron, kron_parity, super_bracket
from qjord.core.scalars import Scalar, ScalarContext
from qjord.dsl.expr import (
    INVERSE_SUFFIX,
    TENSOR,
    BinOp,
    Bracket,
    Expr,
    Gen,
    Neg,
    Num,
    Pow,
    Sym,
    is_scalar,
    parity,
)

log = logging.getLogger("qjord")

Value = Scalar | GradedMatrix


@dataclass
class Assignment:
    """Generator symbol → matrix on a space with basis parity ``parity``."""

    ctx: ScalarContext
    parity: Parity
    matrices: dict[str, GradedMatrix] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.parity)

    def identity(self) -> GradedMatrix:
        return GradedMatrix.identity(self.ctx, self.parity)

    def lookup(self, name: str) -> GradedMatrix:
        hit = self.matrices.get(name)
        if hit is not None:
            return hit
        if name.endswith(INVERSE_SUFFIX):
            base = self.matrices.get(name[: -len(INVERSE_SUFFIX)])
            if base is not None:
                inv = base.inverse()
                self.matrices[name] = inv
                return inv
        raise EvaluationError(f"no matrix assigned to {name}")

    def covers(self, names) -> bool:
        try:
            for n in names:
                self.lookup(n)
        except EvaluationError:
            return False
        return True

    def renamed(self, table: Mapping[str, str]) -> Assignment:
        """Copy with symbols renamed (targets are looked up here)."""
        images = {new: self.lookup(old) for new, old in table.items()}
        return Assignment(self.ctx, self.parity, images)


def scalar_assignment(ctx: ScalarContext, values: Mapping[str, Scalar]) -> Assignment:
    """Assignment on the one-dimensional even space (used for counits)."""
    out = Assignment(ctx, (0,))
    for name, v in values.items():
        out.matrices[name] = GradedMatrix.identity(ctx, (0,)).scale(v)
    return out


class Evaluator:
    """Recursive evaluation of expressions against an assignment.

    ``legs`` holds the two leg evaluators used by ``(x)``.
    """

    def __init__(
        self,
        assignment: Assignment,
        parities: Mapping[str, int] | None = None,
        legs: tuple[Evaluator, Evaluator] | None = None,
    ):
        self.assignment = assignment
        self.ctx = assignment.ctx
        self.parities = parities or {}
        self.legs = legs
        self.basis = (
            kron_parity(legs[0].basis, legs[1].basis) if legs else assignment.parity
        )

    # ── Helpers ──

    def identity(self) -> GradedMatrix:
        return GradedMatrix.identity(self.ctx, self.basis)

    def as_matrix(self, v: Value) -> GradedMatrix:
        if isinstance(v, GradedMatrix):
            return v
        return self.identity().scale(v)

    def matrix(self, e: Expr) -> GradedMatrix:
        return self.as_matrix(self.value(e))

    def scalar(self, e: Expr) -> Scalar:
        v = self.value(e)
        if isinstance(v, GradedMatrix):
            raise EvaluationError("expected a scalar expression")
        return v

    def degree(self, e: Expr) -> int:
        p = parity(e, self.parities) if self.parities else 0
        return p or 0

    # ── Nodes ──

    def value(self, e: Expr) -> Value:
        if isinstance(e, Num):
            return self.ctx.const(e.value)
        if isinstance(e, Sym):
            return self.ctx.h if e.name == "h" else self.ctx.q
        if isinstance(e, Gen):
            return self.generator(e.name)
        if isinstance(e, Neg):
            v = self.value(e.operand)
            return -v
        if isinstance(e, Pow):
            return self.power(e)
        if isinstance(e, Bracket):
            return self.bracket(e)
        if e.op == TENSOR:
            return self.tensor(e)
        if e.op == "/":
            return self.divide(e)
        left, right = self.value(e.left), self.value(e.right)
        if e.op == "*":
            return self.product(left, right, e)
        lm = isinstance(left, GradedMatrix)
        rm = isinstance(right, GradedMatrix)
        if lm or rm:
            left, right = self.as_matrix(left), self.as_matrix(right)
        return left + right if e.op == "+" else left - right

    def generator(self, name: str) -> Value:
        return self.assignment.lookup(name)

    def product(self, left: Value, right: Value, e: BinOp) -> Value:
        if isinstance(left, GradedMatrix) and isinstance(right, GradedMatrix):
            return left @ right
        if isinstance(left, GradedMatrix):
            return left.scale(right)
        if isinstance(right, GradedMatrix):
            return right.scale(left)
        return left * right

    def divide(self, e: BinOp) -> Value:
        d = self.scalar(e.right)
        if not d:
            raise EvaluationError("division by a scalar that evaluates to zero")
        num = self.value(e.left)
        if isinstance(num, GradedMatrix):
            return num.scale(self.ctx.one / d)
        return num / d

    def power(self, e: Pow) -> Value:
        base = self.value(e.base)
        if isinstance(base, GradedMatrix):
            return base ** e.exponent
        if e.exponent < 0 and not base:
            raise EvaluationError("negative power of a zero scalar")
        return base**e.exponent

    def bracket(self, e: Bracket) -> Value:
        a, b = self.matrix(e.left), self.matrix(e.right)
        return super_bracket(a, b, anti=e.anti)

    def tensor(self, e: BinOp) -> GradedMatrix:
        if self.legs is None:
            raise EvaluationError("tensor product outside a coproduct evaluation")
        left, right = self.legs
        return graded_kron(left.matrix(e.left), right.matrix(e.right))


class AntipodeEvaluator(Evaluator):
    """Evaluates S(expr) for a graded anti-homomorphism S.

    ``images`` maps each generator to the matrix of its antipode;
    S(ab) = (−1)^{|a||b|} S(b)S(a).
    """

    def __init__(self, plain: Evaluator, images: Assignment):
        super().__init__(images, plain.parities)
        self.plain = plain

    def value(self, e: Expr) -> Value:
        if is_scalar(e):
            return self.plain.value(e)
        if isinstance(e, BinOp) and e.op == "*":
            a, b = self.value(e.left), self.value(e.right)
            sign = -1 if self.degree(e.left) and self.degree(e.right) else 1
            out = self.product(b, a, e)
            return -out if sign < 0 else out
        if isinstance(e, Pow) and not is_scalar(e.base):
            s = self.value(e.base)
            out = s ** e.exponent if isinstance(s, GradedMatrix) else s**e.exponent
            d = self.degree(e.base)
            if d and (e.exponent * (e.exponent - 1) // 2) % 2:
                out = -out
            return out
        return super().value(e)

    def bracket(self, e: Bracket) -> Value:
        sa, sb = self.matrix(e.left), self.matrix(e.right)
        odd = self.degree(e.left) and self.degree(e.right)
        ba = sb @ sa
        if odd:
            ba = -ba
        if e.anti:
            ab = sa @ sb
            return ba + (-ab if odd else ab)
        # S([a, b}) = (−1)^{|a||b|} (S(b)S(a) − S(a)S(b))
        ab = sa @ sb
        return ba - (-ab if odd else ab)


# ── Tensor expansion ──────────────────────────────────────────


@dataclass(frozen=True)
class TensorTerm:
    coefficient: Expr
    left: Expr
    right: Expr


def _mul(a: Expr, b: Expr) -> Expr:
    if isinstance(a, Num) and a.value == 1:
        return b
    if isinstance(b, Num) and b.value == 1:
        return a
    return BinOp("*", a, b)


def expand_tensor(e: Expr, parities: Mapping[str, int]) -> list[TensorTerm]:
    """Write a coproduct expression as Σ c·(a ⊗ b) with Koszul signs in products."""
    if isinstance(e, BinOp) and e.op == TENSOR:
        return [TensorTerm(Num(1), e.left, e.right)]
    if isinstance(e, BinOp) and e.op in "+-":
        right = expand_tensor(e.right, parities)
        if e.op == "-":
            right = [TensorTerm(Neg(t.coefficient), t.left, t.right) for t in right]
        return expand_tensor(e.left, parities) + right
    if isinstance(e, Neg):
        return [TensorTerm(Neg(t.coefficient), t.left, t.right)
                for t in expand_tensor(e.operand, parities)]
    if isinstance(e, BinOp) and e.op == "/":
        return [TensorTerm(BinOp("/", t.coefficient, e.right), t.left, t.right)
                for t in expand_tensor(e.left, parities)]
    if isinstance(e, BinOp) and e.op == "*":
        if is_scalar(e.left):
            return [TensorTerm(_mul(e.left, t.coefficient), t.left, t.right)
                    for t in expand_tensor(e.right, parities)]
        if is_scalar(e.right):
            return [TensorTerm(_mul(t.coefficient, e.right), t.left, t.right)
                    for t in expand_tensor(e.left, parities)]
        out = []
        for x in expand_tensor(e.left, parities):
            for y in expand_tensor(e.right, parities):
                coef = _mul(x.coefficient, y.coefficient)
                if (parity(x.right, parities) or 0) and (parity(y.left, parities) or 0):
                    coef = Neg(coef)
                out.append(TensorTerm(coef, _mul(x.left, y.left), _mul(x.right, y.right)))
        return out
    if isinstance(e, Pow):
        terms = [TensorTerm(Num(1), Num(1), Num(1))]
        for _ in range(e.exponent):
            terms = expand_tensor(BinOp("*", _as_sum(terms), e.base), parities)
        return terms
    raise EvaluationError("not a tensor expression")


def _as_sum(terms: list[TensorTerm]) -> Expr:
    out: Expr | None = None
    for t in terms:
        piece = _mul(t.coefficient, BinOp(TENSOR, t.left, t.right))
        out = piece if out is None else BinOp("+", out, piece)
    return out if out is not None else BinOp(TENSOR, Num(0), Num(0))
