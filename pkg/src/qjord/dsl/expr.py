"""Expression trees of the .qalg language and the presentation container."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

# Scalar symbols every presentation may use without declaring them
RESERVED = ("h", "q")
INVERSE_SUFFIX = "inv"


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class BinOp:
    """``op`` is one of + - * / (x)."""

    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Bracket:
    """[left, right] (graded commutator) or {left, right} when ``anti``."""

    left: Expr
    right: Expr
    anti: bool = False


Expr = Gen | Num | Sym | BinOp | Neg | Pow | Bracket

TENSOR = "(x)"


def children(e: Expr) -> tuple[Expr, ...]:
    if isinstance(e, (BinOp, Bracket)):
        return (e.left, e.right)
    if isinstance(e, Neg):
        return (e.operand,)
    if isinstance(e, Pow):
        return (e.base,)
    return ()


def walk(e: Expr) -> Iterator[Expr]:
    yield e
    for c in children(e):
        yield from walk(c)


def generators_in(e: Expr) -> set[str]:
    return {n.name for n in walk(e) if isinstance(n, Gen)}


def is_scalar(e: Expr) -> bool:
    """No generator and no tensor anywhere below e."""
    return not any(
        isinstance(n, Gen) or (isinstance(n, BinOp) and n.op == TENSOR) for n in walk(e)
    )


def has_tensor(e: Expr) -> bool:
    return any(isinstance(n, BinOp) and n.op == TENSOR for n in walk(e))


def is_zero_literal(e: Expr) -> bool:
    return isinstance(e, Num) and e.value == 0


def parity(e: Expr, parities: Mapping[str, int]) -> int | None:
    """Z2-degree of e from the declared generator parities; None when mixed."""
    if isinstance(e, Gen):
        return parities[e.name]
    if isinstance(e, (Num, Sym)):
        return 0
    if isinstance(e, Neg):
        return parity(e.operand, parities)
    if isinstance(e, Pow):
        p = parity(e.base, parities)
        return None if p is None else (p * e.exponent) % 2
    left, right = parity(e.left, parities), parity(e.right, parities)
    if isinstance(e, BinOp) and e.op in "+-":
        if is_zero_literal(e.left):
            return right
        if is_zero_literal(e.right):
            return left
        return left if left == right else None
    if isinstance(e, BinOp) and e.op == "/":
        return left
    if left is None or right is None:
        return None
    return (left + right) % 2


# ── Presentations ─────────────────────────────────────────────


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: Expr
    rhs: Expr | None = None

    @property
    def expr(self) -> Expr:
        """The expression that must vanish."""
        return self.lhs if self.rhs is None else BinOp("-", self.lhs, self.rhs)


@dataclass
class AlgebraPresentation:
    """Generators with parities, relations and the coalgebra maps.

    Relations are kept sorted by name.  ``NAMEinv`` is implicitly available
    for every declared generator NAME and denotes its inverse.
    """

    name: str
    generators: list[tuple[str, int]] = field(default_factory=list)
    relations: list[Relation] = field(default_factory=list)
    coproducts: dict[str, Expr] = field(default_factory=dict)
    antipodes: dict[str, Expr] = field(default_factory=dict)
    counits: dict[str, Expr] = field(default_factory=dict)
    anchors: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.relations = sorted(self.relations, key=lambda r: r.name)

    @property
    def generator_names(self) -> list[str]:
        return [g for g, _ in self.generators]

    @property
    def parities(self) -> dict[str, int]:
        """Declared parities plus the implicit inverses."""
        out = dict(self.generators)
        for g, p in self.generators:
            out.setdefault(g + INVERSE_SUFFIX, p)
        return out

    def is_declared(self, name: str) -> bool:
        return name in self.parities

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def coalgebra_symbols(self) -> list[str]:
        """Symbols with a coproduct, in declaration order (inverses after their base)."""
        out = []
        for g in self.generator_names:
            for sym in (g, g + INVERSE_SUFFIX):
                if sym in self.coproducts and sym not in out:
                    out.append(sym)
        return out
