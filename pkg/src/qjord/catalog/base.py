"""Interface that every representation family must satisfy."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from qjord.core.errors import NotClosed, UnknownRep
from qjord.core.matrix import GradedMatrix, Parity, graded_kron, super_bracket
from qjord.core.scalars import ScalarContext, from_qq, limit_q1
from qjord.dsl.evaluate import Assignment, Evaluator
from qjord.dsl.expr import AlgebraPresentation

log = logging.getLogger("qjord")


@dataclass(frozen=True)
class Representation:
    """Generator symbol → matrix for one algebra in one representation."""

    algebra: str
    label: str
    ctx: ScalarContext
    parity: Parity
    generators: Mapping[str, GradedMatrix] = field(default_factory=dict)
    deformed: bool = False

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def selector(self) -> str:
        return f"{self.algebra}:{self.label}"

    def __getitem__(self, name: str) -> GradedMatrix:
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownRep(f"{self.selector} has no generator {name}") from None

    def identity(self) -> GradedMatrix:
        return GradedMatrix.identity(self.ctx, self.parity)

    def assignment(self) -> Assignment:
        return Assignment(self.ctx, self.parity, dict(self.generators))

    def at_q1(self) -> Representation:
        """The q → 1 limit of every generator, as a classical representation."""
        limited = {
            name: m.map_entries(lambda x: limit_q1(x, self.ctx))
            for name, m in self.generators.items()
        }
        return replace(self, generators=limited, deformed=False)


class RepFamily(ABC):
    """Contract for a family of catalog representations of one algebra."""

    @property
    @abstractmethod
    def algebra(self) -> str:
        """Short identifier used in selectors (``sl2``, ``osp12``, …)."""

    @property
    @abstractmethod
    def presentation(self) -> str:
        """Built-in classical presentation (source of the adjoint representation)."""

    @property
    def faithful_label(self) -> str:
        return "fund"

    @abstractmethod
    def labels(self) -> list[str]:
        """Labels with explicit matrix formulas (the adjoint comes on top)."""

    @abstractmethod
    def classical(self, label: str, ctx: ScalarContext) -> Representation:
        """Undeformed generator matrices."""

    @abstractmethod
    def quantum(self, label: str, ctx: ScalarContext) -> Representation:
        """Drinfeld–Jimbo generator matrices in the same basis."""

    def unknown(self, label: str) -> UnknownRep:
        return UnknownRep(f"{self.algebra}:{label} (known: {', '.join(self.labels())})")


# ── Derived representations ───────────────────────────────────


def cartan_power(rep: Representation, weights: Mapping[str, Fraction | int]) -> GradedMatrix:
    """q^{Σ c_i h_i} for diagonal Cartan matrices h_i of ``rep``."""
    ctx = rep.ctx
    exponents = [Fraction(0)] * rep.dim
    for name, c in weights.items():
        h = rep[name]
        for (i, j), v in h.items():
            if i != j:
                raise ValueError(f"{name} is not diagonal in {rep.selector}")
            exponents[i] += Fraction(c) * rational_value(v)
    return GradedMatrix.diagonal(ctx, [ctx.qpow(e) for e in exponents], rep.parity)


def rational_value(v) -> Fraction:
    if not (v.numer.is_ground and v.denom.is_ground):
        raise ValueError(f"Cartan eigenvalue {v} is not a rational number")
    return from_qq(v.numer.LC) / from_qq(v.denom.LC)


def tensor_rep(
    r1: Representation,
    r2: Representation,
    presentation: AlgebraPresentation | None = None,
) -> Representation:
    """Graded tensor product; primitive coproduct unless a presentation supplies Δ."""
    if r1.algebra != r2.algebra or r1.ctx != r2.ctx:
        raise UnknownRep(f"cannot tensor {r1.selector} with {r2.selector}")
    label = f"{r1.label}(x){r2.label}"
    if presentation is None:
        one1, one2 = r1.identity(), r2.identity()
        gens = {
            name: graded_kron(m, one2) + graded_kron(one1, r2[name])
            for name, m in r1.generators.items()
            if name in r2.generators
        }
        parity = next(iter(gens.values())).parity if gens else ()
        return Representation(r1.algebra, label, r1.ctx, parity, gens, r1.deformed)
    parities = presentation.parities
    legs = (Evaluator(r1.assignment(), parities), Evaluator(r2.assignment(), parities))
    total = Evaluator(Assignment(r1.ctx, ()), parities, legs)
    gens = {sym: total.matrix(e) for sym, e in presentation.coproducts.items()}
    return Representation(r1.algebra, label, r1.ctx, total.basis, gens, r1.deformed)


def _flatten(ctx: ScalarContext, matrices: list[GradedMatrix]):
    n = matrices[0].dim
    dok = {}
    for col, m in enumerate(matrices):
        for (i, j), v in m.items():
            dok[(i * n + j, col)] = v
    return DomainMatrix.from_dok(dok, (n * n, len(matrices)), ctx.domain)


def adjoint_rep(presentation: AlgebraPresentation, faithful: Representation) -> Representation:
    """ad(x)y = [x, y} on the span of the generators.

    Structure constants are read off a faithful representation; generators
    that are linear combinations of earlier ones are dropped from the basis.
    """
    ctx = faithful.ctx
    names = presentation.generator_names
    mats = [faithful[n] for n in names]
    _, pivots = _flatten(ctx, mats).rref()
    basis = [names[p] for p in pivots]
    basis_mats = [mats[p] for p in pivots]
    span = _flatten(ctx, basis_mats)
    k = len(basis)
    par = presentation.parities
    parity = tuple(par[b] for b in basis)

    def coordinates(target: GradedMatrix, what: str) -> list:
        aug, piv = span.hstack(_flatten(ctx, [target])).rref()
        if k in piv:
            raise NotClosed(f"{what} leaves the span of {', '.join(basis)}")
        dok = aug.to_dok()
        return [dok.get((i, k), ctx.zero) for i in range(k)]

    gens = {}
    for name, x in zip(names, mats):
        entries = {}
        for col, y in enumerate(basis_mats):
            for row, c in enumerate(coordinates(super_bracket(x, y), f"[{name}, {basis[col]}]")):
                if c:
                    entries[(row, col)] = c
        gens[name] = GradedMatrix.from_entries(ctx, entries, parity)
    log.debug("adjoint of %s: basis %s", presentation.name, ", ".join(basis))
    return Representation(faithful.algebra, "adjoint", ctx, parity, gens)
