"""Gauge operators, contraction results and the interface of a contraction family.

A contraction family knows how to write down R_q in a (fund ⊗ arbitrary)
representation, which singular gauge E_q(η x) to conjugate it with, and the
closed and universal R_h formulas the limit is compared against.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from qjord.catalog import classical_rep, q_rep
from qjord.catalog.base import Representation
from qjord.core.errors import PoleAtOne, UnknownFamily
from qjord.core.matrix import GradedMatrix, graded_kron
from qjord.core.scalars import Scalar, ScalarContext, limit_q1
from qjord.core.series import nil_apply

log = logging.getLogger("qjord")

ROUTES = ("contracted", "closed_form", "universal", "rq")


@dataclass(frozen=True)
class GaugeSpec:
    """E_{q^b}(η x) with η = h / (q^b − 1) and x read off the q-representation."""

    family: str
    root: str
    series: str
    eta_base: int
    root_of: Callable[[Representation], GradedMatrix]

    def eta(self, ctx: ScalarContext) -> Scalar:
        return ctx.h / (ctx.q**self.eta_base - ctx.one)


@dataclass(frozen=True)
class RMatrixResult:
    matrix: GradedMatrix
    family: str
    reps: tuple[str, str]
    route: str
    variant: str = ""
    extras: Mapping[str, GradedMatrix] = field(default_factory=dict)

    @property
    def label(self) -> str:
        tag = f"{self.route}:{self.variant}" if self.variant else self.route
        return f"{self.family} {self.reps[0]} (x) {self.reps[1]} [{tag}]"

    @property
    def limit_taken(self) -> bool:
        return self.route != "rq"


def gauge(rep_q: Representation, spec: GaugeSpec) -> GradedMatrix:
    """The singular gauge on one tensor slot; unipotent because its root is nilpotent."""
    x = spec.root_of(rep_q).scale(spec.eta(rep_q.ctx))
    return nil_apply(spec.series, x)


def limit_matrix(m: GradedMatrix) -> GradedMatrix:
    """Entrywise q → 1 limit; a surviving pole is reported with its (row, col)."""
    ctx = m.ctx
    entries = {}
    for (i, j), v in m.items():
        try:
            entries[(i, j)] = limit_q1(v, ctx)
        except PoleAtOne as exc:
            raise PoleAtOne(f"entry ({i}, {j}) keeps a pole at q = 1: {exc}", (i, j)) from exc
    return GradedMatrix.from_entries(ctx, {k: v for k, v in entries.items() if v}, m.parity)


def conjugate_and_limit(
    rq: GradedMatrix, first: GradedMatrix, second: GradedMatrix,
) -> GradedMatrix:
    """lim (G₁⁻¹ ⊗ G₂⁻¹) R_q (G₁ ⊗ G₂)."""
    big_g = graded_kron(first, second)
    big_g_inv = graded_kron(first.inverse(), second.inverse())
    conjugated = big_g_inv @ rq @ big_g
    log.debug("conjugated R_q (dim %d, %d nonzero entries)", conjugated.dim,
              sum(1 for _ in conjugated.items()))
    return limit_matrix(conjugated)


class ContractionFamily(ABC):
    """Contract for one algebra whose R_h is reached by contraction."""

    @property
    @abstractmethod
    def key(self) -> str:
        """Registry key (``sl2``, ``osp``, …)."""

    @property
    @abstractmethod
    def algebra(self) -> str:
        """Catalog algebra of both tensor factors."""

    @property
    def gauge_spec(self) -> GaugeSpec | None:
        return None

    @property
    def default_pair(self) -> tuple[str, str]:
        return ("fund", "fund")

    def rq(self, ctx: ScalarContext, pair: tuple[str, str], route: str = "") -> RMatrixResult:
        raise UnknownFamily(f"{self.key} has no R_q matrix")

    def closed(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        raise UnknownFamily(f"{self.key} has no closed-form R_h")

    @abstractmethod
    def universal(
        self, ctx: ScalarContext, pair: tuple[str, str], variant: str = "",
    ) -> RMatrixResult:
        """Product of terminating exponentials in deformed generators of both legs."""

    @property
    def contraction_route(self) -> str:
        """R_q route fed to the contraction."""
        return ""

    def contraction_pair(self, pair: tuple[str, str]) -> tuple[str, str]:
        """The pair whose R_q is conjugated; families may fix it."""
        return pair

    def contract(self, ctx: ScalarContext, pair: tuple[str, str]) -> RMatrixResult:
        spec = self.gauge_spec
        if spec is None:
            raise UnknownFamily(f"{self.key} has no gauge; nothing to contract")
        pair = self.contraction_pair(pair)
        rq = self.rq(ctx, pair, self.contraction_route)
        first, second = self.q_reps(ctx, pair)
        matrix = conjugate_and_limit(rq.matrix, gauge(first, spec), gauge(second, spec))
        log.info("contracted %s %s (x) %s", self.key, *pair)
        return RMatrixResult(matrix, self.key, pair, "contracted")

    def q_reps(self, ctx: ScalarContext, pair: tuple[str, str]):
        return q_rep(self.algebra, pair[0], ctx), q_rep(self.algebra, pair[1], ctx)

    def classical_reps(self, ctx: ScalarContext, pair: tuple[str, str]):
        return classical_rep(self.algebra, pair[0], ctx), classical_rep(self.algebra, pair[1], ctx)
