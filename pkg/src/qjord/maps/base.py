"""Interface shared by the nonlinear generator maps."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, field

from qjord.catalog.base import Representation
from qjord.core.errors import EvaluationError, UnknownRep
from qjord.core.matrix import GradedMatrix, Parity
from qjord.core.scalars import ScalarContext, at_h_zero
from qjord.core.series import nil_apply, nil_log
from qjord.dsl.evaluate import Assignment

log = logging.getLogger("qjord")


@dataclass(frozen=True)
class DeformedGeneratorSet:
    """Deformed generator symbol → matrix, built from one classical representation."""

    algebra: str
    variant: str
    source: Representation
    generators: Mapping[str, GradedMatrix] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def ctx(self) -> ScalarContext:
        return self.source.ctx

    @property
    def parity(self) -> Parity:
        return self.source.parity

    @property
    def dim(self) -> int:
        return self.source.dim

    @property
    def label(self) -> str:
        return f"{self.variant}[{self.source.selector}]"

    def __getitem__(self, name: str) -> GradedMatrix:
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownRep(f"{self.label} has no generator {name}") from None

    def assignment(self) -> Assignment:
        return Assignment(self.ctx, self.parity, dict(self.generators))

    def as_representation(self) -> Representation:
        """The deformed matrices wrapped as a representation (for tensor products)."""
        return Representation(
            self.source.algebra, self.variant, self.ctx, self.parity, dict(self.generators),
            deformed=True,
        )

    def at_h0(self) -> dict[str, GradedMatrix]:
        """Every generator with h set to 0 (formal h only)."""
        return {
            name: m.map_entries(lambda x: at_h_zero(x, self.ctx))
            for name, m in self.generators.items()
        }


class DeformationMap(ABC):
    """Contract for a map from classical generators to deformed ones."""

    @property
    @abstractmethod
    def key(self) -> str:
        """Registry key (``slN:3``, ``osp_super``, …)."""

    @property
    @abstractmethod
    def algebra(self) -> str:
        """Catalog algebra id of the source representation."""

    @property
    @abstractmethod
    def presentation(self) -> str:
        """Built-in presentation the deformed generators satisfy."""

    @property
    def variants(self) -> tuple[str, ...]:
        return ("default",)

    @abstractmethod
    def apply(self, rep: Representation, variant: str = "default") -> DeformedGeneratorSet:
        """Deformed matrices for a classical representation."""

    def check_source(self, rep: Representation) -> None:
        if rep.algebra != self.algebra or rep.deformed:
            raise UnknownRep(f"map {self.key} needs a classical {self.algebra} rep, "
                             f"got {rep.selector}")


# ── Shared building blocks ────────────────────────────────────


def jordan_pair(x: GradedMatrix) -> tuple[GradedMatrix, GradedMatrix, GradedMatrix]:
    """T, T⁻¹ and sqrt(1 + x²) for T^{±1} = ±x + sqrt(1 + x²), x nilpotent."""
    root = nil_apply("sqrt1p", x @ x)
    return x + root, root - x, root


def over_h(m: GradedMatrix) -> GradedMatrix:
    """m / h; the deformation parameter must be nonzero."""
    h = m.ctx.h
    if not h:
        raise EvaluationError("division by h with h specialised to 0")
    return m.scale(m.ctx.one / h)


def log_over_h(t: GradedMatrix) -> GradedMatrix:
    """X = h⁻¹ ln T for unipotent T."""
    return over_h(nil_log(t))
