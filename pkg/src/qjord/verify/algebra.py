"""Relation suites and coalgebra axioms of a presentation in one representation.

Every identity is evaluated as an exact matrix equation: relations on the
generator matrices, relations on the coproduct images in V ⊗ V,
coassociativity in V ⊗ V ⊗ V, the counit and antipode axioms in V.  When
an identity fails as printed, the ledger definitions of the suite are
tried one at a time.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import replace
from functools import cached_property

from qjord.core.errors import QjordError
from qjord.core.matrix import GradedMatrix
from qjord.dsl.evaluate import (
    AntipodeEvaluator,
    Assignment,
    Evaluator,
    expand_tensor,
    scalar_assignment,
)
from qjord.dsl.expr import AlgebraPresentation, Expr, Gen, Relation, generators_in
from qjord.dsl.parser import parse_expression
from qjord.verify.ledger import Ledger, LedgerEntry
from qjord.verify.report import VerificationReport, judge

log = logging.getLogger("qjord")

# Classical φ of sl(2|1) and its deformed counterpart Φ (T^{±1/2} fixed)
SL21_CLASSICAL_AUTOMORPHISM = {
    "e1": "e1", "f1": "f1", "h1": "h1",
    "e2": "f3", "f2": "-e3", "h2": "-h3",
    "e3": "-f2", "f3": "e2", "h3": "-h2",
}
SL21_DEFORMED_AUTOMORPHISM = {
    "T": "T", "Tinv": "Tinv", "Thalf": "Thalf", "F1": "F1", "H1": "H1",
    "E2": "F3", "F2": "-E3", "H2": "-H3",
    "E3": "-f2", "F3": "E2", "H3": "-H2",
}

Identity = Callable[["PresentationCheck"], object]


class PresentationCheck:
    """Evaluators for one presentation on one assignment."""

    def __init__(self, presentation: AlgebraPresentation, assignment: Assignment):
        self.presentation = presentation
        self.assignment = assignment
        self.ctx = assignment.ctx
        self.parities = presentation.parities
        self._empty = Assignment(self.ctx, ())

    # ── Evaluators ──

    @cached_property
    def plain(self) -> Evaluator:
        return Evaluator(self.assignment, self.parities)

    @cached_property
    def counits(self) -> Evaluator:
        one_dim = Evaluator(scalar_assignment(self.ctx, {}), self.parities)
        values = {sym: one_dim.scalar(e) for sym, e in self.presentation.counits.items()}
        return Evaluator(scalar_assignment(self.ctx, values), self.parities)

    @cached_property
    def coproducts(self) -> Evaluator:
        """Evaluator whose generators are the matrices Δ(x) on V ⊗ V."""
        total = Evaluator(self._empty, self.parities, (self.plain, self.plain))
        images = {sym: total.matrix(e) for sym, e in self.presentation.coproducts.items()}
        return Evaluator(Assignment(self.ctx, total.basis, images), self.parities)

    @cached_property
    def antipodes(self) -> AntipodeEvaluator:
        images = {sym: self.plain.matrix(e) for sym, e in self.presentation.antipodes.items()}
        return AntipodeEvaluator(
            self.plain, Assignment(self.ctx, self.assignment.parity, images),
        )

    def on_legs(self, left: Evaluator, right: Evaluator, sym: str) -> GradedMatrix:
        expr = self.presentation.coproducts[sym]
        return Evaluator(self._empty, self.parities, (left, right)).matrix(expr)

    # ── Residuals ──

    def relation(self, name: str) -> GradedMatrix:
        return self.plain.matrix(self.presentation.relation(name).expr)

    def relation_on_coproducts(self, name: str) -> GradedMatrix:
        """Δ is a homomorphism: the relation vanishes on the images Δ(x)."""
        return self.coproducts.matrix(self.presentation.relation(name).expr)

    def coassociativity(self, sym: str) -> GradedMatrix:
        return (self.on_legs(self.coproducts, self.plain, sym)
                - self.on_legs(self.plain, self.coproducts, sym))

    def counit(self, sym: str) -> tuple[GradedMatrix, GradedMatrix]:
        """(ε ⊗ id)Δ(x) − x and (id ⊗ ε)Δ(x) − x."""
        x = self.plain.matrix(Gen(sym))
        return (self.on_legs(self.counits, self.plain, sym) - x,
                self.on_legs(self.plain, self.counits, sym) - x)

    def antipode(self, sym: str) -> tuple[GradedMatrix, GradedMatrix]:
        """μ(S ⊗ id)Δ(x) − ε(x)·1 and μ(id ⊗ S)Δ(x) − ε(x)·1."""
        plain, s = self.plain, self.antipodes
        unit = plain.identity().scale(self.counits.matrix(Gen(sym)).entry(0, 0))
        left = right = GradedMatrix.zeros(self.ctx, self.assignment.parity)
        for term in expand_tensor(self.presentation.coproducts[sym], self.parities):
            c = plain.scalar(term.coefficient)
            left = left + (s.matrix(term.left) @ plain.matrix(term.right)).scale(c)
            right = right + (plain.matrix(term.left) @ s.matrix(term.right)).scale(c)
        return left - unit, right - unit


# ── Ledger patches ────────────────────────────────────────────


def patched(presentation: AlgebraPresentation, entry: LedgerEntry) -> AlgebraPresentation:
    """Copy of the presentation with one definition replaced by the ledger text."""
    kind, name = entry.definition
    if kind == "relation":
        presentation.relation(name)
        expr = parse_expression(entry.variant, presentation)
        relations = [r if r.name != name else Relation(name, expr) for r in presentation.relations]
        return replace(presentation, relations=relations)
    table = kind + "s"
    expr = parse_expression(entry.variant, presentation, allow_tensor=kind == "coproduct")
    return replace(presentation, **{table: {**getattr(presentation, table), name: expr}})


def identities(presentation: AlgebraPresentation) -> dict[str, Identity]:
    """Identity name → residual computation, for a full presentation run."""
    p = presentation
    out: dict[str, Identity] = {}
    for rel in p.relations:
        out[f"relation:{rel.name}"] = lambda c, n=rel.name: c.relation(n)
    symbols = p.coalgebra_symbols()
    if symbols:
        for rel in p.relations:
            out[f"delta:{rel.name}"] = lambda c, n=rel.name: c.relation_on_coproducts(n)
    for sym in symbols:
        out[f"coassoc:{sym}"] = lambda c, s=sym: c.coassociativity(s)
        if p.counits:
            out[f"counit:{sym}"] = lambda c, s=sym: c.counit(s)
        if p.antipodes and p.counits:
            out[f"antipode:{sym}"] = lambda c, s=sym: c.antipode(s)
    return out


def verify_presentation(
    presentation: AlgebraPresentation,
    assignment: Assignment,
    ledger: Ledger | None = None,
    suite: str | None = None,
    setting: str = "",
) -> VerificationReport:
    """Relations, then (when the presentation has them) the coalgebra axioms."""
    suite = suite or presentation.name
    check = PresentationCheck(presentation, assignment)
    report = VerificationReport(suite, setting)
    fixes = []
    for entry in (ledger.definitions(suite) if ledger else []):
        try:
            fixes.append((entry.key, PresentationCheck(patched(presentation, entry), assignment)))
        except (KeyError, QjordError) as exc:
            log.debug("ledger entry %s does not apply to %s: %s", entry.key, suite, exc)
    for identity, residual in identities(presentation).items():
        variants = [(key, lambda c=c, r=residual: r(c)) for key, c in fixes]
        report.add(judge(identity, lambda r=residual: r(check), variants))
    log.info("%s: %d holds, %d with variant, %d fails", suite, *report.counts.values())
    return report


def verify_relations(
    presentation: AlgebraPresentation, assignment: Assignment, suite: str | None = None,
) -> VerificationReport:
    """The relation list alone."""
    check = PresentationCheck(presentation, assignment)
    report = VerificationReport(suite or presentation.name)
    for rel in presentation.relations:
        report.add(judge(f"relation:{rel.name}", lambda n=rel.name: check.relation(n)))
    return report


# ── Automorphisms ─────────────────────────────────────────────


def substituted(
    presentation: AlgebraPresentation, assignment: Assignment, table: Mapping[str, str],
) -> Assignment:
    """Each generator x reassigned to the matrix of the image φ(x)."""
    plain = Evaluator(assignment, presentation.parities)
    images = {
        name: plain.matrix(parse_expression(text, presentation)) for name, text in table.items()
    }
    return Assignment(assignment.ctx, assignment.parity, images)


def automorphism_check(
    table: Mapping[str, str],
    presentation: AlgebraPresentation,
    assignment: Assignment,
    ledger: Ledger | None = None,
    suite: str = "automorphism",
) -> VerificationReport:
    """Every relation with x replaced by φ(x) still vanishes.

    Ledger entries ``suite/X`` replace the image text of generator X.  Each
    relation only reads the images of the generators it mentions.
    """
    report = VerificationReport(suite, presentation.name)
    images: dict[tuple, PresentationCheck] = {}

    def check(t: Mapping[str, str], expr: Expr) -> PresentationCheck:
        used = generators_in(expr)
        used |= {name.removesuffix("inv") for name in used}
        needed = {name: text for name, text in t.items() if name in used}
        key = tuple(sorted(needed.items()))
        if key not in images:
            images[key] = PresentationCheck(
                presentation, substituted(presentation, assignment, needed),
            )
        return images[key]

    tables = []
    for name in table:
        entry = ledger.get(suite, name) if ledger else None
        if entry is not None:
            tables.append((entry.key, {**table, name: entry.variant}))
    for rel in presentation.relations:
        variants = [
            (key, lambda t=t, r=rel: check(t, r.expr).relation(r.name)) for key, t in tables
        ]
        report.add(judge(
            f"relation:{rel.name}", lambda r=rel: check(table, r.expr).relation(r.name), variants,
        ))
    return report


__all__ = [
    "SL21_CLASSICAL_AUTOMORPHISM",
    "SL21_DEFORMED_AUTOMORPHISM",
    "PresentationCheck",
    "automorphism_check",
    "identities",
    "patched",
    "substituted",
    "verify_presentation",
    "verify_relations",
]
