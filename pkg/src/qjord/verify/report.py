"""Verdicts of individual identities and the report a suite run produces."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from qjord.core.errors import QjordError
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import format_scalar

log = logging.getLogger("qjord")

HOLDS = "holds"
FAILS = "fails"
HOLDS_WITH_VARIANT = "holds_with_variant"
VERDICTS = (HOLDS, HOLDS_WITH_VARIANT, FAILS)

# A residual computation returns one matrix or several that must all vanish
Residual = Callable[[], GradedMatrix | Sequence[GradedMatrix]]


@dataclass
class CheckResult:
    identity: str
    verdict: str
    detail: str = ""
    ledger_key: str | None = None
    residual: GradedMatrix | None = field(default=None, repr=False)

    def residual_entries(self) -> list[list]:
        """[[i, j, canonical string], …] for the nonzero residual entries."""
        if self.residual is None:
            return []
        ctx = self.residual.ctx
        return [[i, j, format_scalar(v, ctx)] for (i, j), v in sorted(self.residual.items())]

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "verdict": self.verdict}
        if self.detail:
            out["detail"] = self.detail
        if self.ledger_key:
            out["ledger"] = self.ledger_key
        if self.residual is not None:
            out["residual"] = self.residual_entries()
        return out


@dataclass
class VerificationReport:
    """Everything one suite established, sorted by identity name."""

    suite: str
    setting: str = ""
    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        self.results.sort(key=lambda r: r.identity)
        return result

    def extend(self, other: VerificationReport) -> None:
        for r in other.results:
            self.add(r)

    @property
    def counts(self) -> dict[str, int]:
        tally = Counter(r.verdict for r in self.results)
        return {v: tally.get(v, 0) for v in VERDICTS}

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict == FAILS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def verdict_of(self, identity: str) -> str:
        return self.result(identity).verdict

    def result(self, identity: str) -> CheckResult:
        for r in self.results:
            if r.identity == identity:
                return r
        raise KeyError(identity)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "setting": self.setting,
            "counts": self.counts,
            "results": [r.to_dict() for r in self.results],
        }


# ── Judging one identity ──────────────────────────────────────


def _combined(value: GradedMatrix | Sequence[GradedMatrix]) -> GradedMatrix | None:
    """The first nonzero residual, or None when everything vanishes."""
    parts = [value] if isinstance(value, GradedMatrix) else list(value)
    for m in parts:
        if not m.is_zero:
            return m
    return None


def _summary(m: GradedMatrix) -> str:
    (i, j), v = min(m.items())
    count = sum(1 for _ in m.items())
    return f"{count} nonzero residual entries, first ({i}, {j}) = {format_scalar(v, m.ctx)}"


def judge(
    identity: str,
    printed: Residual,
    variants: Iterable[tuple[str, Residual]] = (),
) -> CheckResult:
    """Evaluate the printed form, then each ledger variant in turn.

    Engine errors while evaluating the printed form make the identity fail
    with the message as its detail; they never propagate.
    """
    try:
        residual = _combined(printed())
        error = ""
    except QjordError as exc:
        residual, error = None, f"{type(exc).__name__}: {exc}"
    if residual is None and not error:
        return CheckResult(identity, HOLDS)
    for key, variant in variants:
        try:
            if _combined(variant()) is None:
                log.debug("%s fails as printed, holds with ledger variant %s", identity, key)
                return CheckResult(identity, HOLDS_WITH_VARIANT, ledger_key=key)
        except QjordError as exc:
            log.debug("ledger variant %s for %s not evaluable: %s", key, identity, exc)
    if error:
        return CheckResult(identity, FAILS, detail=error)
    return CheckResult(identity, FAILS, detail=_summary(residual), residual=residual)
