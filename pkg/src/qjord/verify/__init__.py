"""Verification suites and the verdicts they produce."""

from __future__ import annotations

from qjord.verify.algebra import (
    PresentationCheck,
    automorphism_check,
    verify_presentation,
    verify_relations,
)
from qjord.verify.ledger import Ledger, LedgerEntry, load_ledger
from qjord.verify.report import (
    FAILS,
    HOLDS,
    HOLDS_WITH_VARIANT,
    CheckResult,
    VerificationReport,
    judge,
)
from qjord.verify.suites import SUITES, Suite, SuiteOptions, get_suite, run_suite

__all__ = [
    "FAILS",
    "HOLDS",
    "HOLDS_WITH_VARIANT",
    "SUITES",
    "CheckResult",
    "Ledger",
    "LedgerEntry",
    "PresentationCheck",
    "Suite",
    "SuiteOptions",
    "VerificationReport",
    "automorphism_check",
    "get_suite",
    "judge",
    "load_ledger",
    "run_suite",
    "verify_presentation",
    "verify_relations",
]
