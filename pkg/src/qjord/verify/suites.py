"""Suite registry — maps suite names to ready-to-run verification suites.

Presentation suites take their default representation, map and map variant
from the ``verify.defaults`` section of config.yml; every option can be
overridden from the command line.
"""

from __future__ import annotations

import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

from qjord.catalog import parse_selector, resolve
from qjord.contraction import FAMILIES, parse_pair
from qjord.core.errors import UnknownPresentation, UnknownRep
from qjord.core.scalars import ScalarContext
from qjord.dsl.builtins import builtin, builtin_names
from qjord.dsl.evaluate import Assignment
from qjord.dsl.expr import AlgebraPresentation
from qjord.dsl.parser import parse
from qjord.helpers.log import suite_scope
from qjord.maps import deform
from qjord.settings import VERIFY_DEFAULTS
from qjord.verify.algebra import (
    SL21_CLASSICAL_AUTOMORPHISM,
    SL21_DEFORMED_AUTOMORPHISM,
    automorphism_check,
    verify_presentation,
)
from qjord.verify.identities import (
    verify_map_definitions,
    verify_ope,
    verify_talpha,
    verify_twist,
)
from qjord.verify.ledger import Ledger
from qjord.verify.report import VerificationReport
from qjord.verify.rmatrix import (
    compare_routes,
    compare_sl3_rq_routes,
    verify_classical_r,
    verify_frt,
    verify_rmatrix,
)

log = logging.getLogger("qjord")

_TEMPLATE_RE = re.compile(r"^(uh_slN|classical_slN)(?:\((\d+)\))?$")


@dataclass
class SuiteOptions:
    """What a single ``qjord verify`` run was asked for."""

    ctx: ScalarContext = field(default_factory=ScalarContext)
    ledger: Ledger = field(default_factory=Ledger)
    rep: str | None = None
    reps: str | None = None
    map_key: str | None = None
    variant: str | None = None


class Suite(ABC):
    @property
    @abstractmethod
    def name(self) -> str:
        """Key used on the command line."""

    @property
    @abstractmethod
    def summary(self) -> str:
        """One line for ``qjord catalog``."""

    @abstractmethod
    def run(self, options: SuiteOptions) -> VerificationReport:
        """Evaluate every identity of the suite."""


# ── Presentation suites ───────────────────────────────────────


def _algebra_rank(selector: str) -> int:
    algebra, _ = parse_selector(selector)
    m = re.fullmatch(r"sl(\d+)", algebra)
    if not m:
        raise UnknownRep(f"{selector} is not an sl(N) representation")
    return int(m.group(1))


def load_presentation(name: str) -> AlgebraPresentation:
    """A built-in name, an sl(N) template such as ``uh_slN(4)``, or a .qalg file."""
    path = Path(name)
    if path.suffix == ".qalg":
        if not path.exists():
            raise UnknownPresentation(f"no such file {path}")
        return parse(path.read_text(encoding="utf-8"))
    return builtin(name)


class PresentationSuite(Suite):
    """Relations and Hopf axioms of one presentation in one assignment."""

    def __init__(self, presentation: str):
        self.presentation = presentation

    @property
    def name(self) -> str:
        return self.presentation

    @property
    def summary(self) -> str:
        d = self.defaults
        via = f" via {d['map']}" if d.get("map") else ""
        return f"relations and Hopf axioms on {d.get('rep', '?')}{via}"

    @property
    def defaults(self) -> dict[str, str]:
        m = _TEMPLATE_RE.match(self.presentation)
        key = m.group(1) if m else self.presentation
        return VERIFY_DEFAULTS.get(key, {})

    def resolved(self, options: SuiteOptions) -> tuple[AlgebraPresentation, Assignment, str]:
        d = self.defaults
        selector = options.rep or d.get("rep")
        if not selector:
            raise UnknownRep(f"suite {self.name} needs --rep")
        map_key = options.map_key or d.get("map")
        variant = options.variant or d.get("variant", "default")
        name = self.presentation
        m = _TEMPLATE_RE.match(name)
        if m and not m.group(2):
            name = f"{m.group(1)}({_algebra_rank(selector)})"
            if map_key and map_key.startswith("slN:"):
                map_key = f"slN:{_algebra_rank(selector)}"
        p = load_presentation(name)
        ctx = options.ctx
        if map_key:
            source = deform(map_key, resolve(selector, ctx), variant)
            setting = f"{selector} via {map_key}" + (f":{variant}" if variant != "default" else "")
            return p, source.assignment(), setting
        quantum = name.startswith("uq_")
        return p, resolve(selector, ctx, quantum=quantum).assignment(), selector

    def run(self, options: SuiteOptions) -> VerificationReport:
        p, assignment, setting = self.resolved(options)
        log.debug("suite %s: presentation %s on %s", self.name, p.name, setting)
        return verify_presentation(p, assignment, options.ledger, self.name, setting)


# ── Everything else ───────────────────────────────────────────


class FunctionSuite(Suite):
    """A suite backed by one verification function."""

    def __init__(self, name: str, summary: str, runner):
        self._name = name
        self._summary = summary
        self.runner = runner

    @property
    def name(self) -> str:
        return self._name

    @property
    def summary(self) -> str:
        return self._summary

    def run(self, options: SuiteOptions) -> VerificationReport:
        return self.runner(options)


def _sl21_automorphism(o: SuiteOptions) -> VerificationReport:
    selector = o.rep or "sl21:fund"
    source = deform("sl21", resolve(selector, o.ctx))
    return automorphism_check(
        SL21_DEFORMED_AUTOMORPHISM, builtin("uh_sl21"), source.assignment(), o.ledger,
        suite="sl21_automorphism",
    )


def _sl21_classical_automorphism(o: SuiteOptions) -> VerificationReport:
    rep = resolve(o.rep or "sl21:fund", o.ctx)
    return automorphism_check(
        SL21_CLASSICAL_AUTOMORPHISM, builtin("classical_sl21"), rep.assignment(), o.ledger,
        suite="sl21_classical_automorphism",
    )


def _rmatrix(family: str):
    def run(o: SuiteOptions) -> VerificationReport:
        pair = parse_pair(family, o.reps)
        report = verify_rmatrix(family, pair, o.ctx, ledger=o.ledger)
        report.extend(compare_routes(family, pair, o.ctx, o.ledger))
        return report

    return run


def _osp_labels(o: SuiteOptions, default: tuple[str, str]) -> tuple[str, str]:
    return parse_pair("osp", o.reps) if o.reps else default


def _twist(o: SuiteOptions) -> VerificationReport:
    pair = _osp_labels(o, ("j=1/2", "j=1/2"))
    variants = [o.variant] if o.variant else ["minimal", "hdiag"]
    report = VerificationReport("osp_twist", f"{pair[0]} (x) {pair[1]}")
    for variant in variants:
        report.extend(verify_twist(variant, o.ctx, pair, o.ledger))
    return report


def _frt(o: SuiteOptions) -> VerificationReport:
    label = _osp_labels(o, ("j=1/2", "j=1"))[1]
    return verify_frt(label, o.ctx)


def _build() -> dict[str, Suite]:
    suites: dict[str, Suite] = {}
    for name in builtin_names():
        key = name.replace("(N)", "")
        suites[key] = PresentationSuite(key)
    special = [
        FunctionSuite("sl21_automorphism", "deformed automorphism Φ of U_h(sl(2|1))",
                      _sl21_automorphism),
        FunctionSuite("sl21_classical_automorphism", "classical automorphism φ of sl(2|1)",
                      _sl21_classical_automorphism),
        FunctionSuite("sl3_routes", "sl(3) displayed R_q against the universal formula",
                      lambda o: compare_sl3_rq_routes(o.ctx, o.ledger)),
        FunctionSuite("osp_classical_r", "CYBE and first-order agreement for osp(1|2)",
                      lambda o: verify_classical_r(o.ctx)),
        FunctionSuite("osp_frt", "RLL relation and bialgebra structure of L", _frt),
        FunctionSuite("osp_twist", "twist, cocycle and antipode identities", _twist),
        FunctionSuite("osp_ope", "operator identities of U_q(osp(1|2)) reps",
                      lambda o: verify_ope(o.ctx)),
        FunctionSuite("talpha", "power and composition laws of 𝒯_(α)",
                      lambda o: verify_talpha(o.ctx, ledger=o.ledger)),
        FunctionSuite("osp_super_map", "printed definitions of the super-Jordanian map",
                      lambda o: verify_map_definitions("osp_super_map", o.ctx, ledger=o.ledger)),
    ]
    special += [
        FunctionSuite(f"{family}_rmatrix", f"YBE, triangularity and routes of the {family} R_h",
                      _rmatrix(family))
        for family in FAMILIES
    ]
    suites.update({s.name: s for s in special})
    return suites


SUITES: dict[str, Suite] = _build()


def get_suite(name: str) -> Suite:
    """Registered suite, or an ad hoc presentation suite for templates and .qalg files."""
    if name in SUITES:
        return SUITES[name]
    if _TEMPLATE_RE.match(name) or name.endswith(".qalg"):
        return PresentationSuite(name)
    raise UnknownPresentation(f"unknown suite {name!r} (see `qjord catalog`)")


def run_suite(name: str, options: SuiteOptions | None = None) -> VerificationReport:
    options = options or SuiteOptions()
    with suite_scope(name):
        report = get_suite(name).run(options)
    log.info("suite %s: %s", name, ", ".join(f"{k} {v}" for k, v in report.counts.items()))
    return report
