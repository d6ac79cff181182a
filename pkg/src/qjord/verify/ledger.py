"""The discrepancy ledger: corrections applied when a printed identity fails.

``ledger.yml`` holds a list of entries keyed ``suite/identity``.  Keys whose
identity names a definition (``coproduct:H3``, ``relation:F_square`` …)
carry replacement DSL text; the others carry a named switch understood by
the check that owns the identity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import yaml

from qjord.core.errors import LedgerError
from qjord.settings import ledger_path

log = logging.getLogger("qjord")

DEFINITION_KINDS = ("relation", "coproduct", "antipode", "counit")


@dataclass(frozen=True)
class LedgerEntry:
    key: str
    variant: str
    note: str = ""

    @property
    def suite(self) -> str:
        return self.key.split("/", 1)[0]

    @property
    def identity(self) -> str:
        return self.key.split("/", 1)[1]

    @property
    def definition(self) -> tuple[str, str] | None:
        """(kind, symbol) when the entry replaces a presentation definition."""
        kind, sep, name = self.identity.partition(":")
        if sep and kind in DEFINITION_KINDS:
            return kind, name
        return None


class Ledger:
    def __init__(self, entries: list[LedgerEntry] | None = None):
        self.entries = {e.key: e for e in entries or []}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())

    def get(self, suite: str, identity: str) -> LedgerEntry | None:
        return self.entries.get(f"{suite}/{identity}")

    def definitions(self, suite: str) -> list[LedgerEntry]:
        return [e for e in self if e.suite == suite and e.definition is not None]


def load_ledger(path: Path | str | None = None) -> Ledger:
    """Read the ledger; a missing file is an empty ledger."""
    path = Path(path) if path is not None else ledger_path()
    if not path.exists():
        log.debug("no ledger at %s", path)
        return Ledger()
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise LedgerError(f"{path}: {exc}") from exc
    items = raw.get("entries", []) if isinstance(raw, dict) else None
    if not isinstance(items, list):
        raise LedgerError(f"{path}: expected a mapping with an 'entries' list")
    entries = []
    for n, item in enumerate(items, 1):
        if not isinstance(item, dict) or "key" not in item or "variant" not in item:
            raise LedgerError(f"{path}: entry {n} needs 'key' and 'variant'")
        key = str(item["key"])
        if "/" not in key:
            raise LedgerError(f"{path}: entry {n} key {key!r} is not suite/identity")
        entries.append(LedgerEntry(key, str(item["variant"]), str(item.get("note", ""))))
    log.debug("loaded %d ledger entries from %s", len(entries), path)
    return Ledger(entries)
