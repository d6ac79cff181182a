"""Load project settings from config.yml and derive runtime paths."""

import logging
import os
from fractions import Fraction
from pathlib import Path

import yaml

ROOT_DIR = Path(__file__).resolve().parent.parent.parent

_config_file = ROOT_DIR / "config.yml"
with open(_config_file, encoding="utf-8") as _f:
    _raw = yaml.safe_load(_f)

# ── Paths (resolved relative to project root) ──
OUTPUT_DIR = ROOT_DIR / _raw["paths"]["output"]
LOG_PATH = ROOT_DIR / _raw["paths"]["log"]
LEDGER_PATH = ROOT_DIR / _raw["paths"]["ledger"]

# ── Scalar tower ──
ROOT_DEGREE: int = int(_raw.get("scalars", {}).get("root_degree", 6))
_h_value = _raw.get("scalars", {}).get("h_value")
H_VALUE: Fraction | None = Fraction(str(_h_value)) if _h_value is not None else None

# ── Export ──
EXPORT_FORMAT: str = _raw.get("export", {}).get("format", "json")
EXPORT_INDENT: int = int(_raw.get("export", {}).get("indent", 2))

# ── Catalog limits ──
MAX_TWICE_SPIN: int = int(_raw.get("catalog", {}).get("max_twice_spin", 6))
MAX_RANK: int = int(_raw.get("catalog", {}).get("max_rank", 6))

# ── Suite defaults ──
VERIFY_DEFAULTS: dict[str, dict[str, str]] = _raw.get("verify", {}).get("defaults", {})


def ledger_path() -> Path:
    """The discrepancy ledger in use; QJORD_LEDGER wins over config.yml."""
    override = os.environ.get("QJORD_LEDGER")
    return Path(override) if override else LEDGER_PATH


def log_level() -> int:
    """Console level from QJORD_LOG_LEVEL (a name such as DEBUG), INFO otherwise."""
    name = os.environ.get("QJORD_LOG_LEVEL", "").strip().upper()
    level = logging.getLevelName(name) if name else logging.INFO
    return level if isinstance(level, int) else logging.INFO


def prepare_directories() -> None:
    """Ensure that the output directory exists."""
    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
