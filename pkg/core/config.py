"""
Configuration module
Central place for every tunable, read from environment variables / .env
"""

import os
from typing import Dict, Any, Optional
from pathlib import Path
from dotenv import load_dotenv

# Load .env from the working directory
load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


def _env_optional_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    return int(raw)


# ============================================
# Equator engine
# ============================================

# Default worker count for the equator engine and the exhaustive search.
# The CLI --threads flag overrides it.
EQUATOR_THREADS: int = int(os.getenv("EQUATOR_THREADS", "1"))

# Default ceiling for equator searches (unset = natural 2d+1 ceiling)
EQUATOR_CAP: Optional[int] = _env_optional_int("EQUATOR_CAP")

# ============================================
# Structure verification
# ============================================

# Isometric q-cycles enumerated per seed vertex by the one-vertex-per-part check
# (unset = every cycle; a number turns the check into a sample)
STRUCTURE_CYCLE_BUDGET: Optional[int] = _env_optional_int("STRUCTURE_CYCLE_BUDGET")

# (v, w) pairs sampled per part for the disk-intersection check
STRUCTURE_PAIR_SAMPLES: int = int(os.getenv("STRUCTURE_PAIR_SAMPLES", "4"))

# Seed for every sampled check
RANDOM_SEED: int = int(os.getenv("RANDOM_SEED", "20240101"))

# ============================================
# Exhaustive search
# ============================================

# Hard ceiling on the order explored by min_order_search
SEARCH_MAX_N: int = int(os.getenv("SEARCH_MAX_N", "12"))

# ============================================
# Output
# ============================================

# Where construct / search write graph files
OUTPUT_DIR: Path = Path(os.getenv("OUTPUT_DIR", "./tmp/graphs"))

# ============================================
# Logging
# ============================================

# DEBUG, INFO, WARNING, ERROR
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

# Verbose diagnostics
DEBUG_MODE: bool = _env_bool("DEBUG_MODE", "False")

# Log file directory (only created when file logging is requested)
LOG_OUTPUT_DIR: Path = Path(os.getenv("LOG_OUTPUT_DIR", "./tmp/logs"))


# ============================================
# Validation
# ============================================

def validate_config() -> Dict[str, Any]:
    """
    Check the configuration for obviously broken values.

    Returns:
        {"valid": bool, "errors": [...], "warnings": [...]}
    """
    results = {
        "valid": True,
        "errors": [],
        "warnings": []
    }

    if EQUATOR_THREADS < 1:
        results["valid"] = False
        results["errors"].append(
            f"EQUATOR_THREADS must be >= 1, got {EQUATOR_THREADS}"
        )

    if EQUATOR_CAP is not None and EQUATOR_CAP < 3:
        results["valid"] = False
        results["errors"].append(
            f"EQUATOR_CAP must be >= 3 when set, got {EQUATOR_CAP}"
        )

    if SEARCH_MAX_N > 12:
        results["valid"] = False
        results["errors"].append(
            f"SEARCH_MAX_N={SEARCH_MAX_N} leaves the exhaustive regime (max 12)"
        )

    if STRUCTURE_CYCLE_BUDGET is not None and STRUCTURE_CYCLE_BUDGET < 1:
        results["valid"] = False
        results["errors"].append("STRUCTURE_CYCLE_BUDGET must be positive")

    if STRUCTURE_PAIR_SAMPLES < 1:
        results["warnings"].append(
            "STRUCTURE_PAIR_SAMPLES < 1: the disk-intersection clause checks nothing"
        )

    if LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        results["warnings"].append(f"Unknown LOG_LEVEL {LOG_LEVEL!r}, falling back to INFO")

    if EQUATOR_THREADS > (os.cpu_count() or 1):
        results["warnings"].append(
            f"EQUATOR_THREADS={EQUATOR_THREADS} exceeds the {os.cpu_count()} available CPUs"
        )

    return results


def get_config_summary() -> str:
    """Human-readable configuration dump (used by --show-config)."""
    return f"""
=== Equator Workbench - configuration ===

Equator engine:
  - Threads: {EQUATOR_THREADS}
  - Default cap: {EQUATOR_CAP if EQUATOR_CAP is not None else 'none (2d+1)'}

Structure verification:
  - Cycle budget per seed: {STRUCTURE_CYCLE_BUDGET if STRUCTURE_CYCLE_BUDGET is not None else 'none (all cycles)'}
  - Pair samples per part: {STRUCTURE_PAIR_SAMPLES}
  - Random seed: {RANDOM_SEED}

Search:
  - Max order: {SEARCH_MAX_N}

Output:
  - Graph directory: {OUTPUT_DIR}

Logging:
  - Level: {LOG_LEVEL}
  - Debug mode: {DEBUG_MODE}
  - Log directory: {LOG_OUTPUT_DIR}
=========================================
"""


if __name__ == "__main__":
    print(get_config_summary())

    validation = validate_config()
    if not validation["valid"]:
        print("\n❌ Configuration invalid:")
        for error in validation["errors"]:
            print(f"  - {error}")

    if validation["warnings"]:
        print("\n⚠️  Configuration warnings:")
        for warning in validation["warnings"]:
            print(f"  - {warning}")

    if validation["valid"]:
        print("\n✅ Configuration OK")
