"""
Configuration management for pdrm
"""

import copy
import logging
from pathlib import Path
from typing import Any

import yaml

logger = logging.getLogger(__name__)


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Merge override into a copy of base, recursing into nested sections"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Manages configuration with sensible defaults"""

    DEFAULT_CONFIG = {
        "field": {"allow_small_m": False, "max_m": 16},
        "primitive_poly": {},  # m -> hex bitmask, e.g. 4: "0x13"
        "matrix": {"max_m": 12},  # dense parity-check matrices above this are refused
        "oracle": {"max_m": 8},
        "decoder": {"best_effort": False, "t_check": None},
        "pd_like": {"exhaustive_budget": 10_000_000},
        "simulation": {
            "seed": 0,
            "trials": 1000,
            "workers": 1,
            "exhaustive_budget": 10_000_000,
        },
    }

    def __init__(self, config_path: Path | None = None):
        self.config_path = config_path or Path.home() / ".config/pdrm/config.yaml"
        self.config = self._load_config()

    def _load_config(self) -> dict[str, Any]:
        """Load config from file or create default"""
        if self.config_path.exists():
            with open(self.config_path) as f:
                user_config = yaml.safe_load(f) or {}
            if not isinstance(user_config, dict):
                raise ValueError(f"Config file {self.config_path} must hold a mapping")
            logger.debug(f"Loaded config from {self.config_path}")
            return _deep_merge(self.DEFAULT_CONFIG, user_config)

        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_path, "w") as f:
                yaml.dump(self.DEFAULT_CONFIG, f, default_flow_style=False)
            logger.info(f"Wrote default config to {self.config_path}")
        except OSError as e:
            logger.warning(f"Cannot write default config {self.config_path}: {e}")
        return copy.deepcopy(self.DEFAULT_CONFIG)

    def get_primitive_poly(self, m: int) -> int | None:
        """Get the configured primitive polynomial bitmask for degree m, if any"""
        table = self.config.get("primitive_poly") or {}
        raw = table.get(m, table.get(str(m)))
        if raw is None:
            return None
        if isinstance(raw, int):
            return raw
        return int(str(raw), 16)

    def get(self, key: str, default=None):
        """Get config value by dot-notation key"""
        keys = key.split(".")
        value = self.config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default
        return value if value is not None else default
