import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .exceptions import BudgetError, ConfigurationError
from .serialization import parse_cap

DEFAULT_CONFIG = Path(__file__).resolve().parents[2] / "config" / "default_config.yaml"
WORKERS_ENV = "HOOK_IDENTITIES_WORKERS"
REQUIRED_SECTIONS = ("caps", "parallel", "limits", "random")


class Config:
    def __init__(self, config_path: Optional[Path] = None):
        self.config_path = Path(config_path) if config_path else None
        self.config = self._load_config()
        self._apply_environment()
        self._validate_config()

    def __getitem__(self, key):
        return self.config[key]

    def get(self, key, default=None):
        return self.config.get(key, default)

    def _load_config(self) -> Dict:
        """Defaults first, then the user file on top when it exists"""
        defaults = self._load_yaml(DEFAULT_CONFIG)
        if self.config_path is None or not self.config_path.exists():
            return defaults
        user = self._load_yaml(self.config_path) or {}
        if not isinstance(user, dict):
            raise ConfigurationError(f"{self.config_path} must hold a mapping")
        return self._merge_configs(defaults, user)

    def _load_yaml(self, path: Path) -> Dict:
        try:
            with open(path) as f:
                return yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"Error loading config from {path}: {e}")

    def _merge_configs(self, base: Dict, overlay: Dict) -> Dict:
        """Deep merge; nested sections merge, everything else is replaced"""
        merged = dict(base)
        for key, value in overlay.items():
            current = merged.get(key)
            if isinstance(current, dict) and isinstance(value, dict):
                value = self._merge_configs(current, value)
            merged[key] = value
        return merged

    def _apply_environment(self) -> None:
        workers = os.environ.get(WORKERS_ENV)
        if workers is None:
            return
        try:
            self.config["parallel"]["workers"] = int(workers)
        except ValueError:
            raise ConfigurationError(f"{WORKERS_ENV} must be an integer, got {workers!r}")

    def _validate_config(self) -> None:
        missing = [key for key in REQUIRED_SECTIONS if key not in self.config]
        if missing:
            raise ConfigurationError(f"Missing required config sections: {', '.join(missing)}")
        for name, cap in self.config["caps"].items():
            value = parse_cap(cap)
            if name != "T" and not isinstance(value, int):
                raise ConfigurationError(f"Cap {name} must be a nonnegative integer")
        if self.config["parallel"].get("workers", 1) < 1:
            raise ConfigurationError("parallel.workers must be at least 1")

    def override(self, section: str, key: str, value: Any) -> None:
        """Flags win over files; None means the flag was not given."""
        if value is not None:
            self.config.setdefault(section, {})[key] = value

    def check_budget(self, T_cap: Optional[int] = None, q_cap: Optional[int] = None,
                     weight: Optional[int] = None) -> None:
        """Refuse caps above the configured limits instead of thrashing."""
        limits = self.config["limits"]
        for value, limit in (
            (T_cap, "max_T_cap"),
            (q_cap, "max_q_cap"),
            (weight, "max_weight"),
        ):
            if value is not None and value > limits[limit]:
                raise BudgetError(f"{limit} is {limits[limit]}, requested {value}")
