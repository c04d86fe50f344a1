"""Settings loaded from the packaged config.yml or an override file."""
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Union

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yml")


@dataclass(frozen=True)
class Settings:
    search_ceiling: int = 10_000_000
    completion_max_rules: int = 10_000
    ball_bound: int = 5
    check_bound: int = 6
    common_reduct_depth: int = 8
    congruence_enumeration_limit: int = 6
    confluence_samples: int = 10_000
    random_seed: int = 20260
    log_level: str = "warning"
    log_file: Optional[str] = None

    @classmethod
    def fromMapping(cls, data: dict) -> "Settings":
        logging_data = data.get("LOGGING") or {}
        defaults = cls()
        return cls(
            search_ceiling=int(
                data.get("SEARCH_CEILING", defaults.search_ceiling)
            ),
            completion_max_rules=int(
                data.get("COMPLETION_MAX_RULES", defaults.completion_max_rules)
            ),
            ball_bound=int(data.get("BALL_BOUND", defaults.ball_bound)),
            check_bound=int(data.get("CHECK_BOUND", defaults.check_bound)),
            common_reduct_depth=int(
                data.get("COMMON_REDUCT_DEPTH", defaults.common_reduct_depth)
            ),
            congruence_enumeration_limit=int(
                data.get(
                    "CONGRUENCE_ENUMERATION_LIMIT",
                    defaults.congruence_enumeration_limit,
                )
            ),
            confluence_samples=int(
                data.get("CONFLUENCE_SAMPLES", defaults.confluence_samples)
            ),
            random_seed=int(data.get("RANDOM_SEED", defaults.random_seed)),
            log_level=str(logging_data.get("LEVEL", defaults.log_level)),
            log_file=logging_data.get("FILE", defaults.log_file),
        )


def loadSettings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Read settings from a YAML file (the packaged config.yml by default)."""
    path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a mapping")
    return Settings.fromMapping(data)


_settings: Optional[Settings] = None


def getSettings() -> Settings:
    global _settings
    if _settings is None:
        _settings = loadSettings()
    return _settings


def useSettings(settings: Settings) -> None:
    """Install settings process-wide (the CLI does this for --config)."""
    global _settings
    _settings = settings


def overrideSettings(**changes) -> Settings:
    settings = replace(getSettings(), **changes)
    useSettings(settings)
    return settings
