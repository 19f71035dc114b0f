"""
Tool settings for slipcheck.

Defaults ship in the bundled ``config.toml``; a user file given with
``--config`` overrides them key by key.
"""
import importlib.resources
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    name: str = "slipcheck"
    report_version: int = 1
    order: str = "grevlex"
    lift_l_bound: int = 10
    embedding_degree_window: int = 3
    sufficiency_window: int = 6
    hf_margin: int = 0
    log_level: str = "WARNING"
    log_style: str = "text"
    p1p1_b_scale: int = 2
    product_lift_margin: int = 1


def _bundled_config() -> Dict[str, Any]:
    """Read the config.toml shipped inside the package."""
    text = importlib.resources.files("slipcheck").joinpath("config.toml").read_text(encoding="utf-8")
    return tomllib.loads(text)


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings, merging an optional user TOML file over the bundled defaults.

    A missing or unreadable user file falls back to the defaults with a warning.
    """
    config = _bundled_config()
    if path:
        if not os.path.exists(path):
            logger.warning("config file %s not found, using defaults", path)
        else:
            try:
                with open(path, "rb") as f:
                    config = _merge(config, tomllib.load(f))
            except (OSError, tomllib.TOMLDecodeError) as exc:
                logger.warning("could not read config file %s: %s", path, exc)

    tool = config.get("tool", {})
    defaults = config.get("defaults", {})
    logging_cfg = config.get("logging", {})
    harvest = config.get("harvest", {})
    base = Settings()
    return Settings(
        name=tool.get("name", base.name),
        report_version=int(tool.get("report_version", base.report_version)),
        order=defaults.get("order", base.order),
        lift_l_bound=int(defaults.get("lift_l_bound", base.lift_l_bound)),
        embedding_degree_window=int(defaults.get("embedding_degree_window", base.embedding_degree_window)),
        sufficiency_window=int(defaults.get("sufficiency_window", base.sufficiency_window)),
        hf_margin=int(defaults.get("hf_margin", base.hf_margin)),
        log_level=str(logging_cfg.get("level", base.log_level)).upper(),
        log_style=logging_cfg.get("style", base.log_style),
        p1p1_b_scale=int(harvest.get("p1p1_b_scale", base.p1p1_b_scale)),
        product_lift_margin=int(harvest.get("product_lift_margin", base.product_lift_margin)),
    )
