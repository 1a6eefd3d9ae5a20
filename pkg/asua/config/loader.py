"""Configuration loading utilities."""

import json
from pathlib import Path
from typing import Any, Callable

from loguru import logger
from pydantic import ValidationError
from pydantic.alias_generators import to_camel, to_snake

from asua.config.schema import Config
from asua.utils.helpers import ensure_dir


def get_config_path() -> Path:
    """Get the default configuration file path."""
    return Path.home() / ".asua" / "config.json"


def load_config(config_path: Path | None = None) -> Config:
    """
    Load configuration from file or create default.

    Args:
        config_path: Optional path to config file. Uses default if not provided.

    Returns:
        Loaded configuration object.
    """
    path = config_path or get_config_path()

    if path.exists():
        try:
            with open(path) as f:
                data = json.load(f)
            return Config.model_validate(convert_keys(data))
        except (json.JSONDecodeError, ValidationError, ValueError) as e:
            logger.warning(f"Failed to load config from {path}: {e}; using defaults")

    return Config()


def save_config(config: Config, config_path: Path | None = None) -> None:
    """
    Save configuration to file.

    Args:
        config: Configuration to save.
        config_path: Optional path to save to. Uses default if not provided.
    """
    path = config_path or get_config_path()
    ensure_dir(path.parent)

    data = convert_to_camel(config.model_dump())

    with open(path, "w") as f:
        json.dump(data, f, indent=2)


def rename_keys(data: Any, rename: Callable[[str], str]) -> Any:
    """Apply ``rename`` to every dict key, recursing through dicts and lists."""
    if isinstance(data, dict):
        return {rename(k): rename_keys(v, rename) for k, v in data.items()}
    if isinstance(data, list):
        return [rename_keys(item, rename) for item in data]
    return data


def convert_keys(data: Any) -> Any:
    """camelCase file keys to the schema's snake_case field names."""
    return rename_keys(data, to_snake)


def convert_to_camel(data: Any) -> Any:
    return rename_keys(data, to_camel)
