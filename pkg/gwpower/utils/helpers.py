"""
Utility functions for gwpower
"""

import json
from functools import lru_cache
from pathlib import Path

import yaml


# File I/O operations
def load_config(config_path: str) -> dict:
    """Load YAML configuration file"""
    with open(config_path, "r") as f:
        return yaml.safe_load(f)


def load_json(file_path: str) -> dict:
    """Load JSON file"""
    with open(file_path, "r") as f:
        return json.load(f)


def get_package_root() -> Path:
    """Get the gwpower package directory"""
    return Path(__file__).parent.parent


@lru_cache()
def load_run_config() -> dict:
    """Packaged run parameters (sampling pools, probe bounds, property-run orders)"""
    return load_config(str(get_package_root() / "config" / "config.yaml"))


__all__ = ["load_config", "load_json", "get_package_root", "load_run_config"]
