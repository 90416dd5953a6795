"""
Utility functions
"""

from gwpower.utils.helpers import get_package_root, load_config, load_json, load_run_config

__all__ = ["get_package_root", "load_config", "load_json", "load_run_config"]
