"""
Configuration Manager Module
Handles storage and retrieval of solver, engine, batch and path settings.
"""

import copy
import json
import os
from pathlib import Path
from typing import Dict

from dotenv import load_dotenv

from modules import logger


ENV_OVERRIDES = {
    'STRONGCOLOR_NODE_BUDGET': ('solver', 'node_budget', int),
    'STRONGCOLOR_TIME_BUDGET': ('solver', 'time_budget', float),
    'STRONGCOLOR_PARALLEL': ('batch', 'parallel', int),
}


class ConfigManager:
    """Manages JSON configuration storage for the application."""

    def __init__(self, config_dir: str = None):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory to store configuration files. Defaults to
                $STRONGCOLOR_HOME or ~/.strongcolor.
        """
        load_dotenv()
        if config_dir is None:
            config_dir = os.environ.get('STRONGCOLOR_HOME') or (Path.home() / '.strongcolor')

        self.config_dir = Path(config_dir)
        self.config_file = self.config_dir / 'config.json'

    def save_config(self, config: Dict) -> bool:
        """
        Save configuration data.

        Args:
            config: Dictionary containing configuration data

        Returns:
            True if successful, False otherwise
        """
        try:
            self.config_dir.mkdir(parents=True, exist_ok=True)
            self.config_file.write_text(json.dumps(config, indent=2), encoding='utf-8')
            return True
        except Exception as e:
            logger.error(f"Error saving config: {e}")
            return False

    def load_config(self) -> Dict:
        """
        Load configuration data, merged over the defaults and environment overrides.

        Returns:
            Dictionary containing configuration data
        """
        config = self._get_default_config()
        if self.config_file.exists():
            try:
                stored = json.loads(self.config_file.read_text(encoding='utf-8'))
                for section, values in stored.items():
                    if isinstance(values, dict):
                        config.setdefault(section, {}).update(values)
            except Exception as e:
                logger.warning(f"Error loading config, using defaults: {e}")

        for env_name, (section, key, cast) in ENV_OVERRIDES.items():
            raw = os.environ.get(env_name)
            if raw:
                try:
                    config[section][key] = cast(raw)
                except ValueError:
                    logger.warning(f"Ignoring {env_name}={raw!r}: not a {cast.__name__}")
        return config

    def _get_default_config(self) -> Dict:
        """Return default configuration structure."""
        return copy.deepcopy({
            'solver': {
                'max_edges': 40,
                'node_budget': 5_000_000,
                'time_budget': 30.0,  # seconds
                'symmetry_breaking': True
            },
            'engine': {
                'fallback_max_edges': 40,
                'subcase_iteration_cap': 6,
                'repair_radius': 2,
                'repair_node_budget': 200_000
            },
            'batch': {
                'parallel': 1,
                'progress': True
            },
            'bench': {
                'repeats': 3,
                'seed': 7
            },
            'paths': {
                'log_dir': str(self.config_dir / 'logs'),
                'report_dir': str(self.config_dir / 'reports'),
                'store_path': str(self.config_dir / 'results.db')
            },
            'app_settings': {
                'quiet': False
            }
        })

    def get_solver_config(self):
        """
        Get exact solver settings.

        Returns:
            SolverConfig built from the 'solver' section
        """
        from modules.exact_solver import SolverConfig

        section = self.load_config().get('solver', {})
        return SolverConfig(
            max_edges=int(section.get('max_edges', 40)),
            node_budget=int(section.get('node_budget', 5_000_000)),
            time_budget=float(section.get('time_budget', 30.0)),
            symmetry_breaking=bool(section.get('symmetry_breaking', True)),
        )

    def get_engine_settings(self) -> Dict:
        """
        Get lemma engine settings.

        Returns:
            Dictionary with fallback and repair limits
        """
        return self.load_config().get('engine', {})

    def get_batch_settings(self) -> Dict:
        """Get batch runner settings."""
        return self.load_config().get('batch', {})

    def get_bench_settings(self) -> Dict:
        """Get benchmark settings."""
        return self.load_config().get('bench', {})

    def get_paths(self) -> Dict:
        """Get log, report and store locations."""
        return self.load_config().get('paths', {})

    def get_app_settings(self) -> Dict:
        """
        Get application settings.

        Returns:
            Dictionary with app settings
        """
        return self.load_config().get('app_settings', {})

    def update_setting(self, section: str, key: str, value) -> bool:
        """
        Update a specific setting.

        Args:
            section: Configuration section (e.g., 'solver', 'engine', 'batch')
            key: Setting key
            value: New value

        Returns:
            True if successful
        """
        config = self.load_config()
        if section not in config:
            config[section] = {}
        config[section][key] = value
        return self.save_config(config)

    def validate_solver_settings(self) -> bool:
        """Check that solver budgets are positive."""
        section = self.load_config().get('solver', {})
        return (
            section.get('max_edges', 0) > 0 and
            section.get('node_budget', 0) > 0 and
            section.get('time_budget', 0) > 0
        )
