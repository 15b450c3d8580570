"""Search profile loader.

Profiles are YAML files named <profile_id>.yaml in the profile directory.
"""

import yaml
from pathlib import Path
from typing import Dict, List
import logging

logger = logging.getLogger(__name__)


class ProfileLoader:
    """Loads search profiles from YAML files."""

    def __init__(self, config_dir: str = "profiles"):
        """
        Initialize the ProfileLoader.

        Args:
            config_dir: Path to the profile directory, "profiles" at project root by default
        """
        self.config_dir = Path(config_dir)
        if not self.config_dir.exists():
            raise FileNotFoundError(f"Profile directory not found: {config_dir}")

    def load_profile(self, profile_id: str) -> Dict:
        """
        Load one profile by ID.

        Args:
            profile_id: The profile identifier (e.g., "desk", "stretch")

        Returns:
            dict: Raw profile configuration

        Raises:
            FileNotFoundError: If the profile file doesn't exist
            yaml.YAMLError: If the YAML file is malformed
        """
        config_file = self.config_dir / f"{profile_id}.yaml"
        if not config_file.exists():
            raise FileNotFoundError(f"Profile file not found: {config_file}")
        return self._read(config_file)

    def load_all_profiles(self) -> Dict[str, Dict]:
        """
        Load every profile in the directory.

        Returns:
            dict: Mapping of profile_id to raw configuration
        """
        return {config_file.stem: self._read(config_file) for config_file in sorted(self.config_dir.glob("*.yaml"))}

    def list_available_profiles(self) -> List[str]:
        return sorted(f.stem for f in self.config_dir.glob("*.yaml"))

    def _read(self, config_file: Path) -> Dict:
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                profile = yaml.safe_load(f)
            logger.info(f"Loaded profile: {config_file.stem}")
            return profile
        except yaml.YAMLError as e:
            logger.error(f"Error parsing YAML file {config_file}: {e}")
            raise yaml.YAMLError(f"Invalid YAML format in {config_file}: {e}")
