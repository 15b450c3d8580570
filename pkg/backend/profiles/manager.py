"""Search profile manager.

Loads every profile, drops the invalid ones, and turns the valid ones into
SearchLimits and SearchOptions.
"""

from pathlib import Path
from typing import Dict, List, Optional
import logging

from models.search import SearchLimits, SearchOptions
from .loader import ProfileLoader
from .validator import ProfileValidator

logger = logging.getLogger(__name__)


class ProfileManager:
    """Serves validated search profiles."""

    def __init__(self, config_dir: str = "profiles"):
        """
        Initialize the ProfileManager.

        Args:
            config_dir: Path to the profile directory
        """
        self.config_dir = Path(config_dir)
        self.profiles: Dict[str, Dict] = {}
        self.loader = ProfileLoader(str(self.config_dir))
        self.validator = ProfileValidator()
        self.load_all_profiles()

    def load_all_profiles(self):
        """Load and validate all profiles; invalid ones are logged and dropped."""
        self.profiles = self.loader.load_all_profiles()
        invalid = []
        for profile_id, profile in self.profiles.items():
            result = self.validator.validate_profile(profile)
            if result['status'] == 'error':
                logger.error(f"Validation failed for profile '{profile_id}': {result['errors']}")
                invalid.append(profile_id)
                continue
            if result['warnings']:
                logger.warning(f"Validation warnings for '{profile_id}': {result['warnings']}")
            logger.info(f"Successfully validated profile: {profile_id}")
        for profile_id in invalid:
            del self.profiles[profile_id]

    def list_available_profiles(self) -> List[str]:
        return list(self.profiles.keys())

    def get_profile(self, profile_id: str) -> Dict:
        """
        Get a validated profile by ID.

        Raises:
            ValueError: If the profile is unknown or was dropped as invalid
        """
        if profile_id not in self.profiles:
            available = list(self.profiles.keys())
            raise ValueError(f"Profile '{profile_id}' not found. Available profiles: {available}")
        return self.profiles[profile_id]

    def get_profile_info(self, profile_id: str) -> Dict:
        profile = self.get_profile(profile_id)
        search = profile['search']
        return {
            'profile_id': profile['profile_id'],
            'profile_name': profile['profile_name'],
            'description': profile['description'],
            'max_nodes': search['max_nodes'],
            'max_seconds': search['max_seconds'],
            'threads': search['threads'],
            'search_max_n': self.search_max_n(profile_id),
        }

    def limits(self, profile_id: str) -> SearchLimits:
        search = self.get_profile(profile_id)['search']
        return SearchLimits(
            max_nodes=search['max_nodes'],
            max_seconds=float(search['max_seconds']),
            threads=search['threads'],
        )

    def options(self, profile_id: str) -> SearchOptions:
        search = self.get_profile(profile_id)['search']
        pruning = search['pruning']
        return SearchOptions(
            closing_bound=pruning['closing_bound'],
            counting_bound=pruning['counting_bound'],
            seed_incumbent=pruning['seed_incumbent'],
            report_primitive=search.get('report_primitive', True),
        )

    def search_max_n(self, profile_id: str) -> Optional[int]:
        """Last table row that may be searched; None when the profile sets no cap."""
        return self.get_profile(profile_id).get('table', {}).get('search_max_n')

    def skew(self, profile_id: str) -> bool:
        return self.get_profile(profile_id).get('render', {}).get('skew', False)
