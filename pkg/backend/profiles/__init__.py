"""Search profiles: YAML files with limits, pruning switches and render settings."""

from .manager import ProfileManager
from .loader import ProfileLoader
from .validator import ProfileValidator

__all__ = ['ProfileManager', 'ProfileLoader', 'ProfileValidator']
