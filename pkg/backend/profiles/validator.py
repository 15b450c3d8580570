"""Search profile validator."""

from typing import Any, Dict
import logging

logger = logging.getLogger(__name__)


class ProfileValidator:
    """Validates profile structure and value ranges."""

    REQUIRED_PROFILE_FIELDS = {
        'profile_id': str,
        'profile_name': str,
        'description': str,
        'search': dict,
    }

    REQUIRED_SEARCH_FIELDS = {
        'max_nodes': int,
        'max_seconds': (int, float),
        'threads': int,
        'pruning': dict,
    }

    PRUNING_RULES = ['closing_bound', 'counting_bound', 'seed_incumbent']

    MAX_THREADS = 64

    def validate_profile(self, profile: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate a complete profile.

        Args:
            profile: Raw profile configuration

        Returns:
            dict: {'status': 'success' | 'error', 'errors': [...], 'warnings': [...]}
        """
        errors = []
        warnings = []

        if not isinstance(profile, dict):
            return {'status': 'error', 'errors': ["Profile must be a mapping"], 'warnings': warnings}

        for field, field_type in self.REQUIRED_PROFILE_FIELDS.items():
            if field not in profile:
                errors.append(f"Missing required field: {field}")
            elif not isinstance(profile[field], field_type):
                errors.append(f"Field '{field}' must be of type {field_type.__name__}")

        if errors:
            return {'status': 'error', 'errors': errors, 'warnings': warnings}

        search_result = self.validate_search_settings(profile['search'])
        errors.extend(search_result['errors'])
        warnings.extend(search_result['warnings'])

        render = profile.get('render', {})
        if not isinstance(render, dict):
            errors.append("Field 'render' must be a mapping")
        elif 'skew' in render and not isinstance(render['skew'], bool):
            errors.append("render.skew must be a boolean")

        table = profile.get('table', {})
        if not isinstance(table, dict):
            errors.append("Field 'table' must be a mapping")
        elif 'search_max_n' in table:
            value = table['search_max_n']
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                errors.append("table.search_max_n must be a non-negative integer")

        if errors:
            return {'status': 'error', 'errors': errors, 'warnings': warnings}
        return {'status': 'success', 'errors': [], 'warnings': warnings}

    def validate_search_settings(self, search: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate the 'search' block of a profile.

        Args:
            search: The search settings

        Returns:
            dict: Validation result with status, errors and warnings
        """
        errors = []
        warnings = []

        for field, field_type in self.REQUIRED_SEARCH_FIELDS.items():
            if field not in search:
                errors.append(f"Missing search setting: {field}")
            elif isinstance(search[field], bool) or not isinstance(search[field], field_type):
                errors.append(f"Search setting '{field}' has the wrong type")

        if errors:
            return {'status': 'error', 'errors': errors, 'warnings': warnings}

        if search['max_nodes'] < 1:
            errors.append("max_nodes must be at least 1")
        if search['max_seconds'] <= 0:
            errors.append("max_seconds must be positive")
        if not (1 <= search['threads'] <= self.MAX_THREADS):
            errors.append(f"threads must be between 1 and {self.MAX_THREADS}")

        pruning = search['pruning']
        for rule in self.PRUNING_RULES:
            if rule not in pruning:
                errors.append(f"Missing pruning rule: {rule}")
            elif not isinstance(pruning[rule], bool):
                errors.append(f"Pruning rule '{rule}' must be a boolean")
        if any(pruning.get(rule) is False for rule in self.PRUNING_RULES):
            warnings.append("A pruning rule is disabled; searches will visit more nodes")

        if 'report_primitive' in search and not isinstance(search['report_primitive'], bool):
            errors.append("report_primitive must be a boolean")

        if errors:
            return {'status': 'error', 'errors': errors, 'warnings': warnings}
        return {'status': 'success', 'errors': [], 'warnings': warnings}
