"""Services: exhaustive search, boundary normalization and tropical curves."""

from .search_service import SearchService

__all__ = ['SearchService']
