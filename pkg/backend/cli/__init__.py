"""CLI interface components: formatting, figures, documents and subcommands."""

from .formatter import ResultFormatter

__all__ = ['ResultFormatter']
