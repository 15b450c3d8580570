"""Validated configuration of one CLI invocation."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from .errors import ConfigurationValidationError
from .search import SearchLimits, SearchMode, SearchOptions


class OutputFormat(Enum):
    JSON = "json"
    SVG = "svg"
    TABLE = "table"


SUBCOMMANDS = (
    "an", "table", "construct", "diameter", "dmap", "minkowski",
    "normalize", "tropical", "asymptotic", "search",
)

# Number of input documents each subcommand reads.
INPUT_COUNTS = {"diameter": 1, "dmap": 1, "minkowski": 2, "normalize": 1, "tropical": 1}

# Subcommands that produce a polygon and can therefore be drawn.
SVG_COMMANDS = ("construct", "normalize", "minkowski", "dmap")


@dataclass
class CommandConfig:
    """Everything a subcommand needs, checked before any computation.

    Attributes:
        subcommand: One of SUBCOMMANDS
        n: Dilation factor (an, normalize, search)
        k: Size parameter (construct --k, search --mode minsum)
        q: Norm bound (construct --q)
        max_n: Last row of the table
        qmax: Largest q for the asymptotic ratio
        inputs: Input document paths
        output: Output path; stdout when None
        output_format: json, svg or table
        search: Resolve non-exact rows or bounds by exhaustive search
        mode: Search oracle for the search subcommand
        limits: Search limits after profile and flag overrides
        options: Pruning switches from the profile
        skew: Draw figures in the skewed frame
        profile_id: Profile the limits came from
        claimed_degree: Degree the tropical input claims, if any
        search_max_n: Last table row the profile allows to be searched; no cap when None
    """
    subcommand: str
    n: Optional[int] = None
    k: Optional[int] = None
    q: Optional[int] = None
    max_n: Optional[int] = None
    qmax: Optional[int] = None
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    output_format: OutputFormat = OutputFormat.TABLE
    search: bool = False
    mode: SearchMode = SearchMode.BRANCH_AND_BOUND
    limits: SearchLimits = field(default_factory=SearchLimits)
    options: SearchOptions = field(default_factory=SearchOptions)
    skew: bool = False
    profile_id: str = "desk"
    claimed_degree: Optional[int] = None
    search_max_n: Optional[int] = None

    def validate(self):
        """Raise ConfigurationValidationError describing the first problem found."""
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigurationValidationError(f"Unknown subcommand '{self.subcommand}'")

        expected_inputs = INPUT_COUNTS.get(self.subcommand, 0)
        if len(self.inputs) != expected_inputs:
            raise ConfigurationValidationError(
                f"'{self.subcommand}' takes {expected_inputs} input file(s), got {len(self.inputs)}"
            )

        if self.subcommand in ("an", "normalize"):
            self._require_positive("n", self.n)
        elif self.subcommand == "table":
            self._require_positive("max_n", self.max_n)
        elif self.subcommand == "asymptotic":
            self._require_positive("qmax", self.qmax)
        elif self.subcommand == "construct":
            if (self.k is None) == (self.q is None):
                raise ConfigurationValidationError("construct needs exactly one of --k and --q")
            self._require_positive("k" if self.k is not None else "q", self.k if self.k is not None else self.q)
        elif self.subcommand == "search":
            if self.mode == SearchMode.MINIMUM_SUM:
                self._require_positive("k", self.k)
            else:
                self._require_positive("n", self.n)

        if self.output_format == OutputFormat.SVG and self.subcommand not in SVG_COMMANDS:
            raise ConfigurationValidationError(
                f"SVG output is available for {', '.join(SVG_COMMANDS)}, not '{self.subcommand}'"
            )

    @staticmethod
    def _require_positive(name: str, value: Optional[int]):
        if value is None:
            raise ConfigurationValidationError(f"Missing required parameter: {name}")
        if value < 1:
            raise ConfigurationValidationError(f"Parameter {name} must be at least 1, got {value}")
