"""Search models for the exhaustive A(n) oracles."""

from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .errors import SearchRangeError
from .lattice import DualVector
from .polytope import VectorConfiguration


class SearchStatus(Enum):
    """Outcome of a search run."""
    EXACT = "exact"
    INCONCLUSIVE = "inconclusive"


class SearchMode(Enum):
    """Which oracle the search subcommand runs."""
    BRANCH_AND_BOUND = "bnb"
    GEOMETRIC = "geometric"
    ENUMERATE = "enumerate"
    MINIMUM_SUM = "minsum"


@dataclass(frozen=True)
class SearchLimits:
    """Resource limits; None means unlimited.

    Attributes:
        max_nodes: Node budget across all workers
        max_seconds: Wall-clock budget
        threads: Number of workers exploring top-level branches
    """
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    threads: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 1:
            raise SearchRangeError(f"max_nodes must be >= 1, got {self.max_nodes}")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise SearchRangeError(f"max_seconds must be positive, got {self.max_seconds}")
        if self.threads < 1:
            raise SearchRangeError(f"threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class SearchOptions:
    """Pruning switches. Turning a rule off changes node counts, never A(n)."""
    closing_bound: bool = True
    counting_bound: bool = True
    seed_incumbent: bool = True
    primitive_only: bool = False
    report_primitive: bool = True

    def to_dict(self) -> Dict:
        return {
            "closing_bound": self.closing_bound,
            "counting_bound": self.counting_bound,
            "seed_incumbent": self.seed_incumbent,
            "primitive_only": self.primitive_only,
            "report_primitive": self.report_primitive,
        }


@dataclass(frozen=True)
class DirectionTable:
    """Primitive directions of norm <= budget, cheapest first.

    Attributes:
        budget: Largest norm in the table (3n for the A(n) search)
        directions: Primitive dual vectors sorted by norm, then canonical order
        norms: Norm of each direction
    """
    budget: int
    directions: Tuple[DualVector, ...]
    norms: Tuple[int, ...]
    prefix: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.directions) != len(self.norms):
            raise SearchRangeError("Direction table needs one norm per direction")
        running = [0]
        for value in self.norms:
            running.append(running[-1] + value)
        object.__setattr__(self, "prefix", tuple(running))

    def __len__(self):
        return len(self.directions)

    def affordable(self, start: int, budget: int) -> int:
        """Most distinct directions from index start on whose norms fit in budget."""
        end = bisect_right(self.prefix, self.prefix[start] + budget) - 1
        return max(0, end - start)

    def cheapest_sum(self, start: int, count: int) -> Optional[int]:
        """Total norm of the next count directions, or None if the table runs out."""
        if start + count > len(self.norms):
            return None
        return self.prefix[start + count] - self.prefix[start]

    def count_at_norm(self, level: int) -> int:
        return sum(1 for value in self.norms if value == level)


@dataclass
class SearchResult:
    """Result of an A(n) search.

    Attributes:
        n: Dilation factor
        a_of_n: Best vertex count found (A(n) itself when status is EXACT)
        witness: Balanced configuration of size a_of_n, or None
        node_count: Search nodes visited
        elapsed: Wall time in seconds
        status: EXACT, or INCONCLUSIVE when a limit was hit
        primitive_witness: Whether A(n) is attained by primitive vectors only;
            None when this was not determined
        method: Which oracle produced the result
    """
    n: int
    a_of_n: int
    witness: Optional[VectorConfiguration]
    node_count: int
    elapsed: float
    status: SearchStatus
    primitive_witness: Optional[bool] = None
    method: str = SearchMode.BRANCH_AND_BOUND.value

    @property
    def is_exact(self) -> bool:
        return self.status == SearchStatus.EXACT

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "A": self.a_of_n,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "nodes": self.node_count,
            "ms": round(self.elapsed * 1000.0, 3),
            "status": self.status.value,
            "primitive_witness": self.primitive_witness,
            "method": self.method,
        }


@dataclass
class EnumerationResult:
    """All maximal configurations for one n."""
    n: int
    a_of_n: int
    configurations: List[VectorConfiguration]
    node_count: int
    elapsed: float
    status: SearchStatus

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "A": self.a_of_n,
            "count": len(self.configurations),
            "configurations": [c.to_dict() for c in self.configurations],
            "nodes": self.node_count,
            "ms": round(self.elapsed * 1000.0, 3),
            "status": self.status.value,
        }


@dataclass
class MinimumNormResult:
    """Smallest total norm of k dual vectors with distinct directions."""
    k: int
    value: int
    witness: Optional[VectorConfiguration]
    node_count: int
    elapsed: float
    status: SearchStatus

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "value": self.value,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "nodes": self.node_count,
            "ms": round(self.elapsed * 1000.0, 3),
            "status": self.status.value,
        }
