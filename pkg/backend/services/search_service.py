"""Exhaustive oracles for A(n), the maximal vertex count of a lattice polygon in n·Δ.

A polygon fits in n·Δ exactly when its D-map has total asymmetric norm at
most 3n, so A(n) is the largest balanced configuration of dual vectors with
distinct directions and norm sum at most 3n. SearchService explores such
configurations depth-first over directions sorted by norm, with three
pruning rules:

    closing bound   the vectors still to come must sum to -s, so ||-s|| has
                    to fit in the remaining budget
    counting bound  count + (directions still affordable) must beat the incumbent
    seeding         the incumbent starts at the saturated-family lower bound

A second, purely geometric oracle maximizes over convex lattice polygons
with vertices in n·Δ directly.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from geometry.lattice_core import is_primitive, norm_pq, primitive_vectors_of_norm
from geometry.polytope import convex_hull, cross, d_map, lattice_points, simplex
from geometry.saturated import a_bounds, build_qk, configuration_of
from models.errors import LatticeDomainError, SearchRangeError
from models.lattice import DualVector, LatticePoint
from models.polytope import VectorConfiguration
from models.search import (
    DirectionTable,
    EnumerationResult,
    MinimumNormResult,
    SearchLimits,
    SearchMode,
    SearchOptions,
    SearchResult,
    SearchStatus,
)

logger = logging.getLogger(__name__)

GEOMETRIC_MAX_N = 5


class _SearchAborted(Exception):
    """Raised inside the DFS when a resource limit is exceeded."""


class _FirstFound(Exception):
    """Raised inside the DFS to stop at the first configuration of the target size."""


def build_direction_table(budget: int) -> DirectionTable:
    """Primitive directions of norm 1..budget, cheapest first."""
    if budget < 1:
        raise LatticeDomainError(f"Direction table budget must be >= 1, got {budget}")
    directions: List[DualVector] = []
    norms: List[int] = []
    for level in range(1, budget + 1):
        level_vectors = primitive_vectors_of_norm(level)
        directions.extend(level_vectors)
        norms.extend([level] * len(level_vectors))
    return DirectionTable(budget=budget, directions=tuple(directions), norms=tuple(norms))


class _LimitGuard:
    """Shared node counter and deadline for all workers of one search."""

    CLOCK_INTERVAL = 256

    def __init__(self, limits: SearchLimits):
        self.max_nodes = limits.max_nodes
        self.deadline = None if limits.max_seconds is None else time.monotonic() + limits.max_seconds
        self.nodes = 0
        self.aborted = False
        self._lock = threading.Lock()

    def tick(self):
        with self._lock:
            self.nodes += 1
            nodes = self.nodes
        if self.aborted:
            raise _SearchAborted()
        if self.max_nodes is not None and nodes > self.max_nodes:
            self.aborted = True
            raise _SearchAborted()
        if self.deadline is not None and nodes % self.CLOCK_INTERVAL == 0 and time.monotonic() > self.deadline:
            self.aborted = True
            raise _SearchAborted()


class _Incumbent:
    """Monotone shared best value. Only raised under the lock."""

    def __init__(self, floor: int, witness: Optional[Tuple[DualVector, ...]]):
        self.floor = floor
        self.witness = witness
        self.collected: List[Tuple[DualVector, ...]] = []
        self._lock = threading.Lock()

    def offer(self, count: int, chosen: Sequence[DualVector]) -> bool:
        with self._lock:
            if count <= self.floor:
                return False
            self.floor = count
            self.witness = tuple(chosen)
            logger.debug(f"Incumbent raised to {count}")
            return True


class _Explorer:
    """Depth-first walk over the direction table for balanced configurations.

    mode is "max" (raise the incumbent), "first" (stop at the first
    configuration beating the floor) or "collect" (gather all of them).
    """

    def __init__(self, table: DirectionTable, options: SearchOptions, guard: _LimitGuard,
                 incumbent: _Incumbent, mode: str = "max"):
        self.table = table
        self.options = options
        self.guard = guard
        self.incumbent = incumbent
        self.mode = mode
        self.chosen: List[DualVector] = []

    def run(self, budget: int):
        self._dfs(0, budget, 0, 0, 0)

    def run_branch(self, index: int, budget: int):
        """Explore only configurations whose first direction is table entry index."""
        self.guard.tick()
        if self.options.counting_bound and self.table.affordable(index, budget) <= self.incumbent.floor:
            return
        self._branch(index, budget, 0, 0, 0)

    def _record(self, count: int):
        if self.mode == "max":
            self.incumbent.offer(count, self.chosen)
        elif self.mode == "collect":
            self.incumbent.collected.append(tuple(self.chosen))
        else:
            self.incumbent.witness = tuple(self.chosen)
            raise _FirstFound()

    def _dfs(self, start: int, budget: int, sp: int, sq: int, count: int):
        self.guard.tick()
        if count > 0 and sp == 0 and sq == 0 and count > self.incumbent.floor:
            self._record(count)
        norms = self.table.norms
        for j in range(start, len(norms)):
            if norms[j] > budget:
                break
            # affordable(j, budget) only shrinks as j grows
            if self.options.counting_bound and count + self.table.affordable(j, budget) <= self.incumbent.floor:
                break
            self._branch(j, budget, sp, sq, count)

    def _branch(self, j: int, budget: int, sp: int, sq: int, count: int):
        norm = self.table.norms[j]
        direction = self.table.directions[j]
        top = 1 if self.options.primitive_only else budget // norm
        for m in range(1, top + 1):
            rest = budget - m * norm
            np_, nq = sp + m * direction.p, sq + m * direction.q
            if self.options.closing_bound and norm_pq(-np_, -nq) > rest:
                continue
            self.chosen.append(DualVector(m * direction.p, m * direction.q))
            try:
                self._dfs(j + 1, rest, np_, nq, count + 1)
            finally:
                self.chosen.pop()


class SearchService:
    """Runs the A(n) oracles under one set of limits and pruning options."""

    def __init__(self, limits: Optional[SearchLimits] = None, options: Optional[SearchOptions] = None):
        """Initialize the search service.

        Args:
            limits: Node, time and thread limits (unlimited, single-threaded by default)
            options: Pruning switches (all rules on by default)
        """
        self.limits = limits or SearchLimits()
        self.options = options or SearchOptions()
        self._tables: Dict[int, DirectionTable] = {}

    def direction_table(self, n: int) -> DirectionTable:
        budget = 3 * n
        if budget not in self._tables:
            self._tables[budget] = build_direction_table(budget)
        return self._tables[budget]

    def max_vertices_branch_and_bound(self, n: int) -> SearchResult:
        """Exact A(n) by branch and bound over balanced configurations.

        Args:
            n: Dilation factor, at least 1

        Returns:
            SearchResult; status is INCONCLUSIVE if a limit was hit, in which
            case a_of_n is only the best value found so far
        """
        if n < 1:
            raise SearchRangeError(f"A(n) search needs n >= 1, got {n}")
        started = time.perf_counter()
        table = self.direction_table(n)
        budget = 3 * n
        guard = _LimitGuard(self.limits)
        incumbent = self._seed(n)
        logger.info(f"Searching A({n}): {len(table)} directions, incumbent {incumbent.floor}, "
                    f"{self.limits.threads} thread(s)")

        status = SearchStatus.EXACT
        try:
            self._explore(table, budget, guard, incumbent)
        except _SearchAborted:
            status = SearchStatus.INCONCLUSIVE
        # Workers swallow their own aborts, so the flag is the source of truth.
        if guard.aborted:
            status = SearchStatus.INCONCLUSIVE

        value = incumbent.floor
        witness = incumbent.witness
        if status == SearchStatus.EXACT and value > 0:
            canonical = self._first_of_size(table, budget, value, self.options, guard)
            if canonical is not None:
                witness = canonical

        primitive = self._primitive_report(table, budget, value, witness, status, guard)
        elapsed = time.perf_counter() - started
        result = SearchResult(
            n=n,
            a_of_n=value,
            witness=VectorConfiguration.of(witness) if witness else None,
            node_count=guard.nodes,
            elapsed=elapsed,
            status=status,
            primitive_witness=primitive,
        )
        logger.info(f"A({n}) = {value} [{status.value}] after {guard.nodes} nodes in {elapsed:.3f}s")
        return result

    def _seed(self, n: int) -> _Incumbent:
        if not self.options.seed_incumbent:
            return _Incumbent(0, None)
        bound = a_bounds(n)
        witness = tuple(configuration_of(build_qk(bound.lower // 3)).vectors)
        return _Incumbent(bound.lower, witness)

    def _explore(self, table: DirectionTable, budget: int, guard: _LimitGuard, incumbent: _Incumbent):
        if self.limits.threads == 1:
            _Explorer(table, self.options, guard, incumbent).run(budget)
            return
        roots = [j for j in range(len(table)) if table.norms[j] <= budget]

        def work(index: int):
            try:
                _Explorer(table, self.options, guard, incumbent).run_branch(index, budget)
            except _SearchAborted:
                pass

        with ThreadPoolExecutor(max_workers=self.limits.threads) as pool:
            list(pool.map(work, roots))

    def _first_of_size(self, table: DirectionTable, budget: int, size: int, options: SearchOptions,
                       guard: _LimitGuard) -> Optional[Tuple[DualVector, ...]]:
        """First configuration of the given size in sequential DFS order, the canonical witness."""
        target = _Incumbent(size - 1, None)
        explorer = _Explorer(table, options, guard, target, mode="first")
        try:
            explorer.run(budget)
        except _FirstFound:
            return target.witness
        except _SearchAborted:
            logger.warning("Limit reached while fixing the canonical witness; keeping the search witness")
        return None

    def _primitive_report(self, table: DirectionTable, budget: int, value: int,
                          witness: Optional[Tuple[DualVector, ...]], status: SearchStatus,
                          guard: _LimitGuard) -> Optional[bool]:
        if witness is None:
            return None
        if all(is_primitive(v) for v in witness):
            return True
        if self.options.primitive_only:
            return True
        if not self.options.report_primitive or status != SearchStatus.EXACT:
            return None
        primitive_options = SearchOptions(
            closing_bound=self.options.closing_bound,
            counting_bound=self.options.counting_bound,
            seed_incumbent=False,
            primitive_only=True,
        )
        target = _Incumbent(value - 1, None)
        try:
            _Explorer(table, primitive_options, guard, target, mode="first").run(budget)
        except _FirstFound:
            return True
        except _SearchAborted:
            return None
        return False

    def max_vertices_geometric(self, n: int) -> SearchResult:
        """A(n) by maximizing over convex polygons with vertices among the lattice points of n·Δ.

        For each anchor point (the lexicographically smallest vertex) the
        other points are sorted by angle and a table over the last two
        vertices tracks the longest strictly convex chain.
        """
        if not 1 <= n <= GEOMETRIC_MAX_N:
            raise SearchRangeError(f"Geometric oracle supports 1 <= n <= {GEOMETRIC_MAX_N}, got {n}")
        started = time.perf_counter()
        points = lattice_points(simplex(n))
        best_size = 0
        best_vertices: List[LatticePoint] = []
        transitions = 0

        for anchor in points:
            size, vertices, steps = _longest_convex_polygon(anchor, [p for p in points if p > anchor])
            transitions += steps
            if size > best_size:
                best_size, best_vertices = size, vertices

        polygon = convex_hull(best_vertices)
        elapsed = time.perf_counter() - started
        logger.info(f"Geometric A({n}) = {best_size} after {transitions} transitions")
        return SearchResult(
            n=n,
            a_of_n=best_size,
            witness=d_map(polygon),
            node_count=transitions,
            elapsed=elapsed,
            status=SearchStatus.EXACT,
            primitive_witness=None,
            method=SearchMode.GEOMETRIC.value,
        )

    def enumerate_maximal(self, n: int) -> EnumerationResult:
        """Every balanced configuration with A(n) vectors and norm sum at most 3n."""
        started = time.perf_counter()
        found = self.max_vertices_branch_and_bound(n)
        if not found.is_exact:
            return EnumerationResult(n, found.a_of_n, [], found.node_count,
                                     time.perf_counter() - started, SearchStatus.INCONCLUSIVE)
        table = self.direction_table(n)
        guard = _LimitGuard(self.limits)
        collector = _Incumbent(found.a_of_n - 1, None)
        status = SearchStatus.EXACT
        try:
            _Explorer(table, self.options, guard, collector, mode="collect").run(3 * n)
        except _SearchAborted:
            status = SearchStatus.INCONCLUSIVE

        unique: Dict[Tuple[Tuple[int, int], ...], VectorConfiguration] = {}
        for vectors in collector.collected:
            config = VectorConfiguration.of(vectors)
            unique.setdefault(tuple(v.as_tuple() for v in config.vectors), config)
        configurations = [unique[key] for key in sorted(unique)]
        logger.info(f"Enumerated {len(configurations)} maximal configuration(s) for n={n}")
        return EnumerationResult(
            n=n,
            a_of_n=found.a_of_n,
            configurations=configurations,
            node_count=found.node_count + guard.nodes,
            elapsed=time.perf_counter() - started,
            status=status,
        )

    def minimum_norm_sum(self, k: int) -> MinimumNormResult:
        """Smallest total norm of k dual vectors with pairwise distinct directions.

        Balance is not required. The incumbent starts at the cheapest k
        directions and the same depth-first walk proves it optimal.
        """
        if k < 1:
            raise LatticeDomainError(f"minimum_norm_sum needs k >= 1, got {k}")
        started = time.perf_counter()
        level, directions = 0, 0
        while directions < k:
            level += 1
            directions += len(primitive_vectors_of_norm(level))
        greedy_table = build_direction_table(level)
        greedy = greedy_table.cheapest_sum(0, k)
        # No vector of an optimal configuration costs more than greedy - (k - 1).
        table = build_direction_table(greedy - k + 1)
        guard = _LimitGuard(self.limits)

        best = greedy + 1
        witness: Optional[Tuple[DualVector, ...]] = None
        if self.options.seed_incumbent:
            best = greedy
            witness = table.directions[:k]
        chosen: List[DualVector] = []

        def walk(start: int, cost: int, count: int):
            nonlocal best, witness
            guard.tick()
            if count == k:
                if cost < best:
                    best, witness = cost, tuple(chosen)
                return
            for j in range(start, len(table)):
                norm = table.norms[j]
                if cost + norm >= best:
                    break
                if self.options.counting_bound:
                    cheapest = table.cheapest_sum(j, k - count)
                    if cheapest is None or cost + cheapest >= best:
                        break
                top = 1 if self.options.primitive_only else (best - cost - 1) // norm
                for m in range(1, top + 1):
                    chosen.append(table.directions[j].scaled(m))
                    walk(j + 1, cost + m * norm, count + 1)
                    chosen.pop()

        status = SearchStatus.EXACT
        try:
            walk(0, 0, 0)
        except _SearchAborted:
            status = SearchStatus.INCONCLUSIVE
        elapsed = time.perf_counter() - started
        logger.info(f"Minimum norm sum for k={k}: {best} [{status.value}] after {guard.nodes} nodes")
        return MinimumNormResult(
            k=k,
            value=best,
            witness=VectorConfiguration.of(witness) if witness else None,
            node_count=guard.nodes,
            elapsed=elapsed,
            status=status,
        )


def _longest_convex_polygon(anchor: LatticePoint,
                            others: List[LatticePoint]) -> Tuple[int, List[LatticePoint], int]:
    """Largest strictly convex polygon whose lexicographically smallest vertex is anchor."""

    def by_angle(a: LatticePoint, b: LatticePoint) -> int:
        turn = cross(anchor, a, b)
        if turn != 0:
            return -1 if turn > 0 else 1
        return -1 if a < b else (1 if b < a else 0)

    pts = sorted(others, key=cmp_to_key(by_angle))
    count = len(pts)
    length: Dict[Tuple[int, int], int] = {}
    parent: Dict[Tuple[int, int], Optional[int]] = {}
    steps = 0
    best_size, best_end = 0, None

    for j in range(count):
        for i in range(j):
            if cross(anchor, pts[i], pts[j]) <= 0:
                continue
            size, via = 3, None
            for k in range(i):
                steps += 1
                previous = length.get((k, i))
                if previous is None or cross(pts[k], pts[i], pts[j]) <= 0:
                    continue
                if previous + 1 > size:
                    size, via = previous + 1, k
            length[(i, j)] = size
            parent[(i, j)] = via
            if cross(pts[i], pts[j], anchor) > 0 and size > best_size:
                best_size, best_end = size, (i, j)

    if best_end is None:
        return 0, [], steps
    i, j = best_end
    chain = [pts[j], pts[i]]
    while parent[(i, j)] is not None:
        i, j = parent[(i, j)], i
        chain.append(pts[i])
    chain.append(anchor)
    return best_size, list(reversed(chain)), steps


def max_vertices_branch_and_bound(n: int, limits: Optional[SearchLimits] = None,
                                  options: Optional[SearchOptions] = None) -> SearchResult:
    return SearchService(limits, options).max_vertices_branch_and_bound(n)


def max_vertices_geometric(n: int) -> SearchResult:
    return SearchService().max_vertices_geometric(n)


def enumerate_maximal(n: int, limits: Optional[SearchLimits] = None,
                      options: Optional[SearchOptions] = None) -> EnumerationResult:
    return SearchService(limits, options).enumerate_maximal(n)


def minimum_norm_sum(k: int, limits: Optional[SearchLimits] = None,
                     options: Optional[SearchOptions] = None) -> MinimumNormResult:
    return SearchService(limits, options).minimum_norm_sum(k)
