"""CLI output formatting utilities.

Plain-text renderings of bounds, search results, polygons and curve
reports. The JSON form of every result comes from its to_dict method.
"""

from typing import Dict, List, Optional

from models.normalization import NormalizationResult
from models.polytope import Polytope, VectorConfiguration
from models.saturated import ABound
from models.search import EnumerationResult, MinimumNormResult, SearchResult, SearchStatus
from models.tropical import DegreeReport


class ResultFormatter:
    """Formats computation results for terminal display."""

    SEPARATOR_MAIN = "═" * 60
    SEPARATOR_SUB = "─" * 60

    @staticmethod
    def format_bound(bound: ABound, result: Optional[SearchResult] = None) -> str:
        """Format A(n) as known from the formulas, optionally resolved by search.

        Args:
            bound: Formula bounds for A(n)
            result: Exhaustive search result, if one was run

        Returns:
            A single line such as "A(17): exact 18" or "A(2): 3 ≤ A(2) ≤ 5"
        """
        if result is None or bound.exact:
            return f"A({bound.n}): {bound.describe()}"
        if result.is_exact:
            return f"A({bound.n}): exact {result.a_of_n} (search)"
        return f"A({bound.n}): {bound.describe()} (search inconclusive, best {result.a_of_n})"

    @staticmethod
    def format_table(rows: List[Dict]) -> str:
        """Format table rows produced by commands.build_table."""
        lines = [ResultFormatter.SEPARATOR_MAIN, "  n : A(n)", ResultFormatter.SEPARATOR_SUB]
        width = len(str(rows[-1]["n"])) if rows else 1
        for row in rows:
            bound: ABound = row["bound"]
            if row["source"] == "formula":
                value = f"{bound.lower} (formula)"
            elif row["source"] == "search":
                value = f"{row['value']} (search)"
            elif row["source"] == "inconclusive":
                value = f"{bound.describe()} (inconclusive, best {row['value']})"
            else:
                value = f"{bound.describe()} (bounds)"
            lines.append(f"{row['n']:>{width}}: {value}")
        lines.append(ResultFormatter.SEPARATOR_MAIN)
        return "\n".join(lines)

    @staticmethod
    def format_search(result: SearchResult) -> str:
        status = "exact" if result.status == SearchStatus.EXACT else "INCONCLUSIVE"
        parts = [
            f"🔎 A({result.n}) = {result.a_of_n} [{status}, {result.method}]",
            f"   nodes: {result.node_count}, time: {result.elapsed * 1000.0:.1f} ms",
        ]
        if result.primitive_witness is not None:
            parts.append(f"   primitive-only witness: {'yes' if result.primitive_witness else 'no'}")
        if result.witness is not None:
            parts.append(f"   witness: {result.witness}")
        return "\n".join(parts)

    @staticmethod
    def format_enumeration(result: EnumerationResult) -> str:
        parts = [f"🔎 {len(result.configurations)} configuration(s) with A({result.n}) = {result.a_of_n} "
                 f"[{result.status.value}]"]
        parts.extend(f"   {config}" for config in result.configurations)
        return "\n".join(parts)

    @staticmethod
    def format_minimum_norm(result: MinimumNormResult) -> str:
        return (f"🔎 minimum norm sum for k={result.k}: {result.value} [{result.status.value}]\n"
                f"   witness: {result.witness}")

    @staticmethod
    def format_polytope(polytope: Polytope, diameter: int, title: str = "Polytope") -> str:
        parts = [
            ResultFormatter.SEPARATOR_SUB,
            f"📐 {title}: f0 = {polytope.f0}, simplicial diameter = {diameter}",
            f"   {polytope}",
        ]
        return "\n".join(parts)

    @staticmethod
    def format_configuration(config: VectorConfiguration) -> str:
        balanced = "balanced" if config.is_balanced else f"sum {config.total()}"
        return f"D-map ({len(config)} vectors, {balanced}): {config}"

    @staticmethod
    def format_normalization(result: NormalizationResult) -> str:
        parts = [
            f"📐 normalized in {result.n}·Δ: f0 {result.f0_before} -> {result.f0_after}",
            f"   {result.polytope}",
            f"   unit contacts: {result.unit_contacts}",
            f"   boundary points are vertices: {result.boundary_points_are_vertices}",
            f"   arc condition: {result.arc_condition}",
        ]
        return "\n".join(parts)

    @staticmethod
    def format_report(report: DegreeReport) -> str:
        return report.describe()

    @staticmethod
    def format_asymptotic(rows: List[Dict]) -> str:
        lines = [f"{'q':>4} {'f0':>8} {'n':>10} {'ratio':>12} {'deviation':>10}"]
        for row in rows:
            lines.append(f"{row['q']:>4} {row['f0']:>8} {row['n']:>10} {row['ratio']:>12.6f} "
                         f"{row['deviation']:>10.4%}")
        if rows:
            lines.append(f"limit 9^3/(2π)^2 = {rows[0]['target']:.6f}")
        return "\n".join(lines)
