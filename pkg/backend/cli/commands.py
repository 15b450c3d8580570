"""Subcommand implementations.

CommandRunner validates a CommandConfig, runs the matching handler and
writes its output as JSON, an aligned text table or an SVG figure. The
return value of run() is the process exit code.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from geometry.polytope import d_map, minkowski_sum, simplicial_diameter, simplicial_diameter_maxsum, valuation_m
from geometry.saturated import a_bounds, asymptotic_ratio, build_qk, n_formula, polytope_of, s_leq, table_row
from models.command import CommandConfig, OutputFormat
from models.errors import DocumentReadError
from models.polytope import Polytope
from models.search import SearchMode, SearchStatus
from services.normalize_service import canonicalize_maximal
from services.search_service import SearchService
from services.tropical_service import ray_bound_check

from .documents import dumps, load_curve, load_polytope, write_output
from .formatter import ResultFormatter
from .render import render_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INCONCLUSIVE = 3
EXIT_IO = 4


@dataclass
class CommandOutput:
    """What a handler produced, before choosing an output format."""
    data: Dict
    text: str
    polytope: Optional[Polytope] = None
    n: Optional[int] = None
    inconclusive: bool = False


def error_payload(error: Exception) -> Dict:
    return {"status": "error", "error_type": type(error).__name__, "error_message": str(error)}


def build_table(max_n: int, service: Optional[SearchService] = None,
                search_max_n: Optional[int] = None) -> List[Dict]:
    """Rows n = 1..max_n; non-exact rows up to search_max_n are searched when a service is given."""
    rows = []
    for n in range(1, max_n + 1):
        row = table_row(n)
        searchable = search_max_n is None or n <= search_max_n
        if row["source"] == "bounds" and service is not None and searchable:
            result = service.max_vertices_branch_and_bound(n)
            row["value"] = result.a_of_n
            row["source"] = "search" if result.is_exact else "inconclusive"
        elif row["source"] == "bounds" and service is not None:
            logger.info(f"Row {n} is above the profile search cap {search_max_n}; keeping bounds")
        rows.append(row)
    return rows


def _row_to_dict(row: Dict) -> Dict:
    return {"n": row["n"], "A": row["value"], "lower": row["bound"].lower, "upper": row["bound"].upper,
            "source": row["source"]}


class CommandRunner:
    """Runs one validated subcommand."""

    def __init__(self, config: CommandConfig):
        self.config = config
        self.formatter = ResultFormatter()

    def run(self) -> int:
        try:
            self.config.validate()
            handler = getattr(self, f"_cmd_{self.config.subcommand}")
            output = handler()
            self._emit(output)
            return EXIT_INCONCLUSIVE if output.inconclusive else EXIT_OK
        except DocumentReadError as e:
            logger.error(f"I/O error: {e}")
            print(dumps(error_payload(e)))
            return EXIT_IO
        except ValueError as e:
            logger.error(f"Validation error: {e}")
            print(dumps(error_payload(e)))
            return EXIT_VALIDATION

    def _emit(self, output: CommandOutput):
        fmt = self.config.output_format
        if fmt == OutputFormat.JSON:
            text = dumps(output.data)
        elif fmt == OutputFormat.SVG:
            text = render_svg(output.polytope, output.n, skew=self.config.skew)
        else:
            text = output.text
        write_output(text, self.config.output)

    def _service(self) -> SearchService:
        return SearchService(self.config.limits, self.config.options)

    def _cmd_an(self) -> CommandOutput:
        n = self.config.n
        bound = a_bounds(n)
        result = None
        if self.config.search and not bound.exact:
            result = self._service().max_vertices_branch_and_bound(n)
        data = {"n": n, "bound": bound.to_dict(), "A": bound.lower if bound.exact else None, "search": None}
        text = self.formatter.format_bound(bound, result)
        if result is not None:
            data["search"] = result.to_dict()
            data["A"] = result.a_of_n if result.is_exact else None
            text += "\n" + self.formatter.format_search(result)
        return CommandOutput(data, text, inconclusive=result is not None and not result.is_exact)

    def _cmd_table(self) -> CommandOutput:
        rows = build_table(self.config.max_n, self._service() if self.config.search else None,
                           self.config.search_max_n)
        return CommandOutput(
            {"rows": [_row_to_dict(row) for row in rows]},
            self.formatter.format_table(rows),
            inconclusive=any(row["source"] == "inconclusive" for row in rows),
        )

    def _cmd_construct(self) -> CommandOutput:
        if self.config.k is not None:
            saturated = build_qk(self.config.k)
            label = f"Q_{self.config.k}"
        else:
            saturated = s_leq(self.config.q)
            label = f"P_S<={self.config.q}"
        polytope = polytope_of(saturated)
        n = int(n_formula(saturated))
        data = polytope.to_dict()
        data.update({"f0": polytope.f0, "n": n, "saturated": saturated.to_dict()})
        return CommandOutput(data, self.formatter.format_polytope(polytope, n, label), polytope, n)

    def _cmd_diameter(self) -> CommandOutput:
        polytope = load_polytope(self.config.inputs[0])
        witness = simplicial_diameter_maxsum(polytope)
        valuation = valuation_m(d_map(polytope))
        data = {"diameter": witness.value, "translation": witness.translation.to_list(),
                "valuation": str(valuation)}
        text = f"simplicial diameter: {witness.value} (valuation m = {valuation})"
        return CommandOutput(data, text, polytope, witness.value)

    def _cmd_dmap(self) -> CommandOutput:
        polytope = load_polytope(self.config.inputs[0])
        config = d_map(polytope)
        data = config.to_dict()
        data["balanced"] = config.is_balanced
        return CommandOutput(data, self.formatter.format_configuration(config), polytope,
                             simplicial_diameter(polytope))

    def _cmd_minkowski(self) -> CommandOutput:
        first = load_polytope(self.config.inputs[0])
        second = load_polytope(self.config.inputs[1])
        total = minkowski_sum(first, second)
        diameter = simplicial_diameter(total)
        data = total.to_dict()
        data["diameter"] = diameter
        return CommandOutput(data, self.formatter.format_polytope(total, diameter, "Minkowski sum"),
                             total, diameter)

    def _cmd_normalize(self) -> CommandOutput:
        polytope = load_polytope(self.config.inputs[0])
        result = canonicalize_maximal(polytope, self.config.n)
        return CommandOutput(result.to_dict(), self.formatter.format_normalization(result),
                             result.polytope, self.config.n)

    def _cmd_tropical(self) -> CommandOutput:
        curve = load_curve(self.config.inputs[0])
        report = ray_bound_check(curve, self.config.claimed_degree, search=self.config.search,
                                 limits=self.config.limits)
        return CommandOutput(report.to_dict(), self.formatter.format_report(report), report.newton_polytope,
                             report.degree)

    def _cmd_asymptotic(self) -> CommandOutput:
        rows = []
        for q in range(1, self.config.qmax + 1):
            ratio = asymptotic_ratio(q)
            rows.append({
                "q": q,
                "f0": ratio.f0,
                "n": ratio.n,
                "ratio_exact": f"{ratio.ratio.numerator}/{ratio.ratio.denominator}",
                "ratio": float(ratio.ratio),
                "target": ratio.target,
                "deviation": ratio.deviation,
            })
        return CommandOutput({"rows": rows}, self.formatter.format_asymptotic(rows))

    def _cmd_search(self) -> CommandOutput:
        service = self._service()
        mode = self.config.mode
        if mode == SearchMode.MINIMUM_SUM:
            result = service.minimum_norm_sum(self.config.k)
            text = self.formatter.format_minimum_norm(result)
        elif mode == SearchMode.ENUMERATE:
            result = service.enumerate_maximal(self.config.n)
            text = self.formatter.format_enumeration(result)
        elif mode == SearchMode.GEOMETRIC:
            result = service.max_vertices_geometric(self.config.n)
            text = self.formatter.format_search(result)
        else:
            result = service.max_vertices_branch_and_bound(self.config.n)
            text = self.formatter.format_search(result)
        return CommandOutput(result.to_dict(), text, inconclusive=result.status == SearchStatus.INCONCLUSIVE)
