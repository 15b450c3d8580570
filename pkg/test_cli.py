#!/usr/bin/env python3
"""
End-to-end tests for the vertexmax command line.
"""

import contextlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path

import yaml

# Add the backend directory to the Python path
backend_path = Path(__file__).parent / "backend"
sys.path.insert(0, str(backend_path))

from cli.commands import EXIT_INCONCLUSIVE, EXIT_IO, EXIT_OK, EXIT_VALIDATION, build_table
from main import main as cli_main
from services.search_service import SearchService

PROJECT_ROOT = Path(__file__).parent

HEXAGON = {"vertices": [[0, 2], [1, 0], [2, 0], [3, 1], [2, 2], [0, 3]]}


def run_cli(*argv):
    """Run the CLI in-process; returns (exit code, stdout)."""
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = cli_main(list(argv) + ["--profile", "desk"])
    return code, buffer.getvalue()


def _write(directory, name, data):
    path = Path(directory) / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_an():
    code, out = run_cli("an", "17")
    assert code == EXIT_OK
    assert "A(17): exact 18" in out
    code, out = run_cli("an", "2")
    assert code == EXIT_OK and "3 ≤ A(2) ≤ 5" in out
    code, out = run_cli("an", "7", "--search")
    assert code == EXIT_OK and "A(7): exact 10 (search)" in out
    code, out = run_cli("an", "7", "--search", "--format", "json")
    payload = json.loads(out)
    assert payload["A"] == 10 and payload["search"]["status"] == "exact"
    print("✅ 'an' reports exact values, bounds and searched values")


def test_table():
    code, out = run_cli("table", "1")
    assert code == EXIT_OK and "1: 3 (formula)" in out
    code, out = run_cli("table", "10", "--search", "--format", "json")
    assert code == EXIT_OK
    values = [row["A"] for row in json.loads(out)["rows"]]
    assert values == [3, 4, 6, 6, 8, 9, 10, 10, 12, 12]
    rows = build_table(37)
    exact = [(row["n"], row["value"]) for row in rows if row["source"] == "formula"]
    assert exact == [(1, 3), (3, 6), (6, 9), (9, 12), (13, 15), (17, 18), (22, 21), (27, 24), (32, 27), (37, 30)]
    print("✅ 'table' lists formula rows and searched rows")


def test_table_search_cap():
    rows = build_table(8, SearchService(), search_max_n=6)
    by_n = {row["n"]: row for row in rows}
    assert by_n[5]["source"] == "search" and by_n[5]["value"] == 8
    assert by_n[7]["source"] == "bounds" and by_n[7]["value"] is None
    assert by_n[8]["source"] == "bounds"
    assert by_n[6]["source"] == "formula"

    profile = yaml.safe_load((PROJECT_ROOT / "profiles" / "desk.yaml").read_text(encoding="utf-8"))
    profile["table"]["search_max_n"] = 6
    previous = os.environ.get("VERTEXMAX_PROFILE_DIR")
    with tempfile.TemporaryDirectory() as tmp:
        (Path(tmp) / "desk.yaml").write_text(yaml.safe_dump(profile), encoding="utf-8")
        os.environ["VERTEXMAX_PROFILE_DIR"] = tmp
        try:
            code, out = run_cli("table", "8", "--search", "--format", "json")
        finally:
            if previous is None:
                os.environ.pop("VERTEXMAX_PROFILE_DIR", None)
            else:
                os.environ["VERTEXMAX_PROFILE_DIR"] = previous
    assert code == EXIT_OK
    sources = {row["n"]: row["source"] for row in json.loads(out)["rows"]}
    assert sources[5] == "search" and sources[7] == "bounds" and sources[8] == "bounds"
    print("✅ 'table --search' stops searching above the profile cap")


def test_construct():
    code, out = run_cli("construct", "--q", "4", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["f0"] == 18 and payload["n"] == 17
    assert [0, 9] in payload["vertices"] and [12, 3] in payload["vertices"]
    code, out = run_cli("construct", "--k", "1", "--format", "json")
    assert json.loads(out)["vertices"] == [[0, 0], [1, 0], [0, 1]]
    code, _ = run_cli("construct", "--k", "0")
    assert code == EXIT_VALIDATION
    print("✅ 'construct' builds Q_k and P_S<=q")


def test_polygon_commands():
    with tempfile.TemporaryDirectory() as tmp:
        hexagon = _write(tmp, "hexagon.json", HEXAGON)
        unit = _write(tmp, "unit.json", {"vertices": [[0, 0], [1, 0], [0, 1]]})

        code, out = run_cli("diameter", hexagon, "--format", "json")
        assert code == EXIT_OK and json.loads(out)["diameter"] == 4

        code, out = run_cli("dmap", hexagon, "--format", "json")
        payload = json.loads(out)
        assert payload["balanced"] and len(payload["vectors"]) == 6

        code, out = run_cli("minkowski", unit, unit, "--format", "json")
        assert json.loads(out)["vertices"] == [[0, 0], [2, 0], [0, 2]]

        code, out = run_cli("normalize", hexagon, "4", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["f0_after"] == 6 and payload["unit_contacts"]

        svg_path = str(Path(tmp) / "figures" / "hexagon.svg")
        code, _ = run_cli("normalize", hexagon, "4", "--format", "svg", "-o", svg_path)
        assert code == EXIT_OK
        assert "<svg" in Path(svg_path).read_text(encoding="utf-8")
    print("✅ Polygon subcommands read JSON and write JSON or SVG")


def test_tropical_and_asymptotic():
    with tempfile.TemporaryDirectory() as tmp:
        rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
        curve = _write(tmp, "curve.json", {"rays": [{"u": u, "mult": 1} for u in rays]})
        code, out = run_cli("tropical", curve)
        assert code == EXIT_OK
        assert "degree 3, rays 6, bound A(3)=6: tight" in out
        code, out = run_cli("tropical", curve, "--format", "json")
        assert code == EXIT_OK
        assert len(json.loads(out)["newton_polytope"]["vertices"]) == 6
        code, out = run_cli("tropical", curve, "--degree", "2")
        assert code == EXIT_VALIDATION
        assert json.loads(out)["error_type"] == "DegreeMismatchError"

    code, out = run_cli("asymptotic", "4", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[0]["ratio_exact"] == "27/1"
    assert rows[3]["ratio_exact"] == "5832/289"
    print("✅ 'tropical' and 'asymptotic' produce the expected reports")


def test_search_modes():
    code, out = run_cli("search", "5", "--mode", "geometric", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["A"] == 8
    code, out = run_cli("search", "4", "--mode", "minsum", "--format", "json")
    assert json.loads(out)["value"] == 5
    code, out = run_cli("search", "3", "--mode", "enumerate", "--format", "json")
    assert json.loads(out)["count"] == 1
    code, out = run_cli("search", "7", "--max-nodes", "1", "--format", "json")
    assert code == EXIT_INCONCLUSIVE
    assert json.loads(out)["status"] == "inconclusive"
    print("✅ 'search' runs every oracle and flags inconclusive runs")


def test_error_exit_codes():
    code, out = run_cli("an", "0")
    assert code == EXIT_VALIDATION
    assert json.loads(out)["status"] == "error"
    code, out = run_cli("diameter", "/nonexistent/polygon.json")
    assert code == EXIT_IO
    assert json.loads(out)["error_type"] == "DocumentReadError"
    code, _ = run_cli("an", "5", "--format", "svg")
    assert code == EXIT_VALIDATION
    code, _ = run_cli("search", "6", "--mode", "geometric")
    assert code == EXIT_VALIDATION
    code, _ = run_cli("an", "7", "--search", "--threads", "0")
    assert code == EXIT_VALIDATION
    with tempfile.TemporaryDirectory() as tmp:
        broken = Path(tmp) / "broken.json"
        broken.write_text("{not json", encoding="utf-8")
        code, _ = run_cli("dmap", str(broken))
        assert code == EXIT_IO
        empty = _write(tmp, "empty.json", {"vertices": []})
        code, _ = run_cli("dmap", empty)
        assert code == EXIT_VALIDATION
        fractional = _write(tmp, "fractional.json", {"vertices": [[0, 0], [1.9, 0], [0, 1.9]]})
        code, out = run_cli("diameter", fractional, "--format", "json")
        assert code == EXIT_VALIDATION
        assert json.loads(out)["error_type"] == "ConfigurationValidationError"
        curve = _write(tmp, "fractional_curve.json",
                       {"rays": [{"u": [1.5, 0, 0]}, {"u": [0, 1, 0]}, {"u": [0, 0, 1]}]})
        code, out = run_cli("tropical", curve, "--format", "json")
        assert code == EXIT_VALIDATION
        assert json.loads(out)["error_type"] == "CurveValidationError"
    print("✅ Errors map to validation and I/O exit codes")


def main():
    """Run all tests."""
    print("=" * 60)
    print("🧪 CLI TESTS")
    print("=" * 60)
    print()

    tests = [
        test_an,
        test_table,
        test_table_search_cap,
        test_construct,
        test_polygon_commands,
        test_tropical_and_asymptotic,
        test_search_modes,
        test_error_exit_codes,
    ]

    results = []
    for test in tests:
        try:
            test()
            results.append(True)
        except Exception as e:
            print(f"❌ {test.__name__} failed: {e}")
            results.append(False)

    print("\n" + "=" * 60)
    print("📊 TEST SUMMARY")
    print("=" * 60)
    passed = sum(results)
    print(f"Tests passed: {passed}/{len(results)}")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
