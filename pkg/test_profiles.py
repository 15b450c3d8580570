#!/usr/bin/env python3
"""
Tests for loading and validating search profiles.
"""

import sys
import tempfile
from pathlib import Path

import yaml

# Add the backend directory to the Python path
backend_path = Path(__file__).parent / "backend"
sys.path.insert(0, str(backend_path))

from models.search import SearchLimits, SearchOptions
from profiles.loader import ProfileLoader
from profiles.manager import ProfileManager
from profiles.validator import ProfileValidator

PROFILE_DIR = Path(__file__).parent / "profiles"


def _valid_profile(profile_id="scratch"):
    return {
        "profile_id": profile_id,
        "profile_name": "Scratch",
        "description": "Temporary profile",
        "search": {
            "max_nodes": 1000,
            "max_seconds": 5,
            "threads": 2,
            "pruning": {"closing_bound": True, "counting_bound": True, "seed_incumbent": False},
        },
    }


def test_shipped_profiles():
    manager = ProfileManager(config_dir=str(PROFILE_DIR))
    assert set(manager.list_available_profiles()) == {"desk", "stretch"}
    assert manager.limits("desk") == SearchLimits(max_nodes=50000000, max_seconds=60.0, threads=1)
    assert manager.options("desk") == SearchOptions()
    assert manager.search_max_n("desk") == 10
    assert manager.skew("desk") is False
    assert manager.skew("stretch") is True
    assert manager.options("stretch").report_primitive is False
    info = manager.get_profile_info("stretch")
    assert info["threads"] == 4 and info["search_max_n"] == 16
    raw = ProfileLoader(str(PROFILE_DIR)).load_profile("desk")
    assert raw["search"]["pruning"]["closing_bound"] is True
    print("✅ Shipped profiles load into limits and options")


def test_unknown_profile():
    manager = ProfileManager(config_dir=str(PROFILE_DIR))
    try:
        manager.get_profile("missing")
        assert False, "expected ValueError"
    except ValueError as e:
        assert "desk" in str(e)
    try:
        ProfileLoader("/nonexistent/profile/dir")
        assert False, "expected FileNotFoundError"
    except FileNotFoundError:
        pass
    print("✅ Unknown profiles and directories are reported")


def test_validator():
    validator = ProfileValidator()
    assert validator.validate_profile(_valid_profile())["status"] == "success"
    result = validator.validate_profile(_valid_profile())
    assert result["warnings"], "a disabled pruning rule should warn"

    broken = _valid_profile()
    del broken["description"]
    assert validator.validate_profile(broken)["status"] == "error"

    for key, value in (("max_nodes", 0), ("max_seconds", 0), ("threads", 65), ("threads", True)):
        profile = _valid_profile()
        profile["search"][key] = value
        result = validator.validate_profile(profile)
        assert result["status"] == "error", f"{key}={value} should be rejected"

    profile = _valid_profile()
    profile["search"]["pruning"]["counting_bound"] = "yes"
    assert validator.validate_profile(profile)["status"] == "error"
    profile = _valid_profile()
    profile["table"] = {"search_max_n": -1}
    assert validator.validate_profile(profile)["status"] == "error"
    assert validator.validate_profile(["not", "a", "mapping"])["status"] == "error"
    print("✅ Validator checks structure, types and ranges")


def test_invalid_profiles_are_dropped():
    with tempfile.TemporaryDirectory() as tmp:
        good = _valid_profile("good")
        bad = _valid_profile("bad")
        bad["search"]["threads"] = 0
        for profile in (good, bad):
            with open(Path(tmp) / f"{profile['profile_id']}.yaml", "w", encoding="utf-8") as f:
                yaml.safe_dump(profile, f)
        manager = ProfileManager(config_dir=tmp)
        assert manager.list_available_profiles() == ["good"]
        assert ProfileLoader(tmp).list_available_profiles() == ["bad", "good"]
        assert manager.limits("good").threads == 2
        assert manager.options("good").seed_incumbent is False
        assert manager.search_max_n("good") is None
    print("✅ Invalid profiles are dropped at load time")


def main():
    """Run all tests."""
    print("=" * 60)
    print("🧪 PROFILE TESTS")
    print("=" * 60)
    print()

    tests = [
        test_shipped_profiles,
        test_unknown_profile,
        test_validator,
        test_invalid_profiles_are_dropped,
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
