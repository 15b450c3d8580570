#!/usr/bin/env python3
"""
Vertex-maximal lattice polygons command-line entry point.

Computes A(n), the largest vertex count of a lattice polygon inside the
dilated unimodular triangle n·Δ, builds the saturated-set maximizers, runs
the exhaustive search oracles, and checks tropical curves against the A(d)
ray bound.
"""

import os
import sys
import argparse
import logging
from pathlib import Path

import yaml
from dotenv import load_dotenv

# Add backend to path for imports
backend_path = Path(__file__).parent
sys.path.insert(0, str(backend_path))

from cli.commands import EXIT_IO, EXIT_VALIDATION, CommandRunner, error_payload
from cli.documents import dumps
from models.command import CommandConfig, OutputFormat
from models.errors import ConfigurationValidationError, SearchRangeError
from models.search import SearchLimits, SearchMode
from profiles.manager import ProfileManager

PROJECT_ROOT = Path(__file__).parent.parent


def load_environment():
    """Load environment variables from .env file."""
    env_file = PROJECT_ROOT / ".env"
    if env_file.exists():
        load_dotenv(env_file)


def setup_logging():
    """Setup logging configuration."""
    log_level = os.getenv('LOG_LEVEL', 'WARNING').upper()
    logging.basicConfig(
        level=getattr(logging, log_level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logger = logging.getLogger(__name__)
    logger.info(f"Logging configured at {log_level} level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertexmax",
        description="Vertex-maximal lattice polygons in dilated unimodular triangles",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py an 17                       # exact 18
  python main.py an 7 --search               # exact 10 (search)
  python main.py table 10 --search           # A(1..10)
  python main.py construct --q 4 -o p4.svg --format svg
  python main.py normalize polygon.json 7 --format json
  python main.py search 7 --mode enumerate --threads 4
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[f.value for f in OutputFormat], default='table',
                        help='Output format (default: table)')
    common.add_argument('-o', '--output', type=str, help='Write output to PATH instead of stdout')
    common.add_argument('--profile', type=str, help='Search profile id (default: $VERTEXMAX_PROFILE or desk)')
    common.add_argument('--search', action='store_true', help='Resolve inexact values by exhaustive search')
    common.add_argument('--threads', type=int, help='Worker threads for the search')
    common.add_argument('--max-nodes', type=int, help='Node limit for the search')
    common.add_argument('--max-seconds', type=float, help='Time limit for the search')
    common.add_argument('--skew', action='store_true', default=None, help='Draw figures in the skewed frame')

    sub = parser.add_subparsers(dest='subcommand', required=True)

    p = sub.add_parser('an', parents=[common], help='Exact value or bounds for A(n)')
    p.add_argument('n', type=int)

    p = sub.add_parser('table', parents=[common], help='Table of A(n) for n = 1..max_n')
    p.add_argument('max_n', type=int)

    p = sub.add_parser('construct', parents=[common], help='Build Q_k or P_S<=q')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--k', type=int)
    group.add_argument('--q', type=int)

    for name, help_text in (('diameter', 'Simplicial diameter of a polygon'),
                            ('dmap', 'Vector configuration of a polygon')):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument('file')

    p = sub.add_parser('minkowski', parents=[common], help='Minkowski sum of two polygons')
    p.add_argument('file_a')
    p.add_argument('file_b')

    p = sub.add_parser('normalize', parents=[common], help='Boundary normalization in n·Δ')
    p.add_argument('file')
    p.add_argument('n', type=int)

    p = sub.add_parser('tropical', parents=[common], help='Degree and ray bound of a tropical curve')
    p.add_argument('file')
    p.add_argument('--degree', type=int, help='Claimed degree to check')

    p = sub.add_parser('asymptotic', parents=[common], help='f0^3 / n^2 for P_S<=q, q = 1..qmax')
    p.add_argument('qmax', type=int)

    p = sub.add_parser('search', parents=[common], help='Run an exhaustive oracle')
    p.add_argument('n', type=int, help='n for bnb/geometric/enumerate, k for minsum')
    p.add_argument('--mode', choices=[m.value for m in SearchMode], default=SearchMode.BRANCH_AND_BOUND.value)

    return parser


def build_config(args: argparse.Namespace, profiles: ProfileManager) -> CommandConfig:
    """Merge the profile with command-line overrides."""
    profile_id = args.profile or os.getenv('VERTEXMAX_PROFILE', 'desk')
    limits = profiles.limits(profile_id)
    try:
        limits = SearchLimits(
            max_nodes=args.max_nodes if args.max_nodes is not None else limits.max_nodes,
            max_seconds=args.max_seconds if args.max_seconds is not None else limits.max_seconds,
            threads=args.threads if args.threads is not None else limits.threads,
        )
    except SearchRangeError as e:
        raise ConfigurationValidationError(str(e))

    inputs = [getattr(args, name) for name in ('file', 'file_a', 'file_b') if getattr(args, name, None)]
    mode = SearchMode(getattr(args, 'mode', SearchMode.BRANCH_AND_BOUND.value))
    n = getattr(args, 'n', None)
    k = getattr(args, 'k', None)
    if args.subcommand == 'search' and mode == SearchMode.MINIMUM_SUM:
        n, k = None, n

    return CommandConfig(
        subcommand=args.subcommand,
        n=n,
        k=k,
        q=getattr(args, 'q', None),
        max_n=getattr(args, 'max_n', None),
        qmax=getattr(args, 'qmax', None),
        inputs=inputs,
        output=args.output,
        output_format=OutputFormat(args.format),
        search=args.search,
        mode=mode,
        limits=limits,
        options=profiles.options(profile_id),
        skew=args.skew if args.skew is not None else profiles.skew(profile_id),
        profile_id=profile_id,
        claimed_degree=getattr(args, 'degree', None),
        search_max_n=profiles.search_max_n(profile_id),
    )


def main(argv=None) -> int:
    """Main application entry point."""
    args = build_parser().parse_args(argv)

    load_environment()
    setup_logging()

    try:
        profile_dir = os.getenv('VERTEXMAX_PROFILE_DIR', str(PROJECT_ROOT / "profiles"))
        profiles = ProfileManager(config_dir=profile_dir)
        config = build_config(args, profiles)
    except (FileNotFoundError, yaml.YAMLError) as e:
        print(dumps(error_payload(e)))
        return EXIT_IO
    except ValueError as e:
        print(dumps(error_payload(e)))
        return EXIT_VALIDATION
    except Exception as e:
        print(f"❌ Error initializing: {e}", file=sys.stderr)
        if os.getenv('DEBUG_MODE', 'false').lower() == 'true':
            import traceback
            traceback.print_exc()
        return 1

    try:
        return CommandRunner(config).run()
    except Exception as e:
        print(f"❌ Unexpected error: {e}", file=sys.stderr)
        if os.getenv('DEBUG_MODE', 'false').lower() == 'true':
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
