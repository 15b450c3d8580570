"""JSON document input and output for the CLI."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from geometry.polytope import polytope_from_dict
from models.errors import DocumentReadError
from models.polytope import Polytope
from models.tropical import TropicalCurve
from services.tropical_service import curve_from_dict

logger = logging.getLogger(__name__)


def read_json(path: str) -> Dict[str, Any]:
    """Read a JSON document.

    Raises:
        DocumentReadError: If the file is missing, unreadable or malformed
    """
    file_path = Path(path)
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise DocumentReadError(f"Input file not found: {file_path}")
    except json.JSONDecodeError as e:
        raise DocumentReadError(f"Invalid JSON in {file_path}: {e}")
    except OSError as e:
        raise DocumentReadError(f"Cannot read {file_path}: {e}")


def load_polytope(path: str) -> Polytope:
    return polytope_from_dict(read_json(path))


def load_curve(path: str) -> TropicalCurve:
    return curve_from_dict(read_json(path))


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def write_output(text: str, path: Optional[str] = None):
    """Write text to path, or print it when no path is given."""
    if path is None:
        print(text)
        return
    file_path = Path(path)
    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(text if text.endswith("\n") else text + "\n")
    except OSError as e:
        raise DocumentReadError(f"Cannot write {file_path}: {e}")
    logger.info(f"Wrote {file_path}")
