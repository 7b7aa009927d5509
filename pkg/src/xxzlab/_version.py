"""Package version."""

from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

import tomli

PYPROJECT = Path(__file__).resolve().parents[2] / "pyproject.toml"


def _source_version() -> str:
    """Version of a source checkout, read from pyproject.toml."""
    try:
        with PYPROJECT.open("rb") as f:
            return f"{tomli.load(f)['tool']['poetry']['version']}+source"
    except (OSError, KeyError, tomli.TOMLDecodeError):
        return "0+unknown"


try:
    __version__ = version("xxzlab")
except PackageNotFoundError:
    __version__ = _source_version()
