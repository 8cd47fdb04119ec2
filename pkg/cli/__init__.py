"""Command-line surface of the toolkit (`python -m cli` or the `hcf` script)."""

from .main import run, build_parser, render, COMMANDS

__all__ = ["run", "build_parser", "render", "COMMANDS"]
