"""Command-line front end: eval, grid, periods, hecke and verify."""

from cli.main import main

__all__ = ["main"]
