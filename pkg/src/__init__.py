"""
jcolour: exact J / J* colouring solvers, graph operations and claim verification.
"""

from src.version import __version__

__all__ = ["__version__"]
