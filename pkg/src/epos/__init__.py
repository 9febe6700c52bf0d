"""Exact chromatic symmetric functions and e-positivity checks for small graphs."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, g6_decode, g6_encode  # noqa: E402
from .canon import canonical_form, is_isomorphic  # noqa: E402
from .kernels import IMPLEMENTATION  # noqa: E402

__all__ = [
    "Graph",
    "GraphError",
    "g6_decode",
    "g6_encode",
    "canonical_form",
    "is_isomorphic",
    "IMPLEMENTATION",
]
