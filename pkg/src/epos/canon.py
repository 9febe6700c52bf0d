"""Canonical labeling by equitable refinement plus individualization search.

``canonical_form`` returns the graph6 bytes of the canonically relabelled
graph, so two graphs get equal forms exactly when they are isomorphic.
"""
from __future__ import annotations

from .graph import Graph, g6_encode
from . import kernels


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[i]`` is the vertex of ``g`` placed at canonical position ``i``."""
    return kernels.canonical_labeling(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    if g.n == 0:
        return g
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    if g.n == 0:
        return b""
    return g6_encode(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
