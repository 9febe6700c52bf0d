"""Named small graphs and the parameterized families used in the analysis.

Edge lists of the drawn graphs (net, bull, chair, antenna, F1, F2) use the
figure's vertex numbering shifted down by one.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph

# figure numbering 1..k, stored 1-based and shifted on construction
_FIGURE_EDGES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "net": (6, ((1, 2), (2, 3), (3, 4), (5, 2), (5, 3), (5, 6))),
    "bull": (5, ((1, 2), (3, 4), (1, 4), (5, 4), (5, 1))),
    "chair": (5, ((1, 2), (2, 3), (3, 4), (5, 2))),
    "antenna": (6, ((1, 2), (1, 4), (2, 3), (3, 4), (5, 2), (5, 3), (6, 5))),
    "F1": (9, (
        (1, 2), (1, 4), (2, 3), (3, 4), (5, 2), (5, 3), (6, 5),
        (9, 1), (9, 4), (9, 5), (9, 6),
        (7, 6), (7, 2), (7, 8), (7, 1),
        (8, 3), (8, 4), (8, 6),
    )),
    # vertices 1-4 are drawn on one line, so the drawn segment 1-4 reads as
    # the path 1-2-3-4; the bull is triangle 2,3,5 with pendants 1 and 4
    "F2": (7, (
        (1, 2), (2, 3), (3, 4), (5, 2), (5, 3),
        (6, 1), (6, 2), (6, 4),
        (7, 1), (7, 3), (7, 4),
    )),
    "paw": (4, ((1, 2), (2, 3), (2, 4), (3, 4))),
    "diamond": (4, ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))),
}

# degree sequences (sorted, descending) guarding the transcriptions above
FIGURE_DEGREES = {
    "net": (3, 3, 3, 1, 1, 1),
    "antenna": (3, 3, 3, 2, 2, 1),
    "F1": (4, 4, 4, 4, 4, 4, 4, 4, 4),
    "F2": (4, 4, 3, 3, 3, 3, 2),
}


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs k >= 1")
    return Graph.from_edges(k, combinations(range(k), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def k_chain(sizes: list[int]) -> Graph:
    """Cliques of the given sizes glued in sequence, consecutive ones sharing one vertex."""
    if not sizes:
        raise ValueError("k_chain needs at least one clique")
    if any(s < 1 for s in sizes):
        raise ValueError("clique sizes must be >= 1")
    edges = []
    n = 0
    shared = None
    for s in sizes:
        if shared is None:
            members = list(range(s))
            n = s
        else:
            members = [shared] + list(range(n, n + s - 1))
            n += s - 1
        edges.extend(combinations(members, 2))
        shared = members[-1]
    return Graph.from_edges(n, edges)


def generalized_bull(a: int, b: int, c: int) -> Graph:
    """Bull with its triangle vertices replaced by cliques of sizes a, b, c.

    The two pendant vertices are adjacent to every vertex of the first and
    second clique respectively.  Labels: clique A, clique B, clique C, then
    the pendant on A, then the pendant on B.
    """
    if min(a, b, c) < 1:
        raise ValueError("generalized bull needs nonempty cliques")
    core = a + b + c
    edges = list(combinations(range(core), 2))
    pa, pb = core, core + 1
    edges += [(pa, i) for i in range(a)]
    edges += [(pb, i) for i in range(a, a + b)]
    return Graph.from_edges(core + 2, edges)


def generalized_pyramid(a: int, b: int, c: int) -> Graph:
    """Three pairwise joined clique ovals plus three pairwise nonadjacent apexes.

    Apex 1 sees ovals 1 and 2, apex 2 sees ovals 2 and 3, apex 3 sees ovals 1
    and 3.  Labels: oval 1, oval 2, oval 3, then the three apexes.
    """
    if min(a, b, c) < 0:
        raise ValueError("oval sizes must be >= 0")
    core = a + b + c
    ovals = [range(0, a), range(a, a + b), range(a + b, core)]
    edges = list(combinations(range(core), 2))
    for apex, (i, j) in enumerate(((0, 1), (1, 2), (0, 2))):
        v = core + apex
        edges += [(v, u) for u in ovals[i]]
        edges += [(v, u) for u in ovals[j]]
    return Graph.from_edges(core + 3, edges)


def _from_figure(name: str) -> Graph:
    n, edges = _FIGURE_EDGES[name]
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def _dart() -> Graph:
    # diamond plus a pendant on one of its degree-3 vertices
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (0, 4)])


def _cricket() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])


_BUILDERS = {
    "claw": lambda: star(3),
    "net": lambda: _from_figure("net"),
    "sun3": lambda: _from_figure("net").complement(),
    "bull": lambda: _from_figure("bull"),
    "antenna": lambda: _from_figure("antenna"),
    "chair": lambda: _from_figure("chair"),
    "F1": lambda: _from_figure("F1"),
    "F2": lambda: _from_figure("F2"),
    "paw": lambda: _from_figure("paw"),
    "diamond": lambda: _from_figure("diamond"),
    "dart": _dart,
    "cricket": _cricket,
    "co_K3_2K1": lambda: complete(3).disjoint_union(Graph.empty(2)).complement(),
    "co_P3": lambda: path(3).complement(),
    # four-vertex graphs and their complements
    "K1": lambda: complete(1),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "C4": lambda: cycle(4),
    "K4": lambda: complete(4),
    "4K1": lambda: Graph.empty(4),
    "triangle": lambda: complete(3),
    "co_triangle": lambda: Graph.empty(3),
    "co_claw": lambda: star(3).complement(),
    "co_diamond": lambda: _from_figure("diamond").complement(),
    "co_paw": lambda: _from_figure("paw").complement(),
    "2K2": lambda: Graph.from_edges(4, [(0, 1), (2, 3)]),
    "K14": lambda: star(4),
    "bowtie": lambda: k_chain([3, 3]),
}

NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {', '.join(NAMES)}") from None
    return builder()


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "k_chain": (k_chain, None),
    "generalized_bull": (generalized_bull, 3),
    "generalized_pyramid": (generalized_pyramid, 3),
}


def build(spec: str) -> Graph:
    """Build a graph from ``name`` or ``family:arg,arg,...`` (e.g. ``k_chain:3,4,2``)."""
    if ":" not in spec:
        return named(spec)
    family, _, args = spec.partition(":")
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    func, arity = FAMILIES[family]
    values = [int(x) for x in args.split(",") if x.strip()]
    if arity is None:
        return func(values)
    if len(values) != arity:
        raise ValueError(f"{family} takes {arity} integer argument(s)")
    return func(*values)
