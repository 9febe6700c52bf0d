"""Connected graphs up to isomorphism by canonical augmentation.

A child ``C`` of a parent ``P`` is ``P`` plus one new vertex joined to a
nonempty subset of ``V(P)``.  Its canonical deletion vertex is the non-cut
vertex of ``C`` with the largest canonical position; ``C`` is kept only when
deleting that vertex gives back ``P`` up to isomorphism.  Every connected graph
therefore has exactly one parent class, and duplicates can only arise among
children of the same parent.
"""
from __future__ import annotations

import multiprocessing
import threading
from typing import Callable, Iterator

from . import kernels
from .graph import Graph, g6_encode
from .recognition import is_free

DEFAULT_CAP = 9
HARD_CAP = 12


class CapError(ValueError):
    """Requested order exceeds the configured cap."""


# hereditary filters are looked up by name so worker processes can receive them
HEREDITARY: dict[str, Callable[[Graph], bool]] = {
    "claw-free": lambda g: is_free(g, "claw"),
    "claw-net-free": lambda g: is_free(g, "claw", "net"),
    "claw-coclaw-free": lambda g: is_free(g, "claw", "co_claw"),
}


def _canon(g: Graph) -> tuple[list[int], bytes]:
    lab = kernels.canonical_labeling(g.n, g.adj)
    return lab, g6_encode(g.relabel(lab)).encode("ascii")


def _canon_code(g: Graph) -> bytes:
    return _canon(g)[1]


def children(parent: Graph, hereditary: str | None = None) -> list[tuple[bytes, Graph]]:
    """Accepted children of a canonical parent as (canonical form, canonical graph), sorted."""
    keep = HEREDITARY[hereditary] if hereditary else None
    n = parent.n
    parent_code = _canon_code(parent) if n else b""
    found: dict[bytes, Graph] = {}
    for s in range(1, 1 << n) if n else [0]:
        child = parent.add_vertex(s)
        lab, code = _canon(child)
        if code in found:
            continue
        size = s.bit_count()
        for pos in range(n, -1, -1):
            v = lab[pos]
            if child.n == 1 or child.delete_vertex(v).is_connected():
                star = v
                break
        if child.degree(star) != size:
            continue
        if star != n and _canon_code(child.delete_vertex(star)) != parent_code:
            continue
        canon_child = child.relabel(lab)
        if keep is not None and not keep(canon_child):
            continue
        found[code] = canon_child
    return sorted(found.items())


def _children_job(args):
    g6, hereditary = args
    from .graph import g6_decode
    parent = g6_decode(g6) if g6 else Graph.empty(0)
    return [(code, g.to_g6()) for code, g in children(parent, hereditary)]


_levels: dict[tuple[int, str | None], list[Graph]] = {}
_levels_lock = threading.Lock()


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > min(cap, HARD_CAP):
        raise CapError(f"n={n} exceeds cap {min(cap, HARD_CAP)}")


def iter_children_by_parent(
    n: int, hereditary: str | None = None, jobs: int = 1, cap: int = DEFAULT_CAP,
    start: int = 0,
) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(parent index, children)`` for every parent on ``n - 1`` vertices, in order."""
    _check_cap(n, cap)
    parents = connected_graphs(n - 1, hereditary, cap=cap, jobs=jobs) if n > 1 else [Graph.empty(0)]
    tasks = [(p.to_g6() if p.n else "", hereditary) for p in parents[start:]]
    from .graph import g6_decode
    if jobs <= 1 or len(tasks) < 2:
        results = map(_children_job, tasks)
        for i, res in enumerate(results, start):
            yield i, [g6_decode(t) for _, t in res]
        return
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        chunk = max(1, len(tasks) // (jobs * 16))
        for i, res in enumerate(pool.imap(_children_job, tasks, chunksize=chunk), start):
            yield i, [g6_decode(t) for _, t in res]


def connected_graphs(
    n: int, hereditary: str | None = None, cap: int = DEFAULT_CAP, jobs: int = 1,
) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism, sorted by canonical form.

    With ``hereditary`` set, only graphs passing that named hereditary filter
    are generated (and so are all their ancestors).
    """
    if n == 0:
        return [Graph.empty(0)]
    _check_cap(n, cap)
    if hereditary is not None and hereditary not in HEREDITARY:
        raise KeyError(f"unknown filter {hereditary!r}; known: {', '.join(HEREDITARY)}")
    key = (n, hereditary)
    with _levels_lock:
        got = _levels.get(key)
    if got is not None:
        return got
    merged: list[tuple[bytes, Graph]] = []
    for _, kids in iter_children_by_parent(n, hereditary, jobs, cap):
        merged.extend((g.to_g6().encode("ascii"), g) for g in kids)
    merged.sort(key=lambda t: t[0])
    level = [g for _, g in merged]
    with _levels_lock:
        _levels[key] = level
    return level


def clear_cache() -> None:
    with _levels_lock:
        _levels.clear()
