"""Simple undirected graphs stored as per-vertex neighbour bitmasks.

Vertices are ``0..n-1``; vertex sets are passed around either as iterables of
labels or as integer bitmasks (bit ``v`` set means ``v`` is in the set).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int] | int) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in ascending label order."""
        if isinstance(vertices, int):
            keep = list(bits(vertices))
        else:
            keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
        return self._relabel_subset(keep)

    def _relabel_subset(self, keep: list[int]) -> "Graph":
        adj = []
        for v in keep:
            row = self.adj[v]
            new = 0
            for i, u in enumerate(keep):
                if row >> u & 1:
                    new |= 1 << i
            adj.append(new)
        return Graph(len(keep), tuple(adj))

    def relabel(self, order: list[int]) -> "Graph":
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabel order must be a permutation")
        return self._relabel_subset(list(order))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced(self.full_mask & ~(1 << v))

    def add_vertex(self, neighbours: int) -> "Graph":
        """Append a new vertex ``n`` adjacent to the bitmask ``neighbours``."""
        n = self.n
        adj = [row | (1 << n if neighbours >> v & 1 else 0) for v, row in enumerate(self.adj)]
        adj.append(neighbours)
        return Graph(n + 1, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = reach(self.adj, 1 << v, self.full_mask)
            seen |= comp
            comps.append(comp)
        return comps

    def components(self) -> list[tuple[int, ...]]:
        return [tuple(bits(c)) for c in self.component_masks()]

    def is_connected(self) -> bool:
        if self.n == 0:
            raise GraphError("connectivity of the empty graph is undefined")
        return reach(self.adj, 1, self.full_mask) == self.full_mask

    def bfs_layers(self, w: int) -> "Layers":
        if not 0 <= w < self.n:
            raise GraphError(f"vertex {w} out of range")
        masks, rest = layer_masks(self.adj, w, self.full_mask)
        return Layers([tuple(bits(m)) for m in masks], tuple(bits(rest)))

    def to_g6(self) -> str:
        return g6_encode(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class Layers(NamedTuple):
    layers: list[tuple[int, ...]]
    unreachable: tuple[int, ...]


def reach(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Vertices reachable from the bitmask ``start`` inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def layer_masks(adj, w: int, allowed: int) -> tuple[list[int], int]:
    """BFS distance layers from ``w`` as bitmasks, plus the unreachable remainder."""
    layers = [1 << w]
    seen = 1 << w
    while True:
        nxt = 0
        for v in bits(layers[-1]):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
    return layers, allowed & ~seen


def is_clique_mask(adj, mask: int) -> bool:
    for v in bits(mask):
        if (mask & ~(1 << v)) & ~adj[v]:
            return False
    return True


# --- graph6 -----------------------------------------------------------------

def g6_encode(g: Graph) -> str:
    """Short-form graph6 encoding (1 <= n <= 62)."""
    n = g.n
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"graph6 short form needs 1 <= n <= {MAX_VERTICES}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def g6_decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise GraphError("empty graph6 string")
    vals = []
    for ch in text:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphError(f"graph6 byte {ch!r} outside 63..126")
        vals.append(c - 63)
    n = vals[0]
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {n} unsupported (short form, 1..{MAX_VERTICES})")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[1:]
    if len(body) != nbytes:
        raise GraphError(f"graph6 length mismatch: expected {nbytes} data bytes, got {len(body)}")
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("graph6 padding bits are not zero")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_g6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield g6_decode(line)


# --- edge-list text: "n; u v; u v; ..." ----------------------------------------

def edge_text_encode(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def edge_text_decode(text: str) -> Graph:
    parts = [p.strip() for p in text.strip().split(";")]
    parts = [p for p in parts if p]
    if not parts:
        raise GraphError("empty edge-list text")
    try:
        n = int(parts[0])
        edges = []
        for p in parts[1:]:
            u, v = p.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge-list text: {text!r}") from exc
    return Graph.from_edges(n, edges)
