"""Chromatic symmetric functions, their two oracles, and positivity checks."""
from __future__ import annotations

import os
import sqlite3
import threading
from collections import OrderedDict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import NamedTuple

from . import kernels
from .canon import canonical_form
from .catalog import named
from .graph import Graph, bits, g6_decode
from .recognition import contains_induced
from .symfunc import Partition, SymExpr, m_to_e, multiplicities

MAX_ORACLE_EDGES = 24


class EmptyGraphError(ValueError):
    """The chromatic symmetric function is only defined here for n >= 1."""


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise EmptyGraphError("graph has no vertices")


# --- X_G in the monomial and elementary bases --------------------------------------------

def stable_partition_counts(g: Graph) -> dict[Partition, int]:
    """Number of partitions of V into stable sets, keyed by block-size type."""
    return kernels.stable_type_counts(g.n, g.adj)


def csf_m(g: Graph) -> SymExpr:
    _require_vertices(g)
    coeffs = {}
    for lam, r in stable_partition_counts(g).items():
        weight = 1
        for mult in multiplicities(lam).values():
            weight *= factorial(mult)
        coeffs[lam] = r * weight
    return SymExpr("m", g.n, coeffs)


@lru_cache(maxsize=1 << 16)
def _csf_e_canonical(code: bytes) -> SymExpr:
    return m_to_e(csf_m(g6_decode(code.decode("ascii"))))


def csf_e(g: Graph) -> SymExpr:
    _require_vertices(g)
    return _csf_e_canonical(canonical_form(g))


# --- power-sum oracle --------------------------------------------------------------------------

def _edge_subset_sum(g: Graph) -> dict[Partition, int]:
    # signed count of edge subsets by component-size type, accumulated edge by
    # edge over the set partition of V that the chosen edges induce
    states: dict[tuple[int, ...], int] = {tuple(range(g.n)): 1}
    for u, v in g.edges():
        nxt: dict[tuple[int, ...], int] = {}
        for comp, c in states.items():
            nxt[comp] = nxt.get(comp, 0) + c
            a, b = comp[u], comp[v]
            if a == b:
                merged = comp
            else:
                lo, hi = min(a, b), max(a, b)
                merged = tuple(lo if x == hi else x for x in comp)
            nxt[merged] = nxt.get(merged, 0) - c
        states = {k: c for k, c in nxt.items() if c}
    out: dict[Partition, int] = {}
    for comp, c in states.items():
        sizes: dict[int, int] = {}
        for x in comp:
            sizes[x] = sizes.get(x, 0) + 1
        lam = tuple(sorted(sizes.values(), reverse=True))
        out[lam] = out.get(lam, 0) + c
    return out


def _edge_subset_literal(g: Graph) -> dict[Partition, int]:
    edges = g.edges()
    out: dict[Partition, int] = {}
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in subset:
                a, b = find(u), find(v)
                if a != b:
                    parent[a] = b
            sizes: dict[int, int] = {}
            for x in range(g.n):
                root = find(x)
                sizes[root] = sizes.get(root, 0) + 1
            lam = tuple(sorted(sizes.values(), reverse=True))
            out[lam] = out.get(lam, 0) + (-1) ** r
    return out


def csf_p_oracle(g: Graph, max_edges: int = MAX_ORACLE_EDGES, literal: bool = False) -> SymExpr:
    """Sum over edge subsets S of (-1)^|S| p_{type(S)}, independent of the stable-set route.

    The default aggregates subsets by the set partition they induce; ``literal``
    walks all 2^|E| subsets one by one.
    """
    _require_vertices(g)
    m = g.num_edges
    if m > max_edges:
        raise ValueError(f"{m} edges exceeds the oracle cap of {max_edges}")
    table = _edge_subset_literal(g) if literal else _edge_subset_sum(g)
    return SymExpr("p", g.n, table)


# --- chromatic polynomial by deletion-contraction ----------------------------------------------

class _Memo:
    """LRU map from canonical form to chromatic polynomial coefficients.

    With ``EPOS_CACHE_DIR`` set, entries are also spilled to a SQLite file in
    that directory and looked up there on an in-memory miss.
    """

    def __init__(self, maxsize: int = 1 << 20):
        self.maxsize = maxsize
        self._data: OrderedDict[bytes, tuple[int, ...]] = OrderedDict()
        self._lock = threading.Lock()
        self._db = None
        self._db_key = None

    def _spill(self):
        root = os.environ.get("EPOS_CACHE_DIR")
        if not root:
            return None
        key = (root, os.getpid(), threading.get_ident())
        if self._db_key != key:
            os.makedirs(root, exist_ok=True)
            self._db = sqlite3.connect(os.path.join(root, "chromatic.sqlite"), timeout=30)
            self._db.execute("CREATE TABLE IF NOT EXISTS chi (code BLOB PRIMARY KEY, coeffs TEXT)")
            self._db_key = key
        return self._db

    def get(self, code: bytes):
        with self._lock:
            got = self._data.get(code)
            if got is not None:
                self._data.move_to_end(code)
                return got
        db = self._spill()
        if db is not None:
            row = db.execute("SELECT coeffs FROM chi WHERE code = ?", (code,)).fetchone()
            if row:
                value = tuple(int(x) for x in row[0].split(","))
                self._put_local(code, value)
                return value
        return None

    def _put_local(self, code: bytes, value: tuple[int, ...]) -> None:
        with self._lock:
            self._data[code] = value
            self._data.move_to_end(code)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def put(self, code: bytes, value: tuple[int, ...]) -> None:
        self._put_local(code, value)
        db = self._spill()
        if db is not None:
            db.execute("INSERT OR IGNORE INTO chi VALUES (?, ?)", (code, ",".join(map(str, value))))
            db.commit()

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


chromatic_memo = _Memo()


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _poly_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    size = max(len(a), len(b))
    a = a + (0,) * (size - len(a))
    b = b + (0,) * (size - len(b))
    return tuple(x - y for x, y in zip(a, b))


def _falling(n: int) -> tuple[int, ...]:
    # k (k-1) ... (k-n+1) as coefficients in ascending powers of k
    poly: tuple[int, ...] = (1,)
    for i in range(n):
        poly = _poly_mul(poly, (-i, 1))
    return poly


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Merge ``v`` into ``u``; parallel edges collapse."""
    adj = list(g.adj)
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    adj[u] = merged | 1 << v
    for w in bits(g.adj[v]):
        if w != u:
            adj[w] |= 1 << u
    return Graph(g.n, tuple(adj)).delete_vertex(v)


def _chromatic_coeffs(g: Graph) -> tuple[int, ...]:
    m = g.num_edges
    if m == 0:
        return (0,) * g.n + (1,)
    if 2 * m == g.n * (g.n - 1):
        return _falling(g.n)
    code = canonical_form(g)
    got = chromatic_memo.get(code)
    if got is not None:
        return got
    comps = g.component_masks()
    if len(comps) > 1:
        poly: tuple[int, ...] = (1,)
        for c in comps:
            poly = _poly_mul(poly, _chromatic_coeffs(g.induced(c)))
    else:
        u = max(range(g.n), key=lambda x: (g.degree(x), -x))
        v = min(bits(g.adj[u]), key=lambda x: (g.degree(x), x))
        deleted = Graph(g.n, tuple(
            a & ~(1 << v) if i == u else a & ~(1 << u) if i == v else a
            for i, a in enumerate(g.adj)
        ))
        poly = _poly_sub(_chromatic_coeffs(deleted), _chromatic_coeffs(_contract(g, u, v)))
    chromatic_memo.put(code, poly)
    return poly


def chromatic_poly(g: Graph, k: int) -> int:
    """Number of proper colorings of ``g`` using at most ``k`` colors."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n == 0:
        return 1
    value = 0
    for c in reversed(_chromatic_coeffs(g)):
        value = value * k + c
    return value


# --- positivity ---------------------------------------------------------------------------------

def negative_terms(g: Graph) -> list[tuple[Partition, int]]:
    """Negative e-coefficients of X_G in reverse-lexicographic order."""
    return csf_e(g).negative_terms()


def is_e_positive(g: Graph) -> bool:
    return not negative_terms(g)


@dataclass
class CsfResult:
    graph6: str
    n: int
    e_expansion: SymExpr
    m_expansion: SymExpr
    e_positive: bool
    negative_terms: list[tuple[Partition, int]]

    @classmethod
    def of(cls, g: Graph) -> "CsfResult":
        m = csf_m(g)
        e = csf_e(g)
        neg = e.negative_terms()
        return cls(g.to_g6(), g.n, e, m, not neg, neg)

    def to_json(self, basis: str = "e") -> dict:
        out = {"graph6": self.graph6, "n": self.n}
        if basis == "m":
            out["expansion"] = self.m_expansion.to_json()
        elif basis == "p":
            from .symfunc import e_to_p
            out["expansion"] = e_to_p(self.e_expansion).to_json()
        else:
            out["expansion"] = self.e_expansion.to_json()
        out["e_positive"] = self.e_positive
        out["negative_terms"] = [{"partition": list(lam), "coeff": str(c)} for lam, c in self.negative_terms]
        return out


class StrongResult(NamedTuple):
    ok: bool
    witness: Graph | None
    vertices: tuple[int, ...] | None


@lru_cache(maxsize=1 << 16)
def _strong_canonical(code: bytes) -> bool:
    g = g6_decode(code.decode("ascii"))
    if not _positive_product(g):
        return False
    return all(_strong_canonical(canonical_form(g.delete_vertex(v))) for v in range(g.n)) if g.n > 1 else True


def _positive_product(g: Graph) -> bool:
    """E-positivity of X_G, using the product over components when disconnected."""
    comps = g.component_masks()
    if len(comps) == 1:
        return is_e_positive(g)
    prod = SymExpr("e", 0, {(): 1})
    for c in comps:
        prod = prod * csf_e(g.induced(c))
    return not prod.negative_terms()


def strong_e_positivity(g: Graph) -> StrongResult:
    """Check all induced subgraphs; on failure return one of minimum order."""
    _require_vertices(g)
    if _strong_canonical(canonical_form(g)):
        return StrongResult(True, None, None)
    seen: dict[bytes, bool] = {}
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            h = g.induced(subset)
            code = canonical_form(h)
            ok = seen.get(code)
            if ok is None:
                ok = seen[code] = _positive_product(h)
            if not ok:
                return StrongResult(False, h, subset)
    raise AssertionError("hereditary check and subset scan disagree")


def is_strongly_e_positive(g: Graph) -> bool:
    _require_vertices(g)
    return _strong_canonical(canonical_form(g))


def forbidden_witness(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """An induced claw, else an induced net, as (name, sorted vertices)."""
    for name in ("claw", "net"):
        found = contains_induced(g, named(name))
        if found is not None:
            return name, found
    return None
