"""Induced-pattern search, graph-class predicates and the (claw, co-claw)-free classifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import kernels
from .canon import canonical_form, canonical_labeling
from .catalog import generalized_bull, named
from .graph import Graph, bits, is_clique_mask, layer_masks, reach

MAX_ORIENTATION_VERTICES = 16


class PreconditionError(ValueError):
    """The input graph is outside the class an operation is defined on."""


class ClassifierFailure(RuntimeError):
    """No case of the (claw, co-claw)-free structure theorem matched."""


# --- induced subgraphs ---------------------------------------------------------------

@lru_cache(maxsize=256)
def _pattern_order(h: Graph) -> tuple[int, ...]:
    if h.n == 0:
        return ()
    deg = h.degrees()
    order = [max(range(h.n), key=lambda v: (deg[v], -v))]
    chosen = 1 << order[0]
    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not chosen >> v & 1),
            key=lambda v: ((h.adj[v] & chosen).bit_count(), deg[v], -v),
        )
        order.append(best)
        chosen |= 1 << best
    return tuple(order)


def find_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """An embedding ``{pattern vertex: host vertex}`` of ``h`` as an induced subgraph of ``g``."""
    if h.n > g.n:
        return None
    order = _pattern_order(h)
    img = kernels.find_induced(g.n, g.adj, h.n, h.adj, order)
    if img is None:
        return None
    return dict(zip(order, img))


def contains_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Sorted vertex set of ``g`` inducing a copy of ``h``, or None."""
    emb = find_induced(g, h)
    return None if emb is None else tuple(sorted(emb.values()))


def is_free(g: Graph, *patterns: str | Graph) -> bool:
    for p in patterns:
        h = named(p) if isinstance(p, str) else p
        if find_induced(g, h) is not None:
            return False
    return True


def is_induced_subgraph_of(g: Graph, host: Graph) -> bool:
    return find_induced(host, g) is not None


# --- asteroidal triples ------------------------------------------------------------------

def asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """A stable triple whose every pair is joined by a path missing the third's neighbourhood."""
    n = g.n
    full = g.full_mask
    # comp[w][v]: component of v in g - N(w) (w itself removed as well)
    comp = []
    for w in range(n):
        allowed = full & ~g.adj[w] & ~(1 << w)
        lookup = {}
        rest = allowed
        while rest:
            low = rest & -rest
            c = reach(g.adj, low, allowed)
            for v in bits(c):
                lookup[v] = c
            rest &= ~c
        comp.append(lookup)
    for u, v, w in combinations(range(n), 3):
        if g.adj[u] >> v & 1 or g.adj[u] >> w & 1 or g.adj[v] >> w & 1:
            continue
        if (comp[w][u] >> v & 1) and (comp[u][v] >> w & 1) and (comp[v][u] >> w & 1):
            return (u, v, w)
    return None


def is_at_free(g: Graph) -> bool:
    return asteroidal_triple(g) is None


# --- chordality / interval classes ----------------------------------------------------------

def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; the reverse of the visit order is a PEO when chordal."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        if not is_clique_mask(g.adj, g.adj[v] & later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_order(g, mcs_order(g)[::-1])


def is_interval(g: Graph) -> bool:
    return is_chordal(g) and is_at_free(g)


def is_unit_interval(g: Graph) -> bool:
    return is_free(g, "claw") and is_interval(g)


# --- transitive orientation -----------------------------------------------------------------

def has_transitive_orientation(g: Graph) -> bool:
    """Whether the edges can be directed so that a->b, b->c implies a->c."""
    if g.n > MAX_ORIENTATION_VERTICES:
        raise ValueError(f"orientation search is capped at {MAX_ORIENTATION_VERTICES} vertices")
    adj = g.adj
    n = g.n
    edges = g.edges()

    def force(arcs: dict, a: int, b: int) -> bool:
        # arcs maps (u, v) with u < v to True when directed u->v
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            key = (a, b) if a < b else (b, a)
            want = a < b
            have = arcs.get(key)
            if have is not None:
                if have != want:
                    return False
                continue
            arcs[key] = want
            nab = adj[a] | (1 << a)
            nbb = adj[b] | (1 << b)
            # c - a - b with c, b nonadjacent: a->c
            for c in bits(adj[a] & ~nbb):
                stack.append((a, c))
            # a - b - c with a, c nonadjacent: c->b
            for c in bits(adj[b] & ~nab):
                stack.append((c, b))
            # transitivity with arcs already fixed
            for c in bits(adj[b] & ~(1 << a)):
                if _arc(arcs, b, c):
                    if not adj[a] >> c & 1:
                        return False
                    stack.append((a, c))
            for c in bits(adj[a] & ~(1 << b)):
                if _arc(arcs, c, a):
                    if not adj[c] >> b & 1:
                        return False
                    stack.append((c, b))
        return True

    def search(arcs: dict) -> bool:
        for u, v in edges:
            if (u, v) not in arcs:
                break
        else:
            return _is_transitive(n, adj, arcs)
        for a, b in ((u, v), (v, u)):
            trial = dict(arcs)
            if force(trial, a, b) and search(trial):
                return True
        return False

    return search({})


def _arc(arcs: dict, a: int, b: int) -> bool:
    key = (a, b) if a < b else (b, a)
    got = arcs.get(key)
    return got is not None and got == (a < b)


def _is_transitive(n: int, adj, arcs: dict) -> bool:
    out = [0] * n
    for (u, v), fwd in arcs.items():
        if fwd:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    for a in range(n):
        for b in bits(out[a]):
            if out[b] & ~out[a]:
                return False
    return True


def is_comparability(g: Graph) -> bool:
    return has_transitive_orientation(g)


def is_cocomparability(g: Graph) -> bool:
    return has_transitive_orientation(g.complement())


# --- cliques, stable sets, K-chains ------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    out = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (g.adj[u] & p).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            bk(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk(0, g.full_mask, 0)
    return sorted(out)


def is_k_chain(g: Graph) -> bool:
    if g.n == 0 or not g.is_connected():
        return False
    cliques = maximal_cliques(g)
    for v in range(g.n):
        if sum(1 for c in cliques if c >> v & 1) > 2:
            return False
    m = len(cliques)
    links = [[] for _ in range(m)]
    nlinks = 0
    for i, j in combinations(range(m), 2):
        shared = cliques[i] & cliques[j]
        if shared:
            if shared.bit_count() != 1:
                return False
            links[i].append(j)
            links[j].append(i)
            nlinks += 1
    # the clique-intersection graph is connected (g is), so it is a path iff
    # it is a tree with maximum degree 2
    return nlinks == m - 1 and all(len(x) <= 2 for x in links)


def max_stable_set(g: Graph, mask: int | None = None) -> int:
    """Independence number of ``g`` (restricted to ``mask`` when given)."""
    adj = g.adj
    best = 0

    def rec(p: int, size: int):
        nonlocal best
        if not p:
            best = max(best, size)
            return
        if size + p.bit_count() <= best:
            return
        v = max(bits(p), key=lambda u: (adj[u] & p).bit_count())
        if not adj[v] & p:
            # no edges left inside p
            best = max(best, size + p.bit_count())
            return
        rec(p & ~adj[v] & ~(1 << v), size + 1)
        rec(p & ~(1 << v), size)

    rec(g.full_mask if mask is None else mask, 0)
    return best


# --- layer structure -----------------------------------------------------------------------------

def hempel_layer_check(g: Graph, w: int) -> bool:
    """Every BFS layer from ``w`` except the first neighbourhood is a clique, and alpha(N(w)) <= 2."""
    if not is_free(g, "claw") or not is_at_free(g):
        raise PreconditionError("layer lemma needs a claw-free AT-free graph")
    layers, _ = layer_masks(g.adj, w, g.full_mask)
    for i, layer in enumerate(layers):
        if i != 1 and not is_clique_mask(g.adj, layer):
            return False
    if len(layers) > 1 and max_stable_set(g, layers[1]) > 2:
        return False
    return True


def _residual_condition(g: Graph, w: int) -> bool:
    layers, rest = layer_masks(g.adj, w, g.full_mask)
    if rest or len(layers) != 3:
        # needs N_2 nonempty, N_i empty for i >= 3, and a connected graph
        return False
    n1 = layers[1]
    sub = g.induced(n1)
    return sub.is_connected() and not is_free(sub, "P3") and max_stable_set(sub) == 2


def residual_2k2_by_vertex(g: Graph) -> dict[int, bool]:
    if not is_free(g, "2K2") or not is_unit_interval(g):
        raise PreconditionError("residual family is defined on 2K2-free unit interval graphs")
    return {w: _residual_condition(g, w) for w in range(g.n)}


def residual_2k2_family(g: Graph) -> bool:
    """Whether ``g`` falls in the open case of the 2K2-free unit interval analysis.

    The base vertex is the first vertex of the canonical labeling, so the
    answer is an isomorphism invariant.
    """
    if not is_free(g, "2K2") or not is_unit_interval(g):
        raise PreconditionError("residual family is defined on 2K2-free unit interval graphs")
    return _residual_condition(g, canonical_labeling(g)[0])


def is_generalized_bull(g: Graph) -> bool:
    if g.n < 5:
        return False
    code = canonical_form(g)
    k = g.n - 2
    for a in range(1, k - 1):
        for b in range(a, k - a):
            c = k - a - b
            if c >= 1 and canonical_form(generalized_bull(a, b, c)) == code:
                return True
    return False


def is_cobipartite(g: Graph) -> bool:
    """Whether the vertex set splits into two cliques."""
    h = g.complement()
    color = [-1] * h.n
    for s in range(h.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(h.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# --- the (claw, co-claw)-free classifier -----------------------------------------------------

MAIN_CASES = ("i", "ii", "iii", "iv", "not-claw-coclaw-free")


def classify_claw_coclaw(g: Graph) -> str:
    if not is_free(g, "claw", "co_claw"):
        return "not-claw-coclaw-free"
    gc = g.complement()
    if is_free(g, "triangle") or is_free(gc, "triangle"):
        return "i"
    net = canonical_form(named("net"))
    if canonical_form(g) == net or canonical_form(gc) == net:
        return "ii"
    for h in (g, gc):
        if not is_free(h, "antenna") and is_induced_subgraph_of(h, named("F1")):
            return "iii"
    for h in (g, gc):
        if not is_free(h, "bull") and is_induced_subgraph_of(h, named("F2")):
            return "iv"
    raise ClassifierFailure(f"no structure case applies to {g.to_g6()}")


# --- per-graph report -------------------------------------------------------------------------------

FREE_FLAGS = {
    "claw_free": "claw",
    "co_claw_free": "co_claw",
    "net_free": "net",
    "diamond_free": "diamond",
    "co_diamond_free": "co_diamond",
    "2K2_free": "2K2",
    "P3_free": "P3",
    "P4_free": "P4",
    "paw_free": "paw",
    "co_paw_free": "co_paw",
    "co_P3_free": "co_P3",
    "triangle_free": "triangle",
    "co_triangle_free": "co_triangle",
}

FLAG_NAMES = tuple(FREE_FLAGS) + (
    "chordal", "at_free", "interval", "unit_interval",
    "comparability", "cocomparability", "k_chain",
)


@dataclass
class ClassReport:
    graph6: str
    n: int
    flags: dict[str, bool | None] = field(default_factory=dict)
    main_case: str = "not-claw-coclaw-free"

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "flags": dict(self.flags), "main_case": self.main_case}


def class_report(g: Graph) -> ClassReport:
    flags: dict[str, bool | None] = {k: is_free(g, p) for k, p in FREE_FLAGS.items()}
    flags["chordal"] = is_chordal(g)
    flags["at_free"] = is_at_free(g)
    flags["interval"] = flags["chordal"] and flags["at_free"]
    flags["unit_interval"] = flags["interval"] and flags["claw_free"]
    if g.n <= MAX_ORIENTATION_VERTICES:
        flags["comparability"] = is_comparability(g)
        flags["cocomparability"] = is_cocomparability(g)
    else:
        flags["comparability"] = flags["cocomparability"] = None
    flags["k_chain"] = is_k_chain(g)
    return ClassReport(g.to_g6(), g.n, flags, classify_claw_coclaw(g))
