"""Pure-Python hot kernels.

The compiled module ``epos._ckernels`` implements the same functions with the
same exploration order, so both produce identical canonical labelings.
"""
from __future__ import annotations

from collections import deque

IMPLEMENTATION = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- canonical labeling -------------------------------------------------------
#
# A partition is kept as ``lab`` (vertices in cell order) and ``cend`` where
# ``cend[s]`` is the exclusive end of the cell starting at position ``s``.

def _refine(adj, lab, cend, queue_starts):
    n = len(lab)
    inq = [False] * n
    queue = deque()
    for s in queue_starts:
        inq[s] = True
        queue.append(s)
    while queue:
        w = queue.popleft()
        inq[w] = False
        wm = 0
        for i in range(w, cend[w]):
            wm |= 1 << lab[i]
        s = 0
        while s < n:
            e = cend[s]
            if e - s > 1:
                cnt = [(adj[lab[i]] & wm).bit_count() for i in range(s, e)]
                c0 = cnt[0]
                for c in cnt:
                    if c != c0:
                        break
                else:
                    s = e
                    continue
                order = sorted(range(e - s), key=cnt.__getitem__)
                lab[s:e] = [lab[s + k] for k in order]
                prev = cnt[order[0]]
                start = s
                for k in range(1, e - s):
                    c = cnt[order[k]]
                    if c != prev:
                        cend[start] = s + k
                        if not inq[start]:
                            inq[start] = True
                            queue.append(start)
                        start = s + k
                        prev = c
                cend[start] = e
                if not inq[start]:
                    inq[start] = True
                    queue.append(start)
            s = e


class _Search:
    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        self.first_lab = None
        self.first_cert = None
        self.first_path = None
        self.best_lab = None
        self.best_cert = None
        self.automorphisms = []

    def _cert(self, lab):
        n = self.n
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for u in _bits(self.adj[v]):
                r |= 1 << pos[u]
            rows.append(r)
        return tuple(rows)

    def _leaf(self, lab, path):
        cert = self._cert(lab)
        if self.first_cert is None:
            self.first_lab = list(lab)
            self.first_cert = cert
            self.first_path = list(path)
            self.best_lab = list(lab)
            self.best_cert = cert
            return -1
        if cert == self.first_cert:
            gamma = [0] * self.n
            for a, b in zip(self.first_lab, lab):
                gamma[a] = b
            self.automorphisms.append(gamma)
            d = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                d += 1
            return d
        if cert < self.best_cert:
            self.best_cert = cert
            self.best_lab = list(lab)
        elif cert == self.best_cert:
            gamma = [0] * self.n
            for a, b in zip(self.best_lab, lab):
                gamma[a] = b
            self.automorphisms.append(gamma)
        return -1

    def _same_orbit(self, v, explored, path):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in path):
                continue
            for x in range(self.n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    parent[a] = b
        root = find(v)
        return any(find(u) == root for u in explored)

    def run(self, lab, cend, path):
        n = self.n
        s = 0
        while s < n and cend[s] - s == 1:
            s += 1
        if s == n:
            return self._leaf(lab, path)
        e = cend[s]
        adj = self.adj
        reps = []
        for v in lab[s:e]:
            av = adj[v]
            twin = False
            for r in reps:
                ar = adj[r]
                if av & ~(1 << r) == ar & ~(1 << v):
                    twin = True
                    break
            if not twin:
                reps.append(v)
        explored = []
        depth = len(path)
        for v in reps:
            if explored and self.automorphisms and self._same_orbit(v, explored, path):
                continue
            clab = list(lab)
            ccend = list(cend)
            i = clab.index(v, s, e)
            clab[s], clab[i] = clab[i], clab[s]
            ccend[s] = s + 1
            ccend[s + 1] = e
            _refine(adj, clab, ccend, [s])
            path.append(v)
            jump = self.run(clab, ccend, path)
            path.pop()
            explored.append(v)
            if 0 <= jump < depth:
                return jump
        return -1


def canonical_labeling(n, adj):
    """Return ``lab`` with ``lab[i]`` the vertex placed at canonical position ``i``."""
    if n == 0:
        return []
    adj = list(adj)
    lab = list(range(n))
    cend = [0] * n
    cend[0] = n
    _refine(adj, lab, cend, [0])
    search = _Search(n, adj)
    search.run(lab, cend, [])
    return search.best_lab


# --- induced subgraph search -----------------------------------------------------

def find_induced(g_n, g_adj, h_n, h_adj, order):
    """Map pattern vertices (visited in ``order``) to an induced copy in the host.

    Returns a list ``img`` with ``img[k]`` the host vertex for ``order[k]``, or None.
    """
    if h_n == 0:
        return []
    if h_n > g_n:
        return None
    g_deg = [a.bit_count() for a in g_adj]
    compat = []
    for u in order:
        du = h_adj[u].bit_count()
        nu = h_n - 1 - du
        m = 0
        for v in range(g_n):
            if g_deg[v] >= du and g_n - 1 - g_deg[v] >= nu:
                m |= 1 << v
        compat.append(m)
    # adjacency of each pattern position to earlier positions
    pos_adj = []
    for k, u in enumerate(order):
        pos_adj.append([bool(h_adj[u] >> order[j] & 1) for j in range(k)])
    img = [0] * h_n

    def rec(k, used):
        cand = compat[k] & ~used
        row = pos_adj[k]
        for j in range(k):
            if row[j]:
                cand &= g_adj[img[j]]
            else:
                cand &= ~g_adj[img[j]]
            if not cand:
                return False
        if k == h_n - 1:
            if cand:
                img[k] = (cand & -cand).bit_length() - 1
                return True
            return False
        while cand:
            low = cand & -cand
            img[k] = low.bit_length() - 1
            if rec(k + 1, used | low):
                return True
            cand ^= low
        return False

    return list(img) if rec(0, 0) else None


# --- stable partitions ---------------------------------------------------------------

def stable_type_counts(n, adj):
    """Count set partitions of the vertex set into stable blocks, by block-size type.

    Returns a dict from a weakly decreasing tuple of block sizes to a count.
    """
    if n == 0:
        return {(): 1}
    memo = {0: {(): 1}}

    def f(mask):
        got = memo.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        allowed = rest & ~adj[v]
        out = {}
        # enumerate stable subsets of ``allowed`` (each joined with v)
        stack = [(0, allowed)]
        while stack:
            chosen, avail = stack.pop()
            size = chosen.bit_count() + 1
            for typ, c in f(rest & ~chosen).items():
                key = _insert_part(typ, size)
                out[key] = out.get(key, 0) + c
            while avail:
                b = avail & -avail
                avail ^= b
                u = b.bit_length() - 1
                stack.append((chosen | b, avail & ~adj[u]))
        memo[mask] = out
        return out

    return f((1 << n) - 1)


def _insert_part(typ, size):
    i = 0
    while i < len(typ) and typ[i] >= size:
        i += 1
    return typ[:i] + (size,) + typ[i:]
