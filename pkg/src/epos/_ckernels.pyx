# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts and exploration order as ``_pykernels``."""

from libc.string cimport memcpy

ctypedef unsigned long long u64

IMPLEMENTATION = "cython"

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef void refine(int n, const u64* adj, int* lab, int* cend, int first_start) noexcept nogil:
    cdef int inq[MAXN]
    cdef int queue[MAXN * MAXN]
    cdef int qhead = 0, qtail = 0
    cdef int cnt[MAXN]
    cdef int tmpv[MAXN]
    cdef int tmpc[MAXN]
    cdef int i, j, k, s, e, w, c, c0, prev, start, same, v
    cdef u64 wm
    for i in range(n):
        inq[i] = 0
    inq[first_start] = 1
    queue[qtail] = first_start
    qtail += 1
    while qhead < qtail:
        w = queue[qhead]
        qhead += 1
        inq[w] = 0
        wm = 0
        for i in range(w, cend[w]):
            wm |= (<u64>1) << lab[i]
        s = 0
        while s < n:
            e = cend[s]
            if e - s > 1:
                same = 1
                for i in range(s, e):
                    cnt[i - s] = popcount(adj[lab[i]] & wm)
                    if cnt[i - s] != cnt[0]:
                        same = 0
                if same:
                    s = e
                    continue
                # stable insertion sort of lab[s:e] by count
                for i in range(e - s):
                    tmpv[i] = lab[s + i]
                    tmpc[i] = cnt[i]
                for i in range(1, e - s):
                    v = tmpv[i]
                    c = tmpc[i]
                    j = i - 1
                    while j >= 0 and tmpc[j] > c:
                        tmpv[j + 1] = tmpv[j]
                        tmpc[j + 1] = tmpc[j]
                        j -= 1
                    tmpv[j + 1] = v
                    tmpc[j + 1] = c
                for i in range(e - s):
                    lab[s + i] = tmpv[i]
                prev = tmpc[0]
                start = s
                for k in range(1, e - s):
                    c = tmpc[k]
                    if c != prev:
                        cend[start] = s + k
                        if not inq[start]:
                            inq[start] = 1
                            queue[qtail] = start
                            qtail += 1
                        start = s + k
                        prev = c
                cend[start] = e
                if not inq[start]:
                    inq[start] = 1
                    queue[qtail] = start
                    qtail += 1
            s = e


cdef class _Search:
    cdef int n
    cdef u64 adj[MAXN]
    cdef int have_first
    cdef int first_lab[MAXN]
    cdef u64 first_cert[MAXN]
    cdef int first_path[MAXN]
    cdef int first_depth
    cdef int best_lab[MAXN]
    cdef u64 best_cert[MAXN]
    cdef int path[MAXN]
    cdef list automorphisms

    def __init__(self, int n, adj):
        self.n = n
        for i in range(n):
            self.adj[i] = adj[i]
        self.have_first = 0
        self.automorphisms = []

    cdef void cert(self, const int* lab, u64* out):
        cdef int pos[MAXN]
        cdef int i, v
        cdef u64 r, a
        for i in range(self.n):
            pos[lab[i]] = i
        for i in range(self.n):
            a = self.adj[lab[i]]
            r = 0
            while a:
                v = ctz(a)
                a &= a - 1
                r |= (<u64>1) << pos[v]
            out[i] = r

    cdef int compare(self, const u64* a, const u64* b):
        cdef int i
        for i in range(self.n):
            if a[i] < b[i]:
                return -1
            if a[i] > b[i]:
                return 1
        return 0

    cdef void record(self, const int* src, const int* dst):
        gamma = [0] * self.n
        cdef int i
        for i in range(self.n):
            gamma[src[i]] = dst[i]
        self.automorphisms.append(gamma)

    cdef int leaf(self, const int* lab, int depth):
        cdef u64 c[MAXN]
        cdef int d, cmp
        self.cert(lab, c)
        if not self.have_first:
            self.have_first = 1
            memcpy(self.first_lab, lab, self.n * sizeof(int))
            memcpy(self.best_lab, lab, self.n * sizeof(int))
            memcpy(self.first_cert, c, self.n * sizeof(u64))
            memcpy(self.best_cert, c, self.n * sizeof(u64))
            memcpy(self.first_path, self.path, depth * sizeof(int))
            self.first_depth = depth
            return -1
        if self.compare(c, self.first_cert) == 0:
            self.record(self.first_lab, lab)
            d = 0
            while d < depth and d < self.first_depth and self.path[d] == self.first_path[d]:
                d += 1
            return d
        cmp = self.compare(c, self.best_cert)
        if cmp < 0:
            memcpy(self.best_cert, c, self.n * sizeof(u64))
            memcpy(self.best_lab, lab, self.n * sizeof(int))
        elif cmp == 0:
            self.record(self.best_lab, lab)
        return -1

    cdef bint same_orbit(self, int v, list explored, int depth):
        cdef int parent[MAXN]
        cdef int x, a, b, p, ok, i
        for x in range(self.n):
            parent[x] = x
        for gamma in self.automorphisms:
            ok = 1
            for i in range(depth):
                p = self.path[i]
                if gamma[p] != p:
                    ok = 0
                    break
            if not ok:
                continue
            for x in range(self.n):
                a = x
                while parent[a] != a:
                    a = parent[a]
                b = <int>gamma[x]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
        a = v
        while parent[a] != a:
            a = parent[a]
        for u in explored:
            b = <int>u
            while parent[b] != b:
                b = parent[b]
            if a == b:
                return True
        return False

    cdef int run(self, const int* lab, const int* cend, int depth):
        cdef int n = self.n
        cdef int s = 0, e, i, j, v, r, twin, nreps = 0, jump
        cdef int reps[MAXN]
        cdef int clab[MAXN]
        cdef int ccend[MAXN]
        cdef u64 av, ar
        while s < n and cend[s] - s == 1:
            s += 1
        if s == n:
            return self.leaf(lab, depth)
        e = cend[s]
        for i in range(s, e):
            v = lab[i]
            av = self.adj[v]
            twin = 0
            for j in range(nreps):
                r = reps[j]
                ar = self.adj[r]
                if (av & ~((<u64>1) << r)) == (ar & ~((<u64>1) << v)):
                    twin = 1
                    break
            if not twin:
                reps[nreps] = v
                nreps += 1
        explored = []
        for j in range(nreps):
            v = reps[j]
            if explored and self.automorphisms and self.same_orbit(v, explored, depth):
                continue
            memcpy(clab, lab, n * sizeof(int))
            memcpy(ccend, cend, n * sizeof(int))
            i = s
            while clab[i] != v:
                i += 1
            clab[i] = clab[s]
            clab[s] = v
            ccend[s] = s + 1
            ccend[s + 1] = e
            refine(n, self.adj, clab, ccend, s)
            self.path[depth] = v
            jump = self.run(clab, ccend, depth + 1)
            explored.append(v)
            if 0 <= jump < depth:
                return jump
        return -1


def canonical_labeling(int n, adj):
    """Return ``lab`` with ``lab[i]`` the vertex placed at canonical position ``i``."""
    cdef int lab[MAXN]
    cdef int cend[MAXN]
    cdef int i
    cdef _Search search
    if n == 0:
        return []
    search = _Search(n, adj)
    for i in range(n):
        lab[i] = i
        cend[i] = 0
    cend[0] = n
    refine(n, search.adj, lab, cend, 0)
    search.run(lab, cend, 0)
    return [search.best_lab[i] for i in range(n)]


cdef int _find_rec(int k, u64 used, int h_n, const u64* g_adj, const u64* compat,
                   const unsigned char* pos_adj, int* img) noexcept nogil:
    cdef u64 cand = compat[k] & ~used
    cdef u64 low
    cdef int j
    for j in range(k):
        if pos_adj[k * MAXN + j]:
            cand &= g_adj[img[j]]
        else:
            cand &= ~g_adj[img[j]]
        if not cand:
            return 0
    while cand:
        low = cand & (~cand + 1)
        img[k] = ctz(low)
        if k == h_n - 1:
            return 1
        if _find_rec(k + 1, used | low, h_n, g_adj, compat, pos_adj, img):
            return 1
        cand ^= low
    return 0


def find_induced(int g_n, g_adj, int h_n, h_adj, order):
    """Map pattern vertices (visited in ``order``) to an induced copy in the host."""
    cdef u64 gadj[MAXN]
    cdef u64 hadj[MAXN]
    cdef u64 compat[MAXN]
    cdef unsigned char pos_adj[MAXN * MAXN]
    cdef int img[MAXN]
    cdef int gdeg[MAXN]
    cdef int ordr[MAXN]
    cdef int i, j, k, u, du, nu
    cdef u64 m
    if h_n == 0:
        return []
    if h_n > g_n:
        return None
    for i in range(g_n):
        gadj[i] = g_adj[i]
        gdeg[i] = popcount(gadj[i])
    for i in range(h_n):
        hadj[i] = h_adj[i]
        ordr[i] = order[i]
    for k in range(h_n):
        u = ordr[k]
        du = popcount(hadj[u])
        nu = h_n - 1 - du
        m = 0
        for i in range(g_n):
            if gdeg[i] >= du and g_n - 1 - gdeg[i] >= nu:
                m |= (<u64>1) << i
        compat[k] = m
        for j in range(k):
            pos_adj[k * MAXN + j] = (hadj[u] >> ordr[j]) & 1
    if _find_rec(0, 0, h_n, gadj, compat, pos_adj, img):
        return [img[i] for i in range(h_n)]
    return None


def stable_type_counts(int n, adj):
    """Count partitions of the vertex set into stable blocks, keyed by block-size type."""
    cdef u64 a[MAXN]
    cdef int i
    if n == 0:
        return {(): 1}
    for i in range(n):
        a[i] = adj[i]
    memo = {0: {(): 1}}
    return _stable(((<u64>1) << n) - 1, a, memo)


cdef dict _stable(u64 mask, const u64* adj, dict memo):
    cdef u64 low, rest, allowed, chosen, avail, b
    cdef int v
    cdef int size, top = 0
    cdef u64 st_chosen[MAXN + 1]
    cdef u64 st_avail[MAXN + 1]
    cdef dict out = {}
    cdef dict sub
    got = memo.get(mask)
    if got is not None:
        return got
    low = mask & (~mask + 1)
    v = ctz(low)
    rest = mask ^ low
    allowed = rest & ~adj[v]
    st_chosen[0] = 0
    st_avail[0] = allowed
    top = 1
    while top:
        top -= 1
        chosen = st_chosen[top]
        avail = st_avail[top]
        size = popcount(chosen) + 1
        sub = _stable(rest & ~chosen, adj, memo)
        for typ, c in sub.items():
            key = _insert_part(typ, size)
            out[key] = out.get(key, 0) + c
        while avail:
            b = avail & (~avail + 1)
            avail ^= b
            st_chosen[top] = chosen | b
            st_avail[top] = avail & ~adj[ctz(b)]
            top += 1
    memo[mask] = out
    return out


cdef tuple _insert_part(tuple typ, int size):
    cdef int i = 0
    cdef int L = len(typ)
    while i < L and <int>typ[i] >= size:
        i += 1
    return typ[:i] + (size,) + typ[i:]
