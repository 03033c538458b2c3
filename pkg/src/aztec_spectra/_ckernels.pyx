# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_purepy``.

Ring entries stay Python objects (arbitrary-precision ints or BiPoly); the
gain comes from typed loop indices and list access.  GF(2) elimination and
the tree search run on C arrays.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t

from aztec_spectra.errors import EnumerationCapExceeded


def berkowitz(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t r, i, j, k, last, jmax
    cdef list vec = [1]
    cdef list nz = []
    cdef list left, w, nw, t, new, row, row_r, nzi
    cdef object s, acc, c, a, wj, tij, vj
    for r in range(n):
        if r:
            last = r - 1
            for i in range(last):
                a = rows[i][last]
                if a:
                    (<list>nz[i]).append((last, a))
            row = list(rows[last])
            nz.append([(j, row[j]) for j in range(r) if row[j]])

        row_r = list(rows[r])
        left = [(j, row_r[j]) for j in range(r) if row_r[j]]
        w = [rows[i][r] for i in range(r)]
        t = [1, -row_r[r]]
        for k in range(r):
            s = 0
            for j, c in left:
                wj = w[j]
                if wj:
                    s = s + c * wj
            t.append(-s)
            if k + 1 < r:
                nw = []
                for i in range(r):
                    acc = 0
                    nzi = <list>nz[i]
                    for j, a in nzi:
                        wj = w[j]
                        if wj:
                            acc = acc + a * wj
                    nw.append(acc)
                w = nw

        new = []
        for i in range(r + 2):
            acc = 0
            jmax = i if i < r else r
            for j in range(jmax + 1):
                tij = t[i - j]
                if tij:
                    vj = vec[j]
                    if vj:
                        acc = acc + tij * vj
            new.append(acc)
        vec = new
    return vec


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list m, row, pivot_row
    cdef object prev, pivot, f
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    prev = 1
    for k in range(n - 1):
        if (<list>m[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = <list>m[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = <list>m[i]
            f = row[k]
            if f:
                for j in range(k + 1, n):
                    row[j] = (row[j] * pivot - f * pivot_row[j]) // prev
            elif pivot != prev:
                for j in range(k + 1, n):
                    row[j] = row[j] * pivot // prev
            row[k] = 0
        prev = pivot
    return sign * (<list>m[n - 1])[n - 1]


def det_gf2(bitrows, Py_ssize_t n):
    cdef Py_ssize_t words = (n + 63) // 64
    cdef Py_ssize_t r, c, p, w, word
    cdef uint64_t bit
    cdef uint64_t *data
    cdef uint64_t *tmp
    cdef object value
    cdef int result = 1
    if n == 0:
        return 1
    data = <uint64_t *>calloc(n * words, sizeof(uint64_t))
    tmp = <uint64_t *>malloc(words * sizeof(uint64_t))
    if data == NULL or tmp == NULL:
        free(data)
        free(tmp)
        raise MemoryError()
    try:
        for r in range(n):
            value = bitrows[r]
            for w in range(words):
                data[r * words + w] = <uint64_t>((value >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        for c in range(n):
            word = c // 64
            bit = (<uint64_t>1) << (c % 64)
            p = c
            while p < n and not (data[p * words + word] & bit):
                p += 1
            if p == n:
                result = 0
                break
            if p != c:
                memcpy(tmp, &data[c * words], words * sizeof(uint64_t))
                memcpy(&data[c * words], &data[p * words], words * sizeof(uint64_t))
                memcpy(&data[p * words], tmp, words * sizeof(uint64_t))
            for r in range(c + 1, n):
                if data[r * words + word] & bit:
                    for w in range(word, words):
                        data[r * words + w] ^= data[c * words + w]
    finally:
        free(data)
        free(tmp)
    return result


cdef enum:
    MAXV = 128


cdef int _find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef struct Search:
    int nv
    int ne
    int *ea
    int *eb
    int *es
    long long *counts   # (ne + 1) x (ne + 1) table indexed [pos][neg]
    long long found
    long long cap
    int overflow


cdef bint _completable(Search *S, int *parent, int start):
    cdef int p[MAXV]
    cdef int x, e, ra, rb, comps = 0
    memcpy(p, parent, S.nv * sizeof(int))
    for x in range(S.nv):
        if _find(p, x) == x:
            comps += 1
    if comps == 1:
        return True
    for e in range(start, S.ne):
        ra = _find(p, S.ea[e])
        rb = _find(p, S.eb[e])
        if ra != rb:
            p[ra] = rb
            comps -= 1
            if comps == 1:
                return True
    return False


cdef void _rec(Search *S, int i, int *parent, int pos, int neg, int taken):
    cdef int child[MAXV]
    cdef int ra, rb
    if S.overflow:
        return
    if taken == S.nv - 1:
        S.counts[pos * (S.ne + 1) + neg] += 1
        S.found += 1
        if S.found > S.cap:
            S.overflow = 1
        return
    ra = _find(parent, S.ea[i])
    rb = _find(parent, S.eb[i])
    if ra != rb:
        memcpy(child, parent, S.nv * sizeof(int))
        child[ra] = rb
        if S.es[i] > 0:
            _rec(S, i + 1, child, pos + 1, neg, taken + 1)
        else:
            _rec(S, i + 1, child, pos, neg + 1, taken + 1)
    if _completable(S, parent, i + 1):
        _rec(S, i + 1, parent, pos, neg, taken)


def tree_profiles(int n_vertices, edges, long long cap):
    cdef Search S
    cdef int root[MAXV]
    cdef int x, e, p, q
    cdef dict out = {}
    if n_vertices == 0:
        return out
    if n_vertices > MAXV:
        raise ValueError(f"compiled enumerator supports at most {MAXV} vertices")
    S.nv = n_vertices
    S.ne = len(edges)
    S.found = 0
    S.cap = cap
    S.overflow = 0
    S.ea = <int *>malloc((S.ne + 1) * sizeof(int))
    S.eb = <int *>malloc((S.ne + 1) * sizeof(int))
    S.es = <int *>malloc((S.ne + 1) * sizeof(int))
    S.counts = <long long *>calloc((S.ne + 1) * (S.ne + 1), sizeof(long long))
    if S.ea == NULL or S.eb == NULL or S.es == NULL or S.counts == NULL:
        free(S.ea); free(S.eb); free(S.es); free(S.counts)
        raise MemoryError()
    try:
        for e in range(S.ne):
            S.ea[e] = edges[e][0]
            S.eb[e] = edges[e][1]
            S.es[e] = edges[e][2]
        for x in range(n_vertices):
            root[x] = x
        if _completable(&S, root, 0):
            _rec(&S, 0, root, 0, 0, 0)
        if S.overflow:
            raise EnumerationCapExceeded(cap)
        for p in range(S.ne + 1):
            for q in range(S.ne + 1):
                if S.counts[p * (S.ne + 1) + q]:
                    out[(p, q)] = S.counts[p * (S.ne + 1) + q]
    finally:
        free(S.ea); free(S.eb); free(S.es); free(S.counts)
    return out
