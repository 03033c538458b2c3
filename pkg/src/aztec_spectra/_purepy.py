"""Pure-Python versions of the hot kernels.

Every function here has a drop-in twin in ``_ckernels.pyx``; the two must
agree exactly on every input.  Matrices are lists of row lists.
"""

from .errors import EnumerationCapExceeded


def berkowitz(rows):
    """Coefficients of det(xI - A), highest degree first, without division.

    Works over any commutative ring whose elements support ``+``, ``-``,
    ``*`` with Python ints and are falsy when zero.  Zero entries of the
    leading blocks are skipped, so sparse adjacency matrices are cheap.
    """
    n = len(rows)
    vec = [1]
    nz = []  # nz[i]: nonzero (j, a_ij) with j < r, the current leading block
    for r in range(n):
        if r:
            last = r - 1
            for i in range(last):
                a = rows[i][last]
                if a:
                    nz[i].append((last, a))
            row = rows[last]
            nz.append([(j, row[j]) for j in range(r) if row[j]])

        row_r = rows[r]
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
                    for j, a in nz[i]:
                        wj = w[j]
                        if wj:
                            acc = acc + a * wj
                    nw.append(acc)
                w = nw

        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                tij = t[i - j]
                if tij:
                    vj = vec[j]
                    if vj:
                        acc = acc + tij * vj
            new.append(acc)
        vec = new
    return vec


def bareiss_det(rows):
    """Exact integer determinant by fraction-free elimination.

    On a zero pivot the first lower row with a nonzero entry in the pivot
    column is swapped up; if there is none the determinant is 0.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = m[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = m[i]
            f = row[k]
            if f:
                for j in range(k + 1, n):
                    row[j] = (row[j] * pivot - f * pivot_row[j]) // prev
            elif pivot != prev:
                for j in range(k + 1, n):
                    row[j] = row[j] * pivot // prev
            row[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_gf2(bitrows, n):
    """Determinant over GF(2) of the n x n matrix whose row i is the bitmask bitrows[i]."""
    rows = list(bitrows)
    for c in range(n):
        bit = 1 << c
        for p in range(c, n):
            if rows[p] & bit:
                break
        else:
            return 0
        rows[c], rows[p] = rows[p], rows[c]
        pr = rows[c]
        for r in range(c + 1, n):
            if rows[r] & bit:
                rows[r] ^= pr
    return 1


def tree_profiles(n_vertices, edges, cap):
    """Count spanning trees by (positive, negative) edge profile.

    ``edges`` is a list of ``(a, b, sign)``.  Each edge is either taken
    (when it joins two components) or skipped (when the rest can still
    connect the graph), so every leaf of the search is a spanning tree.
    Raises EnumerationCapExceeded once more than ``cap`` trees have been found.
    """
    n_edges = len(edges)
    counts = {}

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def completable(parent, start):
        p = list(parent)
        comps = sum(1 for x in range(n_vertices) if find(p, x) == x)
        for e in range(start, n_edges):
            a, b, _ = edges[e]
            ra, rb = find(p, a), find(p, b)
            if ra != rb:
                p[ra] = rb
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    found = 0

    def rec(i, parent, pos, neg, taken):
        nonlocal found
        if taken == n_vertices - 1:
            key = (pos, neg)
            counts[key] = counts.get(key, 0) + 1
            found += 1
            if found > cap:
                raise EnumerationCapExceeded(cap)
            return
        a, b, s = edges[i]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            child = list(parent)
            child[ra] = rb
            if s > 0:
                rec(i + 1, child, pos + 1, neg, taken + 1)
            else:
                rec(i + 1, child, pos, neg + 1, taken + 1)
        if completable(parent, i + 1):
            rec(i + 1, parent, pos, neg, taken)

    if n_vertices == 0:
        return counts
    root = list(range(n_vertices))
    if completable(root, 0):
        rec(0, root, 0, 0, 0)
    return counts
