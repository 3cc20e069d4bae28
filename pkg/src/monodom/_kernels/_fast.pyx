# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python kernels.

Same signatures and semantics as monodom._kernels.py; inputs too large
for the fixed-width fast paths are delegated back to the pure versions
(n > 64 bitmasks) or signalled with OverflowError (int64 elimination,
caught and retried with big ints by the selector).
"""

from libc.stdlib cimport free, malloc

from monodom.errors import GuardExceeded

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef long long LLONG_MAX = 9223372036854775807


def subset_lcms(exps, int n):
    cdef int q = len(exps)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << q
    cdef int *gens
    cdef int *flat
    cdef Py_ssize_t mask, rest, off, base, gi
    cdef int c, idx
    cdef int a, b
    if q == 0:
        return [(0,) * n]
    gens = <int *> malloc(q * n * sizeof(int))
    flat = <int *> malloc(size * n * sizeof(int))
    if gens == NULL or flat == NULL:
        if gens != NULL:
            free(gens)
        if flat != NULL:
            free(flat)
        raise MemoryError()
    try:
        for idx in range(q):
            row = exps[idx]
            for c in range(n):
                gens[idx * n + c] = row[c]
        for c in range(n):
            flat[c] = 0
        for mask in range(1, size):
            rest = mask & (mask - 1)
            idx = _bit_index(mask & (~rest))
            off = mask * n
            base = rest * n
            gi = idx * n
            for c in range(n):
                a = flat[base + c]
                b = gens[gi + c]
                flat[off + c] = a if a >= b else b
        out = []
        for mask in range(size):
            off = mask * n
            out.append(tuple([flat[off + c] for c in range(n)]))
        return out
    finally:
        free(gens)
        free(flat)


cdef inline int _bit_index(Py_ssize_t low):
    cdef int i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


def minimal_transversals(edges, n_vars, cap):
    if n_vars > 64:
        from monodom._kernels import py as _py
        return _py.minimal_transversals(edges, n_vars, cap)
    if not edges:
        return []

    cdef int nv = n_vars
    cdef int m = len(edges)
    cdef unsigned long long *edge_arr = <unsigned long long *> malloc(
        m * sizeof(unsigned long long))
    cdef int *degree = <int *> malloc(nv * sizeof(int))
    if edge_arr == NULL or degree == NULL:
        if edge_arr != NULL:
            free(edge_arr)
        if degree != NULL:
            free(degree)
        raise MemoryError()
    cdef int i, v
    cdef unsigned long long e
    found = []
    try:
        for i in range(m):
            edge_arr[i] = edges[i]
        for v in range(nv):
            degree[v] = 0
        for i in range(m):
            e = edge_arr[i]
            for v in range(nv):
                if e >> v & 1:
                    degree[v] += 1
        order_py = sorted(
            (v for v in range(nv) if degree[v] > 0),
            key=lambda u: (-degree[u], u),
        )
        _walk(order_py, edge_arr, m, found, int(cap))
    finally:
        free(edge_arr)
        free(degree)

    found.sort(key=_popcount)
    minimal = []
    for cand in found:
        if not any(cand & prev == prev for prev in minimal):
            minimal.append(cand)
    return minimal


cdef _walk(order_py, unsigned long long *edges0, int m, found, long cap):
    cdef int k = len(order_py)
    cdef unsigned long long *order_bits = <unsigned long long *> malloc(
        k * sizeof(unsigned long long))
    cdef unsigned long long *suffix = <unsigned long long *> malloc(
        (k + 1) * sizeof(unsigned long long))
    # one uncovered-edge scratch row per depth
    cdef unsigned long long *buf = <unsigned long long *> malloc(
        (k + 1) * m * sizeof(unsigned long long))
    cdef int *counts = <int *> malloc((k + 1) * sizeof(int))
    if order_bits == NULL or suffix == NULL or buf == NULL or counts == NULL:
        if order_bits != NULL:
            free(order_bits)
        if suffix != NULL:
            free(suffix)
        if buf != NULL:
            free(buf)
        if counts != NULL:
            free(counts)
        raise MemoryError()
    cdef int i
    try:
        for i in range(k):
            order_bits[i] = (<unsigned long long>1) << <int>order_py[i]
        suffix[k] = 0
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] | order_bits[i]
        for i in range(m):
            buf[i] = edges0[i]
        counts[0] = m
        _descend(0, 0, k, order_bits, suffix, buf, counts, m, found, cap)
    finally:
        free(order_bits)
        free(suffix)
        free(buf)
        free(counts)


cdef _descend(int i, unsigned long long chosen, int k,
              unsigned long long *order_bits, unsigned long long *suffix,
              unsigned long long *buf, int *counts, int m, found, long cap):
    cdef int cnt = counts[i]
    cdef unsigned long long *cur = buf + i * m
    cdef unsigned long long *nxt
    cdef int j, kept
    cdef unsigned long long bit
    if cnt == 0:
        found.append(int(chosen))
        if len(found) > cap:
            raise GuardExceeded(
                f"more than {cap} candidate minimal nets; raise the cap to proceed"
            )
        return
    if i == k:
        return
    for j in range(cnt):
        if cur[j] & suffix[i] == 0:
            return
    bit = order_bits[i]
    nxt = buf + (i + 1) * m
    kept = 0
    for j in range(cnt):
        if cur[j] & bit == 0:
            nxt[kept] = cur[j]
            kept += 1
    if kept < cnt:  # include only if the variable covers something new
        counts[i + 1] = kept
        _descend(i + 1, chosen | bit, k, order_bits, suffix, buf, counts,
                 m, found, cap)
    for j in range(cnt):
        nxt[j] = cur[j]
    counts[i + 1] = cnt
    _descend(i + 1, chosen, k, order_bits, suffix, buf, counts, m, found, cap)


def dominance_masks(exps, members):
    cdef int n = len(exps[0]) if len(exps) else 0
    if n > 64:
        from monodom._kernels import py as _py
        return _py.dominance_masks(exps, members)
    cdef int qm = len(members)
    cdef int *rows = <int *> malloc(qm * n * sizeof(int))
    if rows == NULL:
        raise MemoryError()
    cdef int a, b, v, e
    cdef bint ok
    cdef unsigned long long mask
    masks = []
    try:
        for a in range(qm):
            row = exps[members[a]]
            for v in range(n):
                rows[a * n + v] = row[v]
        for a in range(qm):
            mask = 0
            for v in range(n):
                e = rows[a * n + v]
                if e == 0:
                    continue
                ok = True
                for b in range(qm):
                    if b != a and rows[b * n + v] >= e:
                        ok = False
                        break
                if ok:
                    mask |= (<unsigned long long>1) << v
            if mask == 0:
                return None
            masks.append(int(mask))
        return masks
    finally:
        free(rows)


def rank_int(rows):
    """int64 Bareiss; raises OverflowError when entries leave int64 range."""
    cdef int nr = len(rows)
    if nr == 0:
        return 0
    cdef int nc = len(rows[0])
    if nc == 0:
        return 0
    cdef long long *m = <long long *> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef int r, c, pr, pc, piv, rank
    cdef long long prev, pivot, f, v
    cdef int128 t
    try:
        for r in range(nr):
            row = rows[r]
            for c in range(nc):
                v = row[c]
                m[r * nc + c] = v
        rank = 0
        prev = 1
        pr = 0
        for pc in range(nc):
            piv = -1
            for r in range(pr, nr):
                if m[r * nc + pc] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != pr:
                for c in range(nc):
                    v = m[pr * nc + c]
                    m[pr * nc + c] = m[piv * nc + c]
                    m[piv * nc + c] = v
            pivot = m[pr * nc + pc]
            for r in range(pr + 1, nr):
                f = m[r * nc + pc]
                for c in range(pc + 1, nc):
                    t = <int128>m[r * nc + c] * pivot - <int128>f * m[pr * nc + c]
                    t = t / prev
                    if t > LLONG_MAX or t < -LLONG_MAX:
                        raise OverflowError("Bareiss entry exceeds int64")
                    m[r * nc + c] = <long long>t
                m[r * nc + pc] = 0
            prev = pivot
            pr += 1
            rank += 1
            if pr == nr:
                break
        return rank
    finally:
        free(m)


def rank_modp(rows, p):
    cdef long long lp = p
    if lp >= (<long long>1) << 31:
        from monodom._kernels import py as _py
        return _py.rank_modp(rows, p)
    cdef int nr = len(rows)
    if nr == 0:
        return 0
    cdef int nc = len(rows[0])
    if nc == 0:
        return 0
    cdef long long *m = <long long *> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef int r, c, pr, pc, piv, rank
    cdef long long inv, f
    try:
        for r in range(nr):
            row = rows[r]
            for c in range(nc):
                m[r * nc + c] = row[c] % lp
        rank = 0
        pr = 0
        for pc in range(nc):
            piv = -1
            for r in range(pr, nr):
                if m[r * nc + pc] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != pr:
                for c in range(nc):
                    f = m[pr * nc + c]
                    m[pr * nc + c] = m[piv * nc + c]
                    m[piv * nc + c] = f
            inv = _inv_mod(m[pr * nc + pc], lp)
            for r in range(pr + 1, nr):
                if m[r * nc + pc] != 0:
                    f = (m[r * nc + pc] * inv) % lp
                    for c in range(pc, nc):
                        m[r * nc + c] = (m[r * nc + c] - f * m[pr * nc + c]) % lp
                        if m[r * nc + c] < 0:
                            m[r * nc + c] += lp
            pr += 1
            rank += 1
            if pr == nr:
                break
        return rank
    finally:
        free(m)


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def _popcount(x):
    return bin(x).count("1")
