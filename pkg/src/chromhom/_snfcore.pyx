# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith normal form kernel.

Mirrors the pure-Python twin in ``_snfpure``: sparse elimination of +-1
pivots, then classic dense Smith reduction of the residual with minimal
|entry| pivoting.  All arithmetic is checked 64-bit; any overflow (or a
residual too large to densify) raises OverflowError so the caller can redo
the matrix with arbitrary precision.  The elimination itself runs with the
GIL released.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

cdef extern from *:
    """
    static int chk_add(long long a, long long b, long long *r)
    { return __builtin_saddll_overflow(a, b, r); }
    static int chk_sub(long long a, long long b, long long *r)
    { return __builtin_ssubll_overflow(a, b, r); }
    static int chk_mul(long long a, long long b, long long *r)
    { return __builtin_smulll_overflow(a, b, r); }
    """
    int chk_add(long long a, long long b, long long *r) nogil
    int chk_sub(long long a, long long b, long long *r) nogil
    int chk_mul(long long a, long long b, long long *r) nogil

cdef enum:
    ERR_NONE = 0
    ERR_OVERFLOW = 1
    ERR_OOM = 2
    # Residual densification cap: entries, and either dimension.
    DENSE_MAX_ENTRIES = 4194304
    DENSE_MAX_DIM = 65535


cdef struct Row:
    int n
    int cap
    int *cols
    long long *vals


cdef struct IList:
    int n
    int cap
    int *ids


cdef int ilist_push(IList *l, int x) nogil:
    cdef int ncap
    cdef int *p
    if l.n == l.cap:
        ncap = 8 if l.cap == 0 else l.cap * 2
        p = <int *> realloc(l.ids, ncap * sizeof(int))
        if p == NULL:
            return ERR_OOM
        l.ids = p
        l.cap = ncap
    l.ids[l.n] = x
    l.n += 1
    return ERR_NONE


cdef int row_find(Row *r, int c) nogil:
    cdef int lo = 0, hi = r.n - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if r.cols[mid] == c:
            return mid
        if r.cols[mid] < c:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef int row_axpy(Row *dst, Row *src, long long q, int dst_id,
                  long long *colcnt, IList *colrows,
                  int *tmp_cols, long long *tmp_vals) nogil:
    """dst -= q * src, merging sorted entries; maintains column counters.

    tmp arrays must hold at least dst.n + src.n entries.
    """
    cdef int i = 0, j = 0, k = 0
    cdef int c
    cdef long long v, prod
    cdef int err
    while i < dst.n or j < src.n:
        if j >= src.n or (i < dst.n and dst.cols[i] < src.cols[j]):
            tmp_cols[k] = dst.cols[i]
            tmp_vals[k] = dst.vals[i]
            i += 1
            k += 1
        elif i >= dst.n or src.cols[j] < dst.cols[i]:
            c = src.cols[j]
            if chk_mul(q, src.vals[j], &prod):
                return ERR_OVERFLOW
            if prod != 0:
                tmp_cols[k] = c
                if chk_sub(0, prod, &tmp_vals[k]):
                    return ERR_OVERFLOW
                colcnt[c] += 1
                err = ilist_push(&colrows[c], dst_id)
                if err:
                    return err
                k += 1
            j += 1
        else:
            c = dst.cols[i]
            if chk_mul(q, src.vals[j], &prod):
                return ERR_OVERFLOW
            if chk_sub(dst.vals[i], prod, &v):
                return ERR_OVERFLOW
            if v != 0:
                tmp_cols[k] = c
                tmp_vals[k] = v
                k += 1
            else:
                colcnt[c] -= 1
            i += 1
            j += 1
    if k > dst.cap:
        free(dst.cols)
        free(dst.vals)
        dst.cols = <int *> malloc(k * sizeof(int))
        dst.vals = <long long *> malloc(k * sizeof(long long))
        if dst.cols == NULL or dst.vals == NULL:
            return ERR_OOM
        dst.cap = k
    for i in range(k):
        dst.cols[i] = tmp_cols[i]
        dst.vals[i] = tmp_vals[i]
    dst.n = k
    return ERR_NONE


cdef int dense_snf(long long *m, int nr, int nc,
                   long long *out_factors, int *out_n) nogil:
    """Classic Smith reduction, re-pivoting each round on the globally
    minimal nonzero |entry| (ties: lowest row, then column) to damp
    coefficient growth."""
    cdef int t = 0, r, c, pr, pc, culprit_r
    cdef long long best, v, a, p, q, prod
    cdef bint clean, found
    out_n[0] = 0
    while t < nr and t < nc:
        while True:
            pr = -1
            pc = -1
            best = 0
            for r in range(t, nr):
                for c in range(t, nc):
                    v = m[r * nc + c]
                    if v != 0:
                        a = -v if v < 0 else v
                        if pr < 0 or a < best:
                            best = a
                            pr = r
                            pc = c
            if pr < 0:
                return ERR_NONE  # active submatrix is zero
            if pr != t:
                for c in range(t, nc):
                    v = m[t * nc + c]
                    m[t * nc + c] = m[pr * nc + c]
                    m[pr * nc + c] = v
            if pc != t:
                for r in range(nr):
                    v = m[r * nc + t]
                    m[r * nc + t] = m[r * nc + pc]
                    m[r * nc + pc] = v
            if m[t * nc + t] < 0:
                for c in range(t, nc):
                    if chk_sub(0, m[t * nc + c], &m[t * nc + c]):
                        return ERR_OVERFLOW
            p = m[t * nc + t]
            clean = True
            for r in range(t + 1, nr):
                v = m[r * nc + t]
                if v != 0:
                    q = v / p
                    if v % p < 0:
                        q -= 1  # floor division keeps the remainder in [0, p)
                    if q != 0:
                        for c in range(t, nc):
                            if chk_mul(q, m[t * nc + c], &prod):
                                return ERR_OVERFLOW
                            if chk_sub(m[r * nc + c], prod, &m[r * nc + c]):
                                return ERR_OVERFLOW
                    if m[r * nc + t] != 0:
                        clean = False
            for c in range(t + 1, nc):
                v = m[t * nc + c]
                if v != 0:
                    q = v / p
                    if v % p < 0:
                        q -= 1
                    if q != 0:
                        for r in range(nr):
                            if chk_mul(q, m[r * nc + t], &prod):
                                return ERR_OVERFLOW
                            if chk_sub(m[r * nc + c], prod, &m[r * nc + c]):
                                return ERR_OVERFLOW
                    if m[t * nc + c] != 0:
                        clean = False
            if not clean:
                continue
            found = False
            culprit_r = -1
            for r in range(t + 1, nr):
                for c in range(t + 1, nc):
                    if m[r * nc + c] % p != 0:
                        culprit_r = r
                        found = True
                        break
                if found:
                    break
            if not found:
                break
            for c in range(t, nc):
                if chk_add(m[t * nc + c], m[culprit_r * nc + c], &m[t * nc + c]):
                    return ERR_OVERFLOW
        out_factors[out_n[0]] = m[t * nc + t]
        out_n[0] += 1
        t += 1
    return ERR_NONE


def snf_invariant_factors(int rows, int cols, triplets):
    """Nonzero invariant factors (ascending divisibility chain).

    Raises OverflowError when 64-bit checked arithmetic cannot finish; the
    caller is expected to fall back to the arbitrary-precision kernel.
    """
    if rows <= 0 or cols <= 0:
        return []

    # --- ingest triplets (GIL held) -------------------------------------
    cdef dict rowmap = {}
    cdef int r, c
    cdef object v
    for (r, c, v) in triplets:
        if v == 0:
            continue
        if not (0 <= r < rows and 0 <= c < cols):
            raise ValueError("triplet index out of range")
        d = rowmap.get(r)
        if d is None:
            d = {}
            rowmap[r] = d
        nv = d.get(c, 0) + v
        if nv:
            d[c] = nv
        elif c in d:
            del d[c]

    cdef Row *rowarr = <Row *> malloc(rows * sizeof(Row))
    cdef long long *colcnt = <long long *> malloc(cols * sizeof(long long))
    cdef IList *colrows = <IList *> malloc(cols * sizeof(IList))
    cdef unsigned char *active = <unsigned char *> malloc(rows)
    cdef IList queue
    cdef unsigned char *queued = <unsigned char *> malloc(rows)
    queue.n = 0
    queue.cap = 0
    queue.ids = NULL
    if (rowarr == NULL or colcnt == NULL or colrows == NULL
            or active == NULL or queued == NULL):
        free(rowarr); free(colcnt); free(colrows)
        free(<void *> active); free(<void *> queued)
        raise MemoryError()
    memset(rowarr, 0, rows * sizeof(Row))
    memset(colcnt, 0, cols * sizeof(long long))
    memset(colrows, 0, cols * sizeof(IList))
    memset(active, 0, rows)
    memset(queued, 0, rows)

    cdef int i, k, n
    cdef Row *rw
    try:
        for r, d in rowmap.items():
            n = len(d)
            if n == 0:
                continue
            rw = &rowarr[r]
            rw.cols = <int *> malloc(n * sizeof(int))
            rw.vals = <long long *> malloc(n * sizeof(long long))
            if rw.cols == NULL or rw.vals == NULL:
                raise MemoryError()
            rw.cap = n
            i = 0
            for c in sorted(d):
                v = d[c]
                if not (-9223372036854775807 <= v <= 9223372036854775807):
                    raise OverflowError("entry exceeds 64-bit range")
                rw.cols[i] = c
                rw.vals[i] = v
                i += 1
            rw.n = n
            active[r] = 1
            for i in range(n):
                colcnt[rw.cols[i]] += 1
                if ilist_push(&colrows[rw.cols[i]], r):
                    raise MemoryError()
            if ilist_push(&queue, r):
                raise MemoryError()
            queued[r] = 1

        units_and_factors = _run(rowarr, rows, colcnt, colrows, cols,
                                 active, &queue, queued)
        return units_and_factors
    finally:
        for r in range(rows):
            free(rowarr[r].cols)
            free(rowarr[r].vals)
        for c in range(cols):
            free(colrows[c].ids)
        free(rowarr)
        free(colcnt)
        free(colrows)
        free(<void *> active)
        free(<void *> queued)
        free(queue.ids)


cdef _run(Row *rowarr, int rows, long long *colcnt, IList *colrows, int cols,
          unsigned char *active, IList *queue, unsigned char *queued):
    cdef int err = ERR_NONE
    cdef int units = 0
    cdef int head = 0
    cdef int r0, c0, i, s, k, idx
    cdef long long eps, best, q
    cdef Row *row0
    cdef Row *srow
    cdef int tmp_cap = 0
    cdef int *tmp_cols = NULL
    cdef long long *tmp_vals = NULL
    cdef int need

    # --- phase 1: sparse +-1 pivots (no GIL needed, pure C state) -------
    with nogil:
        while head < queue.n and err == ERR_NONE:
            r0 = queue.ids[head]
            head += 1
            queued[r0] = 0
            if not active[r0] or rowarr[r0].n == 0:
                continue
            row0 = &rowarr[r0]
            c0 = -1
            best = 0
            for i in range(row0.n):
                if row0.vals[i] == 1 or row0.vals[i] == -1:
                    if c0 < 0 or colcnt[row0.cols[i]] < best:
                        best = colcnt[row0.cols[i]]
                        c0 = row0.cols[i]
                        eps = row0.vals[i]
            if c0 < 0:
                continue
            # snapshot iteration: updates never append to colrows[c0]
            for idx in range(colrows[c0].n):
                s = colrows[c0].ids[idx]
                if s == r0 or not active[s]:
                    continue
                srow = &rowarr[s]
                k = row_find(srow, c0)
                if k < 0:
                    continue  # stale id
                if chk_mul(srow.vals[k], eps, &q):
                    err = ERR_OVERFLOW
                    break
                need = srow.n + row0.n
                if need > tmp_cap:
                    free(tmp_cols)
                    free(tmp_vals)
                    tmp_cols = <int *> malloc(need * sizeof(int))
                    tmp_vals = <long long *> malloc(need * sizeof(long long))
                    if tmp_cols == NULL or tmp_vals == NULL:
                        err = ERR_OOM
                        break
                    tmp_cap = need
                err = row_axpy(srow, row0, q, s, colcnt, colrows,
                               tmp_cols, tmp_vals)
                if err:
                    break
                if srow.n == 0:
                    active[s] = 0
                elif not queued[s]:
                    err = ilist_push(queue, s)
                    if err:
                        break
                    queued[s] = 1
            if err:
                break
            colrows[c0].n = 0
            for i in range(row0.n):
                colcnt[row0.cols[i]] -= 1
            active[r0] = 0
            row0.n = 0
            units += 1

    free(tmp_cols)
    free(tmp_vals)
    if err == ERR_OOM:
        raise MemoryError()
    if err == ERR_OVERFLOW:
        raise OverflowError("64-bit overflow during sparse elimination")

    # --- phase 2: densify the residual ----------------------------------
    cdef int ra = 0, ca = 0
    cdef int r, c
    for r in range(rows):
        if active[r] and rowarr[r].n:
            ra += 1
    for c in range(cols):
        if colcnt[c] > 0:
            ca += 1
    if ra == 0 or ca == 0:
        return [1] * units
    if ra > DENSE_MAX_DIM or ca > DENSE_MAX_DIM or ra * ca > DENSE_MAX_ENTRIES:
        raise OverflowError("residual too large for the dense kernel")

    cdef int *colpos = <int *> malloc(cols * sizeof(int))
    cdef long long *dense = <long long *> malloc(ra * ca * sizeof(long long))
    cdef long long *factors = <long long *> malloc(min(ra, ca) * sizeof(long long))
    if colpos == NULL or dense == NULL or factors == NULL:
        free(colpos); free(dense); free(factors)
        raise MemoryError()
    cdef int nf = 0
    try:
        k = 0
        for c in range(cols):
            if colcnt[c] > 0:
                colpos[c] = k
                k += 1
            else:
                colpos[c] = -1
        memset(dense, 0, ra * ca * sizeof(long long))
        k = 0
        for r in range(rows):
            if active[r] and rowarr[r].n:
                for i in range(rowarr[r].n):
                    dense[k * ca + colpos[rowarr[r].cols[i]]] = rowarr[r].vals[i]
                k += 1
        with nogil:
            err = dense_snf(dense, ra, ca, factors, &nf)
        if err == ERR_OVERFLOW:
            raise OverflowError("64-bit overflow during dense reduction")
        out = [1] * units
        for i in range(nf):
            out.append(factors[i] if factors[i] > 0 else -factors[i])
        return out
    finally:
        free(colpos)
        free(dense)
        free(factors)
