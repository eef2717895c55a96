# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of patex._corepy.

Same algorithms, same candidate order, same node counting: for any input
this backend and the pure-Python one return bit-identical results.  Keep
the two files in sync when touching either.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

OK = 0
BUDGET_EXCEEDED = 1


cdef int* _alloc(Py_ssize_t n) except NULL:
    cdef int* p = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef int* _copy_list(list xs) except NULL:
    cdef Py_ssize_t n = len(xs)
    cdef int* p = _alloc(n)
    cdef Py_ssize_t i
    for i in range(n):
        p[i] = xs[i]
    return p


cdef void _fill(int* p, int n, int value) noexcept:
    cdef int i
    for i in range(n):
        p[i] = value


# ---------------------------------------------------------------------------
# sequence pattern search
# ---------------------------------------------------------------------------

cdef bint _seq_find_rec(int* u, int n, int* v, int t, int* vmap, int r,
                        int* pos, int j, int start) noexcept:
    cdef int p, a, x, m, q
    cdef bint dup
    if j == t:
        return True
    x = v[j]
    for p in range(start, n - (t - 1 - j)):
        a = u[p]
        m = vmap[x]
        if m == a:
            pos[j] = p
            if _seq_find_rec(u, n, v, t, vmap, r, pos, j + 1, p + 1):
                return True
        elif m == -1:
            dup = False
            for q in range(r):
                if vmap[q] == a:
                    dup = True
                    break
            if not dup:
                vmap[x] = a
                pos[j] = p
                if _seq_find_rec(u, n, v, t, vmap, r, pos, j + 1, p + 1):
                    return True
                vmap[x] = -1
    return False


def seq_find(u, v):
    """Lexicographically smallest occurrence of pattern v in u, or None."""
    cdef list ul = list(u)
    cdef list vl = list(v)
    cdef int n = len(ul)
    cdef int t = len(vl)
    if t == 0:
        return []
    if t > n:
        return None
    cdef int r = max(vl) + 1
    cdef int* ua = _copy_list(ul)
    cdef int* va = NULL
    cdef int* vmap = NULL
    cdef int* pos = NULL
    cdef bint found
    cdef int i
    try:
        va = _copy_list(vl)
        vmap = _alloc(r)
        pos = _alloc(t)
        _fill(vmap, r, -1)
        found = _seq_find_rec(ua, n, va, t, vmap, r, pos, 0, 0)
        if not found:
            return None
        return [pos[i] for i in range(t)]
    finally:
        free(ua)
        free(va)
        free(vmap)
        free(pos)


cdef bint _seq_creates_rec(int* w, int wlen, int* v, int t, int* vmap, int r,
                           int j, int start) noexcept:
    cdef int p, a, x, m, q
    cdef bint dup
    if j == t - 1:
        return True
    x = v[j]
    for p in range(start, wlen - 1 - (t - 2 - j)):
        a = w[p]
        m = vmap[x]
        if m == a:
            if _seq_creates_rec(w, wlen, v, t, vmap, r, j + 1, p + 1):
                return True
        elif m == -1:
            dup = False
            for q in range(r):
                if vmap[q] == a:
                    dup = True
                    break
            if not dup:
                vmap[x] = a
                if _seq_creates_rec(w, wlen, v, t, vmap, r, j + 1, p + 1):
                    return True
                vmap[x] = -1
    return False


cdef bint _seq_creates(int* w, int wlen, int* v, int t, int* vmap, int r) noexcept:
    if t > wlen:
        return False
    _fill(vmap, r, -1)
    vmap[v[t - 1]] = w[wlen - 1]
    return _seq_creates_rec(w, wlen, v, t, vmap, r, 0, 0)


cdef struct LssState:
    int* u
    int n
    int* v
    int t
    int* vmap
    int r
    int* kept_pos
    int* kept_let
    int* best_pos
    int best
    long long nodes
    long long budget
    int status


cdef void _lss_rec(LssState* st, int i, int k) noexcept:
    cdef int j
    if st.status:
        return
    st.nodes += 1
    if st.nodes > st.budget:
        st.status = BUDGET_EXCEEDED
        return
    if i == st.n:
        if k > st.best:
            st.best = k
            for j in range(k):
                st.best_pos[j] = st.kept_pos[j]
        return
    if k + (st.n - i) <= st.best:
        return
    st.kept_let[k] = st.u[i]
    if not _seq_creates(st.kept_let, k + 1, st.v, st.t, st.vmap, st.r):
        st.kept_pos[k] = i
        _lss_rec(st, i + 1, k + 1)
    _lss_rec(st, i + 1, k)


def lss_search(u, v, budget):
    """Longest v-free subsequence by keep/drop branch and bound; returns
    (status, value, positions, nodes)."""
    cdef list ul = list(u)
    cdef list vl = list(v)
    cdef LssState st
    cdef int i
    st.n = len(ul)
    st.t = len(vl)
    st.r = (max(vl) + 1) if st.t else 1
    st.best = -1
    st.nodes = 0
    st.budget = budget
    st.status = OK
    st.u = _copy_list(ul)
    st.v = NULL
    st.vmap = NULL
    st.kept_pos = NULL
    st.kept_let = NULL
    st.best_pos = NULL
    try:
        st.v = _copy_list(vl)
        st.vmap = _alloc(st.r)
        st.kept_pos = _alloc(st.n)
        st.kept_let = _alloc(st.n)
        st.best_pos = _alloc(st.n)
        _fill(st.vmap, st.r, -1)
        _lss_rec(&st, 0, 0)
        return (st.status, st.best, tuple(st.best_pos[i] for i in range(st.best if st.best > 0 else 0)), st.nodes)
    finally:
        free(st.u)
        free(st.v)
        free(st.vmap)
        free(st.kept_pos)
        free(st.kept_let)
        free(st.best_pos)


# ---------------------------------------------------------------------------
# matrix pattern search
# ---------------------------------------------------------------------------

cdef void _row_bounds(int* rowmap, int pr, int a, int ar, int* out_lo, int* out_hi) noexcept:
    cdef int lo = a
    cdef int hi = ar - 1 - (pr - 1 - a)
    cdef int a2, i2, cand
    for a2 in range(pr):
        i2 = rowmap[a2]
        if i2 < 0:
            continue
        if a2 < a:
            cand = i2 + (a - a2)
            if cand > lo:
                lo = cand
        elif a2 > a:
            cand = i2 - (a2 - a)
            if cand < hi:
                hi = cand
    out_lo[0] = lo
    out_hi[0] = hi


cdef void _col_bounds(int* colmap, int pc, int b, int ac, int* out_lo, int* out_hi) noexcept:
    cdef int lo = b
    cdef int hi = ac - 1 - (pc - 1 - b)
    cdef int b2, j2, cand
    for b2 in range(pc):
        j2 = colmap[b2]
        if j2 < 0:
            continue
        if b2 < b:
            cand = j2 + (b - b2)
            if cand > lo:
                lo = cand
        elif b2 > b:
            cand = j2 - (b2 - b)
            if cand < hi:
                hi = cand
    out_lo[0] = lo
    out_hi[0] = hi


cdef int _bisect_left(int* xs, int target, int lo, int hi) noexcept:
    cdef int mid
    while lo < hi:
        mid = (lo + hi) // 2
        if xs[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef struct MatState:
    int ar
    int ac
    int* arows
    int* acols
    int* row_ptr
    int pr
    int pc
    int* prows
    int* pcols
    int np
    int* rowmap
    int* colmap


cdef bint _mat_find_rec(MatState* st, int k) noexcept:
    cdef int a, b, rlo, rhi, clo, chi, i, j, idx, lo_idx, hi_idx
    cdef bint new_row, new_col
    if k == st.np:
        return True
    a = st.prows[k]
    b = st.pcols[k]
    if st.rowmap[a] >= 0:
        rlo = st.rowmap[a]
        rhi = rlo
    else:
        _row_bounds(st.rowmap, st.pr, a, st.ar, &rlo, &rhi)
    for i in range(rlo, rhi + 1):
        lo_idx = st.row_ptr[i]
        hi_idx = st.row_ptr[i + 1]
        if lo_idx == hi_idx:
            continue
        if st.colmap[b] >= 0:
            clo = st.colmap[b]
            chi = clo
        else:
            _col_bounds(st.colmap, st.pc, b, st.ac, &clo, &chi)
        if clo > chi:
            continue
        idx = _bisect_left(st.acols, clo, lo_idx, hi_idx)
        new_row = st.rowmap[a] < 0
        while idx < hi_idx and st.acols[idx] <= chi:
            j = st.acols[idx]
            new_col = st.colmap[b] < 0
            st.rowmap[a] = i
            st.colmap[b] = j
            if _mat_find_rec(st, k + 1):
                return True
            if new_col:
                st.colmap[b] = -1
            if new_row:
                st.rowmap[a] = -1
            idx += 1
    return False


cdef void _complete_map(int* amap, int n) noexcept:
    cdef int cur = -1
    cdef int a
    for a in range(n):
        if amap[a] >= 0:
            cur = amap[a]
        else:
            cur += 1
            amap[a] = cur


def mat_find(ar, ac, arows, acols, pr, pc, prows, pcols):
    """First occurrence of pattern P in A by row-major backtracking over
    P's ones with interval pruning; None if absent."""
    cdef list arl = list(arows)
    cdef list acl = list(acols)
    cdef list prl = list(prows)
    cdef list pcl = list(pcols)
    cdef MatState st
    cdef int i, rr
    st.ar = ar
    st.ac = ac
    st.pr = pr
    st.pc = pc
    st.np = len(prl)
    if st.np > len(arl) or st.pr > st.ar or st.pc > st.ac:
        return None
    st.arows = _copy_list(arl)
    st.acols = NULL
    st.row_ptr = NULL
    st.prows = NULL
    st.pcols = NULL
    st.rowmap = NULL
    st.colmap = NULL
    try:
        st.acols = _copy_list(acl)
        st.prows = _copy_list(prl)
        st.pcols = _copy_list(pcl)
        st.row_ptr = _alloc(st.ar + 1)
        _fill(st.row_ptr, st.ar + 1, 0)
        for i in range(len(arl)):
            rr = st.arows[i]
            st.row_ptr[rr + 1] += 1
        for i in range(st.ar):
            st.row_ptr[i + 1] += st.row_ptr[i]
        st.rowmap = _alloc(st.pr)
        st.colmap = _alloc(st.pc)
        _fill(st.rowmap, st.pr, -1)
        _fill(st.colmap, st.pc, -1)
        if not _mat_find_rec(&st, 0):
            return None
        _complete_map(st.rowmap, st.pr)
        _complete_map(st.colmap, st.pc)
        return (
            tuple(st.rowmap[i] for i in range(st.pr)),
            tuple(st.colmap[i] for i in range(st.pc)),
        )
    finally:
        free(st.arows)
        free(st.acols)
        free(st.row_ptr)
        free(st.prows)
        free(st.pcols)
        free(st.rowmap)
        free(st.colmap)


cdef struct LsmState:
    int ar
    int ac
    int na
    int* arows
    int* acols
    int pr
    int pc
    int np
    int* prows
    int* pcols
    int* kept_r
    int* kept_c
    int* sel
    int* best_sel
    int* rowmap
    int* colmap
    int best
    long long nodes
    long long budget
    int status


cdef bint _mat_creates_rec(LsmState* st, int kc, int k, int start) noexcept:
    cdef int a, b, e, i, j, rlo, rhi, clo, chi
    cdef bint new_row, new_col
    if k == st.np - 1:
        return True
    a = st.prows[k]
    b = st.pcols[k]
    for e in range(start, kc - 1 - (st.np - 2 - k)):
        i = st.kept_r[e]
        j = st.kept_c[e]
        if st.rowmap[a] >= 0:
            if i != st.rowmap[a]:
                continue
            new_row = False
        else:
            _row_bounds(st.rowmap, st.pr, a, st.ar, &rlo, &rhi)
            if i < rlo or i > rhi:
                continue
            new_row = True
        if st.colmap[b] >= 0:
            if j != st.colmap[b]:
                continue
            new_col = False
        else:
            _col_bounds(st.colmap, st.pc, b, st.ac, &clo, &chi)
            if j < clo or j > chi:
                continue
            new_col = True
        st.rowmap[a] = i
        st.colmap[b] = j
        if _mat_creates_rec(st, kc, k + 1, e + 1):
            return True
        if new_row:
            st.rowmap[a] = -1
        if new_col:
            st.colmap[b] = -1
    return False


cdef bint _mat_creates(LsmState* st, int kc) noexcept:
    cdef int a_l, b_l, ri, ci
    if st.np > kc:
        return False
    _fill(st.rowmap, st.pr, -1)
    _fill(st.colmap, st.pc, -1)
    a_l = st.prows[st.np - 1]
    b_l = st.pcols[st.np - 1]
    ri = st.kept_r[kc - 1]
    ci = st.kept_c[kc - 1]
    if ri < a_l or (st.ar - 1 - ri) < (st.pr - 1 - a_l):
        return False
    if ci < b_l or (st.ac - 1 - ci) < (st.pc - 1 - b_l):
        return False
    st.rowmap[a_l] = ri
    st.colmap[b_l] = ci
    return _mat_creates_rec(st, kc, 0, 0)


cdef void _lsm_rec(LsmState* st, int i, int k) noexcept:
    cdef int j
    if st.status:
        return
    st.nodes += 1
    if st.nodes > st.budget:
        st.status = BUDGET_EXCEEDED
        return
    if i == st.na:
        if k > st.best:
            st.best = k
            for j in range(k):
                st.best_sel[j] = st.sel[j]
        return
    if k + (st.na - i) <= st.best:
        return
    st.kept_r[k] = st.arows[i]
    st.kept_c[k] = st.acols[i]
    if not _mat_creates(st, k + 1):
        st.sel[k] = i
        _lsm_rec(st, i + 1, k + 1)
    _lsm_rec(st, i + 1, k)


def lsm_search(ar, ac, arows, acols, pr, pc, prows, pcols, budget):
    """Most ones keepable from A without containing P; returns
    (status, value, kept indices, nodes)."""
    cdef list arl = list(arows)
    cdef list acl = list(acols)
    cdef list prl = list(prows)
    cdef list pcl = list(pcols)
    cdef LsmState st
    cdef int i
    st.ar = ar
    st.ac = ac
    st.pr = pr
    st.pc = pc
    st.na = len(arl)
    st.np = len(prl)
    st.best = -1
    st.nodes = 0
    st.budget = budget
    st.status = OK
    st.arows = _copy_list(arl)
    st.acols = NULL
    st.prows = NULL
    st.pcols = NULL
    st.kept_r = NULL
    st.kept_c = NULL
    st.sel = NULL
    st.best_sel = NULL
    st.rowmap = NULL
    st.colmap = NULL
    try:
        st.acols = _copy_list(acl)
        st.prows = _copy_list(prl)
        st.pcols = _copy_list(pcl)
        st.kept_r = _alloc(st.na)
        st.kept_c = _alloc(st.na)
        st.sel = _alloc(st.na)
        st.best_sel = _alloc(st.na)
        st.rowmap = _alloc(st.pr)
        st.colmap = _alloc(st.pc)
        _fill(st.rowmap, st.pr, -1)
        _fill(st.colmap, st.pc, -1)
        _lsm_rec(&st, 0, 0)
        return (
            st.status,
            st.best,
            tuple(st.best_sel[i] for i in range(st.best if st.best > 0 else 0)),
            st.nodes,
        )
    finally:
        free(st.arows)
        free(st.acols)
        free(st.prows)
        free(st.pcols)
        free(st.kept_r)
        free(st.kept_c)
        free(st.sel)
        free(st.best_sel)
        free(st.rowmap)
        free(st.colmap)
