# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; behaviourally identical to lcsapprox._pykernels."""

from cpython cimport array

import array as _array

BACKEND_NAME = "compiled"

cdef long long BIG_C = (<long long>1) << 60
BIG = BIG_C

cdef array.array _LL = _array.array("q", [])
cdef array.array _II = _array.array("i", [])


cdef inline array.array _zeros_ll(Py_ssize_t count):
    return array.clone(_LL, count, True)


cdef inline array.array _zeros_i(Py_ssize_t count):
    return array.clone(_II, count, True)


# LCS rows and tables are int32 and wide rows are processed in j-strips of
# _LCS_STRIP cells with a carried boundary column, so the hot working set
# stays L1-resident regardless of string length.

cdef Py_ssize_t _LCS_STRIP = 2048


cdef array.array _lcs_row_impl(const unsigned char[:] a, const unsigned char[:] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef array.array row_arr = _zeros_i(m + 1)
    cdef int[:] row = row_arr
    cdef Py_ssize_t i, j, j0, j1
    cdef int diag, up, left, v
    cdef unsigned char ca
    if m <= _LCS_STRIP:
        for i in range(n):
            ca = a[i]
            diag = 0
            left = 0
            for j in range(1, m + 1):
                up = row[j]
                if ca == b[j - 1]:
                    v = diag + 1
                else:
                    v = up if up >= left else left
                diag = up
                left = v
                row[j] = v
        return row_arr
    cdef array.array col_arr = _zeros_i(n + 1)
    cdef array.array newcol_arr = _zeros_i(n + 1)
    cdef int[:] col = col_arr
    cdef int[:] newcol = newcol_arr
    cdef int[:] tmp
    j0 = 1
    while j0 <= m:
        j1 = j0 + _LCS_STRIP
        if j1 > m + 1:
            j1 = m + 1
        for i in range(1, n + 1):
            ca = a[i - 1]
            diag = col[i - 1]
            left = col[i]
            for j in range(j0, j1):
                up = row[j]
                if ca == b[j - 1]:
                    v = diag + 1
                else:
                    v = up if up >= left else left
                diag = up
                left = v
                row[j] = v
            newcol[i] = left
        tmp = col
        col = newcol
        newcol = tmp
        j0 = j1
    return row_arr


def lcs_last_row(const unsigned char[:] a, const unsigned char[:] b):
    return _lcs_row_impl(a, b)


def lcs_len(const unsigned char[:] a, const unsigned char[:] b):
    cdef array.array row_arr = _lcs_row_impl(a, b)
    return row_arr[b.shape[0]]


def lcs_small(const unsigned char[:] a, const unsigned char[:] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef Py_ssize_t w = m + 1
    cdef array.array t_arr = _zeros_i((n + 1) * w)
    cdef int[:] t = t_arr
    cdef Py_ssize_t i, j, base, pbase
    cdef int up, left
    cdef unsigned char ca
    for i in range(1, n + 1):
        ca = a[i - 1]
        base = i * w
        pbase = base - w
        for j in range(1, m + 1):
            if ca == b[j - 1]:
                t[base + j] = t[pbase + j - 1] + 1
            else:
                up = t[pbase + j]
                left = t[base + j - 1]
                t[base + j] = up if up >= left else left
    cdef Py_ssize_t k = t[n * w + m]
    cdef array.array ii_arr = _zeros_ll(k)
    cdef array.array jj_arr = _zeros_ll(k)
    cdef long long[:] ii = ii_arr
    cdef long long[:] jj = jj_arr
    cdef Py_ssize_t pos = k
    i = n
    j = m
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            pos -= 1
            ii[pos] = i - 1
            jj[pos] = j - 1
            i -= 1
            j -= 1
        elif t[(i - 1) * w + j] >= t[i * w + j - 1]:
            i -= 1
        else:
            j -= 1
    return ii_arr, jj_arr


def lcs_subset_len(const unsigned char[:] s_short, const unsigned char[:] s_long):
    cdef Py_ssize_t k = s_short.shape[0], lm = s_long.shape[0]
    if k == 0:
        return 0
    cdef unsigned long long full = (<unsigned long long>1) << k
    cdef unsigned long long mask, mm, u, v
    cdef Py_ssize_t size, idx, pos, f
    cdef bint ok
    cdef unsigned char c
    cdef int shift
    for size in range(k, 0, -1):
        mask = ((<unsigned long long>1) << size) - 1
        while mask < full:
            pos = 0
            ok = True
            mm = mask
            idx = 0
            while mm:
                if mm & 1:
                    c = s_short[idx]
                    f = -1
                    while pos < lm:
                        if s_long[pos] == c:
                            f = pos
                            break
                        pos += 1
                    if f < 0:
                        ok = False
                        break
                    pos = f + 1
                mm >>= 1
                idx += 1
            if ok:
                return size
            u = mask & (~mask + 1)
            v = mask + u
            shift = 0
            while (u >> shift) != 1:
                shift += 1
            mask = v | ((v ^ mask) >> (shift + 2))
    return 0


def ed_len(const unsigned char[:] a, const unsigned char[:] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef array.array prev_arr = _zeros_ll(m + 1)
    cdef array.array cur_arr = _zeros_ll(m + 1)
    cdef long long[:] prev = prev_arr
    cdef long long[:] cur = cur_arr
    cdef long long[:] tmp
    cdef Py_ssize_t i, j
    cdef long long up, left
    cdef unsigned char ca
    for j in range(m + 1):
        prev[j] = j
    for i in range(1, n + 1):
        ca = a[i - 1]
        cur[0] = i
        for j in range(1, m + 1):
            if ca == b[j - 1]:
                cur[j] = prev[j - 1]
            else:
                up = prev[j]
                left = cur[j - 1]
                cur[j] = (up if up <= left else left) + 1
        tmp = prev
        prev = cur
        cur = tmp
    return prev[m]


def ed_banded_pass(const unsigned char[:] a, const unsigned char[:] b, long long band):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef long long diff = n - m
    if diff < 0:
        diff = -diff
    if diff > band:
        return BIG_C
    cdef array.array prev_arr = _zeros_ll(m + 1)
    cdef array.array cur_arr = _zeros_ll(m + 1)
    cdef long long[:] prev = prev_arr
    cdef long long[:] cur = cur_arr
    cdef long long[:] tmp
    cdef Py_ssize_t i, j, lo, hi
    cdef long long best, v
    cdef unsigned char ca
    hi = m if m < band else <Py_ssize_t>band
    for j in range(hi + 1):
        prev[j] = j
    for i in range(1, n + 1):
        ca = a[i - 1]
        lo = i - band
        if lo < 0:
            lo = 0
        hi = i + band
        if hi > m:
            hi = m
        for j in range(lo, hi + 1):
            if j > 0 and ca == b[j - 1]:
                cur[j] = prev[j - 1]
                continue
            best = BIG_C
            if j <= i - 1 + band:
                v = prev[j] + 1
                if v < best:
                    best = v
            if j > lo:
                v = cur[j - 1] + 1
                if v < best:
                    best = v
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    return prev[m]


def ed_banded_last_row(const unsigned char[:] a, const unsigned char[:] b, long long band):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef array.array prev_arr = _zeros_ll(m + 1)
    cdef array.array cur_arr = _zeros_ll(m + 1)
    cdef long long[:] prev = prev_arr
    cdef long long[:] cur = cur_arr
    cdef long long[:] tmp
    cdef Py_ssize_t i, j, lo, hi
    cdef long long best, v
    cdef unsigned char ca
    hi = m if m < band else <Py_ssize_t>band
    for j in range(hi + 1):
        prev[j] = j
    for i in range(1, n + 1):
        ca = a[i - 1]
        lo = i - band
        if lo < 0:
            lo = 0
        hi = i + band
        if hi > m:
            hi = m
        if lo > hi:
            break
        for j in range(lo, hi + 1):
            if j > 0 and ca == b[j - 1]:
                cur[j] = prev[j - 1]
                continue
            best = BIG_C
            if j <= i - 1 + band:
                v = prev[j] + 1
                if v < best:
                    best = v
            if j > lo:
                v = cur[j - 1] + 1
                if v < best:
                    best = v
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    cdef array.array out_arr = _zeros_ll(m + 1)
    cdef long long[:] out = out_arr
    for j in range(m + 1):
        out[j] = BIG_C
    lo = n - band
    if lo < 0:
        lo = 0
    hi = n + band
    if hi > m:
        hi = m
    for j in range(lo, hi + 1):
        out[j] = prev[j]
    return out_arr


def ed_banded_small(const unsigned char[:] a, const unsigned char[:] b, long long band):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef Py_ssize_t wb = 2 * band + 1
    cdef array.array t_arr = _zeros_ll((n + 1) * wb)
    cdef long long[:] t = t_arr
    cdef Py_ssize_t cells = (n + 1) * wb
    cdef Py_ssize_t i, j, lo, hi, base, pbase, idx
    cdef long long best, v
    cdef unsigned char ca
    for i in range(cells):
        t[i] = BIG_C
    hi = m if m < band else <Py_ssize_t>band
    for j in range(hi + 1):
        t[j + band] = j
    for i in range(1, n + 1):
        ca = a[i - 1]
        base = i * wb
        pbase = base - wb
        lo = i - band
        if lo < 0:
            lo = 0
        hi = i + band
        if hi > m:
            hi = m
        for j in range(lo, hi + 1):
            idx = j - i + band
            if j > 0 and ca == b[j - 1]:
                t[base + idx] = t[pbase + idx]
                continue
            best = BIG_C
            if idx < 2 * band:
                v = t[pbase + idx + 1] + 1
                if v < best:
                    best = v
            if j > 0 and idx > 0:
                v = t[base + idx - 1] + 1
                if v < best:
                    best = v
            t[base + idx] = best
    cdef long long dist = t[n * wb + (m - n + band)]
    cdef Py_ssize_t nmatch = (n + m - dist) // 2
    cdef array.array ii_arr = _zeros_ll(nmatch)
    cdef array.array jj_arr = _zeros_ll(nmatch)
    cdef long long[:] ii = ii_arr
    cdef long long[:] jj = jj_arr
    cdef Py_ssize_t pos = nmatch
    i = n
    j = m
    while i > 0 or j > 0:
        idx = j - i + band
        v = t[i * wb + idx]
        if i > 0 and j > 0 and a[i - 1] == b[j - 1] and t[(i - 1) * wb + idx] == v:
            pos -= 1
            ii[pos] = i - 1
            jj[pos] = j - 1
            i -= 1
            j -= 1
        elif i > 0 and idx < 2 * band and t[(i - 1) * wb + idx + 1] == v - 1:
            i -= 1
        else:
            j -= 1
    return ii_arr, jj_arr


def positions(const unsigned char[:] s, int sym, Py_ssize_t k):
    cdef array.array out_arr = _zeros_ll(k)
    if k == 0:
        return out_arr
    cdef long long[:] out = out_arr
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t i, cnt = 0
    cdef unsigned char c = <unsigned char>sym
    for i in range(n):
        if s[i] == c:
            out[cnt] = i
            cnt += 1
            if cnt == k:
                break
    return out_arr


def validate_pairs(ai, aj, const unsigned char[:] a, const unsigned char[:] b):
    if len(ai) != len(aj):
        return False
    cdef const long long[:] vi = ai
    cdef const long long[:] vj = aj
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], length = vi.shape[0]
    cdef long long pi = -1, pj = -1, i, j
    cdef Py_ssize_t k
    for k in range(length):
        i = vi[k]
        j = vj[k]
        if i <= pi or j <= pj or i >= n or j >= m or a[i] != b[j]:
            return False
        pi = i
        pj = j
    return True


def greedy_scan(long long z1, long long o1, long long z2, long long o2,
                const unsigned char[:] b):
    cdef Py_ssize_t m = b.shape[0]
    cdef long long zb_total = 0
    cdef Py_ssize_t t
    for t in range(m):
        if b[t] == 0:
            zb_total += 1
    cdef long long ob_total = m - zb_total
    cdef long long best = -1
    cdef Py_ssize_t best_t = 0
    cdef long long zb = 0, ob, l0, l1, left, rz, ro, r0, r1, right, tot
    for t in range(m + 1):
        if t > 0 and b[t - 1] == 0:
            zb += 1
        ob = t - zb
        l0 = z1 if z1 < zb else zb
        l1 = o1 if o1 < ob else ob
        left = l0 if l0 >= l1 else l1
        rz = zb_total - zb
        ro = ob_total - ob
        r0 = z2 if z2 < rz else rz
        r1 = o2 if o2 < ro else ro
        right = r0 if r0 >= r1 else r1
        tot = left + right
        if tot > best:
            best = tot
            best_t = t
    return best, best_t


def filter_sub(const unsigned char[:] s, const unsigned char[:] map_table):
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t i, cnt = 0
    cdef unsigned char nv
    for i in range(n):
        if map_table[s[i]] != 255:
            cnt += 1
    out = bytearray(cnt)
    cdef unsigned char[:] ov = out
    cdef array.array idx_arr = _zeros_ll(cnt)
    cdef long long[:] idx = idx_arr
    cnt = 0
    for i in range(n):
        nv = map_table[s[i]]
        if nv != 255:
            ov[cnt] = nv
            idx[cnt] = i
            cnt += 1
    return bytes(out), idx_arr
