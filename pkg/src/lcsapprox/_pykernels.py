"""Pure-Python reference kernels.

These are the hot inner loops of the package: dynamic programs over symbol
strings (passed around as ``bytes`` of dense symbol ids) plus a few tight
scans. ``lcsapprox._ckernels`` is a compiled drop-in replacement built from
the same contracts; the backend is selected at import time in
``lcsapprox._backend``. Keep the two implementations behaviourally identical,
including tie-breaking, since tests compare them output-for-output.

Index arrays are ``array('q')`` (int64) throughout.
"""

from array import array

BACKEND_NAME = "python"

#: Sentinel for "unreachable within the current band". Large enough that a
#: few +1 accumulations cannot wrap, small enough to survive int64 in the
#: compiled twin.
BIG = 1 << 60


def _zeros(count: int) -> array:
    return array("q", bytes(8 * count))


def _zeros_i(count: int) -> array:
    return array("i", bytes(4 * count))


#: strip width for the tiled row DP; wide rows are processed in j-strips with
#: a carried boundary column so the hot working set stays cache-resident.
_LCS_STRIP = 2048


def lcs_last_row(a: bytes, b: bytes) -> array:
    """Return row[j] = lcs(a, b[:j]) for j in 0..len(b) (int32 array)."""
    n, m = len(a), len(b)
    row = _zeros_i(m + 1)
    if m <= _LCS_STRIP:
        for ca in a:
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
        return row
    col = _zeros_i(n + 1)
    newcol = _zeros_i(n + 1)
    j0 = 1
    while j0 <= m:
        j1 = min(j0 + _LCS_STRIP, m + 1)
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
        col, newcol = newcol, col
        j0 = j1
    return row


def lcs_len(a: bytes, b: bytes) -> int:
    """LCS length only (strip-tiled rows of memory)."""
    return lcs_last_row(a, b)[len(b)]


def lcs_small(a: bytes, b: bytes) -> tuple[array, array]:
    """Full-table LCS with backtrack; returns matched index pairs (ascending).

    Caller is responsible for keeping (len(a)+1)*(len(b)+1) small enough to
    materialize. Tie-break on backtrack: matches are always taken, otherwise
    prefer moving up (dropping a symbol of ``a``).
    """
    n, m = len(a), len(b)
    w = m + 1
    t = _zeros_i((n + 1) * w)
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
    ii: list[int] = []
    jj: list[int] = []
    i, j = n, m
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            ii.append(i - 1)
            jj.append(j - 1)
            i -= 1
            j -= 1
        elif t[(i - 1) * w + j] >= t[i * w + j - 1]:
            i -= 1
        else:
            j -= 1
    ii.reverse()
    jj.reverse()
    return array("q", ii), array("q", jj)


def lcs_subset_len(s_short: bytes, s_long: bytes) -> int:
    """Brute-force LCS length by enumerating subsequences of ``s_short``.

    Deliberately independent of the dynamic programs above: subsets are
    enumerated per size (largest first, Gosper's hack within a size) and
    tested for containment in ``s_long`` by greedy scanning.
    """
    k = len(s_short)
    if k == 0:
        return 0
    full = 1 << k
    for size in range(k, 0, -1):
        mask = (1 << size) - 1
        while mask < full:
            pos = 0
            ok = True
            mm = mask
            idx = 0
            while mm:
                if mm & 1:
                    f = s_long.find(s_short[idx], pos)
                    if f < 0:
                        ok = False
                        break
                    pos = f + 1
                mm >>= 1
                idx += 1
            if ok:
                return size
            u = mask & (-mask)
            v = mask + u
            mask = v | ((v ^ mask) >> (u.bit_length() + 1))
    return 0


def ed_len(a: bytes, b: bytes) -> int:
    """Insert/delete edit distance, classic two-row DP (no substitutions)."""
    n, m = len(a), len(b)
    prev = array("q", range(m + 1))
    cur = _zeros(m + 1)
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
        prev, cur = cur, prev
    return prev[m]


def ed_banded_pass(a: bytes, b: bytes, band: int) -> int:
    """Indel edit distance restricted to |i - j| <= band.

    Returns a value >= the true distance; the result is exact iff it is
    <= band (band-doubling callers rely on that certificate). Values >= BIG
    mean "no path within the band".
    """
    n, m = len(a), len(b)
    if abs(n - m) > band:
        return BIG
    prev = _zeros(m + 1)
    cur = _zeros(m + 1)
    for j in range(min(m, band) + 1):
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
            best = BIG
            if j <= i - 1 + band:
                v = prev[j] + 1
                if v < best:
                    best = v
            if j > lo:
                v = cur[j - 1] + 1
                if v < best:
                    best = v
            cur[j] = best
        prev, cur = cur, prev
    return prev[m]


def ed_banded_last_row(a: bytes, b: bytes, band: int) -> array:
    """Final banded DP row: row[j] = banded ed(a, b[:j]), BIG outside band."""
    n, m = len(a), len(b)
    prev = _zeros(m + 1)
    cur = _zeros(m + 1)
    for j in range(min(m, band) + 1):
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
            best = BIG
            if j <= i - 1 + band:
                v = prev[j] + 1
                if v < best:
                    best = v
            if j > lo:
                v = cur[j - 1] + 1
                if v < best:
                    best = v
            cur[j] = best
        prev, cur = cur, prev
    out = array("q", [BIG]) * (m + 1)
    lo = n - band
    if lo < 0:
        lo = 0
    hi = n + band
    if hi > m:
        hi = m
    for j in range(lo, hi + 1):
        out[j] = prev[j]
    return out


def ed_banded_small(a: bytes, b: bytes, band: int) -> tuple[array, array]:
    """Banded indel-ED table with backtrack; returns matched index pairs.

    Requires band >= true distance (callers establish the exact distance
    first). Memory is (len(a)+1) * (2*band+1) cells. Backtrack tie-break:
    match, then up (delete from ``a``), then left.
    """
    n, m = len(a), len(b)
    wb = 2 * band + 1
    t = array("q", [BIG]) * ((n + 1) * wb)
    for j in range(min(m, band) + 1):
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
            best = BIG
            if idx < 2 * band:
                v = t[pbase + idx + 1] + 1
                if v < best:
                    best = v
            if j > 0 and idx > 0:
                v = t[base + idx - 1] + 1
                if v < best:
                    best = v
            t[base + idx] = best
    ii: list[int] = []
    jj: list[int] = []
    i, j = n, m
    while i > 0 or j > 0:
        idx = j - i + band
        v = t[i * wb + idx]
        if i > 0 and j > 0 and a[i - 1] == b[j - 1] and t[(i - 1) * wb + idx] == v:
            ii.append(i - 1)
            jj.append(j - 1)
            i -= 1
            j -= 1
        elif i > 0 and idx < 2 * band and t[(i - 1) * wb + idx + 1] == v - 1:
            i -= 1
        else:
            j -= 1
    ii.reverse()
    jj.reverse()
    return array("q", ii), array("q", jj)


def positions(s: bytes, sym: int, k: int) -> array:
    """Indices of the first k occurrences of ``sym`` (caller ensures k <= count)."""
    out = _zeros(k)
    cnt = 0
    start = 0
    while cnt < k:
        i = s.find(sym, start)
        out[cnt] = i
        cnt += 1
        start = i + 1
    return out


def validate_pairs(ai: array, aj: array, a: bytes, b: bytes) -> bool:
    """Check strictly increasing, in-bounds, symbol-equal index pairs."""
    if len(ai) != len(aj):
        return False
    n, m = len(a), len(b)
    pi = pj = -1
    for i, j in zip(ai, aj):
        if i <= pi or j <= pj or i >= n or j >= m or a[i] != b[j]:
            return False
        pi = i
        pj = j
    return True


def greedy_scan(z1: int, o1: int, z2: int, o2: int, b: bytes) -> tuple[int, int]:
    """Best split of binary ``b`` maximizing unary matches on both sides.

    (z1, o1) are the zero/one counts of the string matched against the left
    part, (z2, o2) for the right part. Returns (best total, first best split).
    """
    m = len(b)
    zb_total = b.count(0)
    ob_total = m - zb_total
    best = -1
    best_t = 0
    zb = 0
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


def filter_sub(s: bytes, map_table: bytes) -> tuple[bytes, array]:
    """Keep symbols with map_table[v] != 255, remapping them; return index map."""
    out = bytearray()
    idx = array("q")
    for i, v in enumerate(s):
        nv = map_table[v]
        if nv != 255:
            out.append(nv)
            idx.append(i)
    return bytes(out), idx
