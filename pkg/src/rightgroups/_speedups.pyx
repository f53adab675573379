# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirror of ``_kernels_py`` (same search orders, same PRNG) so results are
bit-identical across backends; see that module for the documentation.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int16_t, uint64_t

BACKEND = "c"

SAMPLE_NODE_BUDGET = 200_000
cdef long _NODE_BUDGET = 200_000


cdef inline uint64_t _mix(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1FB39F4D
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline uint64_t _below(uint64_t* state, uint64_t k) noexcept nogil:
    return _mix(state) % k


cdef bint _consistent(int16_t* t, int n, int r, int c) noexcept nogil:
    cdef int v = t[r * n + c]
    cdef int a, b, y, p, q, lhs, rhs, row
    # role 1: (r, c, y)
    for y in range(n):
        q = t[c * n + y]
        if q < 0:
            continue
        lhs = t[v * n + y]
        rhs = t[r * n + q]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    # role 2: (a, r, c)
    for a in range(n):
        p = t[a * n + r]
        if p < 0:
            continue
        lhs = t[p * n + c]
        rhs = t[a * n + v]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    # role 3: (a, b, c) with a*b == r
    for a in range(n):
        row = a * n
        for b in range(n):
            if t[row + b] == r:
                q = t[b * n + c]
                if q < 0:
                    continue
                rhs = t[row + q]
                if rhs >= 0 and rhs != v:
                    return False
    # role 4: (r, b, y) with b*y == c
    for b in range(n):
        p = t[r * n + b]
        row = b * n
        for y in range(n):
            if t[row + y] == c:
                if p < 0:
                    continue
                lhs = t[p * n + y]
                if lhs >= 0 and lhs != v:
                    return False
    return True


cdef bytes _freeze(int16_t* t, int nn):
    cdef bytearray buf = bytearray(nn)
    cdef int i
    for i in range(nn):
        buf[i] = <unsigned char>t[i]
    return bytes(buf)


def assoc_failure(int n, const unsigned char[:] table):
    cdef int i, j, k, p
    for i in range(n):
        for j in range(n):
            p = table[i * n + j]
            for k in range(n):
                if table[p * n + k] != table[i * n + table[j * n + k]]:
                    return (i, j, k)
    return None


def enumerate_associative_tables(int n):
    if n == 0:
        return [b""]
    cdef int nn = n * n
    cdef int16_t* t = <int16_t*>malloc(nn * sizeof(int16_t))
    cdef int* idx = <int*>malloc(nn * sizeof(int))
    if t == NULL or idx == NULL:
        free(t)
        free(idx)
        raise MemoryError()
    cdef list out = []
    cdef int pos = 0, r, c, v
    cdef bint advanced
    cdef int i
    try:
        for i in range(nn):
            t[i] = -1
            idx[i] = 0
        while pos >= 0:
            if pos == nn:
                out.append(_freeze(t, nn))
                pos -= 1
                t[pos] = -1
                continue
            r = pos // n
            c = pos - r * n
            advanced = False
            while idx[pos] < n:
                v = idx[pos]
                idx[pos] += 1
                t[pos] = v
                if _consistent(t, n, r, c):
                    pos += 1
                    advanced = True
                    break
                t[pos] = -1
            if not advanced:
                idx[pos] = 0
                t[pos] = -1
                pos -= 1
                if pos >= 0:
                    t[pos] = -1
        return out
    finally:
        free(t)
        free(idx)


def sample_associative_tables(int n, int count, unsigned long long seed):
    if n == 0:
        return [b""] * count
    cdef uint64_t state = <uint64_t>seed
    cdef int nn = n * n
    cdef int16_t* t = <int16_t*>malloc(nn * sizeof(int16_t))
    cdef int* trail = <int*>malloc(nn * sizeof(int))
    cdef int* orders = <int*>malloc(nn * n * sizeof(int))
    if t == NULL or trail == NULL or orders == NULL:
        free(t)
        free(trail)
        free(orders)
        raise MemoryError()
    cdef list out = []
    cdef int s
    try:
        for s in range(count):
            _sample_one(n, &state, t, trail, orders)
            out.append(_freeze(t, nn))
        return out
    finally:
        free(t)
        free(trail)
        free(orders)


cdef void _sample_one(int n, uint64_t* state, int16_t* t, int* trail,
                      int* orders) noexcept nogil:
    cdef int nn = n * n
    cdef int i, j, cell, tmp, trail_len
    cdef long budget
    while True:
        # one shuffled value order per cell (Fisher-Yates, high to low)
        for cell in range(nn):
            for i in range(n):
                orders[cell * n + i] = i
            for i in range(n - 1, 0, -1):
                j = <int>_below(state, i + 1)
                tmp = orders[cell * n + i]
                orders[cell * n + i] = orders[cell * n + j]
                orders[cell * n + j] = tmp
        for i in range(nn):
            t[i] = -1
        trail_len = 0
        budget = _NODE_BUDGET
        if _fill(t, n, orders, trail, &trail_len, &budget) == 1:
            return


cdef int _fill(int16_t* t, int n, int* orders, int* trail, int* trail_len,
               long* budget) noexcept nogil:
    # 1 = complete, 0 = dead end, -1 = decision budget exhausted
    cdef int nn = n * n
    cdef int cell = 0
    cdef int i, v, mark, r
    while cell < nn and t[cell] >= 0:
        cell += 1
    if cell == nn:
        return 1
    for i in range(n):
        v = orders[cell * n + i]
        budget[0] -= 1
        if budget[0] < 0:
            return -1
        mark = trail_len[0]
        if _assign(t, n, cell, v, trail, trail_len):
            r = _fill(t, n, orders, trail, trail_len, budget)
            if r != 0:
                return r
        while trail_len[0] > mark:
            trail_len[0] -= 1
            t[trail[trail_len[0]]] = -1
    return 0


cdef bint _assign(int16_t* t, int n, int cell, int v, int* trail,
                  int* trail_len) noexcept nogil:
    cdef int qhead, c0, x, y, w, a, b, c, p, q, row
    t[cell] = v
    trail[trail_len[0]] = cell
    trail_len[0] += 1
    qhead = trail_len[0] - 1
    while qhead < trail_len[0]:
        c0 = trail[qhead]
        qhead += 1
        x = c0 // n
        y = c0 - x * n
        w = t[c0]
        # (x, y, c): t[w][c] == t[x][t[y][c]]
        for c in range(n):
            q = t[y * n + c]
            if q < 0:
                continue
            if not _unify(t, trail, trail_len, w * n + c, x * n + q):
                return False
        # (a, x, y): t[t[a][x]][y] == t[a][w]
        for a in range(n):
            p = t[a * n + x]
            if p < 0:
                continue
            if not _unify(t, trail, trail_len, p * n + y, a * n + w):
                return False
        # c0 as left side (t[a][b] == x, c == y): force t[a][t[b][y]] = w
        for a in range(n):
            row = a * n
            for b in range(n):
                if t[row + b] == x:
                    q = t[b * n + y]
                    if q >= 0 and not _force(t, trail, trail_len, row + q, w):
                        return False
        # c0 as right side (a == x, t[b][c] == y): force t[t[x][b]][c] = w
        for b in range(n):
            p = t[x * n + b]
            if p < 0:
                continue
            row = b * n
            for c in range(n):
                if t[row + c] == y:
                    if not _force(t, trail, trail_len, p * n + c, w):
                        return False
    return True


cdef inline bint _unify(int16_t* t, int* trail, int* trail_len, int cl,
                        int cr) noexcept nogil:
    cdef int a = t[cl]
    cdef int b = t[cr]
    if a < 0 and b < 0:
        return True
    if a < 0:
        t[cl] = b
        trail[trail_len[0]] = cl
        trail_len[0] += 1
        return True
    if b < 0:
        t[cr] = a
        trail[trail_len[0]] = cr
        trail_len[0] += 1
        return True
    return a == b


cdef inline bint _force(int16_t* t, int* trail, int* trail_len, int cell,
                        int val) noexcept nogil:
    cdef int cur = t[cell]
    if cur < 0:
        t[cell] = val
        trail[trail_len[0]] = cell
        trail_len[0] += 1
        return True
    return cur == val


def enumerate_group_tables(int n):
    if n == 0:
        return []
    cdef int nn = n * n
    cdef int16_t* t = <int16_t*>malloc(nn * sizeof(int16_t))
    cdef int* idx = <int*>malloc(nn * sizeof(int))
    if t == NULL or idx == NULL:
        free(t)
        free(idx)
        raise MemoryError()
    cdef list out = []
    cdef int i, k, pos, r, c, v, ncells
    cdef bint advanced, clash
    try:
        for i in range(nn):
            t[i] = -1
        for i in range(n):
            t[i] = i
            t[i * n] = i
        if n == 1:
            return [_freeze(t, nn)]
        ncells = (n - 1) * (n - 1)
        for i in range(ncells):
            idx[i] = 0
        k = 0
        while k >= 0:
            if k == ncells:
                out.append(_freeze(t, nn))
                k -= 1
                r = 1 + k // (n - 1)
                c = 1 + k - (r - 1) * (n - 1)
                t[r * n + c] = -1
                continue
            r = 1 + k // (n - 1)
            c = 1 + k - (r - 1) * (n - 1)
            pos = r * n + c
            advanced = False
            while idx[k] < n:
                v = idx[k]
                idx[k] += 1
                clash = False
                for i in range(n):
                    if t[r * n + i] == v or t[i * n + c] == v:
                        clash = True
                        break
                if clash:
                    continue
                t[pos] = v
                if _consistent(t, n, r, c):
                    k += 1
                    advanced = True
                    break
                t[pos] = -1
            if not advanced:
                idx[k] = 0
                t[pos] = -1
                k -= 1
                if k >= 0:
                    r = 1 + k // (n - 1)
                    c = 1 + k - (r - 1) * (n - 1)
                    t[r * n + c] = -1
        return out
    finally:
        free(t)
        free(idx)


def enumerate_homs(int dn, const unsigned char[:] dom, int cn,
                   const unsigned char[:] cod):
    if dn == 0:
        return [b""]
    if cn == 0:
        return []
    # occurrence lists: cells of dom holding value k
    cdef int* occ = <int*>malloc(dn * dn * sizeof(int))
    cdef int* occ_start = <int*>malloc((dn + 1) * sizeof(int))
    cdef int* counts = <int*>malloc(dn * sizeof(int))
    cdef int16_t* f = <int16_t*>malloc(dn * sizeof(int16_t))
    cdef int* idx = <int*>malloc(dn * sizeof(int))
    if (occ == NULL or occ_start == NULL or counts == NULL or f == NULL
            or idx == NULL):
        free(occ)
        free(occ_start)
        free(counts)
        free(f)
        free(idx)
        raise MemoryError()
    cdef list out = []
    cdef int i, j, k, v, p, pos
    cdef bint advanced
    try:
        for i in range(dn):
            counts[i] = 0
        for i in range(dn * dn):
            counts[dom[i]] += 1
        occ_start[0] = 0
        for i in range(dn):
            occ_start[i + 1] = occ_start[i] + counts[i]
            counts[i] = 0
        for i in range(dn):
            for j in range(dn):
                v = dom[i * dn + j]
                occ[occ_start[v] + counts[v]] = i * dn + j
                counts[v] += 1
        for i in range(dn):
            f[i] = 0
            idx[i] = 0
        k = 0
        while k >= 0:
            if k == dn:
                out.append(_freeze(f, dn))
                k -= 1
                continue
            advanced = False
            while idx[k] < cn:
                v = idx[k]
                idx[k] += 1
                f[k] = v
                if _hom_ok(dn, &dom[0], cn, &cod[0], f, occ, occ_start, k, v):
                    k += 1
                    if k < dn:
                        idx[k] = 0
                    advanced = True
                    break
            if not advanced:
                idx[k] = 0
                k -= 1
        return out
    finally:
        free(occ)
        free(occ_start)
        free(counts)
        free(f)
        free(idx)


cdef bint _hom_ok(int dn, const unsigned char* dom, int cn,
                  const unsigned char* cod, int16_t* f, int* occ,
                  int* occ_start, int k, int v) noexcept nogil:
    cdef int j, p, cell, i
    for j in range(k + 1):
        p = dom[k * dn + j]
        if p <= k and cod[v * cn + f[j]] != f[p]:
            return False
        if j < k:
            p = dom[j * dn + k]
            if p <= k and cod[f[j] * cn + v] != f[p]:
                return False
    for cell in range(occ_start[k], occ_start[k + 1]):
        i = occ[cell] // dn
        j = occ[cell] - i * dn
        if i < k and j < k and cod[f[i] * cn + f[j]] != v:
            return False
    return True


COND_A = 1
COND_B = 2
COND_C = 4
COND_E = 8
COND_F = 16
COND_ALL = 31


def condition_flags(int n, const unsigned char[:] t):
    if n == 0:
        return 0
    if n > 63:
        raise ValueError("condition_flags supports n <= 63")
    cdef int flags = 0
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t seen
    cdef int a, b, c, x, e, cnt, row
    cdef bint ok

    # (a) right simple and left cancellative
    ok = True
    for a in range(n):
        seen = 0
        for x in range(n):
            seen |= <uint64_t>1 << t[a * n + x]
        if seen != full:
            ok = False
            break
    if ok:
        for a in range(n):
            row = a * n
            for b in range(n):
                for c in range(b + 1, n):
                    if t[row + b] == t[row + c]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
    if ok:
        flags |= COND_A

    # (b) unique solvability
    ok = True
    for a in range(n):
        row = a * n
        for b in range(n):
            cnt = 0
            for x in range(n):
                if t[row + x] == b:
                    cnt += 1
            if cnt != 1:
                ok = False
                break
        if not ok:
            break
    if ok:
        flags |= COND_B

    # (c) right simple with an idempotent
    ok = True
    for a in range(n):
        seen = 0
        for x in range(n):
            seen |= <uint64_t>1 << t[a * n + x]
        if seen != full:
            ok = False
            break
    if ok:
        ok = False
        for e in range(n):
            if t[e * n + e] == e:
                ok = True
                break
    if ok:
        flags |= COND_C

    # (e) witness left identity with right inverses
    ok = False
    for e in range(n):
        cnt = 1
        for x in range(n):
            if t[e * n + x] != x:
                cnt = 0
                break
        if not cnt:
            continue
        cnt = 1
        for a in range(n):
            row = a * n
            b = 0
            for x in range(n):
                if t[row + x] == e:
                    b = 1
                    break
            if not b:
                cnt = 0
                break
        if cnt:
            ok = True
            break
    if ok:
        flags |= COND_E

    # (f) all left identities admit right inverses
    cnt = 0
    ok = True
    for e in range(n):
        b = 1
        for x in range(n):
            if t[e * n + x] != x:
                b = 0
                break
        if not b:
            continue
        cnt += 1
        for a in range(n):
            row = a * n
            b = 0
            for x in range(n):
                if t[row + x] == e:
                    b = 1
                    break
            if not b:
                ok = False
                break
        if not ok:
            break
    if ok and cnt > 0:
        flags |= COND_F

    return flags
