"""Pure-Python kernels for the hot inner loops.

This module is the fallback twin of the compiled ``_speedups`` extension.
Both expose the same functions with bit-identical results (same search
orders, same PRNG), so either can back the rest of the package; tests
compare them directly.

Tables cross this boundary as flat ``bytes`` of length n*n in row-major
order (``table[i*n + j] == i*j``), which caps element ids at 255 -- far
above the desk scale (n <= 64) everything else enforces.
"""

BACKEND = "python"

_MASK64 = (1 << 64) - 1

# Node budget for one randomized fill attempt before the sampler redraws
# its value orders.  Must match the compiled twin.
SAMPLE_NODE_BUDGET = 200_000


class _SplitMix64:
    """splitmix64 stream; mirrored in C so samples are backend-independent."""

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1FB39F4D) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k):
        return self.next() % k

    def shuffled_range(self, k):
        vals = list(range(k))
        for i in range(k - 1, 0, -1):
            j = self.below(i + 1)
            vals[i], vals[j] = vals[j], vals[i]
        return vals


def _consistent(t, n, r, c):
    """Check every fully-determined associativity triple involving cell (r,c).

    ``t`` is a flat partial table with -1 for unassigned cells.  Covers the
    four roles cell (r,c) can play in (a*b)*c == a*(b*c).
    """
    v = t[r * n + c]
    # role 1: (r, c, y) for all y
    base = c * n
    for y in range(n):
        q = t[base + y]
        if q < 0:
            continue
        lhs = t[v * n + y]
        rhs = t[r * n + q]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    # role 2: (a, r, c) for all a
    for a in range(n):
        p = t[a * n + r]
        if p < 0:
            continue
        lhs = t[p * n + c]
        rhs = t[a * n + v]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    # role 3: (a, b, c) with a*b == r  ->  lhs is v itself
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
    # role 4: (r, b, y) with b*y == c  ->  rhs is v itself
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


def assoc_failure(n, table):
    """First (i, j, k) with (i*j)*k != i*(j*k), or None if associative."""
    t = table
    for i in range(n):
        for j in range(n):
            p = t[i * n + j]
            for k in range(n):
                if t[p * n + k] != t[i * n + t[j * n + k]]:
                    return (i, j, k)
    return None


def enumerate_associative_tables(n):
    """All associative n x n tables, lexicographic, by pruned backtracking."""
    if n == 0:
        return [b""]
    nn = n * n
    t = [-1] * nn
    out = []

    def rec(pos):
        if pos == nn:
            out.append(bytes(t))
            return
        r, c = divmod(pos, n)
        for v in range(n):
            t[pos] = v
            if _consistent(t, n, r, c):
                rec(pos + 1)
        t[pos] = -1

    rec(0)
    return out


def sample_associative_tables(n, count, seed):
    """``count`` seeded random associative tables of order n.

    Randomized backtracking with forced-cell propagation: each attempt
    draws a value order per cell and fills row-major, deriving every cell
    the partial table already determines; attempts that exceed
    SAMPLE_NODE_BUDGET decision tries redraw their orders.  Deterministic
    given (n, count, seed), and bit-identical to the compiled twin.
    """
    if n == 0:
        return [b""] * count
    rng = _SplitMix64(seed)
    return [_sample_one(n, rng) for _ in range(count)]


def _sample_one(n, rng):
    nn = n * n
    while True:
        orders = [rng.shuffled_range(n) for _ in range(nn)]
        t = [-1] * nn
        budget = [SAMPLE_NODE_BUDGET]
        if _fill(t, n, orders, [], budget) == 1:
            return bytes(t)
        # budget exhausted: redraw orders and retry


def _fill(t, n, orders, trail, budget):
    """DFS over the first unassigned cell; 1 = complete, 0 = dead end,
    -1 = decision budget exhausted (abort the attempt)."""
    nn = n * n
    cell = 0
    while cell < nn and t[cell] >= 0:
        cell += 1
    if cell == nn:
        return 1
    for v in orders[cell]:
        budget[0] -= 1
        if budget[0] < 0:
            return -1
        mark = len(trail)
        if _assign(t, n, cell, v, trail):
            r = _fill(t, n, orders, trail, budget)
            if r != 0:
                return r
        while len(trail) > mark:
            t[trail.pop()] = -1
    return 0


def _assign(t, n, cell, v, trail):
    """Set t[cell] = v and propagate all consequences of associativity.

    Every triple with three known participants forces the fourth; a triple
    with all four known is checked.  Returns False on contradiction
    (caller unwinds via the trail).
    """
    t[cell] = v
    trail.append(cell)
    qhead = len(trail) - 1
    while qhead < len(trail):
        c0 = trail[qhead]
        qhead += 1
        x, y = divmod(c0, n)
        w = t[c0]
        # (x, y, c): t[w][c] == t[x][t[y][c]]
        for c in range(n):
            q = t[y * n + c]
            if q < 0:
                continue
            if not _unify(t, trail, w * n + c, x * n + q):
                return False
        # (a, x, y): t[t[a][x]][y] == t[a][w]
        for a in range(n):
            p = t[a * n + x]
            if p < 0:
                continue
            if not _unify(t, trail, p * n + y, a * n + w):
                return False
        # c0 as left side (t[a][b] == x, c == y): force t[a][t[b][y]] = w
        for a in range(n):
            row = a * n
            for b in range(n):
                if t[row + b] == x:
                    q = t[b * n + y]
                    if q >= 0 and not _force(t, trail, row + q, w):
                        return False
        # c0 as right side (a == x, t[b][c] == y): force t[t[x][b]][c] = w
        for b in range(n):
            p = t[x * n + b]
            if p < 0:
                continue
            row = b * n
            for c in range(n):
                if t[row + c] == y:
                    if not _force(t, trail, p * n + c, w):
                        return False
    return True


def _unify(t, trail, cl, cr):
    a = t[cl]
    b = t[cr]
    if a < 0 and b < 0:
        return True
    if a < 0:
        t[cl] = b
        trail.append(cl)
        return True
    if b < 0:
        t[cr] = a
        trail.append(cr)
        return True
    return a == b


def _force(t, trail, cell, val):
    cur = t[cell]
    if cur < 0:
        t[cell] = val
        trail.append(cell)
        return True
    return cur == val


def enumerate_group_tables(n):
    """All group tables on {0..n-1} with identity 0, lexicographic.

    Latin-square constraints (row/column injectivity) plus incremental
    associativity; finite + associative + cancellative + identity = group.
    """
    if n == 0:
        return []
    nn = n * n
    t = [-1] * nn
    for i in range(n):
        t[i] = i
        t[i * n] = i
    if n == 1:
        return [bytes(t)]
    cells = [r * n + c for r in range(1, n) for c in range(1, n)]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(bytes(t))
            return
        pos = cells[k]
        r, c = divmod(pos, n)
        for v in range(n):
            row_clash = False
            for j in range(n):
                if t[r * n + j] == v:
                    row_clash = True
                    break
            if row_clash:
                continue
            col_clash = False
            for i in range(n):
                if t[i * n + c] == v:
                    col_clash = True
                    break
            if col_clash:
                continue
            t[pos] = v
            if _consistent(t, n, r, c):
                rec(k + 1)
            t[pos] = -1

    rec(0)
    return out


def enumerate_homs(dn, dom, cn, cod):
    """All multiplicativity-preserving maps dom -> cod, lexicographic.

    DFS over images f(0), f(1), ... with incremental pruning: assigning
    f(k) checks every product constraint whose three participants are all
    already assigned.
    """
    if dn == 0:
        return [b""]
    if cn == 0:
        return []
    # cells of dom holding value k, for the "product just became known" case
    occ = [[] for _ in range(dn)]
    for i in range(dn):
        for j in range(dn):
            occ[dom[i * dn + j]].append((i, j))
    f = [0] * dn
    out = []

    def ok(k, v):
        for j in range(k + 1):
            p = dom[k * dn + j]
            if p <= k and cod[v * cn + f[j]] != f[p]:
                return False
            if j < k:
                p = dom[j * dn + k]
                if p <= k and cod[f[j] * cn + v] != f[p]:
                    return False
        for i, j in occ[k]:
            if i < k and j < k and cod[f[i] * cn + f[j]] != v:
                return False
        return True

    def rec(k):
        if k == dn:
            out.append(bytes(f))
            return
        for v in range(cn):
            f[k] = v
            if ok(k, v):
                rec(k + 1)

    rec(0)
    return out


# Bit positions for the five right-group conditions.
COND_A = 1
COND_B = 2
COND_C = 4
COND_E = 8
COND_F = 16
COND_ALL = COND_A | COND_B | COND_C | COND_E | COND_F


def condition_flags(n, t):
    """Bitmask of the five right-group conditions, each checked literally.

    a: right simple (every aS = S) and left cancellative.
    b: for every a,b exactly one x with a*x = b.
    c: right simple and some idempotent exists.
    e: some left identity e such that every a has a right inverse wrt e.
    f: a left identity exists, and every element has a right inverse wrt
       every left identity.
    Empty tables get no flags (all conditions presume a nonempty carrier).
    """
    if n == 0:
        return 0
    if n > 63:
        raise ValueError("condition_flags supports n <= 63")
    flags = 0
    full = (1 << n) - 1

    # (a) right simple ...
    a_ok = True
    for a in range(n):
        seen = 0
        for x in range(n):
            seen |= 1 << t[a * n + x]
        if seen != full:
            a_ok = False
            break
    # ... and left cancellative
    if a_ok:
        for a in range(n):
            row = a * n
            for b in range(n):
                for c in range(b + 1, n):
                    if t[row + b] == t[row + c]:
                        a_ok = False
                        break
                if not a_ok:
                    break
            if not a_ok:
                break
    if a_ok:
        flags |= COND_A

    # (b) unique solvability of a*x = b
    b_ok = True
    for a in range(n):
        row = a * n
        for b in range(n):
            cnt = 0
            for x in range(n):
                if t[row + x] == b:
                    cnt += 1
            if cnt != 1:
                b_ok = False
                break
        if not b_ok:
            break
    if b_ok:
        flags |= COND_B

    # (c) right simple and contains an idempotent
    c_ok = True
    for a in range(n):
        seen = 0
        for x in range(n):
            seen |= 1 << t[a * n + x]
        if seen != full:
            c_ok = False
            break
    if c_ok:
        c_ok = any(t[e * n + e] == e for e in range(n))
    if c_ok:
        flags |= COND_C

    # (e) witness left identity with right inverses
    e_ok = False
    for e in range(n):
        if any(t[e * n + x] != x for x in range(n)):
            continue
        if all(any(t[a * n + x] == e for x in range(n)) for a in range(n)):
            e_ok = True
            break
    if e_ok:
        flags |= COND_E

    # (f) all left identities admit right inverses
    lids = [e for e in range(n) if all(t[e * n + x] == x for x in range(n))]
    f_ok = bool(lids)
    for e in lids:
        if not f_ok:
            break
        for a in range(n):
            if not any(t[a * n + x] == e for x in range(n)):
                f_ok = False
                break
    if f_ok:
        flags |= COND_F

    return flags
