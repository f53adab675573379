"""Exhaustive and structured generation of small semigroups, groups, and
right groups up to isomorphism, plus isomorphism testing and the census.

Semigroups are enumerated raw (pruned Cayley backtracking, order <= 4) and
reduced by canonical form; groups are enumerated raw up to order 8 and via
a constructive catalog from 9 to 15; right groups come structured from the
divisor formula (one class per pair of a nonempty right zero part and a
group), cross-checked against the raw search at small orders.
"""

import functools
from itertools import permutations, product

from .core import (
    FiniteGroup,
    FiniteSemigroup,
    OrderTooLarge,
    cyclic_table,
    direct_product,
    right_zero_table,
)
from .structure import RightGroup, quotient_group
from . import kernels

MAX_RAW_SEMIGROUP_ORDER = 4
MAX_RAW_GROUP_ORDER = 8
MAX_STRUCTURED_ORDER = 15

# classes of groups of each order 1..15 (used as a completeness
# cross-check; raw enumeration reproduces the first eight)
GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
                9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1}


# -- canonical forms and isomorphism ------------------------------------

def _element_invariant(S, x):
    """Isomorphism-invariant per-element key used to prune permutations."""
    n = S.n
    xS = {S.table[x][y] for y in range(n)}
    Sx = {S.table[y][x] for y in range(n)}
    # index/period of the cyclic subsemigroup generated by x
    seen = {x: 1}
    y = x
    k = 1
    while True:
        y = S.table[y][x]
        k += 1
        if y in seen:
            cycle = (seen[y], k)
            break
        seen[y] = k
    return (len(xS), len(Sx), len(xS & Sx), S.table[x][x] == x, cycle)


@functools.lru_cache(maxsize=None)
def canonical_semigroup_table(S: FiniteSemigroup):
    """Lexicographically least table over all carrier relabelings that
    respect the element-invariant grouping (a canonical form, since the
    grouping itself is isomorphism-invariant)."""
    n = S.n
    if n == 0:
        return ()
    groups = {}
    for x in range(n):
        groups.setdefault(_element_invariant(S, x), []).append(x)
    ordered = [groups[k] for k in sorted(groups)]
    best = None
    for perms in product(*(permutations(g) for g in ordered)):
        order = [x for g in perms for x in g]
        # order[i] is the old id placed at new position i
        newpos = [0] * n
        for i, x in enumerate(order):
            newpos[x] = i
        cand = tuple(tuple(newpos[S.table[order[i]][order[j]]]
                           for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


def are_isomorphic_semigroups(S, T):
    """Raw isomorphism test via canonical forms."""
    if S.n != T.n:
        return False
    return canonical_semigroup_table(S) == canonical_semigroup_table(T)


def are_isomorphic_groups(G: FiniteGroup, H: FiniteGroup):
    """Group isomorphism by generator-image search with order pruning."""
    if G.n != H.n:
        return False
    from .morphisms import _element_orders, _generators

    if sorted(_element_orders(G)) != sorted(_element_orders(H)):
        return False
    gens = _generators(G)
    if not gens:
        return True
    order_g = _element_orders(G)
    order_h = _element_orders(H)
    partial = [None] * G.n
    partial[G.identity] = H.identity

    def extend(k, used):
        if k == len(gens):
            return len(set(partial)) == G.n
        g = gens[k]
        for h in H.elements:
            if order_h[h] != order_g[g]:
                continue
            snapshot = list(partial)
            if _close_iso(partial, g, h) and extend(k + 1, used):
                return True
            partial[:] = snapshot
        return False

    def _close_iso(m, g, h):
        if m[g] is not None:
            return m[g] == h
        m[g] = h
        frontier = [g]
        while frontier:
            a = frontier.pop()
            for b in range(G.n):
                if m[b] is None:
                    continue
                for x, y in ((G.mul(a, b), H.mul(m[a], m[b])),
                             (G.mul(b, a), H.mul(m[b], m[a]))):
                    if m[x] is None:
                        m[x] = y
                        frontier.append(x)
                    elif m[x] != y:
                        return False
        # injectivity on the assigned part
        assigned = [v for v in m if v is not None]
        return len(assigned) == len(set(assigned))

    return extend(0, set())


def are_isomorphic_right_groups(S: RightGroup, T: RightGroup):
    """Structured test: equal idempotent counts and isomorphic quotient
    groups (right groups are classified by that pair)."""
    if len(S.idempotents) != len(T.idempotents):
        return False
    gs, _ = quotient_group(S)
    gt, _ = quotient_group(T)
    return are_isomorphic_groups(gs, gt)


# -- enumeration ---------------------------------------------------------

@functools.lru_cache(maxsize=None)
def enumerate_semigroups(n, max_order=MAX_RAW_SEMIGROUP_ORDER):
    """All semigroups of order n up to isomorphism (canonical
    representatives, sorted)."""
    if n > max_order:
        raise OrderTooLarge(f"raw semigroup enumeration capped at {max_order}")
    reps = {}
    for flat in kernels.enumerate_associative_tables(n):
        S = FiniteSemigroup.from_flat(n, flat)
        reps.setdefault(canonical_semigroup_table(S), S)
    return tuple(FiniteSemigroup(tbl) for tbl in sorted(reps))


def count_labeled_semigroups(n):
    """Number of associative tables on a labeled n-set."""
    return len(kernels.enumerate_associative_tables(n))


def sample_semigroups(n, count, seed=0):
    """Seeded random associative tables (not isomorphism-reduced)."""
    return [FiniteSemigroup.from_flat(n, flat)
            for flat in kernels.sample_associative_tables(n, count, seed)]


@functools.lru_cache(maxsize=None)
def enumerate_groups(m, max_order=MAX_RAW_GROUP_ORDER):
    """All groups of order m up to isomorphism, by raw table backtracking
    (identity normalized to element 0) and incremental iso-classing."""
    if m > max_order:
        raise OrderTooLarge(f"raw group enumeration capped at {max_order}")
    reps = []
    for flat in kernels.enumerate_group_tables(m):
        G = FiniteGroup(FiniteSemigroup.from_flat(m, flat))
        if not any(are_isomorphic_groups(G, R) for R in reps):
            reps.append(G)
    if m >= 1:
        assert len(reps) == GROUP_COUNTS[m], \
            f"group census mismatch at order {m}: {len(reps)}"
    return tuple(reps)


def _perm_group_table(perms):
    """Cayley table of a set of permutations closed under composition
    (compose = apply right then left), elements in the given order."""
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms]
             for p in perms]
    return FiniteGroup(FiniteSemigroup(table))


def cyclic_group(n):
    return FiniteGroup(cyclic_table(n))


def dihedral_group(k):
    """Symmetries of a regular k-gon (order 2k), k >= 3."""
    n = 2 * k
    table = [[0] * n for _ in range(n)]
    for i1 in range(k):
        for j1 in range(2):
            for i2 in range(k):
                for j2 in range(2):
                    if j1 == 0:
                        r = ((i1 + i2) % k, j2)
                    else:
                        r = ((i1 - i2) % k, 1 - j2)
                    table[i1 + k * j1][i2 + k * j2] = r[0] + k * r[1]
    return FiniteGroup(FiniteSemigroup(table))


def dicyclic_group(k):
    """Dicyclic group of order 4k (k >= 2): a^{2k} = 1, b^2 = a^k,
    b a b^{-1} = a^{-1}.  Elements a^i b^j with i < 2k, j < 2."""
    m = 2 * k
    n = 2 * m
    table = [[0] * n for _ in range(n)]
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    if j1 == 0:
                        i, j = (i1 + i2) % m, j2
                    elif j2 == 0:
                        i, j = (i1 - i2) % m, 1
                    else:
                        i, j = (i1 - i2 + k) % m, 0
                    table[i1 + m * j1][i2 + m * j2] = i + m * j
    return FiniteGroup(FiniteSemigroup(table))


def symmetric_group(k):
    """Sym(k) with elements the permutations of range(k) in lex order."""
    perms = list(permutations(range(k)))
    return _perm_group_table(perms)


def alternating_group(k):
    perms = [p for p in permutations(range(k)) if _parity(p) == 0]
    return _perm_group_table(perms)


def _parity(p):
    seen = [False] * len(p)
    odd = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        odd ^= (length - 1) & 1
    return odd


def _product_group(G, H):
    return FiniteGroup(direct_product(G.semigroup, H.semigroup))


@functools.lru_cache(maxsize=None)
def groups_of_order(m):
    """All groups of order m up to isomorphism, m <= 15.

    Raw backtracking up to 8; the classical constructions beyond (the
    counts and pairwise non-isomorphism are asserted by tests).
    """
    if m <= MAX_RAW_GROUP_ORDER:
        return enumerate_groups(m)
    catalog = {
        9: lambda: (cyclic_group(9),
                    _product_group(cyclic_group(3), cyclic_group(3))),
        10: lambda: (cyclic_group(10), dihedral_group(5)),
        11: lambda: (cyclic_group(11),),
        12: lambda: (cyclic_group(12),
                     _product_group(cyclic_group(6), cyclic_group(2)),
                     dihedral_group(6),
                     alternating_group(4),
                     dicyclic_group(3)),
        13: lambda: (cyclic_group(13),),
        14: lambda: (cyclic_group(14), dihedral_group(7)),
        15: lambda: (cyclic_group(15),),
    }
    if m not in catalog:
        raise OrderTooLarge(f"group catalog capped at {MAX_STRUCTURED_ORDER}")
    out = catalog[m]()
    assert len(out) == GROUP_COUNTS[m]
    return out


@functools.lru_cache(maxsize=None)
def enumerate_right_groups(n, structured_cap=MAX_STRUCTURED_ORDER):
    """All right groups of order n up to isomorphism: one per divisor m of
    n and group G of order m, as rzs(n/m) x G."""
    if n > structured_cap:
        raise OrderTooLarge(
            f"structured right-group enumeration capped at {structured_cap}")
    if n == 0:
        return ()
    out = []
    for m in range(1, n + 1):
        if n % m != 0:
            continue
        for G in groups_of_order(m):
            S = direct_product(right_zero_table(n // m), G.semigroup)
            out.append(RightGroup(S))
    return tuple(out)


def enumerate_right_groups_raw(n):
    """Right groups filtered from the raw semigroup enumeration (n <= 4)."""
    out = []
    for S in enumerate_semigroups(n):
        flags = kernels.condition_flags(S.n, S.flat)
        if flags == kernels.COND_ALL:
            out.append(RightGroup(S))
    return out


def enumerate_pointed_right_groups(n):
    """One pointed right group per isomorphism class (every choice of
    point yields an isomorphic pointed right group)."""
    from .structure import PointedRightGroup

    return [PointedRightGroup(rg, rg.e0) for rg in enumerate_right_groups(n)]


# -- naming and the census ----------------------------------------------

_NAMED_GROUPS = None


def _named_groups():
    global _NAMED_GROUPS
    if _NAMED_GROUPS is None:
        named = {}
        builders = {
            4: [("Z4", cyclic_group(4)),
                ("V4", _product_group(cyclic_group(2), cyclic_group(2)))],
            6: [("Z6", cyclic_group(6)), ("S3", symmetric_group(3))],
            8: [("Z8", cyclic_group(8)),
                ("Z4xZ2", _product_group(cyclic_group(4), cyclic_group(2))),
                ("Z2xZ2xZ2", _product_group(
                    cyclic_group(2),
                    _product_group(cyclic_group(2), cyclic_group(2)))),
                ("D4", dihedral_group(4)),
                ("Q8", dicyclic_group(2))],
            9: [("Z9", cyclic_group(9)),
                ("Z3xZ3", _product_group(cyclic_group(3), cyclic_group(3)))],
            10: [("Z10", cyclic_group(10)), ("D5", dihedral_group(5))],
            12: [("Z12", cyclic_group(12)),
                 ("Z6xZ2", _product_group(cyclic_group(6), cyclic_group(2))),
                 ("D6", dihedral_group(6)),
                 ("A4", alternating_group(4)),
                 ("Dic3", dicyclic_group(3))],
            14: [("Z14", cyclic_group(14)), ("D7", dihedral_group(7))],
        }
        for m in range(1, MAX_STRUCTURED_ORDER + 1):
            if m in builders:
                named[m] = builders[m]
            else:
                named[m] = [(f"Z{m}", cyclic_group(m))]
        _NAMED_GROUPS = named
    return _NAMED_GROUPS


def group_name(G: FiniteGroup):
    """Human label for a group of order <= 15."""
    if G.n > MAX_STRUCTURED_ORDER:
        return f"group of order {G.n}"
    for name, H in _named_groups()[G.n]:
        if are_isomorphic_groups(G, H):
            return name
    return f"group of order {G.n}"


class CensusRow:
    """Counts of right groups of one order: structured (divisor formula)
    and, when available, from the raw Cayley search."""

    def __init__(self, order, count_structured, count_raw, inventory):
        self.order = order
        self.count_structured = count_structured
        self.count_raw = count_raw  # None when outside the raw cap
        self.inventory = inventory  # [(|E|, group label), ...]
        if count_raw is not None:
            assert count_raw == count_structured, \
                f"census mismatch at order {order}"

    def as_dict(self):
        return {
            "order": self.order,
            "count_structured": self.count_structured,
            "count_raw": self.count_raw,
            "inventory": [list(item) for item in self.inventory],
        }


def census(n_max, raw_max=MAX_RAW_SEMIGROUP_ORDER):
    """CensusRows for n = 1..n_max; the raw column is computed up to
    raw_max and must agree with the divisor formula."""
    if n_max > MAX_STRUCTURED_ORDER:
        raise OrderTooLarge(
            f"census capped at {MAX_STRUCTURED_ORDER}")
    rows = []
    for n in range(1, n_max + 1):
        inventory = []
        for rg in enumerate_right_groups(n):
            G, _ = quotient_group(rg)
            inventory.append((len(rg.idempotents), group_name(G)))
        raw = None
        if n <= raw_max:
            raw_list = enumerate_right_groups_raw(n)
            raw = len(raw_list)
            assert _matches_up_to_iso(raw_list, enumerate_right_groups(n))
        rows.append(CensusRow(n, len(inventory), raw, inventory))
    return rows


def _matches_up_to_iso(rgs_a, rgs_b):
    if len(rgs_a) != len(rgs_b):
        return False
    used = set()
    for a in rgs_a:
        hit = None
        for i, b in enumerate(rgs_b):
            if i not in used and are_isomorphic_right_groups(a, b):
                hit = i
                break
        if hit is None:
            return False
        used.add(hit)
    return True
