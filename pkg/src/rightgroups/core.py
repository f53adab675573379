"""Finite semigroups as validated Cayley tables, and the elementary layer:
predicates, unique division, direct products, morphisms, and the text format.

Elements are dense 0-based ids; all values here are immutable after
construction, so they can be shared freely across threads or processes.
"""

import functools

from . import kernels


class NotAssociative(ValueError):
    """Raised with the first failing triple (i, j, k)."""

    def __init__(self, i, j, k):
        super().__init__(f"not associative at ({i}, {j}, {k}): "
                         f"(i*j)*k != i*(j*k)")
        self.triple = (i, j, k)


class NoSolution(ValueError):
    pass


class NotUnique(ValueError):
    pass


class EmptySemigroup(ValueError):
    pass


class NotARightGroup(ValueError):
    pass


class NotAnIdempotent(ValueError):
    pass


class NotASubsemigroup(ValueError):
    pass


class MismatchedCarrier(ValueError):
    pass


class NotAMorphism(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class OrderTooLarge(ValueError):
    pass


class FiniteSemigroup:
    """An n x n Cayley table with table[i][j] = i*j, validated associative.

    The empty semigroup (n = 0) is allowed; right-group operations reject
    it downstream.
    """

    __slots__ = ("n", "table", "flat")

    def __init__(self, table):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} out of range [0, {n})")
        flat = bytes(x for row in rows for x in row)
        bad = kernels.assoc_failure(n, flat)
        if bad is not None:
            raise NotAssociative(*bad)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "flat", flat)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSemigroup is immutable")

    @classmethod
    def from_flat(cls, n, flat):
        return cls([flat[i * n:(i + 1) * n] for i in range(n)])

    def mul(self, a, b):
        return self.table[a][b]

    @property
    def elements(self):
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.flat == other.flat \
            and self.n == other.n

    def __hash__(self):
        return hash((self.n, self.flat))

    def __repr__(self):
        return f"FiniteSemigroup(n={self.n})"


def validate(table):
    """Build a FiniteSemigroup, raising NotAssociative on the first bad triple."""
    return FiniteSemigroup(table)


def idempotents(S):
    """{ e : e*e = e }."""
    return {e for e in S.elements if S.table[e][e] == e}


def left_identities(S):
    """{ e : e*x = x for all x }."""
    return {e for e in S.elements
            if all(S.table[e][x] == x for x in S.elements)}


def is_right_simple(S):
    """True iff aS = S for every a (and S is nonempty)."""
    if S.n == 0:
        return False
    full = set(S.elements)
    return all(set(S.table[a]) == full for a in S.elements)


def is_left_cancellative(S):
    """True iff a*b = a*c implies b = c."""
    n = S.n
    for a in range(n):
        row = S.table[a]
        for b in range(n):
            for c in range(b + 1, n):
                if row[b] == row[c]:
                    return False
    return True


def is_right_zero(S):
    """True iff a*b = b for all a, b (nonempty)."""
    return S.n > 0 and all(S.table[a][b] == b
                           for a in S.elements for b in S.elements)


def solve_right(S, a, b):
    """The unique x with a*x = b; NoSolution/NotUnique otherwise."""
    row = S.table[a]
    hits = [x for x in S.elements if row[x] == b]
    if not hits:
        raise NoSolution(f"no x with {a}*x = {b}")
    if len(hits) > 1:
        raise NotUnique(f"{len(hits)} solutions of {a}*x = {b}")
    return hits[0]


def centralizer(S, e):
    """{ x : e*x = x*e }."""
    return {x for x in S.elements if S.table[e][x] == S.table[x][e]}


def product_pair(s, t, t_size):
    """Row-major codec: (s, t) -> flat id in a direct product."""
    return s * t_size + t


def product_split(i, t_size):
    """Inverse of product_pair."""
    return divmod(i, t_size)


def direct_product(S, T):
    """External direct product with componentwise multiplication.

    Carrier ids follow the row-major codec: id = s*|T| + t.
    """
    nt = T.n
    n = S.n * nt
    table = [[0] * n for _ in range(n)]
    for s1 in S.elements:
        for t1 in T.elements:
            i = s1 * nt + t1
            for s2 in S.elements:
                for t2 in T.elements:
                    table[i][s2 * nt + t2] = \
                        S.table[s1][s2] * nt + T.table[t1][t2]
    return FiniteSemigroup(table)


def right_zero_table(n):
    """Right zero semigroup: a*b = b."""
    return FiniteSemigroup([[j for j in range(n)] for _ in range(n)])


def left_zero_table(n):
    """Left zero semigroup: a*b = a."""
    return FiniteSemigroup([[i for _ in range(n)] for i in range(n)])


def cyclic_table(n):
    """Cyclic group Z_n (addition mod n)."""
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)])


def trivial_semigroup():
    return FiniteSemigroup([[0]])


def restrict_to_subsemigroup(S, subset):
    """Standalone table on a multiplicatively closed subset.

    Returns (semigroup, carrier) with carrier[i] the ambient id of local
    element i (ascending).  Raises NotASubsemigroup if the set is not closed.
    """
    carrier = tuple(sorted(set(subset)))
    index = {x: i for i, x in enumerate(carrier)}
    table = []
    for a in carrier:
        row = []
        for b in carrier:
            p = S.table[a][b]
            if p not in index:
                raise NotASubsemigroup(f"{a}*{b} = {p} escapes the subset")
            row.append(index[p])
        table.append(row)
    return FiniteSemigroup(table), carrier


class FiniteGroup:
    """A FiniteSemigroup that is a group, with identity and inverses."""

    __slots__ = ("semigroup", "identity", "inverse")

    def __init__(self, semigroup):
        n = semigroup.n
        if n == 0:
            raise EmptySemigroup("groups are nonempty")
        ident = None
        for e in range(n):
            if all(semigroup.table[e][x] == x == semigroup.table[x][e]
                   for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("no two-sided identity")
        inverse = []
        for a in range(n):
            invs = [x for x in range(n)
                    if semigroup.table[a][x] == ident
                    and semigroup.table[x][a] == ident]
            if len(invs) != 1:
                raise ValueError(f"element {a} lacks a unique inverse")
            inverse.append(invs[0])
        object.__setattr__(self, "semigroup", semigroup)
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inverse))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    @property
    def n(self):
        return self.semigroup.n

    @property
    def table(self):
        return self.semigroup.table

    def mul(self, a, b):
        return self.semigroup.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    @property
    def elements(self):
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and \
            self.semigroup == other.semigroup

    def __hash__(self):
        return hash(("group", self.semigroup))

    def __repr__(self):
        return f"FiniteGroup(n={self.n}, identity={self.identity})"


def is_group(S):
    """True iff the semigroup carries a group structure."""
    try:
        FiniteGroup(S)
        return True
    except (ValueError, EmptySemigroup):
        return False


class Morphism:
    """A total multiplication-preserving map between semigroup carriers."""

    __slots__ = ("dom", "cod", "map")

    def __init__(self, dom, cod, mapping):
        m = tuple(int(x) for x in mapping)
        if len(m) != dom.n:
            raise NotAMorphism(f"map length {len(m)} != domain size {dom.n}")
        for v in m:
            if not 0 <= v < cod.n:
                raise NotAMorphism(f"image {v} outside codomain [0, {cod.n})")
        for a in dom.elements:
            for b in dom.elements:
                if m[dom.table[a][b]] != cod.table[m[a]][m[b]]:
                    raise NotAMorphism(
                        f"f({a}*{b}) != f({a})*f({b})")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "map", m)

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def __call__(self, a):
        return self.map[a]

    @property
    def image(self):
        return set(self.map)

    def is_bijective(self):
        return self.dom.n == self.cod.n and len(set(self.map)) == self.dom.n

    def inverse(self):
        if not self.is_bijective():
            raise ValueError("morphism is not bijective")
        inv = [0] * self.cod.n
        for a, v in enumerate(self.map):
            inv[v] = a
        return Morphism(self.cod, self.dom, inv)

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.dom == other.dom and \
            self.cod == other.cod and self.map == other.map

    def __hash__(self):
        return hash((self.dom, self.cod, self.map))

    def __repr__(self):
        return f"Morphism({self.dom.n}->{self.cod.n}, {self.map})"


def identity_morphism(S):
    return Morphism(S, S, range(S.n))


def compose(g, f):
    """g after f (dom f -> cod g)."""
    if f.cod != g.dom:
        raise MismatchedCarrier("cod(f) != dom(g)")
    return Morphism(f.dom, g.cod, tuple(g.map[v] for v in f.map))


DEFAULT_HOM_BUDGET = 10 ** 8


def enumerate_hom_bruteforce(S, T, budget=DEFAULT_HOM_BUDGET):
    """All morphisms S -> T in lexicographic map order.

    The candidate space |T|^|S| must stay within ``budget`` (BudgetExceeded
    above it).  Backed by the pruned kernel search; results are cached per
    table pair since the sweeps revisit pairs heavily.
    """
    if T.n ** S.n > budget:
        raise BudgetExceeded(
            f"|T|^|S| = {T.n}^{S.n} exceeds budget {budget}")
    return _hom_bruteforce_cached(S, T)


@functools.lru_cache(maxsize=None)
def _hom_bruteforce_cached(S, T):
    maps = kernels.enumerate_homs(S.n, S.flat, T.n, T.flat)
    return tuple(Morphism(S, T, m) for m in maps)


# -- Cayley-table text format -------------------------------------------
#
# line 1: n; lines 2..n+1: n whitespace-separated ids (row i is i*j for
# each j).  '#' starts a comment line; blank lines are skipped.

def parse_table_text(text):
    """Parse the table text format into a FiniteSemigroup."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the order, got {lines[0]!r}")
    if n < 0:
        raise ValueError("order must be >= 0")
    rows = []
    for ln in lines[1:n + 1]:
        rows.append([int(tok) for tok in ln.split()])
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, found {len(rows)}")
    return FiniteSemigroup(rows)


def format_table_text(S, header=None):
    """Render a semigroup in the table text format."""
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.append(str(S.n))
    for row in S.table:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
