"""Congruences as multiplication-compatible partitions.

Composite relations, permutability, lattice meet/join, quotients, and the
complementary-congruence criteria for (semi)direct product decompositions.
"""

from .core import (
    FiniteSemigroup,
    MismatchedCarrier,
    Morphism,
    OrderTooLarge,
    restrict_to_subsemigroup,
)


class NotACongruence(ValueError):
    pass


class Partition:
    """A partition of [0, n) as a block-id vector, ids contiguous from 0.

    Normalized so blocks are numbered by first appearance; two equal
    partitions therefore have equal vectors.
    """

    __slots__ = ("block_of", "k")

    def __init__(self, block_of):
        raw = list(block_of)
        relabel = {}
        norm = []
        for b in raw:
            if b not in relabel:
                relabel[b] = len(relabel)
            norm.append(relabel[b])
        object.__setattr__(self, "block_of", tuple(norm))
        object.__setattr__(self, "k", len(relabel))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_blocks(cls, n, blocks):
        vec = [None] * n
        for i, block in enumerate(blocks):
            for x in block:
                if vec[x] is not None:
                    raise ValueError(f"element {x} in two blocks")
                vec[x] = i
        if any(v is None for v in vec):
            raise ValueError("partition does not cover the carrier")
        return cls(vec)

    @property
    def n(self):
        return len(self.block_of)

    def blocks(self):
        out = [[] for _ in range(self.k)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(b) for b in out)

    def same(self, a, b):
        return self.block_of[a] == self.block_of[b]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.block_of == other.block_of

    def __hash__(self):
        return hash(self.block_of)

    def __repr__(self):
        return f"Partition({self.block_of})"


class Congruence:
    """A partition compatible with multiplication: a~b implies xa~xb, ax~bx."""

    __slots__ = ("semigroup", "partition")

    def __init__(self, semigroup, partition):
        if partition.n != semigroup.n:
            raise MismatchedCarrier("partition size != carrier size")
        _check_compatible(semigroup, partition)
        object.__setattr__(self, "semigroup", semigroup)
        object.__setattr__(self, "partition", partition)

    def __setattr__(self, name, value):
        raise AttributeError("Congruence is immutable")

    @property
    def n(self):
        return self.semigroup.n

    @property
    def k(self):
        return self.partition.k

    def same(self, a, b):
        return self.partition.same(a, b)

    def block_of(self, a):
        return self.partition.block_of[a]

    def blocks(self):
        return self.partition.blocks()

    def is_identity(self):
        return self.partition.k == self.n

    def is_universal(self):
        return self.partition.k <= 1

    def __eq__(self, other):
        return isinstance(other, Congruence) and \
            self.semigroup == other.semigroup and \
            self.partition == other.partition

    def __hash__(self):
        return hash((self.semigroup, self.partition))

    def __repr__(self):
        return f"Congruence(n={self.n}, blocks={self.blocks()})"


def _check_compatible(S, part):
    # enough to compare each element against its block representative
    reps = {}
    for x, b in enumerate(part.block_of):
        reps.setdefault(b, x)
    for a in S.elements:
        r = reps[part.block_of[a]]
        if r == a:
            continue
        for x in S.elements:
            if not part.same(S.table[x][a], S.table[x][r]):
                raise NotACongruence(
                    f"{a}~{r} but {x}*{a} !~ {x}*{r}")
            if not part.same(S.table[a][x], S.table[r][x]):
                raise NotACongruence(
                    f"{a}~{r} but {a}*{x} !~ {r}*{x}")


def identity_congruence(S):
    return Congruence(S, Partition(range(S.n)))


def universal_congruence(S):
    return Congruence(S, Partition([0] * S.n))


def congruence_from_blocks(S, blocks):
    return Congruence(S, Partition.from_blocks(S.n, blocks))


def kernel_congruence(m: Morphism):
    """Congruence on dom(m) identifying elements with equal images."""
    return Congruence(m.dom, Partition(m.map))


def _require_same_carrier(c1, c2):
    if c1.semigroup != c2.semigroup:
        raise MismatchedCarrier("congruences live on different semigroups")


def compose_relations(c1, c2):
    """Composite relation {(a,b) : exists c, a c1 c and c c2 b} as a boolean
    n x n matrix."""
    _require_same_carrier(c1, c2)
    n = c1.n
    out = [[False] * n for _ in range(n)]
    by_block1 = [[] for _ in range(c1.k)]
    for x in range(n):
        by_block1[c1.block_of(x)].append(x)
    by_block2 = [[] for _ in range(c2.k)]
    for x in range(n):
        by_block2[c2.block_of(x)].append(x)
    for c in range(n):
        for a in by_block1[c1.block_of(c)]:
            row = out[a]
            for b in by_block2[c2.block_of(c)]:
                row[b] = True
    return out


def are_permutable(c1, c2):
    """True iff the two composites coincide."""
    return compose_relations(c1, c2) == compose_relations(c2, c1)


def meet(c1, c2):
    """Intersection of the relations (always a congruence)."""
    _require_same_carrier(c1, c2)
    vec = [(c1.block_of(x), c2.block_of(x)) for x in range(c1.n)]
    return Congruence(c1.semigroup, Partition(_relabel(vec)))


def _relabel(vec):
    seen = {}
    return [seen.setdefault(v, len(seen)) for v in vec]


def join(c1, c2):
    """Congruence generated by the union: union-find closed under
    one-sided translations until a fixpoint."""
    _require_same_carrier(c1, c2)
    S = c1.semigroup
    n = S.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
            pending.append((a, b))

    for c in (c1, c2):
        for block in c.blocks():
            for a, b in zip(block, block[1:]):
                union(a, b)
    while pending:
        a, b = pending.pop()
        for x in S.elements:
            union(S.table[x][a], S.table[x][b])
            union(S.table[a][x], S.table[b][x])
    return Congruence(S, Partition([find(x) for x in range(n)]))


def quotient(c: Congruence):
    """(S/c, projection).  Blocks are ordered by least element; the induced
    product [a][b] = [a*b] is asserted well-defined cell by cell."""
    S = c.semigroup
    blocks = c.blocks()
    reps = [b[0] for b in blocks]
    k = len(blocks)
    table = [[c.block_of(S.table[reps[i]][reps[j]]) for j in range(k)]
             for i in range(k)]
    for a in S.elements:
        for b in S.elements:
            assert c.block_of(S.table[a][b]) == \
                table[c.block_of(a)][c.block_of(b)], "congruence not compatible"
    Q = FiniteSemigroup(table)
    proj = Morphism(S, Q, c.partition.block_of)
    return Q, proj


def is_direct_product_pair(S, c1, c2):
    """True iff c1, c2 are complementary permutable congruences, i.e.
    both composites equal the universal relation and the meet is the
    identity.  When true the product map into S/c1 x S/c2 is a bijection
    (asserted)."""
    full = [[True] * S.n for _ in range(S.n)]
    r12 = compose_relations(c1, c2)
    r21 = compose_relations(c2, c1)
    ok = r12 == full and r21 == full and meet(c1, c2).is_identity()
    if ok:
        pairs = {(c1.block_of(x), c2.block_of(x)) for x in S.elements}
        assert len(pairs) == S.n == c1.k * c2.k, \
            "complementary congruences must give a bijective product map"
    return ok


def is_direct_product_n(S, cs):
    """n-fold criterion: pairwise permutable, meet of all = identity, and
    each c_i joined with the meet of the others is universal."""
    if not cs:
        return S.n <= 1
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if not are_permutable(cs[i], cs[j]):
                return False
    total = cs[0]
    for c in cs[1:]:
        total = meet(total, c)
    if not total.is_identity():
        return False
    for i in range(len(cs)):
        others = [c for j, c in enumerate(cs) if j != i]
        if not others:
            rest = universal_congruence(S)
        else:
            rest = others[0]
            for c in others[1:]:
                rest = meet(rest, c)
        if not join(cs[i], rest).is_universal():
            return False
    return True


def is_semidirect_product(S, c, subset):
    """True iff the composite subset -> S -> S/c is bijective; the subset
    must be multiplicatively closed (NotASubsemigroup otherwise)."""
    sub, carrier = restrict_to_subsemigroup(S, subset)
    hit = {c.block_of(x) for x in carrier}
    return len(hit) == len(carrier) and len(hit) == c.k


def all_congruences(S, max_order=6):
    """Every congruence of S, by exhausting set partitions (restricted
    growth strings) and keeping the compatible ones.  Bell-number growth
    caps this at order ``max_order``."""
    if S.n > max_order:
        raise OrderTooLarge(
            f"congruence enumeration capped at order {max_order}")
    out = []
    for vec in _restricted_growth_strings(S.n):
        part = Partition(vec)
        try:
            out.append(Congruence(S, part))
        except NotACongruence:
            pass
    return out


def _restricted_growth_strings(n):
    if n == 0:
        yield []
        return
    vec = [0] * n

    def rec(i, maxb):
        if i == n:
            yield list(vec)
            return
        for b in range(maxb + 2):
            vec[i] = b
            yield from rec(i + 1, max(maxb, b))

    yield from rec(1, 0)


def parse_congruence_text(S, text):
    """One line of n whitespace-separated block ids, element order."""
    toks = [tok for line in text.splitlines()
            for tok in line.split() if not line.lstrip().startswith("#")]
    if len(toks) != S.n:
        raise ValueError(f"expected {S.n} block ids, got {len(toks)}")
    return Congruence(S, Partition([int(x) for x in toks]))


def format_congruence_text(c):
    return " ".join(str(b) for b in c.partition.block_of) + "\n"
