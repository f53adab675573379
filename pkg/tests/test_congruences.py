"""Congruences: compatibility, composites, the lattice, quotients, and the
direct/semidirect product criteria."""

import pytest

from rightgroups.congruences import (
    NotACongruence,
    Partition,
    all_congruences,
    are_permutable,
    compose_relations,
    congruence_from_blocks,
    format_congruence_text,
    identity_congruence,
    is_direct_product_n,
    is_direct_product_pair,
    is_semidirect_product,
    join,
    kernel_congruence,
    meet,
    parse_congruence_text,
    quotient,
    universal_congruence,
)
from rightgroups.core import (
    MismatchedCarrier,
    NotASubsemigroup,
    OrderTooLarge,
    cyclic_table,
    direct_product,
    right_zero_table,
)
from rightgroups.enumeration import enumerate_semigroups
from rightgroups.structure import (
    RightGroup,
    equiv_congruence,
    sim_congruence,
    subgroup_Se,
)

R2xZ2 = direct_product(right_zero_table(2), cyclic_table(2))
RG = RightGroup(R2xZ2)
SIM = sim_congruence(RG)
EQUIV = equiv_congruence(RG)


def test_partition_normalization():
    assert Partition([5, 5, 7, 5]).block_of == (0, 0, 1, 0)
    # blocks are renumbered by first appearance
    assert Partition.from_blocks(3, [[1], [0, 2]]).blocks() == ((0, 2), (1,))
    with pytest.raises(ValueError):
        Partition.from_blocks(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition.from_blocks(3, [[0, 1]])


def test_congruence_rejects_incompatible():
    # {0,1},{2,3} is equiv on R2xZ2 (compatible); {0,3},{1,2} is not
    congruence_from_blocks(R2xZ2, [[0, 1], [2, 3]])
    with pytest.raises(NotACongruence):
        congruence_from_blocks(R2xZ2, [[0, 3], [1, 2]])


def test_compose_with_identity_and_universal():
    ident = identity_congruence(R2xZ2)
    omega = universal_congruence(R2xZ2)
    rel = compose_relations(ident, EQUIV)
    expect = [[EQUIV.same(a, b) for b in range(4)] for a in range(4)]
    assert rel == expect
    assert compose_relations(omega, omega) == [[True] * 4] * 4


def test_compose_sim_equiv_is_universal():
    assert compose_relations(SIM, EQUIV) == [[True] * 4] * 4


def test_mismatched_carriers_rejected():
    other = identity_congruence(cyclic_table(2))
    with pytest.raises(MismatchedCarrier):
        compose_relations(other, EQUIV)
    with pytest.raises(MismatchedCarrier):
        meet(other, EQUIV)


def test_permutability():
    assert are_permutable(SIM, SIM)
    assert are_permutable(identity_congruence(R2xZ2), EQUIV)
    from rightgroups.enumeration import enumerate_right_groups

    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            assert are_permutable(sim_congruence(rg), equiv_congruence(rg))


def test_meet_join_with_bounds():
    omega = universal_congruence(R2xZ2)
    ident = identity_congruence(R2xZ2)
    for c in all_congruences(R2xZ2):
        assert meet(c, omega) == c
        assert join(c, omega) == omega
        assert meet(c, ident) == ident
        assert join(c, ident) == c


def test_meet_sim_equiv_identity():
    assert meet(SIM, EQUIV).is_identity()


def congruence_lattice_cases():
    for n in range(1, 5):
        for S in enumerate_semigroups(n):
            yield S, all_congruences(S)


def test_lattice_laws_exhaustive_to_order_four():
    for S, cs in congruence_lattice_cases():
        index = {c: i for i, c in enumerate(cs)}
        meets = [[index[meet(a, b)] for b in cs] for a in cs]
        joins = [[index[join(a, b)] for b in cs] for a in cs]
        k = len(cs)
        for i in range(k):
            assert meets[i][i] == i and joins[i][i] == i  # idempotent
            for j in range(k):
                assert meets[i][j] == meets[j][i]  # commutative
                assert joins[i][j] == joins[j][i]
                assert meets[i][joins[i][j]] == i  # absorption
                assert joins[i][meets[i][j]] == i
                for l in range(k):  # associative
                    assert meets[meets[i][j]][l] == meets[i][meets[j][l]]
                    assert joins[joins[i][j]][l] == joins[i][joins[j][l]]


def test_permutable_join_equals_composite():
    for S, cs in congruence_lattice_cases():
        n = S.n
        for c1 in cs:
            for c2 in cs:
                if not are_permutable(c1, c2):
                    continue
                j = join(c1, c2)
                rel = compose_relations(c1, c2)
                assert rel == [[j.same(a, b) for b in range(n)]
                               for a in range(n)]


def test_quotient_by_identity_and_universal():
    Q, proj = quotient(identity_congruence(R2xZ2))
    assert Q.table == R2xZ2.table
    assert proj.map == (0, 1, 2, 3)
    Q, proj = quotient(universal_congruence(R2xZ2))
    assert Q.n == 1


def test_quotient_by_sim_is_group_of_order_two():
    Q, proj = quotient(SIM)
    assert Q.n == 2
    assert Q.table == cyclic_table(2).table
    assert kernel_congruence(proj) == SIM


def test_quotient_kernel_recovers_congruence():
    for n in range(1, 4):
        for S in enumerate_semigroups(n):
            for c in all_congruences(S):
                Q, proj = quotient(c)
                assert kernel_congruence(proj) == c
                assert set(proj.map) == set(range(Q.n))


def test_direct_product_pair():
    assert is_direct_product_pair(R2xZ2, SIM, EQUIV)
    ident = identity_congruence(R2xZ2)
    omega = universal_congruence(R2xZ2)
    assert is_direct_product_pair(R2xZ2, ident, omega)
    assert not is_direct_product_pair(R2xZ2, omega, omega)
    from rightgroups.enumeration import enumerate_right_groups

    for n in range(1, 7):
        for rg in enumerate_right_groups(n):
            assert is_direct_product_pair(
                rg.semigroup, sim_congruence(rg), equiv_congruence(rg))


def test_direct_product_pair_iff_bijective_canonical_map():
    for n in range(1, 4):
        for S in enumerate_semigroups(n):
            cs = all_congruences(S)
            for c1 in cs:
                for c2 in cs:
                    pairs = {(c1.block_of(x), c2.block_of(x))
                             for x in S.elements}
                    bijective = len(pairs) == S.n == c1.k * c2.k
                    assert is_direct_product_pair(S, c1, c2) == bijective


def test_direct_product_n_matches_pair_case():
    for n in range(1, 5):
        for S in enumerate_semigroups(n):
            cs = all_congruences(S)
            for c1 in cs:
                for c2 in cs:
                    assert is_direct_product_n(S, [c1, c2]) == \
                        is_direct_product_pair(S, c1, c2)


def test_direct_product_n_three_projections():
    Z2 = cyclic_table(2)
    S = direct_product(direct_product(Z2, Z2), Z2)
    # kernels of the three coordinate projections
    cs = []
    for coord in range(3):
        blocks = {}
        for x in range(8):
            key = (x >> (2 - coord)) & 1
            blocks.setdefault(key, []).append(x)
        cs.append(congruence_from_blocks(S, list(blocks.values())))
    assert is_direct_product_n(S, cs)
    omega = universal_congruence(S)
    assert not is_direct_product_n(S, [omega, omega])


def test_semidirect_product():
    sub = subgroup_Se(RG, RG.e0)
    assert is_semidirect_product(R2xZ2, SIM, sub.carrier)
    # the full carrier has 4 elements against 2 sim-classes: not bijective
    assert not is_semidirect_product(R2xZ2, SIM, range(4))
    assert is_semidirect_product(
        R2xZ2, identity_congruence(R2xZ2), range(4))
    with pytest.raises(NotASubsemigroup):
        is_semidirect_product(R2xZ2, SIM, [0, 3])


def test_semidirect_product_idempotents_vs_quotient_size():
    # right zero x Z2 of order 6: |E| = 3 but |S/~| = 2
    S = direct_product(right_zero_table(3), cyclic_table(2))
    rg = RightGroup(S)
    sim = sim_congruence(rg)
    assert not is_semidirect_product(S, sim, rg.idempotents)
    assert is_semidirect_product(S, sim, subgroup_Se(rg, rg.e0).carrier)


def test_all_congruences_cap():
    with pytest.raises(OrderTooLarge):
        all_congruences(direct_product(R2xZ2, cyclic_table(2)), max_order=6)


def test_congruence_serialization():
    line = format_congruence_text(EQUIV)
    assert parse_congruence_text(R2xZ2, line) == EQUIV
    with pytest.raises(ValueError):
        parse_congruence_text(R2xZ2, "0 0 1\n")
