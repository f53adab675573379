"""Semigroup core: validation, elementary predicates, products, morphisms,
and the table text format."""

import pytest

from rightgroups.core import (
    BudgetExceeded,
    FiniteGroup,
    Morphism,
    NoSolution,
    NotAMorphism,
    NotAssociative,
    NotASubsemigroup,
    NotUnique,
    centralizer,
    compose,
    cyclic_table,
    direct_product,
    enumerate_hom_bruteforce,
    format_table_text,
    identity_morphism,
    idempotents,
    is_left_cancellative,
    is_right_simple,
    is_right_zero,
    left_identities,
    left_zero_table,
    parse_table_text,
    restrict_to_subsemigroup,
    right_zero_table,
    solve_right,
    trivial_semigroup,
    validate,
)
from rightgroups.enumeration import enumerate_semigroups, sample_semigroups

R2 = right_zero_table(2)
Z2 = cyclic_table(2)
LZ2 = left_zero_table(2)
R2xZ2 = direct_product(R2, Z2)


def test_validate_right_zero_and_group():
    assert validate([[0, 1], [0, 1]]).n == 2
    assert validate([[0, 1], [1, 0]]).n == 2


def test_validate_rejects_with_first_failing_triple():
    with pytest.raises(NotAssociative) as exc:
        validate([[0, 0], [1, 0]])
    # oracle: scan triples in lexicographic order by hand
    t = [[0, 0], [1, 0]]
    first = next((i, j, k)
                 for i in range(2) for j in range(2) for k in range(2)
                 if t[t[i][j]][k] != t[i][t[j][k]])
    assert exc.value.triple == first == (1, 0, 1)


def test_validate_rejects_out_of_range():
    with pytest.raises(ValueError):
        validate([[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        validate([[0], [1]])


def test_empty_semigroup_is_valid():
    assert validate([]).n == 0


def test_idempotents():
    assert idempotents(R2) == {0, 1}
    assert idempotents(Z2) == {0}
    assert idempotents(left_zero_table(3)) == {0, 1, 2}


def test_left_identities():
    assert left_identities(R2) == {0, 1}
    assert left_identities(Z2) == {0}
    assert left_identities(LZ2) == set()


def test_right_simple():
    assert is_right_simple(R2)
    assert not is_right_simple(LZ2)
    assert is_right_simple(cyclic_table(4))
    assert not is_right_simple(validate([]))


def test_left_cancellative():
    assert is_left_cancellative(R2)
    assert not is_left_cancellative(LZ2)
    assert is_left_cancellative(cyclic_table(4))


def test_solve_right():
    for a in range(2):
        for b in range(2):
            assert solve_right(R2, a, b) == b
    assert solve_right(Z2, 1, 0) == 1
    with pytest.raises(NoSolution):
        solve_right(LZ2, 0, 1)
    with pytest.raises(NotUnique):
        solve_right(LZ2, 0, 0)


def test_direct_product_r2_z2():
    assert R2xZ2.n == 4
    assert idempotents(R2xZ2) == {0, 2}
    # codec: (s, t) -> s*|T| + t, componentwise products
    for s1 in range(2):
        for t1 in range(2):
            for s2 in range(2):
                for t2 in range(2):
                    got = R2xZ2.table[s1 * 2 + t1][s2 * 2 + t2]
                    assert got == R2.table[s1][s2] * 2 + Z2.table[t1][t2]


def test_direct_product_with_trivial_is_same_table():
    S = cyclic_table(3)
    P = direct_product(S, trivial_semigroup())
    assert P.table == S.table


def test_direct_product_klein():
    K = direct_product(Z2, Z2)
    G = FiniteGroup(K)
    assert all(K.table[x][x] == G.identity for x in range(4))


def test_centralizer():
    assert centralizer(R2, 0) == {0}
    Z4 = cyclic_table(4)
    for e in range(4):
        assert centralizer(Z4, e) == {0, 1, 2, 3}
    # in R2 x Z2 the centralizer of an idempotent is its block Se
    for e in (0, 2):
        Se = {R2xZ2.table[s][e] for s in range(4)}
        assert centralizer(R2xZ2, e) == Se


def test_centralizers_partition_right_groups():
    from rightgroups.enumeration import enumerate_right_groups

    for n in range(1, 7):
        for rg in enumerate_right_groups(n):
            S = rg.semigroup
            cents = [centralizer(S, e) for e in sorted(left_identities(S))]
            seen = set()
            for c in cents:
                assert not (seen & c)
                seen |= c
            assert seen == set(S.elements)


def test_left_identities_subset_idempotents_exhaustive():
    for n in range(1, 5):
        for S in enumerate_semigroups(n):
            assert left_identities(S) <= idempotents(S)
    for S in sample_semigroups(5, 50, seed=3):
        assert left_identities(S) <= idempotents(S)


def test_idempotents_of_right_simple_are_left_identities():
    # over every right-simple semigroup of order <= 4
    hits = 0
    for n in range(1, 5):
        for S in enumerate_semigroups(n):
            if is_right_simple(S):
                hits += 1
                assert idempotents(S) <= left_identities(S)
    assert hits > 0


def test_unique_division_iff_right_simple_and_cancellative():
    for n in range(1, 5):
        for S in enumerate_semigroups(n):
            unique = True
            for a in S.elements:
                for b in S.elements:
                    if len([x for x in S.elements
                            if S.table[a][x] == b]) != 1:
                        unique = False
            assert unique == (is_right_simple(S) and is_left_cancellative(S))


def test_restrict_to_subsemigroup():
    sub, carrier = restrict_to_subsemigroup(R2xZ2, [0, 1])
    assert carrier == (0, 1)
    assert sub.table == Z2.table
    with pytest.raises(NotASubsemigroup):
        restrict_to_subsemigroup(R2xZ2, [0, 3])


def test_is_right_zero():
    assert is_right_zero(right_zero_table(3))
    assert not is_right_zero(Z2)
    assert not is_right_zero(validate([]))


def test_finite_group_validation():
    G = FiniteGroup(cyclic_table(4))
    assert G.identity == 0
    assert G.inverse == (0, 3, 2, 1)
    with pytest.raises(ValueError):
        FiniteGroup(R2)


def test_morphism_validation():
    m = Morphism(R2xZ2, Z2, [0, 1, 0, 1])
    assert m.image == {0, 1}
    # the subgroup embedding Z2 -> Se0 is a morphism
    Morphism(Z2, R2xZ2, [0, 1])
    with pytest.raises(NotAMorphism):
        Morphism(cyclic_table(3), cyclic_table(3), [0, 2, 2])
    with pytest.raises(NotAMorphism):
        Morphism(R2, Z2, [0, 1])


def test_morphism_compose_identity_inverse():
    ident = identity_morphism(R2xZ2)
    m = Morphism(R2xZ2, Z2, [0, 1, 0, 1])
    assert compose(m, ident) == m
    swap = Morphism(R2xZ2, R2xZ2, [2, 3, 0, 1])
    assert swap.is_bijective()
    assert compose(swap, swap) == ident
    assert swap.inverse() == swap


def test_hom_bruteforce_counts():
    assert len(enumerate_hom_bruteforce(R2, cyclic_table(3))) == 1
    assert len(enumerate_hom_bruteforce(Z2, R2)) == 2
    assert len(enumerate_hom_bruteforce(R2xZ2, R2xZ2)) == 8


def test_hom_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_hom_bruteforce(R2xZ2, R2xZ2, budget=10)


def test_hom_bruteforce_empty_domain():
    empty = validate([])
    homs = enumerate_hom_bruteforce(empty, Z2)
    assert len(homs) == 1 and homs[0].map == ()
    assert enumerate_hom_bruteforce(Z2, empty) == ()


def test_table_text_round_trip():
    text = format_table_text(R2xZ2, header="product table")
    S = parse_table_text(text)
    assert S == R2xZ2


def test_table_text_comments_and_blanks():
    S = parse_table_text("# comment\n\n2\n# more\n0 1\n0 1\n")
    assert S == R2
    with pytest.raises(ValueError):
        parse_table_text("")
    with pytest.raises(ValueError):
        parse_table_text("2\n0 1\n")
    with pytest.raises(ValueError):
        parse_table_text("x\n")


def test_table_text_empty_semigroup():
    assert parse_table_text("0\n").n == 0
