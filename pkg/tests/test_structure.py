"""Right-group recognition, projections, decomposition, and the
product/coproduct universal-property checks."""

import pytest

from rightgroups.core import (
    EmptySemigroup,
    Morphism,
    NotAnIdempotent,
    NotARightGroup,
    compose,
    cyclic_table,
    direct_product,
    identity_morphism,
    is_right_zero,
    left_zero_table,
    right_zero_table,
    validate,
)
from rightgroups.enumeration import (
    enumerate_right_groups,
    enumerate_semigroups,
)
from rightgroups.kernels import condition_flags
from rightgroups.structure import (
    PointedRightGroup,
    RightGroup,
    check_coproduct_pointed,
    check_product,
    check_product_quotients,
    check_right_group,
    coproduct_counterexample,
    decompose,
    equiv_congruence,
    idempotent_part,
    pi_E,
    pi_G,
    pointed_iso,
    quotient_group,
    right_inverse,
    sim_congruence,
    subgroup_Se,
    translate_rf,
)

R2xZ2 = direct_product(right_zero_table(2), cyclic_table(2))
RG = RightGroup(R2xZ2)


def test_check_right_group_examples():
    assert check_right_group(right_zero_table(3)).all_hold()
    assert check_right_group(cyclic_table(4)).all_hold()
    rep = check_right_group(left_zero_table(2))
    assert not any([rep.cond_a, rep.cond_b, rep.cond_c, rep.cond_e,
                    rep.cond_f])


def test_check_right_group_empty():
    with pytest.raises(EmptySemigroup):
        check_right_group(validate([]))


def test_conditions_match_kernel_flags_exhaustively():
    for n in range(1, 4):
        for S in enumerate_semigroups(n):
            rep = check_right_group(S)
            flags = condition_flags(S.n, S.flat)
            bools = (rep.cond_a, rep.cond_b, rep.cond_c, rep.cond_e,
                     rep.cond_f)
            assert flags == sum(bit for bit, ok in
                                zip((1, 2, 4, 8, 16), bools) if ok)
            assert rep.agree()


def test_right_group_construction_rejects():
    with pytest.raises(NotARightGroup):
        RightGroup(left_zero_table(2))


def test_base_idempotent_is_least():
    assert RG.e0 == 0
    assert RG.idempotents == (0, 2)


def test_right_inverse():
    rz = RightGroup(right_zero_table(3))
    for a in range(3):
        for e in range(3):
            assert right_inverse(rz, a, e) == e
    z4 = RightGroup(cyclic_table(4))
    for a in range(4):
        assert (a + right_inverse(z4, a, 0)) % 4 == 0
    assert right_inverse(RG, 1, 2) == 3
    with pytest.raises(NotAnIdempotent):
        right_inverse(RG, 1, 3)


def test_pi_E():
    for e in RG.idempotents:
        assert pi_E(RG, e) == e
    rz = RightGroup(right_zero_table(3))
    assert [pi_E(rz, s) for s in range(3)] == [0, 1, 2]
    assert pi_E(RG, 1) == 0


def test_pi_G():
    sub = subgroup_Se(RG, RG.e0)
    for x in sub.carrier:
        assert pi_G(RG, x) == x
    rz = RightGroup(right_zero_table(3))
    assert all(pi_G(rz, s) == 0 for s in range(3))
    assert pi_G(RG, 3) == 1


def test_sim_equiv_for_groups_and_right_zeros():
    z4 = RightGroup(cyclic_table(4))
    assert sim_congruence(z4).is_identity()
    assert equiv_congruence(z4).is_universal()
    rz = RightGroup(right_zero_table(3))
    assert sim_congruence(rz).is_universal()
    assert equiv_congruence(rz).is_identity()


def test_sim_equiv_blocks_cross_cut():
    assert sim_congruence(RG).blocks() == ((0, 2), (1, 3))
    assert equiv_congruence(RG).blocks() == ((0, 1), (2, 3))


def test_sim_class_is_xE():
    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            sim = sim_congruence(rg)
            for x in rg.elements:
                xE = {rg.mul(x, e) for e in rg.idempotents}
                block = {y for y in rg.elements if sim.same(x, y)}
                assert block == xE


def test_sim_independent_of_base_idempotent():
    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            kernels = {
                tuple(rg.mul(s, e) for s in rg.elements)
                for e in rg.idempotents
            }
            # partitions induced by r_e coincide for every e
            from rightgroups.congruences import Partition

            parts = {Partition(v) for v in kernels}
            assert len(parts) == 1


def test_decompose_group_and_right_zero():
    z4 = RightGroup(cyclic_table(4))
    d = decompose(z4)
    assert d.group_part.group.n == 4 and len(d.rzs_part) == 1
    rz = RightGroup(right_zero_table(3))
    d = decompose(rz)
    assert d.group_part.group.n == 1 and len(d.rzs_part) == 3


def test_decompose_r2xz2():
    d = decompose(RG)
    assert d.group_part.group.n == 2
    assert d.rzs_part == (0, 2)
    assert d.phi.is_bijective()
    for s in RG.elements:
        assert d.phi_inv(d.phi(s)) == s


def test_decompose_properties_to_order_eight():
    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            d = decompose(rg)
            assert d.phi.is_bijective()
            assert is_right_zero(idempotent_part(rg).semigroup)
            # ~ and == blocks multiply out to the whole table
            assert d.sim.k * d.equiv.k == rg.n


def test_equiv_blocks_are_groups_pairwise_isomorphic():
    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            for e in rg.idempotents:
                sub = subgroup_Se(rg, e)
                assert sub.group.identity == sub.local(e)
                block = tuple(sorted(
                    x for x in rg.elements
                    if equiv_congruence(rg).same(x, e)))
                assert block == sub.carrier
            for e in rg.idempotents:
                for f in rg.idempotents:
                    m = translate_rf(rg, e, f)
                    assert m.is_bijective()


def test_subgroup_se_examples():
    z4 = RightGroup(cyclic_table(4))
    assert subgroup_Se(z4, 0).carrier == (0, 1, 2, 3)
    rz = RightGroup(right_zero_table(3))
    for e in range(3):
        assert subgroup_Se(rz, e).carrier == (e,)
    sub = subgroup_Se(RG, 2)
    assert sub.carrier == (2, 3)
    assert sub.group.table == cyclic_table(2).table


def test_translate_rf():
    ident = translate_rf(RG, 0, 0)
    assert ident.map == (0, 1)
    m = translate_rf(RG, 0, 2)
    # ambient action: 0 -> 2, 1 -> 3
    sub0, sub2 = subgroup_Se(RG, 0), subgroup_Se(RG, 2)
    assert [sub2.carrier[m(sub0.local(x))] for x in (0, 1)] == [2, 3]
    back = translate_rf(RG, 2, 0)
    assert compose(back, m) == identity_morphism(sub0.group.semigroup)


def test_check_product_trivial_probe():
    res = check_product(RG, [validate([[0]])])
    assert res
    # morphisms from the trivial semigroup pick idempotent targets
    assert res.checked == 1 * 2  # |E(Se0)| x |E(E)| = 1 x 2


def test_check_product_small_probes():
    probes = [S for k in (1, 2, 3) for S in enumerate_semigroups(k)]
    assert check_product(RG, probes)
    assert check_product_quotients(RG, probes)


def test_check_product_wrong_projection_fails():
    from rightgroups.structure import _product_property

    sub = subgroup_Se(RG, RG.e0)
    ep = idempotent_part(RG)
    const = Morphism(R2xZ2, sub.group.semigroup,
                     [sub.group.identity] * 4)
    p_E = Morphism(R2xZ2, ep.semigroup,
                   [ep.local(pi_E(RG, s)) for s in RG.elements])
    res = _product_property(RG, const, p_E, sub.carrier, ep.carrier,
                            [cyclic_table(2)])
    assert not res
    assert res.counterexample is not None


def test_check_product_quotients_degenerate():
    z2 = RightGroup(cyclic_table(2))
    rz = RightGroup(right_zero_table(2))
    probes = [S for k in (1, 2) for S in enumerate_semigroups(k)]
    assert check_product_quotients(z2, probes)
    assert check_product_quotients(rz, probes)


def test_check_coproduct_pointed_self_probe():
    prg = PointedRightGroup(RG, 0)
    assert check_coproduct_pointed(prg, [prg])


def test_check_coproduct_pointed_small():
    prg = PointedRightGroup(RG, 0)
    probes = [PointedRightGroup(rg, rg.e0)
              for k in range(1, 5) for rg in enumerate_right_groups(k)]
    assert check_coproduct_pointed(prg, probes)


def test_unpointed_coproduct_fails():
    assert coproduct_counterexample(RG).applicable
    rz = RightGroup(right_zero_table(2))
    rec = coproduct_counterexample(rz)
    assert rec.applicable and rec.f_e_value != rec.f_E_value
    z4 = RightGroup(cyclic_table(4))
    assert coproduct_counterexample(z4).applicable
    # a witness without two idempotents cannot separate the inclusions
    assert not coproduct_counterexample(RG, T=cyclic_table(2)).applicable


def test_pointed_iso():
    m = pointed_iso(RG, 0, 2)
    assert m.is_bijective() and m(0) == 2
    same = pointed_iso(RG, 0, 0)
    assert same(0) == 0 and same.is_bijective()
    rz = RightGroup(right_zero_table(3))
    for e in range(3):
        for f in range(3):
            m = pointed_iso(rz, e, f)
            assert m(e) == f and m.is_bijective()


def test_pointed_right_group_point_validation():
    with pytest.raises(NotAnIdempotent):
        PointedRightGroup(RG, 1)


def test_quotient_group_is_group():
    for n in range(1, 7):
        for rg in enumerate_right_groups(n):
            G, proj = quotient_group(rg)
            assert G.n * len(rg.idempotents) == rg.n
            assert set(proj.map) == set(range(G.n))
