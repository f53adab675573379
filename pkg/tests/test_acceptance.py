"""Acceptance criteria.

Each test prints one [PASS]/[FAIL] line (run with ``pytest -s`` to see
them all).  Every tolerance is exact equality; the stated runtime targets
are reported, not asserted.
"""

import time

from rightgroups import kernels
from rightgroups.core import (
    FiniteSemigroup,
    NotARightGroup,
    compose,
    enumerate_hom_bruteforce,
    identity_morphism,
    right_zero_table,
)
from rightgroups.enumeration import (
    GROUP_COUNTS,
    census,
    enumerate_groups,
    enumerate_right_groups,
    are_isomorphic_right_groups,
    enumerate_semigroups,
)
from rightgroups.structure import (
    PointedRightGroup,
    RightGroup,
    check_coproduct_pointed,
    check_product,
    check_product_quotients,
    check_right_group,
    coproduct_counterexample,
    decompose,
    quotient_group,
)

RANDOM_TABLES_PER_ORDER = 50_000
RANDOM_SEED = 0


def _report(name, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_acceptance_1_recognition_equivalence():
    """Five independent conditions agree on every instance; decompose
    succeeds exactly when they hold."""
    t0 = time.time()
    checked = 0
    right_groups = 0

    def inspect(n, flat, thorough):
        nonlocal checked, right_groups
        checked += 1
        flags = kernels.condition_flags(n, flat)
        assert flags in (0, kernels.COND_ALL), \
            f"conditions disagree on {flat!r}: {flags:05b}"
        S = FiniteSemigroup.from_flat(n, flat) if thorough or flags else None
        if thorough:
            rep = check_right_group(S)
            assert rep.agree(), f"literal procedures disagree on {flat!r}"
            bools = (rep.cond_a, rep.cond_b, rep.cond_c, rep.cond_e,
                     rep.cond_f)
            assert (flags == kernels.COND_ALL) == all(bools)
        if flags == kernels.COND_ALL:
            right_groups += 1
            rg = RightGroup(S)
            d = decompose(rg)
            assert d.phi.is_bijective()
        elif thorough:
            try:
                RightGroup(S)
                raise AssertionError("decompose accepted a non-right-group")
            except NotARightGroup:
                pass

    for n in range(1, 5):
        for flat in kernels.enumerate_associative_tables(n):
            inspect(n, flat, thorough=True)
    for n in (5, 6):
        tables = kernels.sample_associative_tables(
            n, RANDOM_TABLES_PER_ORDER, RANDOM_SEED)
        for i, flat in enumerate(tables):
            inspect(n, flat, thorough=(i % 97 == 0))
    _report("criterion 1 (recognition equivalence)", True,
            f"{checked} tables ({right_groups} right groups), "
            f"{time.time() - t0:.1f}s (target < 60s)")


def test_acceptance_2_decomposition_soundness():
    """phi bijective morphism, (~, ==) complementary permutable, and ~
    independent of the base idempotent, for every right group <= 12."""
    from rightgroups.congruences import Partition, is_direct_product_pair

    t0 = time.time()
    count = 0
    for n in range(1, 13):
        for rg in enumerate_right_groups(n):
            count += 1
            d = decompose(rg)
            assert d.phi.is_bijective()
            for s in rg.elements:
                assert d.phi_inv(d.phi(s)) == s
            assert is_direct_product_pair(rg.semigroup, d.sim, d.equiv)
            parts = {Partition([rg.mul(s, e) for s in rg.elements])
                     for e in rg.idempotents}
            assert len(parts) == 1 and parts.pop() == d.sim.partition
    _report("criterion 2 (decomposition soundness)", True,
            f"{count} right groups of order <= 12, "
            f"{time.time() - t0:.1f}s (target < 30s)")


def test_acceptance_3_hom_oracle_equivalence():
    """Structured Hom enumeration equals brute force as sets, and the
    count identity holds, over all ordered pairs of right groups <= 6."""
    from rightgroups.morphisms import (
        enumerate_group_homs,
        enumerate_hom_structured,
    )

    t0 = time.time()
    rgs = [rg for n in range(1, 7) for rg in enumerate_right_groups(n)]
    pairs = 0
    total = 0
    for S in rgs:
        for T in rgs:
            pairs += 1
            structured = enumerate_hom_structured(S, T)
            brute = enumerate_hom_bruteforce(S.semigroup, T.semigroup)
            assert set(structured) == set(brute)
            assert len(structured) == len(set(structured))
            gs, _ = quotient_group(S)
            gt, _ = quotient_group(T)
            expect = len(T.idempotents) ** len(S.idempotents) \
                * len(enumerate_group_homs(gs, gt))
            assert len(brute) == expect
            total += len(brute)
    _report("criterion 3 (Hom oracle equivalence)", True,
            f"{pairs} ordered pairs, {total} morphisms, "
            f"{time.time() - t0:.1f}s (target < 300s)")


def test_acceptance_4_projection_right_inverses():
    """|right inverses of the projection| = |E|, verified by brute force,
    for every right group <= 6."""
    from rightgroups.morphisms import right_inverses_of_projection

    t0 = time.time()
    count = 0
    for n in range(1, 7):
        for rg in enumerate_right_groups(n):
            count += 1
            grp, proj = quotient_group(rg)
            structured = right_inverses_of_projection(rg)
            ident = identity_morphism(grp.semigroup)
            brute = [g for g in enumerate_hom_bruteforce(
                grp.semigroup, rg.semigroup) if compose(proj, g) == ident]
            assert len(structured) == len(rg.idempotents)
            assert {m.map for m in structured} == {m.map for m in brute}
    _report("criterion 4 (projection right inverses)", True,
            f"{count} right groups, {time.time() - t0:.1f}s")


def test_acceptance_5_prekernel_characterization():
    """Over all morphisms between right groups <= 5: prekernel exists iff
    the idempotents collapse, and the universal property verifies against
    the probe pool of right groups <= 4."""
    from rightgroups.pretorsion import (
        NoPrekernel,
        default_pretorsion_pool,
        prekernel,
        verify_prekernel,
    )

    t0 = time.time()
    rgs = [rg for n in range(1, 6) for rg in enumerate_right_groups(n)]
    probes = default_pretorsion_pool(4)
    morphisms = 0
    with_kernel = 0
    for S in rgs:
        for T in rgs:
            for f in enumerate_hom_bruteforce(S.semigroup, T.semigroup):
                morphisms += 1
                collapsed = len({f(e) for e in S.idempotents}) == 1
                try:
                    K, incl = prekernel(f)
                    assert collapsed, "prekernel without collapsed E"
                    with_kernel += 1
                    assert verify_prekernel(f, incl, probes)
                except NoPrekernel:
                    assert not collapsed, "collapsed E without prekernel"
    _report("criterion 5 (prekernel characterization)", True,
            f"{morphisms} morphisms ({with_kernel} with prekernels), "
            f"{time.time() - t0:.1f}s")


def test_acceptance_6_pretorsion_axioms():
    """Both pretorsion axioms over the pool of right groups <= 5."""
    from rightgroups.pretorsion import (
        default_pretorsion_pool,
        is_trivial_morphism,
        verify_pretorsion_axioms,
    )

    t0 = time.time()
    pool = [rg for n in range(1, 6) for rg in enumerate_right_groups(n)]
    report = verify_pretorsion_axioms(pool, default_pretorsion_pool(4))
    assert report.ok
    for t, f, count, trivial, ok in report.hom_checks:
        assert count == 1 and trivial and ok
    assert all(ok for *_, ok in report.sequence_checks)
    # the spotlighted instance
    homs = enumerate_hom_bruteforce(right_zero_table(3),
                                    enumerate_groups(4)[0].semigroup)
    assert len(homs) == 1 and is_trivial_morphism(homs[0])
    _report("criterion 6 (pretorsion axioms)", True,
            f"pool of {report.pool_size}, "
            f"{len(report.hom_checks)} hom checks, "
            f"{len(report.sequence_checks)} sequences, "
            f"{time.time() - t0:.1f}s (target < 300s)")


def test_acceptance_7_census():
    """Right-group counts 1..8 = 1,2,2,4,2,5,2,9 from the brute-forced
    group census 1,1,1,2,1,2,1,5, raw column agreeing to order 4."""
    t0 = time.time()
    assert [len(enumerate_groups(m)) for m in range(1, 9)] == \
        [1, 1, 1, 2, 1, 2, 1, 5]
    rows = census(8)
    counts = [r.count_structured for r in rows]
    assert counts == [1, 2, 2, 4, 2, 5, 2, 9]
    for r in rows:
        if r.order <= 4:
            assert r.count_raw == r.count_structured
        expect = sum(GROUP_COUNTS[m] for m in range(1, r.order + 1)
                     if r.order % m == 0)
        assert r.count_structured == expect
    _report("criterion 7 (census)", True,
            f"counts {counts}, raw column agrees to order 4, "
            f"{time.time() - t0:.1f}s (target < 120s)")


def test_acceptance_8_actions():
    """functor_F output always validates; eta verifies; the canonical
    action reconstructs every right group <= 8; the swap instance
    witnesses non-fullness."""
    from rightgroups.actions import (
        enumerate_actions,
        essential_surjectivity_iso,
        essential_surjectivity_witness,
        eta_iso,
        functor_F,
        non_fullness_witness,
    )

    t0 = time.time()
    actions = 0
    for m in range(1, 5):
        for G in enumerate_groups(m):
            for k in (1, 2, 3):
                for act in enumerate_actions(G, k):
                    actions += 1
                    built = functor_F(act)  # RightGroup validates
                    assert built.n == m * k
                    assert eta_iso(act).is_bijective()
    rebuilt = 0
    for n in range(1, 9):
        for rg in enumerate_right_groups(n):
            rebuilt += 1
            act = essential_surjectivity_witness(rg)
            assert essential_surjectivity_iso(rg, act).is_bijective()
            assert are_isomorphic_right_groups(functor_F(act), rg)
    rec = non_fullness_witness()
    assert rec.applicable and rec.images_isomorphic
    assert rec.candidates_checked == 4 and not rec.action_iso_found
    _report("criterion 8 (actions)", True,
            f"{actions} actions validated, {rebuilt} right groups "
            f"reconstructed, non-fullness witnessed, "
            f"{time.time() - t0:.1f}s (target < 60s)")


def test_acceptance_9_universal_properties():
    """Product/coproduct universal properties for right groups <= 4
    against probes <= 3; the unpointed coproduct counterexample on every
    right group with witness R2."""
    t0 = time.time()
    probes = [S for k in (1, 2, 3) for S in enumerate_semigroups(k)]
    pointed_probes = [PointedRightGroup(rg, rg.e0)
                      for k in range(1, 4)
                      for rg in enumerate_right_groups(k)]
    count = 0
    for n in range(1, 5):
        for rg in enumerate_right_groups(n):
            count += 1
            assert check_product(rg, probes)
            assert check_product_quotients(rg, probes)
            assert check_coproduct_pointed(
                PointedRightGroup(rg, rg.e0), pointed_probes)
            rec = coproduct_counterexample(rg, T=right_zero_table(2))
            assert rec.applicable and rec.f_e_value != rec.f_E_value
    _report("criterion 9 (universal properties)", True,
            f"{count} right groups x {len(probes)} probes "
            f"(+{len(pointed_probes)} pointed), "
            f"{time.time() - t0:.1f}s (target < 120s)")
