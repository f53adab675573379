"""Right-group recognition and structure.

The five recognition conditions are each evaluated by their own literal
procedure, so their agreement is a genuine cross-check of their
equivalence.  On top of recognition: the canonical projections onto the
idempotent part and the group part, the two canonical congruences, the
product decomposition S = Se0 x E with an explicit verified isomorphism,
and finite-probe checks of the product/coproduct universal properties.
"""

import functools
from dataclasses import dataclass, field

from . import congruences as cg
from .core import (
    EmptySemigroup,
    FiniteGroup,
    FiniteSemigroup,
    Morphism,
    NotAnIdempotent,
    NotARightGroup,
    direct_product,
    enumerate_hom_bruteforce,
    idempotents,
    left_identities,
    restrict_to_subsemigroup,
    right_zero_table,
    solve_right,
)


@dataclass(frozen=True)
class ConditionReport:
    """The five recognition conditions with witness / counterexample ids.

    Witness values: for a true condition, an element that realizes the
    existential part (if any); for a false one, the first counterexample
    found by the literal procedure.
    """

    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_e: bool
    cond_f: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def all_hold(self):
        return self.cond_a and self.cond_b and self.cond_c \
            and self.cond_e and self.cond_f

    def agree(self):
        return len({self.cond_a, self.cond_b, self.cond_c,
                    self.cond_e, self.cond_f}) == 1


def check_right_group(S: FiniteSemigroup) -> ConditionReport:
    """Evaluate the five equivalent right-group conditions independently."""
    if S.n == 0:
        raise EmptySemigroup("right-group conditions presume a nonempty carrier")
    n = S.n
    t = S.table
    w = {}

    # (a) right simple and left cancellative
    a_ok = True
    for a in range(n):
        if set(t[a]) != set(range(n)):
            a_ok = False
            w["a"] = ("aS != S", a)
            break
    if a_ok:
        for a in range(n):
            for b in range(n):
                for c in range(b + 1, n):
                    if t[a][b] == t[a][c]:
                        a_ok = False
                        w["a"] = ("cancellation fails", a, b, c)
                        break
                if not a_ok:
                    break
            if not a_ok:
                break

    # (b) unique solvability of a*x = b
    b_ok = True
    for a in range(n):
        for b in range(n):
            hits = [x for x in range(n) if t[a][x] == b]
            if len(hits) != 1:
                b_ok = False
                w["b"] = ("solutions of a*x=b", a, b, len(hits))
                break
        if not b_ok:
            break

    # (c) right simple with an idempotent
    c_ok = all(set(t[a]) == set(range(n)) for a in range(n))
    if c_ok:
        es = [e for e in range(n) if t[e][e] == e]
        c_ok = bool(es)
        w["c"] = ("idempotent", es[0]) if es else ("no idempotent",)

    # (e) some left identity admitting right inverses for all
    e_ok = False
    for e in range(n):
        if any(t[e][x] != x for x in range(n)):
            continue
        if all(any(t[a][x] == e for x in range(n)) for a in range(n)):
            e_ok = True
            w["e"] = ("witness left identity", e)
            break

    # (f) every left identity admits right inverses for all
    lids = sorted(left_identities(S))
    f_ok = bool(lids)
    if not lids:
        w["f"] = ("no left identity",)
    for e in lids:
        if not f_ok:
            break
        for a in range(n):
            if not any(t[a][x] == e for x in range(n)):
                f_ok = False
                w["f"] = ("no right inverse", a, e)
                break

    return ConditionReport(a_ok, b_ok, c_ok, e_ok, f_ok, w)


class RightGroup:
    """A validated right group: semigroup + idempotent set + base idempotent.

    The base idempotent e0 is the least one (all choices are equivalent;
    fixing the least makes every derived artifact reproducible).
    """

    def __init__(self, semigroup, _report=None):
        report = _report if _report is not None else check_right_group(semigroup)
        if not report.all_hold():
            raise NotARightGroup(f"conditions failed: {report}")
        E = tuple(sorted(idempotents(semigroup)))
        assert E, "right groups contain an idempotent"
        lids = left_identities(semigroup)
        assert set(E) <= lids, "every idempotent must be a left identity"
        self.semigroup = semigroup
        self.idempotents = E
        self.e0 = E[0]

    @property
    def n(self):
        return self.semigroup.n

    @property
    def table(self):
        return self.semigroup.table

    def mul(self, a, b):
        return self.semigroup.table[a][b]

    @property
    def elements(self):
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, RightGroup) and \
            self.semigroup == other.semigroup

    def __hash__(self):
        return hash(("rg", self.semigroup))

    def __repr__(self):
        return f"RightGroup(n={self.n}, |E|={len(self.idempotents)})"


@functools.lru_cache(maxsize=None)
def as_right_group(S: FiniteSemigroup) -> RightGroup:
    return RightGroup(S)


@dataclass(frozen=True)
class PointedRightGroup:
    rg: RightGroup
    point: int

    def __post_init__(self):
        if self.point not in self.rg.idempotents:
            raise NotAnIdempotent(f"point {self.point} is not idempotent")


def right_inverse(rg: RightGroup, a, e=None):
    """The unique x with a*x = e, for an idempotent e (default e0)."""
    e = rg.e0 if e is None else e
    if e not in rg.idempotents:
        raise NotAnIdempotent(f"{e} is not idempotent")
    return solve_right(rg.semigroup, a, e)


def pi_E(rg: RightGroup, s):
    """The unique idempotent f with s*f = s."""
    hits = [f for f in rg.idempotents if rg.mul(s, f) == s]
    assert len(hits) == 1, f"pi_E must be single-valued, got {hits}"
    return hits[0]


def pi_G(rg: RightGroup, s):
    """Projection onto the group part: s*e0 (= the double right inverse)."""
    via_mul = rg.mul(s, rg.e0)
    via_inv = right_inverse(rg, right_inverse(rg, s))
    assert via_mul == via_inv, "s*e0 must equal the double right inverse"
    return via_mul


@functools.lru_cache(maxsize=None)
def sim_congruence(rg: RightGroup) -> cg.Congruence:
    """x ~ y iff x*e0 = y*e0 (the kernel of the group projection)."""
    return cg.Congruence(
        rg.semigroup, cg.Partition([pi_G(rg, s) for s in rg.elements]))


@functools.lru_cache(maxsize=None)
def equiv_congruence(rg: RightGroup) -> cg.Congruence:
    """Kernel of pi_E; the classes are the subgroups Se, e in E."""
    return cg.Congruence(
        rg.semigroup, cg.Partition([pi_E(rg, s) for s in rg.elements]))


@dataclass(frozen=True)
class Subgroup:
    """A left ideal Se carried as a standalone group with its embedding."""

    ambient: FiniteSemigroup
    carrier: tuple
    group: FiniteGroup
    inclusion: Morphism

    def local(self, ambient_id):
        return self.carrier.index(ambient_id)


@functools.lru_cache(maxsize=None)
def subgroup_Se(rg: RightGroup, e=None) -> Subgroup:
    """The subgroup Se = {s*e : s in S} with identity e."""
    e = rg.e0 if e is None else e
    if e not in rg.idempotents:
        raise NotAnIdempotent(f"{e} is not idempotent")
    elems = sorted({rg.mul(s, e) for s in rg.elements})
    sub, carrier = restrict_to_subsemigroup(rg.semigroup, elems)
    grp = FiniteGroup(sub)
    assert carrier[grp.identity] == e, "identity of Se must be e"
    incl = Morphism(sub, rg.semigroup, carrier)
    return Subgroup(rg.semigroup, carrier, grp, incl)


@dataclass(frozen=True)
class IdempotentPart:
    """E(S) as a standalone right zero semigroup with its embedding."""

    ambient: FiniteSemigroup
    carrier: tuple
    semigroup: FiniteSemigroup
    inclusion: Morphism

    def local(self, ambient_id):
        return self.carrier.index(ambient_id)


@functools.lru_cache(maxsize=None)
def idempotent_part(rg: RightGroup) -> IdempotentPart:
    sub, carrier = restrict_to_subsemigroup(rg.semigroup, rg.idempotents)
    from .core import is_right_zero

    assert is_right_zero(sub), "E must induce a right zero semigroup"
    incl = Morphism(sub, rg.semigroup, carrier)
    return IdempotentPart(rg.semigroup, carrier, sub, incl)


def translate_rf(rg: RightGroup, e, f) -> Morphism:
    """Right translation x -> x*f as a group isomorphism Se -> Sf."""
    se = subgroup_Se(rg, e)
    sf = subgroup_Se(rg, f)
    mapping = [sf.local(rg.mul(x, f)) for x in se.carrier]
    m = Morphism(se.group.semigroup, sf.group.semigroup, mapping)
    assert m.is_bijective(), "right translation between Se and Sf is bijective"
    return m


@dataclass(frozen=True)
class Decomposition:
    """S = Se0 x E with the explicit isomorphism and its inverse.

    ``product`` is direct_product(group_part, rzs(|E|)) under the row-major
    codec, phi(s) = (s*e0, pi_E(s)) as a flat id, phi_inv(x, y) = x*y.
    """

    rg: RightGroup
    sim: cg.Congruence
    equiv: cg.Congruence
    group_part: Subgroup
    rzs_part: tuple
    product: FiniteSemigroup
    phi: Morphism
    phi_inv: Morphism


@functools.lru_cache(maxsize=None)
def decompose(rg: RightGroup) -> Decomposition:
    sim = sim_congruence(rg)
    equiv = equiv_congruence(rg)
    sub = subgroup_Se(rg, rg.e0)
    E = tuple(rg.idempotents)
    ne = len(E)
    prod = direct_product(sub.group.semigroup, right_zero_table(ne))
    phi_map = []
    for s in rg.elements:
        g = sub.local(rg.mul(s, rg.e0))
        e = E.index(pi_E(rg, s))
        phi_map.append(g * ne + e)
    phi = Morphism(rg.semigroup, prod, phi_map)
    assert phi.is_bijective(), "phi must be a bijective morphism"
    inv_map = []
    for i in range(prod.n):
        g, e = divmod(i, ne)
        inv_map.append(rg.mul(sub.carrier[g], E[e]))
    phi_inv = Morphism(prod, rg.semigroup, inv_map)
    for s in rg.elements:
        assert phi_inv(phi(s)) == s, "phi_inv must invert phi"
    assert cg.meet(sim, equiv).is_identity()
    assert cg.is_direct_product_pair(rg.semigroup, sim, equiv)
    return Decomposition(rg, sim, equiv, sub, E, prod, phi, phi_inv)


@functools.lru_cache(maxsize=None)
def quotient_group(rg: RightGroup):
    """(S/~ as a FiniteGroup, projection morphism)."""
    Q, proj = cg.quotient(sim_congruence(rg))
    return FiniteGroup(Q), proj


@functools.lru_cache(maxsize=None)
def quotient_to_subgroup(rg: RightGroup, e=None) -> Morphism:
    """The canonical isomorphism S/~ -> Se (block of x maps to x*e)."""
    e = rg.e0 if e is None else e
    sub = subgroup_Se(rg, e)
    grp, proj = quotient_group(rg)
    sim = sim_congruence(rg)
    mapping = [None] * grp.n
    for s in rg.elements:
        mapping[sim.block_of(s)] = sub.local(rg.mul(s, e))
    m = Morphism(grp.semigroup, sub.group.semigroup, mapping)
    assert m.is_bijective()
    return m


@dataclass
class CheckResult:
    """Boolean verdict plus the first counterexample found, if any."""

    ok: bool
    checked: int = 0
    counterexample: dict = None

    def __bool__(self):
        return self.ok


def _fail(checked, **info):
    return CheckResult(False, checked, info)


def check_product(rg: RightGroup, probes=None) -> CheckResult:
    """Universal property of (S, r_e, pi_E) as the product of Se0 and E.

    For every probe semigroup T and every pair of morphisms
    (f_e: T -> Se0, f_E: T -> E) exactly one f: T -> S must satisfy
    r_e . f = f_e and pi_E . f = f_E, and it must be t -> f_e(t)*f_E(t).
    """
    if probes is None:
        probes = default_probe_pool()
    sub = subgroup_Se(rg, rg.e0)
    ep = idempotent_part(rg)
    r_e = Morphism(rg.semigroup, sub.group.semigroup,
                   [sub.local(rg.mul(s, rg.e0)) for s in rg.elements])
    p_E = Morphism(rg.semigroup, ep.semigroup,
                   [ep.local(pi_E(rg, s)) for s in rg.elements])
    return _product_property(rg, r_e, p_E, sub.carrier, ep.carrier, probes)


def check_product_quotients(rg: RightGroup, probes=None) -> CheckResult:
    """Same universal property with projections S -> S/~ and S -> E."""
    if probes is None:
        probes = default_probe_pool()
    grp, proj = quotient_group(rg)
    ep = idempotent_part(rg)
    p_E = Morphism(rg.semigroup, ep.semigroup,
                   [ep.local(pi_E(rg, s)) for s in rg.elements])
    iso = quotient_to_subgroup(rg, rg.e0)
    sub = subgroup_Se(rg, rg.e0)
    # mediate through concrete elements: lift a block to its Se0 member
    lift = [sub.carrier[iso(b)] for b in range(grp.n)]
    return _product_property(rg, proj, p_E, tuple(lift), ep.carrier, probes)


def _product_property(rg, left_proj, right_proj, left_lift, right_lift,
                      probes) -> CheckResult:
    checked = 0
    for T in probes:
        homs_T_S = enumerate_hom_bruteforce(T, rg.semigroup)
        homs_left = enumerate_hom_bruteforce(T, left_proj.cod)
        homs_right = enumerate_hom_bruteforce(T, right_proj.cod)
        buckets = {}
        for f in homs_T_S:
            key = (tuple(left_proj(f(t)) for t in T.elements),
                   tuple(right_proj(f(t)) for t in T.elements))
            buckets.setdefault(key, []).append(f)
        for fe in homs_left:
            for fE in homs_right:
                checked += 1
                got = buckets.get((fe.map, fE.map), [])
                if len(got) != 1:
                    return _fail(checked, probe=T, fe=fe.map, fE=fE.map,
                                 mediating=len(got))
                witness = tuple(
                    rg.mul(left_lift[fe(t)], right_lift[fE(t)])
                    for t in T.elements)
                if got[0].map != witness:
                    return _fail(checked, probe=T, fe=fe.map, fE=fE.map,
                                 reason="mediating morphism is not "
                                        "t -> f_e(t)*f_E(t)")
    return CheckResult(True, checked)


def check_coproduct_pointed(prg: PointedRightGroup, probes=None) -> CheckResult:
    """Universal property of ((S,e), incl_Se, incl_E) as the coproduct of
    (Se, e) and (E, e) in pointed right groups.

    Probes are PointedRightGroups; morphism pairs must send e to the
    probe's point, and the unique mediating morphism must be
    s -> f_e(s*e) * f_E(pi_E(s)).
    """
    if probes is None:
        probes = default_pointed_probe_pool()
    rg = prg.rg
    e = prg.point
    sub = subgroup_Se(rg, e)
    ep = idempotent_part(rg)
    e_in_sub = sub.local(e)
    e_in_ep = ep.local(e)
    checked = 0
    for probe in probes:
        T = probe.rg.semigroup
        eT = probe.point
        pointed_sub = [f for f in enumerate_hom_bruteforce(
            sub.group.semigroup, T) if f(e_in_sub) == eT]
        pointed_ep = [f for f in enumerate_hom_bruteforce(ep.semigroup, T)
                      if f(e_in_ep) == eT]
        pointed_S = [f for f in enumerate_hom_bruteforce(rg.semigroup, T)
                     if f(e) == eT]
        buckets = {}
        for psi in pointed_S:
            key = (tuple(psi(x) for x in sub.carrier),
                   tuple(psi(x) for x in ep.carrier))
            buckets.setdefault(key, []).append(psi)
        for fe in pointed_sub:
            for fE in pointed_ep:
                checked += 1
                got = buckets.get((fe.map, fE.map), [])
                if len(got) != 1:
                    return _fail(checked, probe=T, fe=fe.map, fE=fE.map,
                                 mediating=len(got))
                witness = tuple(
                    T.table[fe(sub.local(rg.mul(s, e)))]
                           [fE(ep.local(pi_E(rg, s)))]
                    for s in rg.elements)
                if got[0].map != witness:
                    return _fail(checked, probe=T, fe=fe.map, fE=fE.map,
                                 reason="mediating morphism is not "
                                        "s -> f_e(se)*f_E(pi_E(s))")
    return CheckResult(True, checked)


@dataclass(frozen=True)
class CoproductCounterexample:
    """Witness that (S, incl_Se, incl_E) is not a semigroup coproduct."""

    applicable: bool
    witness: FiniteSemigroup = None
    f_e_value: int = None
    f_E_value: int = None
    clash_element: int = None
    candidates_checked: int = 0


def coproduct_counterexample(rg: RightGroup, T=None) -> CoproductCounterexample:
    """Constant maps Se -> {t_x} and E -> {t_y} (t_x != t_y idempotent in T)
    admit no common extension along the inclusions: any candidate would
    need two values at e0.  Verified by exhausting Hom(S, T)."""
    if T is None:
        T = right_zero_table(2)
    ts = sorted(idempotents(T))
    if len(ts) < 2:
        return CoproductCounterexample(applicable=False, witness=T)
    t_x, t_y = ts[0], ts[1]
    sub = subgroup_Se(rg, rg.e0)
    ep = idempotent_part(rg)
    # the constant maps are morphisms (constant at an idempotent)
    Morphism(sub.group.semigroup, T, [t_x] * sub.group.n)
    Morphism(ep.semigroup, T, [t_y] * len(ep.carrier))
    checked = 0
    for omega in enumerate_hom_bruteforce(rg.semigroup, T):
        checked += 1
        restr_sub = tuple(omega(x) for x in sub.carrier)
        restr_ep = tuple(omega(x) for x in ep.carrier)
        if restr_sub == (t_x,) * len(sub.carrier) and \
                restr_ep == (t_y,) * len(ep.carrier):
            raise AssertionError(
                "mediating morphism exists; coproduct witness failed")
    return CoproductCounterexample(True, T, t_x, t_y, rg.e0, checked)


def pointed_iso(rg: RightGroup, e, f) -> Morphism:
    """An automorphism of S carrying the point e to f, built from the
    triplet (transposition of e and f on E, e, right translation Se -> Sf)."""
    if e not in rg.idempotents or f not in rg.idempotents:
        raise NotAnIdempotent(f"{e} or {f} is not idempotent")
    from .morphisms import MorphismTriplet, morphism_of_triplet

    eps = {x: x for x in rg.idempotents}
    eps[e], eps[f] = f, e
    t = MorphismTriplet(rg, rg, eps, e, translate_rf(rg, e, f))
    m = morphism_of_triplet(t)
    assert m.is_bijective(), "pointed iso must be bijective"
    assert m(e) == f, "pointed iso must carry the point"
    return m


@functools.lru_cache(maxsize=None)
def default_probe_pool(max_semigroup_order=3, max_right_group_order=4):
    """Default universal-property probe pool: all semigroups of order <=
    max_semigroup_order up to isomorphism, plus the right groups above
    that order up to max_right_group_order (the smaller ones already
    appear among the semigroup classes)."""
    from .enumeration import enumerate_right_groups, enumerate_semigroups

    pool = []
    for k in range(1, max_semigroup_order + 1):
        pool.extend(enumerate_semigroups(k))
    for k in range(max_semigroup_order + 1, max_right_group_order + 1):
        pool.extend(rg.semigroup for rg in enumerate_right_groups(k))
    return tuple(pool)


@functools.lru_cache(maxsize=None)
def default_pointed_probe_pool(max_order=4):
    """One pointed right group per class up to max_order (all points on a
    fixed right group give isomorphic pointed right groups)."""
    from .enumeration import enumerate_right_groups

    return tuple(PointedRightGroup(rg, rg.e0)
                 for k in range(1, max_order + 1)
                 for rg in enumerate_right_groups(k))
