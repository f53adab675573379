"""Morphisms between right groups.

A morphism S -> S' restricts to a set map on idempotents and to a group
morphism on any subgroup Se0; conversely every such (map, base idempotent,
group morphism) triplet extends to a unique morphism.  That parametrization
drives the structured Hom enumeration, which the brute-force kernel search
oracles.  Also here: induced quotient-group morphisms, right inverses of
the canonical projection, kernels, and preimage fibers.
"""

import functools
from dataclasses import dataclass
from itertools import product

from .congruences import Partition
from .core import (
    FiniteGroup,
    Morphism,
    NotAnIdempotent,
    compose,
    enumerate_hom_bruteforce,  # noqa: F401 (re-export)
)
from .structure import (
    RightGroup,
    as_right_group,
    idempotent_part,
    pi_E,
    quotient_group,
    quotient_to_subgroup,
    sim_congruence,
    subgroup_Se,
    translate_rf,
)


@dataclass(frozen=True)
class MorphismTriplet:
    """(epsilon: E -> E', e0, psi: Se0 -> S'epsilon(e0)).

    ``epsilon`` maps ambient idempotent ids of dom to ambient idempotent
    ids of cod; ``psi`` is a Morphism between the standalone subgroup
    tables of subgroup_Se(dom, e0) and subgroup_Se(cod, epsilon[e0]).
    """

    dom: RightGroup
    cod: RightGroup
    epsilon: tuple  # sorted ((e, epsilon(e)), ...) pairs
    e0: int
    psi: Morphism

    def __init__(self, dom, cod, epsilon, e0, psi):
        eps = dict(epsilon) if not isinstance(epsilon, dict) else epsilon
        if set(eps) != set(dom.idempotents):
            raise ValueError("epsilon must be defined on all of E")
        if not set(eps.values()) <= set(cod.idempotents):
            raise ValueError("epsilon must land in E'")
        if e0 not in dom.idempotents:
            raise NotAnIdempotent(f"{e0} is not idempotent")
        sub = subgroup_Se(dom, e0)
        sub_cod = subgroup_Se(cod, eps[e0])
        if psi.dom != sub.group.semigroup or psi.cod != sub_cod.group.semigroup:
            raise ValueError("psi must map Se0 to S'epsilon(e0)")
        if psi(sub.group.identity) != sub_cod.group.identity:
            raise ValueError("psi must send e0 to epsilon(e0)")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "epsilon", tuple(sorted(eps.items())))
        object.__setattr__(self, "e0", e0)
        object.__setattr__(self, "psi", psi)

    def epsilon_map(self):
        return dict(self.epsilon)


def morphism_of_triplet(t: MorphismTriplet) -> Morphism:
    """Extend a triplet to the morphism s -> psi(s*e0) * epsilon(pi_E(s))."""
    dom, cod = t.dom, t.cod
    eps = t.epsilon_map()
    sub = subgroup_Se(dom, t.e0)
    sub_cod = subgroup_Se(cod, eps[t.e0])
    mapping = []
    for s in dom.elements:
        g = t.psi(sub.local(dom.mul(s, t.e0)))
        mapping.append(cod.mul(sub_cod.carrier[g], eps[pi_E(dom, s)]))
    return Morphism(dom.semigroup, cod.semigroup, mapping)


def triplet_of_morphism(phi: Morphism, e0=None) -> MorphismTriplet:
    """Read off (phi|_E, e0, phi|_Se0) and assert the round trip."""
    dom = as_right_group(phi.dom)
    cod = as_right_group(phi.cod)
    e0 = dom.e0 if e0 is None else e0
    if e0 not in dom.idempotents:
        raise NotAnIdempotent(f"{e0} is not idempotent")
    eps = {e: phi(e) for e in dom.idempotents}
    sub = subgroup_Se(dom, e0)
    sub_cod = subgroup_Se(cod, eps[e0])
    psi = Morphism(sub.group.semigroup, sub_cod.group.semigroup,
                   [sub_cod.local(phi(x)) for x in sub.carrier])
    t = MorphismTriplet(dom, cod, eps, e0, psi)
    assert morphism_of_triplet(t) == phi, \
        "triplet must reconstruct the morphism it was read from"
    return t


def triplets_equivalent(t1: MorphismTriplet, t2: MorphismTriplet) -> bool:
    """Same-morphism test: equal epsilons and the translation square
    r_{eps(e2)} . psi1 = psi2 . r_{e2} commutes."""
    if t1.dom != t2.dom or t1.cod != t2.cod:
        return False
    if t1.epsilon != t2.epsilon:
        return False
    eps = t1.epsilon_map()
    left = compose(translate_rf(t1.cod, eps[t1.e0], eps[t2.e0]), t1.psi)
    right = compose(t2.psi, translate_rf(t1.dom, t1.e0, t2.e0))
    return left == right


def induced_group_morphism(psi: Morphism) -> Morphism:
    """The group morphism S/~ -> S'/~ induced on sim-classes (asserted
    well defined)."""
    dom = as_right_group(psi.dom)
    cod = as_right_group(psi.cod)
    sim_d = sim_congruence(dom)
    sim_c = sim_congruence(cod)
    gd, _ = quotient_group(dom)
    gc, _ = quotient_group(cod)
    mapping = [None] * gd.n
    for s in dom.elements:
        b = sim_d.block_of(s)
        v = sim_c.block_of(psi(s))
        if mapping[b] is None:
            mapping[b] = v
        else:
            assert mapping[b] == v, "s~t must imply psi(s)~psi(t)"
    return Morphism(gd.semigroup, gc.semigroup, mapping)


@functools.lru_cache(maxsize=None)
def _generators(G: FiniteGroup):
    """A greedy generating sequence (smallest element outside the closure)."""
    gens = []
    closure = {G.identity}
    for x in G.elements:
        if x in closure:
            continue
        gens.append(x)
        frontier = list(closure | {x})
        closure.add(x)
        while frontier:
            a = frontier.pop()
            for b in list(closure):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in closure:
                        closure.add(c)
                        frontier.append(c)
        assert len(closure) <= G.n
    return tuple(gens)


@functools.lru_cache(maxsize=None)
def enumerate_group_homs(G: FiniteGroup, H: FiniteGroup):
    """All group morphisms G -> H by assigning generator images (order-
    divisibility pruned) and extending by closure."""
    gens = _generators(G)
    if not gens:
        return [Morphism(G.semigroup, H.semigroup, [H.identity] * G.n)]
    # build words: every element as product of earlier element and generator
    order_h = _element_orders(H)
    order_g = _element_orders(G)
    out = []
    partial = [None] * G.n
    partial[G.identity] = H.identity

    def extend(k):
        if k == len(gens):
            assert all(v is not None for v in partial), \
                "generators must determine every image"
            out.append(Morphism(G.semigroup, H.semigroup, list(partial)))
            return
        g = gens[k]
        for h in H.elements:
            if order_g[g] % order_h[h] != 0:
                continue
            snapshot = list(partial)
            if _close(partial, g, h, G, H):
                extend(k + 1)
            partial[:] = snapshot

    def _close(m, g, h, G, H):
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
        return True

    extend(0)
    return tuple(out)


def _element_orders(G: FiniteGroup):
    orders = [0] * G.n
    for x in G.elements:
        p = x
        k = 1
        while p != G.identity:
            p = G.mul(p, x)
            k += 1
        orders[x] = k
    return orders


def enumerate_hom_structured(S: RightGroup, T: RightGroup):
    """All morphisms S -> T via pairs (set map E -> E', group morphism
    S/~ -> T/~), reconstructed through the triplet machinery.

    Count: |E'|^|E| * |Hom_Grp(S/~, T/~)|; agreement with the brute-force
    enumeration is oracle-checked in the tests.
    """
    E = S.idempotents
    Ec = T.idempotents
    gd, _ = quotient_group(S)
    gc, _ = quotient_group(T)
    group_homs = enumerate_group_homs(gd, gc)
    iso_d = quotient_to_subgroup(S, S.e0)  # S/~ -> Se0
    inv_d = iso_d.inverse()
    out = []
    for eps_images in product(Ec, repeat=len(E)):
        eps = dict(zip(E, eps_images))
        iso_c = quotient_to_subgroup(T, eps[S.e0])  # T/~ -> T eps(e0)
        for gh in group_homs:
            psi = compose(iso_c, compose(gh, inv_d))
            t = MorphismTriplet(S, T, eps, S.e0, psi)
            out.append(morphism_of_triplet(t))
    return out


def right_inverses_of_projection(rg: RightGroup):
    """The morphisms S/~ -> S that are right inverses of the projection:
    exactly one per idempotent e, induced by right multiplication by e."""
    grp, proj = quotient_group(rg)
    sim = sim_congruence(rg)
    blocks = sim.blocks()
    out = []
    for e in rg.idempotents:
        mapping = [rg.mul(block[0], e) for block in blocks]
        m = Morphism(grp.semigroup, rg.semigroup, mapping)
        assert compose(proj, m).map == tuple(range(grp.n)), \
            "candidate is not a right inverse of the projection"
        out.append(m)
    return out


@dataclass(frozen=True)
class KernelPair:
    """Kernel data of a right-group morphism: the fiber partition of E and
    the kernel of the induced group morphism (a normal subgroup of S/~)."""

    e_partition: Partition  # over idempotent_part local indices
    K: frozenset  # quotient-group element ids


def kernel_pair(psi: Morphism) -> KernelPair:
    dom = as_right_group(psi.dom)
    ep = idempotent_part(dom)
    epart = Partition([psi(e) for e in ep.carrier])
    tilde = induced_group_morphism(psi)
    gd, _ = quotient_group(dom)
    gc = FiniteGroup(tilde.cod)
    K = frozenset(b for b in range(gd.n) if tilde(b) == gc.identity)
    assert gd.identity in K
    for a in K:
        for b in K:
            assert gd.mul(a, b) in K, "kernel must be closed"
        assert gd.inv(a) in K, "kernel must contain inverses"
        for g in gd.elements:
            assert gd.mul(gd.mul(g, a), gd.inv(g)) in K, "kernel must be normal"
    return KernelPair(epart, K)


def preimage(psi: Morphism, s_prime):
    """The fiber psi^{-1}(s') assembled from the kernel data, asserted
    equal to the brute-force fiber.

    Empty unless [s'] lies in the image of the induced group morphism and
    pi_E(s') in the image of psi|_E; otherwise the fiber is the coset
    product (s1 K) * [s2] realized elementwise.
    """
    dom = as_right_group(psi.dom)
    cod = as_right_group(psi.cod)
    brute = {s for s in dom.elements if psi(s) == s_prime}
    sim_c = sim_congruence(cod)
    tilde = induced_group_morphism(psi)
    target_block = sim_c.block_of(s_prime)
    target_idem = pi_E(cod, s_prime)
    s1 = next((b for b in range(tilde.dom.n) if tilde(b) == target_block),
              None)
    fiber_E = [e for e in dom.idempotents if psi(e) == target_idem]
    if s1 is None or not fiber_E:
        assert brute == set(), "formula says empty but brute fiber is not"
        return set()
    gd = FiniteGroup(tilde.dom)
    K = [b for b in range(gd.n) if tilde(b) == FiniteGroup(tilde.cod).identity]
    coset = {gd.mul(s1, k) for k in K}
    sim_d = sim_congruence(dom)
    blocks = sim_d.blocks()
    out = set()
    for b in coset:
        rep = blocks[b][0]
        for e in fiber_E:
            out.add(dom.mul(rep, e))
    assert out == brute, "kernel-data fiber must match the brute-force fiber"
    return out
