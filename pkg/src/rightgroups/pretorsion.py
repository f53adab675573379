"""The right-zero / group pretorsion structure on right groups.

Trivial morphisms are the constants onto an idempotent (they factor
through an order-1 object).  A morphism admits a prekernel exactly when it
collapses the idempotents to a point; the canonical short preexact
sequence of any right group is  E(S) -> S -> S/~  with the inclusion and
the group projection.  Universal properties are verified against finite
probe pools.
"""

import functools
from dataclasses import dataclass

from .core import (
    FiniteSemigroup,
    Morphism,
    compose,
    enumerate_hom_bruteforce,
    idempotents,
    is_group,
    is_right_zero,
    restrict_to_subsemigroup,
)
from .structure import (
    CheckResult,
    RightGroup,
    as_right_group,
    idempotent_part,
    quotient_group,
)


class NoPrekernel(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class TrivialityCertificate:
    """Evidence a morphism factors through an order-1 semigroup."""

    morphism: Morphism
    value: int  # the constant image (None for an empty domain)


def is_trivial_morphism(f: Morphism):
    """Certificate iff the image is a single idempotent (or dom is empty)."""
    if f.dom.n == 0:
        return TrivialityCertificate(f, None)
    img = f.image
    if len(img) != 1:
        return None
    v = next(iter(img))
    if f.cod.table[v][v] != v:
        return None
    return TrivialityCertificate(f, v)


def _is_trivial_map(cod_table, values):
    """Fast path used in probe sweeps: constant onto an idempotent."""
    if not values:
        return True
    v = values[0]
    return all(x == v for x in values) and cod_table[v][v] == v


def trivial_morphisms(S: FiniteSemigroup, T: FiniteSemigroup):
    """The constant morphisms S -> T, one per idempotent of T."""
    out = [Morphism(S, T, [e] * S.n) for e in sorted(idempotents(T))]
    if S.n > 0:
        assert len(out) == len(idempotents(T))
    return out


def prekernel(f: Morphism):
    """(K, inclusion) with K = f^{-1} of the common idempotent image.

    Exists iff f collapses E(dom) to one point; K is then itself a right
    group (validated) and the inclusion is its prekernel morphism.
    Raises NoPrekernel with a witness pair of idempotents otherwise.
    """
    dom = as_right_group(f.dom)
    as_right_group(f.cod)
    images = {}
    for e in dom.idempotents:
        images.setdefault(f(e), e)
        if len(images) > 1:
            (v1, e1), (v2, e2) = list(images.items())[:2]
            raise NoPrekernel(
                f"idempotents {e1}, {e2} have distinct images {v1}, {v2}",
                witness=(e1, e2, v1, v2))
    g0 = next(iter(images))
    members = [s for s in dom.elements if f(s) == g0]
    sub, carrier = restrict_to_subsemigroup(f.dom, members)
    K = RightGroup(sub)
    incl = Morphism(sub, f.dom, carrier)
    return K, incl


def verify_prekernel(f: Morphism, eps: Morphism, probes) -> CheckResult:
    """Universal property: f.eps is trivial, and every lam: Y -> dom(f)
    with f.lam trivial factors uniquely as lam = eps.lam' (Y ranges over
    the probe pool)."""
    if eps.cod != f.dom:
        raise ValueError("eps must land in dom(f)")
    if is_trivial_morphism(compose(f, eps)) is None:
        return CheckResult(False, 0, {"reason": "f.eps is not trivial"})
    checked = 0
    ct = f.cod.table
    for probe in probes:
        Y = _probe_semigroup(probe)
        lams = enumerate_hom_bruteforce(Y, f.dom)
        factor_candidates = enumerate_hom_bruteforce(Y, eps.dom)
        for lam in lams:
            if not _is_trivial_map(ct, [f(v) for v in lam.map]):
                continue
            checked += 1
            hits = [lp for lp in factor_candidates
                    if tuple(eps(w) for w in lp.map) == lam.map]
            if len(hits) != 1:
                return CheckResult(False, checked, {
                    "probe": Y, "lam": lam.map, "factorings": len(hits)})
    return CheckResult(True, checked)


def verify_precokernel(f: Morphism, eta: Morphism, probes) -> CheckResult:
    """Dual property: eta.f is trivial, and every mu: cod(f) -> Y with
    mu.f trivial factors uniquely as mu = mu'.eta."""
    if eta.dom != f.cod:
        raise ValueError("eta must start at cod(f)")
    if is_trivial_morphism(compose(eta, f)) is None:
        return CheckResult(False, 0, {"reason": "eta.f is not trivial"})
    checked = 0
    for probe in probes:
        Y = _probe_semigroup(probe)
        yt = Y.table
        mus = enumerate_hom_bruteforce(f.cod, Y)
        factor_candidates = enumerate_hom_bruteforce(eta.cod, Y)
        for mu in mus:
            if not _is_trivial_map(yt, [mu(f(v)) for v in f.dom.elements]):
                continue
            checked += 1
            hits = [mp for mp in factor_candidates
                    if tuple(mp(eta(s)) for s in eta.dom.elements) == mu.map]
            if len(hits) != 1:
                return CheckResult(False, checked, {
                    "probe": Y, "mu": mu.map, "factorings": len(hits)})
    return CheckResult(True, checked)


def _probe_semigroup(probe):
    if isinstance(probe, RightGroup):
        return probe.semigroup
    return probe


def precokernel_canonical(rg: RightGroup) -> Morphism:
    """The group projection S -> S/~ (the precokernel of the idempotent
    inclusion; any morphism collapsing E factors uniquely through it)."""
    _, proj = quotient_group(rg)
    return proj


@dataclass(frozen=True)
class PreexactSequence:
    """A -> B -> C with the first a verified prekernel of the second and
    the second a verified precokernel of the first (w.r.t. a probe pool)."""

    f: Morphism
    g: Morphism
    probes_used: int
    prekernel_check: CheckResult
    precokernel_check: CheckResult


def canonical_preexact_sequence(rg: RightGroup, probes=None) -> PreexactSequence:
    """E(S) -> S -> S/~, both universal properties verified.

    The left object is a right zero semigroup (torsion side) and the right
    object is a group (torsion-free side); both facts are asserted.
    """
    if probes is None:
        probes = default_pretorsion_pool()
    ep = idempotent_part(rg)
    i = ep.inclusion
    pi = precokernel_canonical(rg)
    assert is_right_zero(i.dom), "left object must be a right zero semigroup"
    assert is_group(pi.cod), "right object must be a group"
    pre = verify_prekernel(pi, i, probes)
    post = verify_precokernel(i, pi, probes)
    if not (pre and post):
        raise AssertionError(
            f"canonical sequence failed verification: {pre} / {post}")
    return PreexactSequence(i, pi, len(probes), pre, post)


@functools.lru_cache(maxsize=None)
def default_pretorsion_pool(max_order=4):
    """All right groups of order <= max_order (the probe pool the
    universal quantifiers are checked against)."""
    from .enumeration import enumerate_right_groups

    pool = []
    for n in range(1, max_order + 1):
        pool.extend(enumerate_right_groups(n))
    return tuple(pool)


@dataclass
class AxiomReport:
    """Outcome of the two pretorsion axioms over a pool of right groups."""

    pool_size: int
    hom_checks: list  # (|T|, |F|, hom count, all trivial)
    sequence_checks: list  # (order, |E|, ok)
    ok: bool

    def __bool__(self):
        return self.ok


def verify_pretorsion_axioms(pool, probes=None) -> AxiomReport:
    """Axiom 1: every morphism from a right zero member to a group member
    is trivial (and there is exactly one for nonempty domains).  Axiom 2:
    every member admits the canonical short preexact sequence."""
    if probes is None:
        probes = default_pretorsion_pool()
    rzs = [rg for rg in pool if is_right_zero(rg.semigroup)]
    grps = [rg for rg in pool if is_group(rg.semigroup)]
    hom_checks = []
    ok = True
    for T in rzs:
        for F in grps:
            homs = enumerate_hom_bruteforce(T.semigroup, F.semigroup)
            all_trivial = all(
                is_trivial_morphism(h) is not None for h in homs)
            good = all_trivial and len(homs) == 1
            hom_checks.append((T.n, F.n, len(homs), all_trivial, good))
            ok = ok and good
    sequence_checks = []
    for rg in pool:
        try:
            canonical_preexact_sequence(rg, probes)
            sequence_checks.append((rg.n, len(rg.idempotents), True))
        except AssertionError:
            sequence_checks.append((rg.n, len(rg.idempotents), False))
            ok = False
    return AxiomReport(len(pool), hom_checks, sequence_checks, ok)
