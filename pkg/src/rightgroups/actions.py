"""Group actions on (pointed) finite sets and the action-to-right-group
functor: carrier X x G with (x,g)(x',g') = (g.x', gg').

Permutations are image vectors; composition is "apply right then left",
so action(g*h) = action(g) . action(h).  The functor is faithful and
essentially surjective but not full; ``non_fullness_witness`` exhibits the
standard witness (isomorphic images, non-isomorphic actions).
"""

import functools
from dataclasses import dataclass
from itertools import permutations

from .core import (
    FiniteGroup,
    FiniteSemigroup,
    Morphism,
)
from .structure import (
    PointedRightGroup,
    RightGroup,
    quotient_group,
    sim_congruence,
)


class EmptySet(ValueError):
    pass


class InvalidActionMorphism(ValueError):
    pass


def compose_perm(p, q):
    """p after q: (p . q)(x) = p[q[x]]."""
    return tuple(p[q[x]] for x in range(len(q)))


class GroupAction:
    """(G, X, phi): one permutation of [0, set_size) per group element,
    respecting phi(identity) = id and phi(g*h) = phi(g) . phi(h).
    Optionally pointed: every permutation fixes ``point``."""

    def __init__(self, group: FiniteGroup, set_size, perms, point=None):
        if set_size < 1:
            raise EmptySet("actions need a nonempty set")
        perms = tuple(tuple(p) for p in perms)
        if len(perms) != group.n:
            raise ValueError("one permutation per group element required")
        ident = tuple(range(set_size))
        for p in perms:
            if sorted(p) != list(ident):
                raise ValueError(f"{p} is not a permutation of the set")
        if perms[group.identity] != ident:
            raise ValueError("identity must act as the identity permutation")
        for g in group.elements:
            for h in group.elements:
                if perms[group.mul(g, h)] != compose_perm(perms[g], perms[h]):
                    raise ValueError(
                        f"phi(g*h) != phi(g).phi(h) at g={g}, h={h}")
        if point is not None:
            if not 0 <= point < set_size:
                raise ValueError("point outside the set")
            for p in perms:
                if p[point] != point:
                    raise ValueError("pointed actions must fix the point")
        self.group = group
        self.set_size = set_size
        self.perms = perms
        self.point = point

    def apply(self, g, x):
        return self.perms[g][x]

    def is_trivial(self):
        ident = tuple(range(self.set_size))
        return all(p == ident for p in self.perms)

    def __eq__(self, other):
        return isinstance(other, GroupAction) and \
            self.group == other.group and self.set_size == other.set_size \
            and self.perms == other.perms and self.point == other.point

    def __hash__(self):
        return hash((self.group, self.set_size, self.perms, self.point))

    def __repr__(self):
        return (f"GroupAction(|G|={self.group.n}, |X|={self.set_size}, "
                f"point={self.point})")


def trivial_action(group: FiniteGroup, set_size, point=None):
    ident = tuple(range(set_size))
    return GroupAction(group, set_size, [ident] * group.n, point)


@dataclass(frozen=True)
class ActionMorphism:
    """(Phi, f): a group morphism plus a set map satisfying
    cod.apply(Phi(g), f(x)) = f(dom.apply(g, x)); pointed when both
    actions are pointed (then f must carry the point)."""

    dom: GroupAction
    cod: GroupAction
    Phi: Morphism
    f: tuple

    def __init__(self, dom, cod, Phi, f):
        f = tuple(f)
        if Phi.dom != dom.group.semigroup or Phi.cod != cod.group.semigroup:
            raise InvalidActionMorphism("Phi must map the acting groups")
        if len(f) != dom.set_size or \
                any(not 0 <= v < cod.set_size for v in f):
            raise InvalidActionMorphism("f must map the sets")
        for g in dom.group.elements:
            for x in range(dom.set_size):
                if cod.apply(Phi(g), f[x]) != f[dom.apply(g, x)]:
                    raise InvalidActionMorphism(
                        f"compatibility fails at g={g}, x={x}")
        if dom.point is not None and cod.point is not None and \
                f[dom.point] != cod.point:
            raise InvalidActionMorphism("f must carry the point")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "Phi", Phi)
        object.__setattr__(self, "f", f)


def action_index(x, g, group_order):
    """Row-major codec for the X x G carrier."""
    return x * group_order + g


@functools.lru_cache(maxsize=None)
def functor_F(action: GroupAction):
    """The right group on X x G with (x,g)(x',g') = (g.x', gg').

    Returns a PointedRightGroup (pointed at (x0, identity)) when the
    action is pointed, else a RightGroup.
    """
    G = action.group
    k = action.set_size
    n = k * G.n
    table = [[0] * n for _ in range(n)]
    for x in range(k):
        for g in G.elements:
            i = action_index(x, g, G.n)
            for x2 in range(k):
                for g2 in G.elements:
                    table[i][action_index(x2, g2, G.n)] = action_index(
                        action.apply(g, x2), G.mul(g, g2), G.n)
    rg = RightGroup(FiniteSemigroup(table))
    if action.point is not None:
        return PointedRightGroup(
            rg, action_index(action.point, G.identity, G.n))
    return rg


def _rg_of(built):
    return built.rg if isinstance(built, PointedRightGroup) else built


def functor_F_morphism(m: ActionMorphism) -> Morphism:
    """(x, g) -> (f(x), Phi(g)) between the built right groups."""
    dom = _rg_of(functor_F(m.dom))
    cod = _rg_of(functor_F(m.cod))
    gd = m.dom.group.n
    gc = m.cod.group.n
    mapping = [0] * dom.n
    for x in range(m.dom.set_size):
        for g in range(gd):
            mapping[action_index(x, g, gd)] = \
                action_index(m.f[x], m.Phi(g), gc)
    return Morphism(dom.semigroup, cod.semigroup, mapping)


def eta_iso(action: GroupAction) -> Morphism:
    """The isomorphism F(G, X, trivial) -> F(G, X, phi): (x,g) -> (g.x, g)."""
    G = action.group
    base = _rg_of(functor_F(trivial_action(G, action.set_size)))
    target = _rg_of(functor_F(action))
    gn = G.n
    mapping = [0] * base.n
    for x in range(action.set_size):
        for g in G.elements:
            mapping[action_index(x, g, gn)] = \
                action_index(action.apply(g, x), g, gn)
    m = Morphism(base.semigroup, target.semigroup, mapping)
    assert m.is_bijective(), "eta must be a bijection"
    return m


def essential_surjectivity_witness(rg: RightGroup) -> GroupAction:
    """The trivial action of S/~ on E(S); its functor image is isomorphic
    to S (the isomorphism is constructed and verified)."""
    grp, _ = quotient_group(rg)
    action = trivial_action(grp, len(rg.idempotents))
    iso = essential_surjectivity_iso(rg, action)
    assert iso.is_bijective()
    return action


def essential_surjectivity_iso(rg: RightGroup, action=None) -> Morphism:
    """Explicit isomorphism F(trivial action of S/~ on E) -> S:
    (e_index, class) -> representative(class) * e."""
    if action is None:
        grp, _ = quotient_group(rg)
        action = trivial_action(grp, len(rg.idempotents))
    built = _rg_of(functor_F(action))
    sim = sim_congruence(rg)
    blocks = sim.blocks()
    gn = action.group.n
    mapping = [0] * built.n
    for e_idx, e in enumerate(rg.idempotents):
        for b in range(gn):
            mapping[action_index(e_idx, b, gn)] = rg.mul(blocks[b][0], e)
    m = Morphism(built.semigroup, rg.semigroup, mapping)
    assert m.is_bijective()
    return m


def enumerate_actions(G: FiniteGroup, set_size, pointed_at=None):
    """All actions of G on a set of the given size (group morphisms into
    the symmetric group, via generator search); optionally only those
    fixing ``pointed_at``."""
    from .enumeration import symmetric_group
    from .morphisms import enumerate_group_homs

    sym = symmetric_group(set_size)
    perm_list = list(permutations(range(set_size)))
    out = []
    for hom in enumerate_group_homs(G, sym):
        perms = [perm_list[hom(g)] for g in G.elements]
        if pointed_at is not None and \
                any(p[pointed_at] != pointed_at for p in perms):
            continue
        out.append(GroupAction(G, set_size, perms, pointed_at))
    return out


@dataclass(frozen=True)
class NonFullnessReport:
    """(i) the functor images are isomorphic, via eta; (ii) no action
    morphism with bijective set map links the action to the trivial one."""

    applicable: bool
    images_isomorphic: bool = False
    candidates_checked: int = 0
    action_iso_found: bool = False


def non_fullness_witness(action: GroupAction = None) -> NonFullnessReport:
    """Default instance: Z2 swapping two points.

    For a nontrivial action phi the images F(phi) and F(trivial) are
    isomorphic (eta), yet an exhaustive search over pairs (Phi, f) with f
    bijective finds no action morphism (G,X,phi) -> (G,X,trivial): the
    compatibility identity would force f to collapse orbits.
    """
    if action is None:
        from .core import cyclic_table

        z2 = FiniteGroup(cyclic_table(2))
        action = GroupAction(z2, 2, [(0, 1), (1, 0)])
    if action.is_trivial():
        return NonFullnessReport(applicable=False)
    from .morphisms import enumerate_group_homs

    eta = eta_iso(action)
    images_iso = eta.is_bijective()
    G = action.group
    triv = trivial_action(G, action.set_size)
    checked = 0
    found = False
    for Phi in enumerate_group_homs(G, G):
        for f in permutations(range(action.set_size)):
            checked += 1
            try:
                ActionMorphism(action, triv, Phi, f)
                found = True
            except InvalidActionMorphism:
                pass
    return NonFullnessReport(True, images_iso, checked, found)


# -- action text format --------------------------------------------------
#
# group table block (order line + rows), a line with the set size, then
# |G| permutation lines; an optional trailing "point <i>" line.

def parse_action_text(text):
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty action file")
    n = int(lines[0])
    rows = [[int(tok) for tok in ln.split()] for ln in lines[1:n + 1]]
    group = FiniteGroup(FiniteSemigroup(rows))
    rest = lines[n + 1:]
    if not rest:
        raise ValueError("missing set size")
    set_size = int(rest[0])
    perm_lines = rest[1:1 + n]
    if len(perm_lines) != n:
        raise ValueError(f"expected {n} permutation lines")
    perms = [[int(tok) for tok in ln.split()] for ln in perm_lines]
    point = None
    trailing = rest[1 + n:]
    if trailing:
        head = trailing[0].split()
        if head[0] != "point":
            raise ValueError(f"unexpected trailing line {trailing[0]!r}")
        point = int(head[1])
    return GroupAction(group, set_size, perms, point)


def format_action_text(action: GroupAction):
    lines = [str(action.group.n)]
    for row in action.group.table:
        lines.append(" ".join(str(x) for x in row))
    lines.append(str(action.set_size))
    for p in action.perms:
        lines.append(" ".join(str(x) for x in p))
    if action.point is not None:
        lines.append(f"point {action.point}")
    return "\n".join(lines) + "\n"
