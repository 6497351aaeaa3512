"""Centers, automorphisms and the coarse automorphism group of a groupoid."""

from dataclasses import dataclass, field

from . import groups
from .composition import h_compose, left_unit_arrow, right_unit_arrow
from .core import FiniteGroupoid, GroupoidAction, _UnionFind, action_groupoid, coarse_space, validate
from .errors import (
    BaseMismatch,
    GroupAxiomFailure,
    NontrivialCenter,
    NotAGroup,
    NotAutomorphism,
    NotAutomorphismSlice,
    NotHomomorphism,
)
from .fiber import fiber_product, strict_fiber_product
from .functors import (
    StrictMorphism,
    identity,
    is_equivalence,
    is_full_equivalence,
    search_transformations,
    strict_self_equivalences,
)
from .morphisms import (
    GenMorphism,
    MorArrow,
    MorRoster,
    build_morphism_groupoid,
    carrier_of,
    enumerate_arrows,
    identity_morphism,
    make_arrow,
    vertical_compose,
)


def central_loops(g):
    """All loops that are central in their isotropy group, by arrow index."""
    out = []
    for a in g.objects:
        loops = g.loops(a)
        out.extend(z for z in loops if all(g._mul_pair(z, x) == g._mul_pair(x, z) for x in loops))
    return sorted(out)


def center_groupoid(g):
    """``G ⋉ ZG0`` under conjugation, with its projection to ``G``."""
    points = central_loops(g)
    index = {z: i for i, z in enumerate(points)}
    anchor = tuple(g.src[z] for z in points)
    act = {}
    for i, z in enumerate(points):
        for x in g.out_arrows(anchor[i]):
            act[(x, i)] = index[g.mul(g.inv[x], z, x)]
    zg, pairs = action_groupoid(g, GroupoidAction(len(points), anchor, act), name=f"Z{g.name}")
    proj = StrictMorphism(zg, g, anchor, [x for x, _ in pairs], check=False)
    return zg, proj


@dataclass(frozen=True)
class CenterSection:
    comp: tuple

    def __getitem__(self, a):
        return self.comp[a]


def is_center_section(g, comp):
    for a in g.objects:
        z = comp[a]
        if g.src[z] != a or g.tgt[z] != a:
            return False
        if any(g._mul_pair(z, x) != g._mul_pair(x, z) for x in g.loops(a)):
            return False
    return all(
        g._mul_pair(x, comp[g.tgt[x]]) == g._mul_pair(comp[g.src[x]], x) for x in g.arrows
    )


def center_sections(g):
    """Equivariant central sections, sorted by their components."""
    edges = [(g.src[x], g.tgt[x], x, x) for x in g.arrows]
    objs = list(g.objects)
    # an equivariant section is a natural transformation id => id
    return [CenterSection(c) for c in search_transformations(g.n_objects, edges, objs, objs, g)]


def center_group(g):
    """K(G) as a FiniteGroup whose labels are the sections; product is pointwise."""
    secs = center_sections(g)
    index = {s.comp: i for i, s in enumerate(secs)}
    table = [
        [index[tuple(g._mul_pair(p, q) for p, q in zip(s.comp, t.comp))] for t in secs]
        for s in secs
    ]
    return groups.FiniteGroup(tuple(tuple(r) for r in table), tuple(secs))


# automorphisms

@dataclass
class AutomorphismReport:
    ok: bool
    inverse: GenMorphism = None
    to_unit_left: MorArrow = None
    to_unit_right: MorArrow = None
    witness: object = None

    def __bool__(self):
        return self.ok


def _same(a, b):
    return a is b or a == b


def _to_unit(m, n):
    """Arrow ``h(m, n) -> 1_G`` when ``n`` is ``m`` with its legs swapped."""
    c = h_compose(m, n)
    one = identity_morphism(m.G, m.mode)
    car = carrier_of(c, one)
    G = m.G
    alpha = []
    if m.mode == "full":
        inner = strict_fiber_product(m.u, n.psi)
        for p, _ in car.object_decode:
            k, k2 = inner.object_decode[p]
            y = n.lift(k, k2, n.G.unit[m.u.f0[k]])
            alpha.append(G.inv[m.psi.f1[y]])
    else:
        inner = fiber_product(m.u, n.psi)
        for p, g, _ in car.object_decode:
            k, x, k2 = inner.object_decode[p]
            y = n.lift(k, k2, x)
            alpha.append(G._mul_pair(G.inv[m.psi.f1[y]], g))
    return make_arrow(c, one, alpha)


def is_automorphism(m):
    """Decide via "u is an equivalence"; on success build the inverse and both arrows to 1_G.

    In full mode the swapped span is only a full-morphism when u is onto
    objects; otherwise the witnesses are built in general mode.
    """
    if not _same(m.G, m.H):
        raise BaseMismatch("an automorphism needs the same source and target groupoid")
    rep = is_equivalence(m.u)
    if not rep:
        return AutomorphismReport(False, witness=rep)
    if m.mode == "full" and not is_full_equivalence(m.u):
        m = m.with_mode("general")
    n = GenMorphism(m.u, m.psi, m.mode)
    return AutomorphismReport(True, n, _to_unit(m, n), _to_unit(n, m))


def aut_roster(g, mode="general"):
    """``(id, G, u)`` for each strict self-equivalence ``u``, identity first."""
    ident = identity(g)
    us = strict_self_equivalences(g)
    us.sort(key=lambda u: u != ident)
    return MorRoster(g, g, [GenMorphism(ident, u, mode, check=False) for u in us], mode)


def iso_psi(m, sigma):
    """The self-arrow of ``m`` given by a central section."""
    if not is_automorphism(m):
        raise NotAutomorphism("morphism is not an automorphism")
    G = m.G
    car = carrier_of(m, m)
    if m.mode == "full":
        alpha = [G._mul_pair(sigma[m.u.f0[k]], m.u.f1[m.lift(k, k2, G.unit[m.psi.f0[k]])])
                 for k, k2 in car.object_decode]
    else:
        alpha = [G._mul_pair(sigma[m.u.f0[k]], m.u.f1[m.lift(k, k2, x)]) for k, x, k2 in car.object_decode]
    return make_arrow(m, m, alpha)


def iso_phi(a):
    """The central section of a self-arrow, extended from the image of u along arrows."""
    m = a.src
    if not is_automorphism(m):
        raise NotAutomorphism("morphism is not an automorphism")
    G = m.G
    car = carrier_of(m, m)
    comp = [None] * G.n_objects
    for k in m.K.objects:
        key = (k, k) if m.mode == "full" else (k, G.unit[m.psi.f0[k]], k)
        comp[m.u.f0[k]] = a.alpha[car.object_encode[key]]
    for b in G.objects:
        if comp[b] is None:
            for c in G.objects:
                if comp[c] is not None and G.hom(c, b):
                    x = min(G.hom(c, b))
                    comp[b] = G.mul(G.inv[x], comp[c], x)
                    break
    return CenterSection(tuple(comp))


# gerbe structure and the coarse group

@dataclass
class GerbeReport:
    center_order: int
    kernel_orders: list
    kernel_isomorphic: bool
    quotient: FiniteGroupoid
    projection: list
    n_classes: int
    quotient_discrete: bool

    @property
    def ok(self):
        return self.kernel_isomorphic and self.quotient_discrete


def gerbe_decomposition(g):
    roster = aut_roster(g)
    mor, arrows = build_morphism_groupoid(roster)
    kgrp = center_group(g)
    kernel_orders = []
    iso_ok = True
    for i, m in enumerate(roster.objects):
        loops = [a for s, t, a in arrows if s == i and t == i]
        kernel_orders.append(len(loops))
        images = [iso_psi(m, sec).alpha for sec in kgrp.labels]
        if sorted(images) != sorted(a.alpha for a in loops):
            iso_ok = False
            continue
        pos = {alpha: n for n, alpha in enumerate(images)}
        for s in range(kgrp.order):
            for t in range(kgrp.order):
                comp = vertical_compose(MorArrow(m, m, images[s]), MorArrow(m, m, images[t]))
                if pos[comp.alpha] != kgrp.table[s][t]:
                    iso_ok = False
    # every hom-set is a torsor under the kernel, so the quotient keeps one arrow per pair
    pairs = sorted({(s, t) for s, t, _ in arrows})
    pindex = {p: n for n, p in enumerate(pairs)}
    projection = [pindex[(s, t)] for s, t, _ in arrows]
    n = len(roster.objects)
    compose = [(pindex[(a, b)], pindex[(b, c)], pindex[(a, c)]) for a, b in pairs for b2, c in pairs if b2 == b]
    quotient = validate(n, pairs, compose, name="|Aut|")
    cs = coarse_space(quotient)
    discrete_ok = all(len(quotient.loops(a)) == 1 for a in quotient.objects)
    return GerbeReport(kgrp.order, kernel_orders, iso_ok, quotient, projection, cs.n_classes, discrete_ok)


@dataclass
class AutGroupTable:
    elements: list
    rep_index: list
    class_of: list
    mult: list
    unit: int
    inverse: list
    roster: MorRoster = field(repr=False, default=None)

    @property
    def order(self):
        return len(self.elements)

    def group(self):
        return groups.FiniteGroup(tuple(tuple(r) for r in self.mult))


def _connected(m1, m2):
    return bool(enumerate_arrows(m1, m2, limit=1))


def classify(m, reps):
    """Index of the first representative arrow-connected to ``m``."""
    for i, r in enumerate(reps):
        if _connected(m, r):
            return i
    return None


def coarse_aut_group(g, mode="general"):
    """Group of arrow-connectivity classes of automorphisms; ``mult[i][j]`` is "i then j"."""
    roster = aut_roster(g, mode)
    objs = roster.objects
    uf = _UnionFind(len(objs))
    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            if uf.find(i) != uf.find(j) and _connected(objs[i], objs[j]):
                uf.union(i, j)
    roots = sorted({uf.find(i) for i in range(len(objs))})
    cls = {r: n for n, r in enumerate(roots)}
    class_of = [cls[uf.find(i)] for i in range(len(objs))]
    reps = [objs[r] for r in roots]
    mult = []
    for a in reps:
        row = []
        for b in reps:
            c = classify(h_compose(a, b), reps)
            if c is None:
                raise GroupAxiomFailure("composite is not connected to any representative")
            row.append(c)
        mult.append(row)
    one = identity_morphism(g, mode)
    unit = classify(one, reps)
    if unit is None:
        raise GroupAxiomFailure("identity morphism is not in any class")
    for r in reps:
        left_unit_arrow(r)
        right_unit_arrow(r)
    try:
        grp = groups.group_from_table(mult)
    except NotAGroup as e:
        raise GroupAxiomFailure(str(e), witness=e.witness) from e
    if grp.unit != unit:
        raise GroupAxiomFailure("table unit differs from the class of the identity morphism")
    return AutGroupTable(reps, roots, class_of, mult, unit, list(grp.inverse), roster)


@dataclass
class ActionReport:
    ok: bool
    classes: list
    table: AutGroupTable


def validate_group_action(k, slices, g):
    """Check that per-element slices define a K-action on ``g``.

    ``k`` is a group table (or FiniteGroup) and ``slices[a]`` the
    generalized self-morphism of ``g`` attached to element ``a``.
    """
    grp = k if isinstance(k, groups.FiniteGroup) else groups.group_from_table(k)
    if center_group(g).order != 1:
        raise NontrivialCenter("actions are only defined for groupoids with trivial center")
    if len(slices) != grp.order:
        raise NotAutomorphismSlice("need one slice per group element")
    for a, m in enumerate(slices):
        if not _same(m.G, g) or not is_automorphism(m):
            raise NotAutomorphismSlice(f"slice {a} is not an automorphism", witness=a)
    table = coarse_aut_group(g, slices[0].mode)
    classes = []
    for a, m in enumerate(slices):
        c = classify(m, table.elements)
        if c is None:
            raise NotAutomorphismSlice(f"slice {a} lies in no class", witness=a)
        classes.append(c)
    for a in range(grp.order):
        for b in range(grp.order):
            if classes[grp.table[a][b]] != table.mult[classes[a]][classes[b]]:
                raise NotHomomorphism(f"slices of {a}, {b} do not compose to the slice of their product",
                                      witness=[a, b])
    return ActionReport(True, classes, table)
