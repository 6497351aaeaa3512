"""Generalized morphisms (spans) between groupoids and the arrows between them.

A generalized morphism ``G => H`` is a span ``G <-psi- K -u-> H`` with psi
an equivalence.  In ``"full"`` mode psi must also be onto objects, and arrows
live over the strict fiber product instead of the weak one.
"""

from dataclasses import dataclass, field
from functools import cached_property

from .core import pullback, validate
from .errors import (
    BaseMismatch,
    InternalNoLift,
    InternalNoSplitting,
    InvalidMorphism,
    ModeMismatch,
    NotComposable,
    NotFullMode,
    NotNatural,
)
from .fiber import embed_q, fiber_product, q_objects, strict_fiber_product
from .functors import (
    StrictMorphism,
    compose_strict,
    enumerate_strict_morphisms,
    identity,
    is_equivalence,
    is_full_equivalence,
    search_transformations,
)

MODES = ("general", "full")


def _same(a, b):
    return a is b or a == b


@dataclass(frozen=True, eq=True)
class GenMorphism:
    psi: StrictMorphism
    u: StrictMorphism
    mode: str = "general"
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidMorphism(f"unknown mode {self.mode!r}")
        if self.check:
            if not _same(self.psi.dom, self.u.dom):
                raise InvalidMorphism("psi and u have different domains")
            rep = is_full_equivalence(self.psi) if self.mode == "full" else is_equivalence(self.psi)
            if not rep:
                raise InvalidMorphism(f"psi is not a {'full-' if self.mode == 'full' else ''}equivalence: {rep.reason}",
                                      witness=rep.witness)

    def __hash__(self):
        return hash((self.psi, self.u, self.mode))

    @property
    def K(self):
        return self.psi.dom

    @property
    def G(self):
        return self.psi.cod

    @property
    def H(self):
        return self.u.cod

    def with_mode(self, mode):
        return GenMorphism(self.psi, self.u, mode)

    @cached_property
    def _lift_table(self):
        K, psi = self.K, self.psi
        return {(K.src[y], K.tgt[y], psi.f1[y]): y for y in K.arrows}

    def lift(self, k, k2, x):
        """The arrow ``k -> k2`` of K over ``x`` (psi is fully faithful)."""
        y = self._lift_table.get((k, k2, x))
        if y is None:
            raise InternalNoLift(f"no lift of {x} from {k} to {k2}", witness=(k, k2, x))
        return y

    def __repr__(self):
        return f"GenMorphism(mode={self.mode}, K={self.K.n_objects}/{self.K.n_arrows}, u={self.u!r})"


def _lift_through(f, k, k2, x):
    """Lift through an arbitrary fully faithful strict morphism ``f``."""
    for y in f.dom.hom(k, k2):
        if f.f1[y] == x:
            return y
    raise InternalNoLift(f"no lift of {x} from {k} to {k2}", witness=(k, k2, x))


def identity_morphism(g, mode="full"):
    ident = identity(g)
    return GenMorphism(ident, ident, mode, check=False)


def _check_pair(m1, m2):
    if m1.mode != m2.mode:
        raise ModeMismatch(f"modes differ: {m1.mode} vs {m2.mode}")
    if not _same(m1.G, m2.G) or not _same(m1.H, m2.H):
        raise BaseMismatch("morphisms have different source or target groupoids")


def carrier_of(m1, m2):
    if m1.mode == "full":
        return strict_fiber_product(m1.psi, m2.psi)
    return fiber_product(m1.psi, m2.psi)


@dataclass(frozen=True)
class MorArrow:
    """An arrow ``src -> tgt``: ``alpha[i]`` is an H-arrow at carrier object ``i``."""

    src: GenMorphism
    tgt: GenMorphism
    alpha: tuple

    @property
    def mode(self):
        return self.src.mode

    @property
    def carrier(self):
        return carrier_of(self.src, self.tgt)

    def at(self, *obj):
        """Value at a decoded carrier object ``(k1, x, k2)`` or ``(k1, k2)``."""
        return self.alpha[self.carrier.object_encode[tuple(obj)]]

    def __repr__(self):
        return f"MorArrow({list(self.alpha)})"


def _edges(m1, m2):
    """Naturality constraints of ``u1∘π1 => u2∘π2`` on carrier generators."""
    car = carrier_of(m1, m2)
    return [(s, t, m1.u.f1[y], m2.u.f1[z]) for y, s, z, t in car.generators()]


def _obj_images(m1, m2):
    car = carrier_of(m1, m2)
    if m1.mode == "full":
        return [m1.u.f0[a] for a, _ in car.object_decode], [m2.u.f0[b] for _, b in car.object_decode]
    return [m1.u.f0[a] for a, _, _ in car.object_decode], [m2.u.f0[b] for _, _, b in car.object_decode]


def check_arrow(arrow):
    """Raise NotNatural unless ``alpha`` is natural over the carrier."""
    m1, m2 = arrow.src, arrow.tgt
    H = m1.H
    f0, g0 = _obj_images(m1, m2)
    if len(arrow.alpha) != len(f0):
        raise NotNatural("alpha has the wrong length")
    for i, c in enumerate(arrow.alpha):
        if H.src[c] != f0[i] or H.tgt[c] != g0[i]:
            raise NotNatural(f"alpha at {i} has the wrong type", witness=i)
    a = arrow.alpha
    for s, t, fx, gx in _edges(m1, m2):
        if H._mul_pair(fx, a[t]) != H._mul_pair(a[s], gx):
            raise NotNatural(f"naturality fails between carrier objects {s} and {t}", witness=(s, t))
    return arrow


def make_arrow(m1, m2, alpha, check=True):
    arrow = MorArrow(m1, m2, tuple(alpha))
    return check_arrow(arrow) if check else arrow


def enumerate_arrows(m1, m2, limit=None):
    """All arrows ``m1 -> m2``, sorted by their values on the carrier."""
    _check_pair(m1, m2)
    f0, g0 = _obj_images(m1, m2)
    comps = search_transformations(len(f0), _edges(m1, m2), f0, g0, m1.H, limit)
    return [MorArrow(m1, m2, c) for c in comps]


# vertical composition

def _splittings(m1, m2, k1, x):
    """All ``(k2, x1)`` with ``x1: psi1(k1) -> psi2(k2)``, in search order."""
    G = m1.G
    for k2 in m2.K.objects:
        for x1 in G.hom(m1.psi.f0[k1], m2.psi.f0[k2]):
            yield k2, x1, G._mul_pair(G.inv[x1], x)


def _first_splittings(m1, m2):
    """For each object c of G, the first ``(k2, x1)`` with ``x1: c -> psi2(k2)``."""
    G = m1.G
    out = {}
    for c in set(m1.psi.f0):
        for k2 in m2.K.objects:
            hom = G.hom(c, m2.psi.f0[k2])
            if hom:
                out[c] = (k2, hom[0])
                break
    return out


def _vertical_values(a1, a2, all_choices):
    m1, m2, m3 = a1.src, a1.tgt, a2.tgt
    H = m1.H
    out = []
    if m1.mode == "full":
        c12, c23, c13 = carrier_of(m1, m2), carrier_of(m2, m3), carrier_of(m1, m3)
        for k1, k3 in c13.object_decode:
            target = m1.psi.f0[k1]
            vals = [
                H._mul_pair(a1.alpha[c12.object_encode[(k1, k2)]], a2.alpha[c23.object_encode[(k2, k3)]])
                for k2 in m2.K.objects
                if m2.psi.f0[k2] == target
            ]
            if not vals:
                raise InternalNoSplitting(f"no middle object over {target}", witness=(k1, k3))
            out.append(vals if all_choices else vals[0])
        return out
    c12, c23, c13 = carrier_of(m1, m2), carrier_of(m2, m3), carrier_of(m1, m3)
    first = {} if all_choices else _first_splittings(m1, m2)
    for k1, x, k3 in c13.object_decode:
        vals = []
        hit = first.get(m1.psi.f0[k1])
        options = [(hit[0], hit[1], m1.G._mul_pair(m1.G.inv[hit[1]], x))] if hit else _splittings(m1, m2, k1, x)
        for k2, x1, x2 in options:
            vals.append(H._mul_pair(a1.alpha[c12.object_encode[(k1, x1, k2)]],
                                    a2.alpha[c23.object_encode[(k2, x2, k3)]]))
            if not all_choices:
                break
        if not vals:
            raise InternalNoSplitting(f"no splitting of {x}", witness=(k1, x, k3))
        out.append(vals if all_choices else vals[0])
    return out


def _check_composable(a1, a2):
    if a1.mode != a2.mode:
        raise ModeMismatch("arrows live in different modes")
    if not (a1.tgt is a2.src or a1.tgt == a2.src):
        raise NotComposable("target of the first arrow is not the source of the second")


def vertical_compose(a1, a2):
    """``a1`` then ``a2``, using the first splitting found."""
    _check_composable(a1, a2)
    return MorArrow(a1.src, a2.tgt, tuple(_vertical_values(a1, a2, False)))


def vertical_compose_all_choices(a1, a2):
    """Per carrier object, the composite value for every admissible splitting."""
    _check_composable(a1, a2)
    return _vertical_values(a1, a2, True)


def unit_arrow(m):
    car = carrier_of(m, m)
    if m.mode == "full":
        G = m.G
        alpha = [m.u.f1[m.lift(k, k2, G.unit[m.psi.f0[k]])] for k, k2 in car.object_decode]
    else:
        alpha = [m.u.f1[m.lift(k, k2, x)] for k, x, k2 in car.object_decode]
    return MorArrow(m, m, tuple(alpha))


def invert_arrow(a):
    m1, m2 = a.src, a.tgt
    H, G = m1.H, m1.G
    c12, c21 = carrier_of(m1, m2), carrier_of(m2, m1)
    if a.mode == "full":
        alpha = [H.inv[a.alpha[c12.object_encode[(k1, k2)]]] for k2, k1 in c21.object_decode]
    else:
        alpha = [H.inv[a.alpha[c12.object_encode[(k1, G.inv[x], k2)]]] for k2, x, k1 in c21.object_decode]
    return MorArrow(m2, m1, tuple(alpha))


# rosters and the morphism groupoid

@dataclass
class MorRoster:
    G: object
    H: object
    objects: list
    mode: str = "general"

    def __post_init__(self):
        for m in self.objects:
            if m.mode != self.mode:
                raise ModeMismatch(f"roster entry in mode {m.mode}, roster in {self.mode}")
            if not _same(m.G, self.G) or not _same(m.H, self.H):
                raise BaseMismatch("roster entry has different source or target groupoid")

    def __len__(self):
        return len(self.objects)

    def with_mode(self, mode):
        return MorRoster(self.G, self.H, [m.with_mode(mode) for m in self.objects], mode)


def build_morphism_groupoid(roster):
    """The groupoid with roster entries as objects and all arrows between them.

    Returns ``(groupoid, arrows)`` where ``arrows[i]`` is ``(src, tgt, MorArrow)``
    with roster indices.  The result goes through the groupoid validator.
    """
    objs = roster.objects
    arrows = []
    index = {}
    for i, m1 in enumerate(objs):
        for j, m2 in enumerate(objs):
            for a in enumerate_arrows(m1, m2):
                index[(i, j, a.alpha)] = len(arrows)
                arrows.append((i, j, a))
    compose = []
    by_src = {}
    for p, (i, j, _) in enumerate(arrows):
        by_src.setdefault(i, []).append(p)
    for p, (i, j, a) in enumerate(arrows):
        for q in by_src.get(j, ()):
            _, k, b = arrows[q]
            c = vertical_compose(MorArrow(objs[i], objs[j], a.alpha), MorArrow(objs[j], objs[k], b.alpha))
            compose.append((p, q, index[(i, k, c.alpha)]))
    g = validate(len(objs), [(i, j) for i, j, _ in arrows], compose, name="Mor")
    return g, arrows


# the comparison functor from full to general mode

def _require_full(a):
    if a.mode != "full":
        raise NotFullMode("expected an arrow between full-morphisms")


def _connecting(m1, m2, sfp, fp, k1, x, k2):
    """All ``(a, y, z)``: strict object ``a`` and arrow ``(y, q0(a), z)`` ending at ``(k1, x, k2)``."""
    G = m1.G
    out = []
    for a, (k1p, k2p) in enumerate(sfp.object_decode):
        for y in m1.K.hom(k1p, k1):
            need = G._mul_pair(m1.psi.f1[y], x)
            for z in m2.K.hom(k2p, k2):
                if m2.psi.f1[z] == need:
                    out.append((a, y, z))
    return out


def _embed_values(a, all_choices):
    m1, m2 = a.src, a.tgt
    gm1, gm2 = m1.with_mode("general"), m2.with_mode("general")
    sfp, fp = carrier_of(m1, m2), carrier_of(gm1, gm2)
    H = m1.H
    out = []
    for k1, x, k2 in fp.object_decode:
        vals = []
        for i, y, z in _connecting(m1, m2, sfp, fp, k1, x, k2):
            vals.append(H.mul(H.inv[m1.u.f1[y]], a.alpha[i], m2.u.f1[z]))
            if not all_choices:
                break
        if not vals:
            raise InternalNoSplitting("no connecting arrow from the strict part", witness=(k1, x, k2))
        out.append(vals if all_choices else vals[0])
    return gm1, gm2, out


def embed_i(a):
    """Extend a full-mode arrow to the weak fiber product carrier."""
    _require_full(a)
    gm1, gm2, vals = _embed_values(a, False)
    return MorArrow(gm1, gm2, tuple(vals))


def embed_i_all_choices(a):
    _require_full(a)
    return _embed_values(a, True)[2]


def embed_i_inverse(b):
    """Restrict a general-mode arrow along the strict-into-weak inclusion."""
    fm1, fm2 = b.src.with_mode("full"), b.tgt.with_mode("full")
    sfp, fp = carrier_of(fm1, fm2), carrier_of(b.src, b.tgt)
    q0 = q_objects(sfp, fp)
    return MorArrow(fm1, fm2, tuple(b.alpha[q0[i]] for i in range(sfp.n_objects)))


def i1_preserves_composition_check(a, b):
    full = vertical_compose(a, b)
    pulled = embed_i_inverse(vertical_compose(embed_i(a), embed_i(b)))
    return full.alpha == pulled.alpha


def q_morphism(m1, m2):
    """``embed_q`` for the carrier of a pair of full-morphisms."""
    sfp = strict_fiber_product(m1.psi, m2.psi)
    fp = fiber_product(m1.psi, m2.psi)
    return embed_q(sfp, fp)


# replacement used to show essential surjectivity of embed_i

def replacement_morphism(m):
    """``(pi1, G ×_{id,G,psi} K, u∘pi2)`` as a full-morphism."""
    fp = fiber_product(identity(m.G), m.psi)
    return GenMorphism(fp.pi1, compose_strict(fp.pi2, m.u), "full")


def replacement_arrow(m):
    """Arrow ``m -> replacement_morphism(m)`` in general mode."""
    r = replacement_morphism(m).with_mode("general")
    m = m.with_mode("general")
    car = carrier_of(m, r)
    inner = fiber_product(identity(m.G), m.psi)
    G = m.G
    alpha = []
    for k, x, p in car.object_decode:
        _, y, k2 = inner.object_decode[p]
        alpha.append(m.u.f1[m.lift(k, k2, G._mul_pair(x, y))])
    return make_arrow(m, r, alpha)


# roster generators

def strict_roster(g, h, mode="general", only_equivalences=False):
    """``(id_G, G, u)`` for every strict morphism ``u: G -> H``."""
    ident = identity(g)
    us = enumerate_strict_morphisms(g, h)
    if only_equivalences:
        us = [u for u in us if is_equivalence(u)]
    return MorRoster(g, h, [GenMorphism(ident, u, mode, check=False) for u in us], mode)


def refinement_roster(g, h, selections, mode="full"):
    """For each object multiselection covering G, the pulled-back K with every u: K -> H."""
    objs = []
    for sel in selections:
        k, psi = pullback(g, sel)
        for u in enumerate_strict_morphisms(k, h):
            objs.append(GenMorphism(psi, u, mode))
    return MorRoster(g, h, objs, mode)


def covering_selections(n_objects, extra=1):
    """Selections listing every object once plus up to ``extra`` repeated objects."""
    base = list(range(n_objects))
    out = [tuple(base)]
    if extra >= 1:
        for a in range(n_objects):
            out.append(tuple(sorted(base + [a])))
    return out
