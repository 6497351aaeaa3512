"""Strict morphisms, natural transformations and equivalences."""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import groups
from .core import coarse_space, isotropy_group
from .errors import DomainMismatch, NotAFunctor, NotAnEquivalence, NotNatural


class StrictMorphism:
    """A functor ``dom -> cod`` given by its object and arrow maps."""

    def __init__(self, dom, cod, f0, f1, check=True):
        self.dom = dom
        self.cod = cod
        self.f0 = tuple(f0)
        self.f1 = tuple(f1)
        if check:
            check_functor(self)

    def __call__(self, x):
        return self.f1[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, StrictMorphism):
            return NotImplemented
        return self.f0 == other.f0 and self.f1 == other.f1 and self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.f0, self.f1))

    def __repr__(self):
        return f"StrictMorphism(f0={list(self.f0)}, f1={list(self.f1)})"


def check_functor(f):
    g, h = f.dom, f.cod
    if len(f.f0) != g.n_objects or len(f.f1) != g.n_arrows:
        raise NotAFunctor("object or arrow map has the wrong length")
    for a, b in enumerate(f.f0):
        if not (0 <= b < h.n_objects):
            raise NotAFunctor(f"object {a} maps outside the codomain", witness=a)
    for x, y in enumerate(f.f1):
        if not (0 <= y < h.n_arrows):
            raise NotAFunctor(f"arrow {x} maps outside the codomain", witness=x)
        if h.src[y] != f.f0[g.src[x]] or h.tgt[y] != f.f0[g.tgt[x]]:
            raise NotAFunctor(f"arrow {x} is not sent between the images of its ends", witness=x)
    for a in g.objects:
        if f.f1[g.unit[a]] != h.unit[f.f0[a]]:
            raise NotAFunctor(f"unit at {a} not preserved", witness=a)
    for x, y in g.composable_pairs():
        if f.f1[g._mul_pair(x, y)] != h._mul_pair(f.f1[x], f.f1[y]):
            raise NotAFunctor(f"composite {x}·{y} not preserved", witness=(x, y))


def identity(g):
    return StrictMorphism(g, g, range(g.n_objects), range(g.n_arrows), check=False)


def compose_strict(f, g):
    """``f`` then ``g``."""
    if not (f.cod is g.dom or f.cod == g.dom):
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    return StrictMorphism(f.dom, g.cod, [g.f0[b] for b in f.f0], [g.f1[y] for y in f.f1], check=False)


def inverse_iso(f):
    """Inverse of a strict isomorphism (bijective on objects and arrows)."""
    if sorted(f.f0) != list(range(f.cod.n_objects)) or sorted(f.f1) != list(range(f.cod.n_arrows)):
        raise NotAnEquivalence("map is not bijective on objects and arrows")
    g0 = [0] * len(f.f0)
    g1 = [0] * len(f.f1)
    for a, b in enumerate(f.f0):
        g0[b] = a
    for x, y in enumerate(f.f1):
        g1[y] = x
    return StrictMorphism(f.cod, f.dom, g0, g1, check=False)


class NaturalTransformation:
    """Components ``comp[a]: f0(a) -> g0(a)`` with ``f1(x)·comp[b] = comp[a]·g1(x)``."""

    def __init__(self, src, tgt, comp, check=True):
        self.src = src
        self.tgt = tgt
        self.comp = tuple(comp)
        if check:
            check_natural(self)

    def __getitem__(self, a):
        return self.comp[a]

    def __eq__(self, other):
        if not isinstance(other, NaturalTransformation):
            return NotImplemented
        return self.comp == other.comp and self.src == other.src and self.tgt == other.tgt

    def __hash__(self):
        return hash(self.comp)

    def __repr__(self):
        return f"NaturalTransformation({list(self.comp)})"


def check_natural(t):
    f, g = t.src, t.tgt
    dom, h = f.dom, f.cod
    if len(t.comp) != dom.n_objects:
        raise NotNatural("component count differs from object count")
    for a, c in enumerate(t.comp):
        if not (0 <= c < h.n_arrows) or h.src[c] != f.f0[a] or h.tgt[c] != g.f0[a]:
            raise NotNatural(f"component at {a} has the wrong type", witness=a)
    for x in dom.arrows:
        a, b = dom.src[x], dom.tgt[x]
        if h._mul_pair(f.f1[x], t.comp[b]) != h._mul_pair(t.comp[a], g.f1[x]):
            raise NotNatural(f"naturality square fails on arrow {x}", witness=x)


def vertical(t1, t2):
    """Pointwise composite of ``t1: f => g`` and ``t2: g => h``."""
    h = t1.src.cod
    return NaturalTransformation(t1.src, t2.tgt, [h._mul_pair(p, q) for p, q in zip(t1.comp, t2.comp)], check=False)


def _same_ends(f, g):
    if not (f.dom is g.dom or f.dom == g.dom) or not (f.cod is g.cod or f.cod == g.cod):
        raise DomainMismatch("transformations need functors with equal domain and codomain")


def _components(g):
    """Per connected component: (root, BFS tree as [(arrow, from, to)], objects)."""
    seen = [False] * g.n_objects
    comps = []
    for r in g.objects:
        if seen[r]:
            continue
        seen[r] = True
        tree, objs, frontier = [], [r], [r]
        while frontier:
            nxt = []
            for a in frontier:
                for x in g.out_arrows(a):
                    b = g.tgt[x]
                    if not seen[b]:
                        seen[b] = True
                        tree.append((x, a, b))
                        objs.append(b)
                        nxt.append(b)
            frontier = nxt
        comps.append((r, tree, objs))
    return comps


def search_transformations(n_objects, edges, f0, g0, h, limit=None):
    """Component tuples ``c`` with ``c[a]: f0[a] -> g0[a]`` in ``h`` and
    ``fx·c[t] = c[s]·gx`` for every edge ``(s, t, fx, gx)``.

    Values are fixed per connected component (of the edge graph) by a root
    value, propagated along a spanning tree, then checked on every edge.
    Results are sorted lexicographically.
    """
    mul, inv = h._mul_pair, h.inv
    adj = [[] for _ in range(n_objects)]
    by_src = [[] for _ in range(n_objects)]
    for e in edges:
        s, t, fx, gx = e
        by_src[s].append(e)
        adj[s].append((t, inv[fx], gx))
        adj[t].append((s, fx, inv[gx]))
    seen = [False] * n_objects
    per_comp = []
    for r in range(n_objects):
        if seen[r]:
            continue
        seen[r] = True
        order, tree, frontier = [r], [], [r]
        while frontier:
            nxt = []
            for a in frontier:
                for b, left, right in adj[a]:
                    if not seen[b]:
                        seen[b] = True
                        tree.append((a, b, left, right))
                        order.append(b)
                        nxt.append(b)
            frontier = nxt
        local = [e for a in order for e in by_src[a]]
        found = []
        for c in h.hom(f0[r], g0[r]):
            alpha = {r: c}
            for a, b, left, right in tree:
                alpha[b] = mul(mul(left, alpha[a]), right)
            if all(mul(fx, alpha[t]) == mul(alpha[s], gx) for s, t, fx, gx in local):
                found.append(alpha)
        if not found:
            return []
        per_comp.append(found)
    out = []
    for choice in product(*per_comp):
        comp = [0] * n_objects
        for alpha in choice:
            for a, c in alpha.items():
                comp[a] = c
        out.append(tuple(comp))
    out.sort()
    return out if limit is None else out[:limit]


def enumerate_nat_trans(f, g, limit=None):
    """All natural transformations ``f => g``, ordered lexicographically by components."""
    _same_ends(f, g)
    dom = f.dom
    edges = [(dom.src[x], dom.tgt[x], f.f1[x], g.f1[x]) for x in dom.arrows]
    comps = search_transformations(dom.n_objects, edges, f.f0, g.f0, f.cod, limit)
    return [NaturalTransformation(f, g, c, check=False) for c in comps]


@dataclass(frozen=True)
class EquivalenceReport:
    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


def is_equivalence(f):
    """Essentially surjective and fully faithful, with a witness on failure."""
    g, h = f.dom, f.cod
    cs_h = coarse_space(h)
    hit = {cs_h.class_of[b] for b in f.f0}
    for b in h.objects:
        if cs_h.class_of[b] not in hit:
            return EquivalenceReport(False, "not essentially surjective", b)
    cs_g = coarse_space(g)
    # distinct components must land in distinct components, or some empty
    # hom-set would map onto a nonempty one
    owner = {}
    for a in g.objects:
        c = cs_g.class_of[a]
        prev = owner.setdefault(cs_h.class_of[f.f0[a]], c)
        if prev != c:
            b = cs_g.classes()[prev][0]
            return EquivalenceReport(False, "not full and faithful", (b, a))
    for comp in cs_g.classes():
        for a in comp:
            for b in comp:
                src = g.hom(a, b)
                tgt = h.hom(f.f0[a], f.f0[b])
                if len(src) != len(tgt) or len({f.f1[x] for x in src}) != len(src):
                    return EquivalenceReport(False, "not full and faithful", (a, b))
    return EquivalenceReport(True)


def is_full_equivalence(f):
    rep = is_equivalence(f)
    if not rep:
        return rep
    missed = set(f.cod.objects) - set(f.f0)
    if missed:
        return EquivalenceReport(False, "object map not surjective", min(missed))
    return rep


def quasi_inverse(f):
    """Return ``(g, eta, eps)`` with ``eta: (f then g) => id`` and ``eps: (g then f) => id``.

    Each codomain object ``b`` goes to its least-index exact preimage if there
    is one, otherwise to the least-index domain object whose image is
    connected to ``b``, using the least connecting arrow.
    """
    rep = is_equivalence(f)
    if not rep:
        raise NotAnEquivalence(rep.reason, witness=rep.witness)
    g, h = f.dom, f.cod
    choice = []
    for b in h.objects:
        pick = next((a for a in g.objects if f.f0[a] == b), None)
        if pick is not None:
            choice.append((pick, h.unit[b]))
            continue
        for a in g.objects:
            arrows = h.hom(f.f0[a], b)
            if arrows:
                choice.append((a, min(arrows)))
                break
    lift = {}
    for x in g.arrows:
        lift[(g.src[x], g.tgt[x], f.f1[x])] = x
    g0 = [a for a, _ in choice]
    g1 = []
    for y in h.arrows:
        b, b2 = h.src[y], h.tgt[y]
        (a, e), (a2, e2) = choice[b], choice[b2]
        g1.append(lift[(a, a2, h.mul(e, y, h.inv[e2]))])
    q = StrictMorphism(h, g, g0, g1, check=False)
    eta = [lift[(g0[f.f0[a]], a, choice[f.f0[a]][1])] for a in g.objects]
    eps = [e for _, e in choice]
    fg = compose_strict(f, q)
    gf = compose_strict(q, f)
    return (
        q,
        NaturalTransformation(fg, identity(g), eta),
        NaturalTransformation(gf, identity(h), eps),
    )


def morita_equivalent(g, h):
    """Compare skeletons: class counts, then isotropy groups up to isomorphism."""
    cg, ch = coarse_space(g), coarse_space(h)
    if cg.n_classes != ch.n_classes:
        return False
    left = [isotropy_group(g, a) for a in cg.representatives()]
    right = [isotropy_group(h, b) for b in ch.representatives()]
    # isomorphism is an equivalence relation, so greedy matching is exact
    for grp in left:
        k = next((i for i, other in enumerate(right) if groups.is_isomorphic(grp, other)), None)
        if k is None:
            return False
        right.pop(k)
    return True


def enumerate_strict_morphisms(g, h):
    """All functors ``g -> h``, sorted by ``(f0, f1)``.

    On each component with root ``r`` and spanning-tree arrows ``t_a: r -> a``
    a functor is fixed by ``f0(r)``, a homomorphism of isotropy groups at
    ``r``, and the images of the tree arrows.
    """
    per_comp = []
    for r, tree, objs in _components(g):
        path = {r: g.unit[r]}
        for x, a, b in tree:
            path[b] = g._mul_pair(path[a], x)
        gam = isotropy_group(g, r)
        loop_index = {x: i for i, x in enumerate(gam.labels)}
        comp_arrows = [x for a in objs for x in g.out_arrows(a)]
        options = []
        for c in h.objects:
            delta = isotropy_group(h, c)
            homs = groups.homomorphisms(gam, delta)
            rest = [b for b in objs if b != r]
            choices = [[y for d in h.objects for y in h.hom(c, d)] for _ in rest]
            for phi in homs:
                for imgs in product(*choices):
                    t_img = {r: h.unit[c]}
                    t_img.update(zip(rest, imgs))
                    obj = {a: h.tgt[t_img[a]] for a in objs}
                    arr = {}
                    for x in comp_arrows:
                        a, b = g.src[x], g.tgt[x]
                        loop = g.mul(path[a], x, g.inv[path[b]])
                        val = delta.labels[phi[loop_index[loop]]]
                        arr[x] = h.mul(h.inv[t_img[a]], val, t_img[b])
                    options.append((obj, arr))
        per_comp.append(options)
    out = []
    for combo in product(*per_comp):
        f0 = [0] * g.n_objects
        f1 = [0] * g.n_arrows
        for obj, arr in combo:
            for a, b in obj.items():
                f0[a] = b
            for x, y in arr.items():
                f1[x] = y
        out.append((tuple(f0), tuple(f1)))
    out.sort()
    return [StrictMorphism(g, h, f0, f1, check=False) for f0, f1 in out]


def strict_self_equivalences(g):
    return [f for f in enumerate_strict_morphisms(g, g) if is_equivalence(f)]
