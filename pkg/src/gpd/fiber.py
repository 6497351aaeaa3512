"""Fiber products of groupoids, strict and weak, with their canonical maps.

Weak fiber product of ``f: F -> H`` and ``g: G -> H``: objects are triples
``(a, x, b)`` with ``x: f(a) -> g(b)``; an arrow ``(y, (a, x, b), z)`` goes
to ``(t y, f(y)^-1·x·g(z), t z)``.  Indices follow lexicographic order of
the decoded tuples.  Objects are built eagerly, arrows only on demand.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .core import FiniteGroupoid
from .errors import CodomainMismatch, MismatchedInputs, WiringMismatch
from .functors import StrictMorphism, compose_strict, identity, NaturalTransformation


def _same(a, b):
    return a is b or a == b


class FiberProductBundle:
    def __init__(self, f, g):
        if not _same(f.cod, g.cod):
            raise CodomainMismatch("fiber product needs maps into the same groupoid")
        self.f, self.g = f, g
        F, G, H = f.dom, g.dom, f.cod
        objs = [
            (a, x, b)
            for a in F.objects
            for b in G.objects
            for x in H.hom(f.f0[a], g.f0[b])
        ]
        objs.sort()
        self.object_decode = tuple(objs)
        self.object_encode = {o: i for i, o in enumerate(objs)}

    @property
    def n_objects(self):
        return len(self.object_decode)

    def target(self, y, i, z):
        """Index of the target of the arrow ``(y, object i, z)``."""
        f, g, H = self.f, self.g, self.f.cod
        _, x, _ = self.object_decode[i]
        x2 = H._mul_pair(H._mul_pair(H.inv[f.f1[y]], x), g.f1[z])
        return self.object_encode[(f.dom.tgt[y], x2, g.dom.tgt[z])]

    def generators(self):
        """Arrows ``(y, o, 1)`` and ``(1, o, z)`` with ``y``, ``z`` from generating sets of the
        factors, as ``(y, s, z, t)``; they generate every arrow."""
        return self._generators

    @cached_property
    def _generators(self):
        F, G = self.f.dom, self.g.dom
        fg, gg = F.generators_from, G.generators_from
        out = []
        for i, (a, _, b) in enumerate(self.object_decode):
            for y in fg[a]:
                out.append((y, i, G.unit[b], self.target(y, i, G.unit[b])))
            for z in gg[b]:
                out.append((F.unit[a], i, z, self.target(F.unit[a], i, z)))
        return tuple(out)

    def arrows_between(self, i, j):
        """All ``(y, z)`` with ``(y, object i, z)`` landing on object ``j``."""
        F, G = self.f.dom, self.g.dom
        a, _, b = self.object_decode[i]
        a2, _, b2 = self.object_decode[j]
        return [(y, z) for y in F.hom(a, a2) for z in G.hom(b, b2) if self.target(y, i, z) == j]

    @cached_property
    def arrow_decode(self):
        F, G = self.f.dom, self.g.dom
        out = []
        for i, (a, _, b) in enumerate(self.object_decode):
            for y in F.out_arrows(a):
                for z in G.out_arrows(b):
                    out.append((y, self.object_decode[i], z))
        out.sort()
        return tuple(out)

    @cached_property
    def arrow_encode(self):
        return {d: i for i, d in enumerate(self.arrow_decode)}

    @cached_property
    def total(self):
        F, G = self.f.dom, self.g.dom
        dec, enc, oenc = self.arrow_decode, self.arrow_encode, self.object_encode
        src, tgt = [], []
        for y, o, z in dec:
            i = oenc[o]
            src.append(i)
            tgt.append(self.target(y, i, z))

        def mul(p, q):
            y, o, z = dec[p]
            y2, _, z2 = dec[q]
            return enc[(F._mul_pair(y, y2), o, G._mul_pair(z, z2))]

        unit = [enc[(F.unit[a], (a, x, b), G.unit[b])] for a, x, b in self.object_decode]
        inverse = [enc[(F.inv[y], self.object_decode[tgt[p]], G.inv[z])] for p, (y, _, z) in enumerate(dec)]
        return FiniteGroupoid(self.n_objects, src, tgt, mul, unit, inverse, name="fiber")

    @cached_property
    def pi1(self):
        return StrictMorphism(self.total, self.f.dom, [a for a, _, _ in self.object_decode],
                              [y for y, _, _ in self.arrow_decode], check=False)

    @cached_property
    def pi2(self):
        return StrictMorphism(self.total, self.g.dom, [b for _, _, b in self.object_decode],
                              [z for _, _, z in self.arrow_decode], check=False)

    def __repr__(self):
        return f"FiberProductBundle(objects={self.n_objects})"


class StrictFiberProductBundle:
    def __init__(self, f1, f2):
        if not _same(f1.cod, f2.cod):
            raise CodomainMismatch("fiber product needs maps into the same groupoid")
        self.f1, self.f2 = f1, f2
        A, B = f1.dom, f2.dom
        objs = [(a, b) for a in A.objects for b in B.objects if f1.f0[a] == f2.f0[b]]
        self.object_decode = tuple(objs)
        self.object_encode = {o: i for i, o in enumerate(objs)}
        by_image = {}
        for y in B.arrows:
            by_image.setdefault(f2.f1[y], []).append(y)
        arrows = [(x, y) for x in A.arrows for y in by_image.get(f1.f1[x], ())]
        self.arrow_decode = tuple(arrows)
        self.arrow_encode = {d: i for i, d in enumerate(arrows)}

    @property
    def n_objects(self):
        return len(self.object_decode)

    def generators(self):
        return self._generators

    @cached_property
    def _generators(self):
        A, B = self.f1.dom, self.f2.dom
        enc = self.object_encode
        return tuple((x, enc[(A.src[x], B.src[y])], y, enc[(A.tgt[x], B.tgt[y])]) for x, y in self.arrow_decode)

    @cached_property
    def total(self):
        A, B = self.f1.dom, self.f2.dom
        dec, enc, oenc = self.arrow_decode, self.arrow_encode, self.object_encode
        src = [oenc[(A.src[x], B.src[y])] for x, y in dec]
        tgt = [oenc[(A.tgt[x], B.tgt[y])] for x, y in dec]

        def mul(p, q):
            x, y = dec[p]
            x2, y2 = dec[q]
            return enc[(A._mul_pair(x, x2), B._mul_pair(y, y2))]

        unit = [enc[(A.unit[a], B.unit[b])] for a, b in self.object_decode]
        inverse = [enc[(A.inv[x], B.inv[y])] for x, y in dec]
        return FiniteGroupoid(self.n_objects, src, tgt, mul, unit, inverse, name="strict fiber")

    @cached_property
    def pi1t(self):
        return StrictMorphism(self.total, self.f1.dom, [a for a, _ in self.object_decode],
                              [x for x, _ in self.arrow_decode], check=False)

    @cached_property
    def pi2t(self):
        return StrictMorphism(self.total, self.f2.dom, [b for _, b in self.object_decode],
                              [y for _, y in self.arrow_decode], check=False)

    def __repr__(self):
        return f"StrictFiberProductBundle(objects={self.n_objects}, arrows={len(self.arrow_decode)})"


@lru_cache(maxsize=4096)
def fiber_product(f, g):
    return FiberProductBundle(f, g)


@lru_cache(maxsize=4096)
def strict_fiber_product(f1, f2):
    return StrictFiberProductBundle(f1, f2)


def embed_q(sfp, fp):
    """The inclusion ``(a, b) -> (a, 1, b)`` of the strict product into the weak one."""
    if not (_same(sfp.f1, fp.f) and _same(sfp.f2, fp.g)):
        raise MismatchedInputs("bundles were built from different maps")
    H = fp.f.cod
    q0 = [fp.object_encode[(a, H.unit[fp.f.f0[a]], b)] for a, b in sfp.object_decode]
    q1 = [
        fp.arrow_encode[(x, fp.object_decode[q0[sfp.object_encode[(sfp.f1.dom.src[x], sfp.f2.dom.src[y])]]], y)]
        for x, y in sfp.arrow_decode
    ]
    return StrictMorphism(sfp.total, fp.total, q0, q1, check=False)


def q_objects(sfp, fp):
    """Object part of :func:`embed_q` without building either total groupoid."""
    H = fp.f.cod
    return [fp.object_encode[(a, H.unit[fp.f.f0[a]], b)] for a, b in sfp.object_decode]


def canonical_transformation(fp):
    """``f∘π1 => g∘π2`` with component ``x`` at ``(a, x, b)``."""
    return NaturalTransformation(
        compose_strict(fp.pi1, fp.f),
        compose_strict(fp.pi2, fp.g),
        [x for _, x, _ in fp.object_decode],
    )


def image_restriction_is_iso(q):
    """Whether ``q`` is injective and its image is a full subgroupoid."""
    if len(set(q.f0)) != len(q.f0) or len(set(q.f1)) != len(q.f1):
        return False
    image = set(q.f0)
    cod = q.cod
    inside = [x for x in cod.arrows if cod.src[x] in image and cod.tgt[x] in image]
    return sorted(inside) == sorted(q.f1)


# associativity

@dataclass
class AssocIso:
    """Re-association ``(H×K)×M -> H×(K×M)`` and back, for one flavor."""

    left: object
    right: object
    forward: StrictMorphism
    backward: StrictMorphism


def _wiring(f, g, u, v):
    if not _same(f.cod, g.cod) or not _same(g.dom, u.dom) or not _same(u.cod, v.cod):
        raise WiringMismatch("maps are not wired as H -> G <- K -> L <- M")


def assoc_bundles(f, g, u, v, strict=False):
    """The two iterated products ``(left, left_inner, right, right_inner)``."""
    _wiring(f, g, u, v)
    if strict:
        li = strict_fiber_product(f, g)
        left = strict_fiber_product(compose_strict(li.pi2t, u), v)
        ri = strict_fiber_product(u, v)
        right = strict_fiber_product(f, compose_strict(ri.pi1t, g))
    else:
        li = fiber_product(f, g)
        left = fiber_product(compose_strict(li.pi2, u), v)
        ri = fiber_product(u, v)
        right = fiber_product(f, compose_strict(ri.pi1, g))
    return left, li, right, ri


def assoc_object_map(f, g, u, v, strict=False):
    """Object part of the re-association, as a list indexed by left objects."""
    left, li, right, ri = assoc_bundles(f, g, u, v, strict)
    out = []
    if strict:
        for p, m in left.object_decode:
            h, k = li.object_decode[p]
            out.append(right.object_encode[(h, ri.object_encode[(k, m)])])
    else:
        for p, y, m in left.object_decode:
            h, x, k = li.object_decode[p]
            out.append(right.object_encode[(h, x, ri.object_encode[(k, y, m)])])
    return out


def assoc_iso(f, g, u, v, strict=False):
    """Canonical isomorphism between the two bracketings of a fourfold product."""
    left, li, right, ri = assoc_bundles(f, g, u, v, strict)
    f0 = assoc_object_map(f, g, u, v, strict)
    f1 = []
    if strict:
        for P, Z in left.arrow_decode:
            yh, yk = li.arrow_decode[P]
            f1.append(right.arrow_encode[(yh, ri.arrow_encode[(yk, Z)])])
    else:
        for P, o, Z in left.arrow_decode:
            yh, _, yk = li.arrow_decode[P]
            p, y, m = o
            h, x, k = li.object_decode[p]
            inner_obj = ri.object_decode[ri.object_encode[(k, y, m)]]
            inner_arrow = ri.arrow_encode[(yk, inner_obj, Z)]
            f1.append(right.arrow_encode[(yh, (h, x, ri.object_encode[(k, y, m)]), inner_arrow)])
    fwd = StrictMorphism(left.total, right.total, f0, f1, check=False)
    from .functors import inverse_iso

    return AssocIso(left, right, fwd, inverse_iso(fwd))


def _iterated_q(s_out, s_in, w_out, w_in, right):
    """Object map from a strict iterated product into the weak one."""
    q_in = q_objects(s_in, w_in)
    out = []
    if right:
        H = w_out.f.cod
        for h, r in s_out.object_decode:
            out.append(w_out.object_encode[(h, H.unit[w_out.f.f0[h]], q_in[r])])
    else:
        L = w_out.f.cod
        for p, m in s_out.object_decode:
            qp = q_in[p]
            out.append(w_out.object_encode[(qp, L.unit[w_out.f.f0[qp]], m)])
    return out


def assoc_square_commutes(f, g, u, v):
    """Whether re-associating commutes with the strict-into-weak inclusions (on objects)."""
    sl, sli, sr, sri = assoc_bundles(f, g, u, v, strict=True)
    wl, wli, wr, wri = assoc_bundles(f, g, u, v, strict=False)
    s_assoc = assoc_object_map(f, g, u, v, strict=True)
    w_assoc = assoc_object_map(f, g, u, v, strict=False)
    q_left = _iterated_q(sl, sli, wl, wli, right=False)
    q_right = _iterated_q(sr, sri, wr, wri, right=True)
    return all(w_assoc[q_left[i]] == q_right[s_assoc[i]] for i in range(sl.n_objects))


def unit_iso(f):
    """Projections ``H ×~ G -> G`` (along id_H, f) and ``G ×~ H -> G`` (along f, id_H).

    Both are checked to be isomorphisms.
    """
    from .functors import inverse_iso

    left = strict_fiber_product(identity(f.cod), f)
    right = strict_fiber_product(f, identity(f.cod))
    p_left, p_right = left.pi2t, right.pi1t
    inverse_iso(p_left)
    inverse_iso(p_right)
    return p_left, p_right
