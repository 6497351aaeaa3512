"""Horizontal composition of generalized morphisms and of their arrows.

``h_compose(m, n)`` is "m, then n": for ``m = (psi, K, u): G => H`` and
``n = (phi, J, v): H => N`` the composite is ``(psi∘π1, K ×_H J, v∘π2)``,
over the weak fiber product in general mode and the strict one in full mode.
"""

from functools import lru_cache

from .errors import BaseMismatch, InternalNoLift, ModeMismatch, NotComposable
from .fiber import assoc_iso, fiber_product, strict_fiber_product, unit_iso
from .functors import compose_strict
from .morphisms import (
    GenMorphism,
    MorArrow,
    carrier_of,
    embed_i,
    identity_morphism,
    make_arrow,
    vertical_compose,
)


def _same(a, b):
    return a is b or a == b


def _inner(m, n):
    if m.mode == "full":
        return strict_fiber_product(m.u, n.psi)
    return fiber_product(m.u, n.psi)


def _projections(bundle, mode):
    return (bundle.pi1t, bundle.pi2t) if mode == "full" else (bundle.pi1, bundle.pi2)


@lru_cache(maxsize=4096)
def h_compose(m, n):
    if m.mode != n.mode:
        raise ModeMismatch(f"modes differ: {m.mode} vs {n.mode}")
    if not _same(m.H, n.G):
        raise BaseMismatch("target of the first morphism is not the source of the second")
    inner = _inner(m, n)
    p1, p2 = _projections(inner, m.mode)
    return GenMorphism(compose_strict(p1, m.psi), compose_strict(p2, n.u), m.mode)


def _check_h_arrows(a, b):
    if a.mode != b.mode:
        raise ModeMismatch("arrows live in different modes")
    if not _same(a.src.H, b.src.G):
        raise BaseMismatch("arrows do not share the middle groupoid")


def _first_over(f, target):
    for j in f.dom.objects:
        if f.f0[j] == target:
            yield j


def _lift(f, j, j2, x):
    for y in f.dom.hom(j, j2):
        if f.f1[y] == x:
            return y
    raise InternalNoLift(f"no lift of {x} from {j} to {j2}", witness=(j, j2, x))


def _horizontal_values(a, b, all_choices):
    m1, m2, n1, n2 = a.src, a.tgt, b.src, b.tgt
    P1, P2 = h_compose(m1, n1), h_compose(m2, n2)
    car = carrier_of(P1, P2)
    ca, cb = carrier_of(m1, m2), carrier_of(n1, n2)
    i1, i2 = _inner(m1, n1), _inner(m2, n2)
    H, N = m1.H, n1.H
    out = []
    if a.mode == "full":
        for p, q in car.object_decode:
            k1, j1 = i1.object_decode[p]
            k2, j2 = i2.object_decode[q]
            x = a.alpha[ca.object_encode[(k1, k2)]]
            vals = []
            for j12 in _first_over(n2.psi, n1.psi.f0[j1]):
                y = _lift(n2.psi, j12, j2, x)
                vals.append(N._mul_pair(b.alpha[cb.object_encode[(j1, j12)]], n2.u.f1[y]))
                if not all_choices:
                    break
            if all_choices:
                for j21 in _first_over(n1.psi, n2.psi.f0[j2]):
                    y = _lift(n1.psi, j1, j21, x)
                    vals.append(N._mul_pair(n1.u.f1[y], b.alpha[cb.object_encode[(j21, j2)]]))
            if not vals:
                raise InternalNoLift("no object over the required point", witness=(p, q))
            out.append(vals if all_choices else vals[0])
        return out
    for p, z, q in car.object_decode:
        k1, x, j1 = i1.object_decode[p]
        k2, y, j2 = i2.object_decode[q]
        mid = H.mul(H.inv[x], a.alpha[ca.object_encode[(k1, z, k2)]], y)
        val = b.alpha[cb.object_encode[(j1, mid, j2)]]
        out.append([val] if all_choices else val)
    return out


def h_compose_arrows(a, b):
    """Horizontal composite of ``a: m1 -> m2`` (G => H) and ``b: n1 -> n2`` (H => N)."""
    _check_h_arrows(a, b)
    P1, P2 = h_compose(a.src, b.src), h_compose(a.tgt, b.tgt)
    return MorArrow(P1, P2, tuple(_horizontal_values(a, b, False)))


def h_compose_arrows_all_choices(a, b):
    _check_h_arrows(a, b)
    return _horizontal_values(a, b, True)


def _check_vertical(a1, a2):
    if not _same(a1.tgt, a2.src):
        raise NotComposable("arrows are not vertically composable")


def interchange_check(a1, a2, b1, b2):
    """``(b1∘a1)•(b2∘a2) == (b1•b2)∘(a1•a2)`` pointwise."""
    _check_vertical(a1, a2)
    _check_vertical(b1, b2)
    lhs = vertical_compose(h_compose_arrows(a1, b1), h_compose_arrows(a2, b2))
    rhs = h_compose_arrows(vertical_compose(a1, a2), vertical_compose(b1, b2))
    return lhs.alpha == rhs.alpha


def full_compatibility_check(a, b):
    """Full-mode horizontal composite equals the general one restricted to the strict part."""
    full = h_compose_arrows(a, b)
    gen = h_compose_arrows(embed_i(a), embed_i(b))
    P1, P2 = full.src, full.tgt
    G1, G2 = gen.src, gen.tgt
    ia, ib = _inner(a.src, b.src), _inner(a.tgt, b.tgt)
    wa, wb = fiber_product(a.src.u, b.src.psi), fiber_product(a.tgt.u, b.tgt.psi)
    scar, wcar = carrier_of(P1, P2), carrier_of(G1, G2)
    H, G = a.src.H, a.src.G
    for i, (p, q) in enumerate(scar.object_decode):
        k1, j1 = ia.object_decode[p]
        k2, j2 = ib.object_decode[q]
        qp = wa.object_encode[(k1, H.unit[a.src.u.f0[k1]], j1)]
        qq = wb.object_encode[(k2, H.unit[a.tgt.u.f0[k2]], j2)]
        w = wcar.object_encode[(qp, G.unit[P1.psi.f0[p]], qq)]
        if gen.alpha[w] != full.alpha[i]:
            return False
    return True


# arrows induced by isomorphisms of the middle groupoid

def span_iso_arrow(A, B, theta, check=True):
    """Arrow ``A -> B`` induced by a strict iso ``theta: K_A -> K_B`` over both legs."""
    car = carrier_of(A, B)
    G = A.G
    if A.mode == "full":
        alpha = [B.u.f1[B.lift(theta.f0[p], q, G.unit[A.psi.f0[p]])] for p, q in car.object_decode]
    else:
        alpha = [B.u.f1[B.lift(theta.f0[p], q, g)] for p, g, q in car.object_decode]
    return make_arrow(A, B, alpha, check)


def _assoc_theta(m1, m2, m3):
    iso = assoc_iso(m1.u, m2.psi, m2.u, m3.psi, strict=(m1.mode == "full"))
    return iso.backward


@lru_cache(maxsize=1024)
def associator_arrow(m1, m2, m3):
    """Arrow from ``h(m1, h(m2, m3))`` to ``h(h(m1, m2), m3)``."""
    A = h_compose(m1, h_compose(m2, m3))
    B = h_compose(h_compose(m1, m2), m3)
    theta = _assoc_theta(m1, m2, m3)
    if not (_same(theta.dom, A.K) and _same(theta.cod, B.K)):
        raise NotComposable("re-association does not match the composite carriers")
    return span_iso_arrow(A, B, theta)


def associator_transport_check(a1, a2, a3):
    """Triple composites agree across the re-association, and the associator is natural."""
    m1, m2, m3 = a1.src, a2.src, a3.src
    n1, n2, n3 = a1.tgt, a2.tgt, a3.tgt
    right = h_compose_arrows(a1, h_compose_arrows(a2, a3))
    left = h_compose_arrows(h_compose_arrows(a1, a2), a3)
    th = _assoc_theta(m1, m2, m3)
    th2 = _assoc_theta(n1, n2, n3)
    rc, lc = right.carrier, left.carrier
    for i, o in enumerate(rc.object_decode):
        if right.mode == "full":
            p, p2 = o
            key = (th.f0[p], th2.f0[p2])
        else:
            p, g, p2 = o
            key = (th.f0[p], g, th2.f0[p2])
        if left.alpha[lc.object_encode[key]] != right.alpha[i]:
            return False
    via_left = vertical_compose(associator_arrow(m1, m2, m3), left)
    via_right = vertical_compose(right, associator_arrow(n1, n2, n3))
    return via_left.alpha == via_right.alpha


# weak units

def left_unit_arrow(m):
    """Arrow ``h(1_G, m) -> m``."""
    one = identity_morphism(m.G, m.mode)
    c = h_compose(one, m)
    if m.mode == "full":
        return span_iso_arrow(c, m, unit_iso(m.psi)[0])
    car = carrier_of(c, m)
    inner = _inner(one, m)
    G = m.G
    alpha = []
    for p, x, k in car.object_decode:
        _, y, k2 = inner.object_decode[p]
        alpha.append(m.u.f1[m.lift(k2, k, G._mul_pair(G.inv[y], x))])
    return make_arrow(c, m, alpha)


def right_unit_arrow(m):
    """Arrow ``h(m, 1_H) -> m``."""
    one = identity_morphism(m.H, m.mode)
    c = h_compose(m, one)
    if m.mode == "full":
        return span_iso_arrow(c, m, unit_iso(m.u)[1])
    car = carrier_of(c, m)
    inner = _inner(m, one)
    H = m.H
    alpha = []
    for p, x, k2 in car.object_decode:
        k, y, _ = inner.object_decode[p]
        alpha.append(H._mul_pair(H.inv[y], m.u.f1[m.lift(k, k2, x)]))
    return make_arrow(c, m, alpha)
