import pytest
from hypothesis import given, settings, strategies as st

from gpd.core import check_axioms, pair_groupoid
from gpd.errors import CodomainMismatch, MismatchedInputs, WiringMismatch
from gpd.fiber import (
    assoc_iso,
    assoc_square_commutes,
    canonical_transformation,
    embed_q,
    fiber_product,
    image_restriction_is_iso,
    strict_fiber_product,
    unit_iso,
)
from gpd.functors import (
    StrictMorphism,
    enumerate_strict_morphisms,
    identity,
    inverse_iso,
    is_equivalence,
    is_full_equivalence,
)

from conftest import ZOO, to_t
import oracles


def weak_oracle(f, g):
    """Objects and arrows of the weak fiber product straight from the definition."""
    F, G, H = f.dom, g.dom, f.cod
    objs = [(a, x, b) for a in F.objects for b in G.objects for x in H.arrows
            if H.src[x] == f.f0[a] and H.tgt[x] == g.f0[b]]
    arrows = 0
    for a, x, b in objs:
        for a2, x2, b2 in objs:
            for y in F.arrows:
                if (F.src[y], F.tgt[y]) != (a, a2):
                    continue
                for z in G.arrows:
                    if (G.src[z], G.tgt[z]) != (b, b2):
                        continue
                    if H.compose(f.f1[y], x2) == H.compose(x, g.f1[z]):
                        arrows += 1
    return len(objs), arrows


def strict_oracle(f, g):
    F, G = f.dom, g.dom
    objs = sum(1 for a in F.objects for b in G.objects if f.f0[a] == g.f0[b])
    arrows = sum(1 for y in F.arrows for z in G.arrows if f.f1[y] == g.f1[z])
    return objs, arrows


def test_known_counts():
    p = to_t(ZOO["P2"])
    fp = fiber_product(p, p)
    assert (fp.total.n_objects, fp.total.n_arrows) == (4, 16)
    b = identity(ZOO["BZ2"])
    fp = fiber_product(b, b)
    assert (fp.total.n_objects, fp.total.n_arrows) == (2, 8)
    t = to_t(ZOO["BZ2"])
    sfp = strict_fiber_product(t, t)
    assert (sfp.total.n_objects, sfp.total.n_arrows) == (1, 4)
    s = identity(ZOO["BS3"])
    sfp = strict_fiber_product(s, s)
    assert (sfp.total.n_objects, sfp.total.n_arrows) == (1, 6)


CASES = [
    ("P2", "T", "P2"),
    ("BZ2", "BZ2", "BZ2"),
    ("D2", "BZ2", "BZ2"),
    ("P2+T", "BZ2", "P2"),
    ("BZ4", "BZ2", "BZ2"),
    ("BS3", "BZ2", "BZ4"),
]


def maps(a, h, limit=3):
    return enumerate_strict_morphisms(ZOO[a], ZOO[h])[:limit]


@pytest.mark.parametrize("a,h,b", CASES)
def test_fiber_products_match_oracle(a, h, b):
    for f in maps(a, h):
        for g in maps(b, h):
            fp = fiber_product(f, g)
            assert (fp.total.n_objects, fp.total.n_arrows) == weak_oracle(f, g)
            sfp = strict_fiber_product(f, g)
            assert (sfp.total.n_objects, sfp.total.n_arrows) == strict_oracle(f, g)
            if fp.total.n_arrows <= 64:
                check_axioms(fp.total)
                check_axioms(sfp.total)
            canonical_transformation(fp)
            q = embed_q(sfp, fp)
            assert image_restriction_is_iso(q)


@pytest.mark.parametrize("a,h,b", CASES)
def test_projection_along_equivalence_is_equivalence(a, h, b):
    for f in maps(a, h):
        for g in maps(b, h):
            fp = fiber_product(f, g)
            if is_equivalence(g):
                assert is_equivalence(fp.pi1)
            if is_equivalence(f):
                assert is_equivalence(fp.pi2)
            sfp = strict_fiber_product(f, g)
            if is_full_equivalence(g):
                assert is_full_equivalence(sfp.pi1t)


def test_encode_decode_round_trip():
    p = to_t(ZOO["P2+T"])
    fp = fiber_product(p, p)
    assert all(fp.object_encode[o] == i for i, o in enumerate(fp.object_decode))
    assert all(fp.arrow_encode[d] == i for i, d in enumerate(fp.arrow_decode))
    assert list(fp.object_decode) == sorted(fp.object_decode)


def test_q_is_equivalence_for_full_equivalences():
    p = to_t(ZOO["P2"])
    fp, sfp = fiber_product(p, p), strict_fiber_product(p, p)
    assert is_equivalence(embed_q(sfp, fp))


def test_errors():
    with pytest.raises(CodomainMismatch):
        fiber_product(identity(ZOO["BZ2"]), identity(ZOO["BZ4"]))
    p = to_t(ZOO["P2"])
    b = to_t(ZOO["BZ2"])
    with pytest.raises(MismatchedInputs):
        embed_q(strict_fiber_product(p, p), fiber_product(b, b))
    with pytest.raises(WiringMismatch):
        assoc_iso(p, p, identity(ZOO["BZ2"]), p)


ASSOC = [
    ("P2", "T", "P2", "T", "P2"),
    ("BZ2", "BZ2", "BZ2", "BZ2", "BZ2"),
    ("D2", "BZ2", "P2", "T", "BZ2"),
]


@pytest.mark.parametrize("names", ASSOC)
@pytest.mark.parametrize("strict", [False, True])
def test_reassociation_is_iso(names, strict):
    h, g_, k, l_, m = names
    f = maps(h, g_)[-1]
    g = maps(k, g_)[-1]
    u = maps(k, l_)[-1]
    v = maps(m, l_)[-1]
    iso = assoc_iso(f, g, u, v, strict)
    back = inverse_iso(iso.forward)
    assert back.f0 == iso.backward.f0
    if iso.forward.dom.n_arrows <= 64:
        check_axioms(iso.forward.dom)
        StrictMorphism(iso.forward.dom, iso.forward.cod, iso.forward.f0, iso.forward.f1)
    if not strict:
        assert assoc_square_commutes(f, g, u, v)


@pytest.mark.parametrize("name", ["T", "P2", "BZ2", "P2+T", "BS3"])
def test_unit_isos(name):
    g = ZOO[name]
    for f in (identity(g), to_t(g)):
        left, right = unit_iso(f)
        assert left.cod == f.dom and right.cod == f.dom


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CASES), st.data())
def test_weak_product_axioms_on_random_triples(case, data):
    a, h, b = case
    f = data.draw(st.sampled_from(maps(a, h)))
    g = data.draw(st.sampled_from(maps(b, h)))
    tot = fiber_product(f, g).total
    x = data.draw(st.integers(0, tot.n_arrows - 1))
    ys = list(tot.out_arrows(tot.tgt[x]))
    y = data.draw(st.sampled_from(ys))
    zs = list(tot.out_arrows(tot.tgt[y]))
    z = data.draw(st.sampled_from(zs))
    assert tot.compose(tot.compose(x, y), z) == tot.compose(x, tot.compose(y, z))
    assert tot.compose(x, tot.inv[x]) == tot.unit[tot.src[x]]


def test_pair_groupoid_is_fiber_product_over_point():
    # P2 x_T P2 computed weakly has the shape of P4
    p = to_t(ZOO["P2"])
    tot = fiber_product(p, p).total
    assert oracles.components(tot.n_objects, list(zip(tot.src, tot.tgt))) == 1
    assert tot.n_arrows == pair_groupoid(4).n_arrows


def test_table_of_lazy_total_keeps_composition_working():
    p = to_t(ZOO["P2"])
    tot = fiber_product(p, p).total
    table = tot.table()
    assert len(table) == sum(1 for _ in tot.composable_pairs())
    x, y = next(iter(table))
    assert tot.compose(x, y) == table[(x, y)]
