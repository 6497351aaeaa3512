import time

import pytest
from hypothesis import given, settings, strategies as st

from gpd import groups
from gpd.core import (
    GroupoidAction,
    action_groupoid,
    check_axioms,
    classifying_groupoid,
    coarse_space,
    disjoint_union,
    empty_groupoid,
    from_raw,
    isotropy_group,
    pair_groupoid,
    product,
    pullback,
    relabel,
    restrict,
    validate,
)
from gpd.errors import (
    ConflictingComposite,
    EmptyRestriction,
    IllTypedComposite,
    InvalidAction,
    InvalidReference,
    MissingComposite,
    NoInverse,
    NonAssociative,
    NotComposable,
)

from conftest import ZOO
from oracles import components, table_of


# pair groupoid on two objects written out by hand: arrow i*2+j is i -> j
P2_HAND = {
    (0, 0): 0, (0, 1): 1, (1, 2): 0, (1, 3): 1,
    (2, 0): 2, (2, 1): 3, (3, 2): 2, (3, 3): 3,
}


def raw(g):
    n, arrows, comp = table_of(g)
    return n, arrows, [(x, y, z) for (x, y), z in comp.items()]


@pytest.mark.parametrize("name", sorted(ZOO))
def test_zoo_validates(name):
    g = ZOO[name]
    check_axioms(g)
    again = validate(*raw(g))
    assert again == g


def test_pair_groupoid_matches_hand_table():
    g = pair_groupoid(2)
    assert g.n_arrows == 4
    for (x, y), z in P2_HAND.items():
        assert g.compose(x, y) == z
    assert [g.unit[a] for a in g.objects] == [0, 3]
    assert list(g.inv) == [0, 2, 1, 3]


def test_empty_groupoid_is_valid():
    g = empty_groupoid()
    check_axioms(g)
    assert coarse_space(g).n_classes == 0


def test_compose_rejects_non_composable():
    g = pair_groupoid(2)
    with pytest.raises(NotComposable):
        g.compose(0, 2)


def test_missing_composite():
    n, arrows, comp = raw(pair_groupoid(2))
    with pytest.raises(MissingComposite):
        validate(n, arrows, comp[1:])


def test_ill_typed_composite():
    n, arrows, comp = raw(pair_groupoid(2))
    comp.append((0, 2, 0))
    with pytest.raises(IllTypedComposite):
        validate(n, arrows, comp)


def test_conflicting_composite():
    n, arrows, comp = raw(pair_groupoid(2))
    x, y, z = comp[0]
    comp.append((x, y, (z + 1) % 4))
    with pytest.raises((ConflictingComposite, IllTypedComposite)):
        validate(n, arrows, comp)


def test_invalid_reference():
    with pytest.raises(InvalidReference):
        validate(1, [(0, 1)], [])


def test_non_associative_magma():
    # a loop set with a unit and inverses that is not associative
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    comp = [(x, y, t[x][y]) for x in range(5) for y in range(5)]
    with pytest.raises(NonAssociative):
        validate(1, [(0, 0)] * 5, comp)


def test_no_inverse():
    # constant-ish semigroup on two elements with a unit but no inverse for 1
    comp = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    with pytest.raises(NoInverse):
        validate(1, [(0, 0)] * 2, comp)


def test_coarse_space_matches_oracle():
    for g in ZOO.values():
        cs = coarse_space(g)
        assert cs.n_classes == components(g.n_objects, list(zip(g.src, g.tgt)))
        for x in g.arrows:
            assert cs.class_of[g.src[x]] == cs.class_of[g.tgt[x]]


def test_coarse_counts():
    assert coarse_space(ZOO["D3"]).n_classes == 3
    assert coarse_space(ZOO["P2"]).n_classes == 1
    assert coarse_space(ZOO["P2+T"]).n_classes == 2
    assert coarse_space(ZOO["P2+T"]).representatives() == [0, 2]


def test_isotropy_orders():
    assert isotropy_group(ZOO["BS3"], 0).order == 6
    assert isotropy_group(ZOO["P2"], 1).order == 1
    assert groups.is_abelian(isotropy_group(ZOO["BV4"], 0))


def test_restrict():
    g = ZOO["P2+T"]
    sub, inc = restrict(g, [0, 1])
    assert sub == pair_groupoid(2)
    assert list(inc.f0) == [0, 1]
    with pytest.raises(EmptyRestriction):
        restrict(g, [])


def test_classifying_groupoid_reproduces_table():
    s3 = groups.symmetric(3)
    g = classifying_groupoid(s3)
    for a in range(6):
        for b in range(6):
            assert g.compose(a, b) == s3.table[a][b]


def test_disjoint_union_and_product_counts():
    u = disjoint_union(ZOO["P2"], ZOO["BZ2"])
    assert (u.n_objects, u.n_arrows) == (3, 6)
    p = product(ZOO["P2"], ZOO["BZ2"])
    assert (p.n_objects, p.n_arrows) == (2, 8)
    check_axioms(p)


def test_pullback_along_repeated_selection():
    k, psi = pullback(ZOO["BZ2"], (0, 0))
    assert (k.n_objects, k.n_arrows) == (2, 8)
    check_axioms(k)
    assert list(psi.f0) == [0, 0]


def test_action_groupoid_of_swap():
    # BZ2 acting on two points by swapping them gives the pair groupoid
    g = ZOO["BZ2"]
    act = {(x, p): (p + x) % 2 for x in range(2) for p in range(2)}
    ag, pairs = action_groupoid(g, GroupoidAction(2, (0, 0), act))
    assert (ag.n_objects, ag.n_arrows) == (2, 4)
    assert coarse_space(ag).n_classes == 1


def test_invalid_action():
    g = ZOO["BZ2"]
    act = {(x, p): p for x in range(2) for p in range(2)}
    act[(0, 0)] = 1
    with pytest.raises(InvalidAction):
        action_groupoid(g, GroupoidAction(2, (0, 0), act))


def test_raw_round_trip():
    for g in ZOO.values():
        assert from_raw(g.to_raw()) == g


def test_zoo_validation_is_fast():
    start = time.perf_counter()
    for g in ZOO.values():
        check_axioms(g)
    assert time.perf_counter() - start < 1.0


# random groupoids: a pair groupoid times a classifying groupoid, relabeled

GROUPS = [groups.cyclic(1), groups.cyclic(2), groups.cyclic(3), groups.symmetric(3)]


@st.composite
def shuffled_groupoids(draw):
    n = draw(st.integers(1, 3))
    grp = draw(st.sampled_from(GROUPS))
    g = product(pair_groupoid(n), classifying_groupoid(grp))
    obj_perm = draw(st.permutations(range(g.n_objects)))
    arrow_perm = draw(st.permutations(range(g.n_arrows)))
    return g, relabel(g, list(obj_perm), list(arrow_perm)), n, grp


@settings(max_examples=40, deadline=None)
@given(shuffled_groupoids())
def test_relabeled_products_validate(data):
    g, h, n, grp = data
    check_axioms(h)
    h2 = validate(*raw(h))
    assert h2 == h
    assert coarse_space(h).n_classes == 1
    assert all(isotropy_group(h, a).order == grp.order for a in h.objects)
    assert all(len(h.hom(a, b)) == grp.order for a in h.objects for b in h.objects)


@settings(max_examples=40, deadline=None)
@given(shuffled_groupoids(), st.data())
def test_axioms_hold_on_random_triples(data, draw):
    _, h, _, _ = data
    pairs = list(h.composable_pairs())
    x, y = draw.draw(st.sampled_from(pairs))
    later = [z for z in h.arrows if h.src[z] == h.tgt[y]]
    z = draw.draw(st.sampled_from(later))
    assert h.compose(h.compose(x, y), z) == h.compose(x, h.compose(y, z))
    assert h.compose(x, h.inv[x]) == h.unit[h.src[x]]
    assert h.compose(h.unit[h.src[x]], x) == x


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_disjoint_unions_count_components(sizes):
    g = disjoint_union(*[pair_groupoid(n) for n in sizes])
    assert coarse_space(g).n_classes == len(sizes)
    assert g.n_arrows == sum(n * n for n in sizes)
