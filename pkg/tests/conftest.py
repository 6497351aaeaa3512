import pytest

from gpd import groups
from gpd.core import classifying_groupoid, discrete, disjoint_union, pair_groupoid, pullback, trivial
from gpd.functors import StrictMorphism, compose_strict
from gpd.morphisms import GenMorphism, enumerate_arrows, strict_roster


def zoo():
    return {
        "T": trivial(),
        "D2": discrete(2),
        "D3": discrete(3),
        "P2": pair_groupoid(2),
        "BZ2": classifying_groupoid(groups.cyclic(2), name="BZ2"),
        "BZ4": classifying_groupoid(groups.cyclic(4), name="BZ4"),
        "BS3": classifying_groupoid(groups.symmetric(3), name="BS3"),
        "BV4": classifying_groupoid(groups.direct_product(groups.cyclic(2), groups.cyclic(2)), name="BV4"),
        "P2+T": disjoint_union(pair_groupoid(2), trivial()),
    }


ZOO = zoo()


def to_t(g):
    """The unique map to the one-point groupoid."""
    return StrictMorphism(g, ZOO["T"], [0] * g.n_objects, [0] * g.n_arrows)


def spans(g, h, mode):
    """Strict maps g -> h as spans, plus the first two precomposed with a doubled cover of g."""
    out = list(strict_roster(g, h, mode).objects)
    sel = sorted(list(g.objects) + [0])
    _, psi = pullback(g, sel)
    for m in out[:2]:
        out.append(GenMorphism(psi, compose_strict(psi, m.u), mode))
    return out


def arrows_of(objs):
    return [a for m1 in objs for m2 in objs for a in enumerate_arrows(m1, m2)]


@pytest.fixture(scope="session")
def Z():
    return ZOO


# acceptance lines, printed once at the end of the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
