"""Count and check interchange quadruples over rosters of self-morphisms.

    python3 scripts/interchange_census.py [--max-cases N]

A roster is every strict self-map of the groupoid as a span, plus copies
precomposed with a doubled cover.  All composable quadruples are checked
in both modes, with choice-independence of the horizontal composite.
"""

import argparse
import time
from dataclasses import dataclass, field
from itertools import islice, product

from gpd import groups
from gpd.composition import h_compose_arrows_all_choices, interchange_check
from gpd.core import classifying_groupoid, pair_groupoid, pullback, trivial
from gpd.functors import compose_strict
from gpd.morphisms import GenMorphism, enumerate_arrows, strict_roster


@dataclass
class CensusConfig:
    groupoids: list = field(default_factory=lambda: ["T", "BZ2", "P2", "BZ3"])
    modes: list = field(default_factory=lambda: ["general", "full"])
    max_cases: int = 5000


def groupoid(name):
    return {
        "T": trivial,
        "BZ2": lambda: classifying_groupoid(groups.cyclic(2)),
        "BZ3": lambda: classifying_groupoid(groups.cyclic(3)),
        "P2": lambda: pair_groupoid(2),
    }[name]()


def roster(g, mode):
    out = list(strict_roster(g, g, mode).objects)
    _, psi = pullback(g, sorted(list(g.objects) + [0]))
    out += [GenMorphism(psi, compose_strict(psi, m.u), mode) for m in out[:2]]
    return out


def census(name, mode, cfg):
    objs = roster(groupoid(name), mode)
    arrows = [a for m1 in objs for m2 in objs for a in enumerate_arrows(m1, m2)]
    pairs = [(a, b) for a in arrows for b in arrows if a.tgt == b.src]
    start = time.perf_counter()
    quads = list(islice(product(pairs, pairs), cfg.max_cases))
    passed = sum(interchange_check(a1, a2, b1, b2) for (a1, a2), (b1, b2) in quads)
    unique = sum(all(len(set(v)) == 1 for v in h_compose_arrows_all_choices(a, b))
                 for a, b in product(arrows, arrows))
    return {
        "groupoid": name,
        "mode": mode,
        "morphisms": len(objs),
        "arrows": len(arrows),
        "quadruples": len(quads),
        "interchange_ok": passed,
        "choice_free_pairs": f"{unique}/{len(arrows) ** 2}",
        "seconds": round(time.perf_counter() - start, 2),
    }


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-cases", type=int, default=CensusConfig.max_cases)
    args = p.parse_args()
    cfg = CensusConfig(max_cases=args.max_cases)
    for name in cfg.groupoids:
        for mode in cfg.modes:
            print(census(name, mode, cfg))


if __name__ == "__main__":
    main()
