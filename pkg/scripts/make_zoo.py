"""Write the standard small groupoids (and a few morphisms) as JSON files.

    python3 scripts/make_zoo.py [OUTDIR]
"""

import sys
from pathlib import Path

from gpd import groups, io
from gpd.core import classifying_groupoid, discrete, disjoint_union, pair_groupoid, trivial
from gpd.functors import StrictMorphism, enumerate_strict_morphisms, identity
from gpd.morphisms import GenMorphism


def zoo():
    return {
        "t": trivial(),
        "d2": discrete(2),
        "d3": discrete(3),
        "pair2": pair_groupoid(2),
        "bz2": classifying_groupoid(groups.cyclic(2), name="BZ2"),
        "bz4": classifying_groupoid(groups.cyclic(4), name="BZ4"),
        "bs3": classifying_groupoid(groups.symmetric(3), name="BS3"),
        "bv4": classifying_groupoid(groups.direct_product(groups.cyclic(2), groups.cyclic(2)), name="BV4"),
        "pair2_t": disjoint_union(pair_groupoid(2), trivial(), name="P2+T"),
    }


def main(out="data"):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    paths = {}
    for name, g in zoo().items():
        paths[name] = io.dump_groupoid(g, out / f"{name}.gpd")
    gs = zoo()
    # collapse of P2 onto T, and the inversion of Z4
    p2, t, bz4 = gs["pair2"], gs["t"], gs["bz4"]
    collapse = StrictMorphism(p2, t, [0, 0], [0] * 4)
    io.dump_morphism(collapse, out / "pair2_to_t.json", paths["pair2"], paths["t"])
    inv = next(u for u in enumerate_strict_morphisms(bz4, bz4) if u.f1 == (0, 3, 2, 1))
    io.dump_morphism(inv, out / "bz4_inv.json", paths["bz4"], paths["bz4"])
    for name in ("bz2", "bz4"):
        g = gs[name]
        io.dump_genmorphism(GenMorphism(identity(g), identity(g)), out / f"{name}_id", paths[name], paths[name])
    io.dump_genmorphism(GenMorphism(identity(bz4), inv), out / "bz4_inv_span", paths["bz4"], paths["bz4"])
    print(f"wrote {len(list(out.iterdir()))} files to {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
