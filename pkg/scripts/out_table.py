"""Compare coarse automorphism groups of classifying groupoids with Out(G).

    python3 scripts/out_table.py [--modes general full] [--json out.json]

For each group the script prints |Aut|, |Inn| and |Out| from plain group
theory next to the order of the coarse automorphism group in each mode,
along with wall time.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from gpd import groups
from gpd.automorphisms import coarse_aut_group
from gpd.core import classifying_groupoid, discrete


@dataclass
class OutTableConfig:
    modes: list = field(default_factory=lambda: ["general", "full"])
    cyclic: list = field(default_factory=lambda: [1, 2, 3, 4, 5, 6])
    include_s3: bool = True
    include_v4: bool = True
    discrete: list = field(default_factory=lambda: [2, 3])


def cases(cfg):
    for n in cfg.cyclic:
        yield f"Z{n}", classifying_groupoid(groups.cyclic(n)), groups.cyclic(n)
    if cfg.include_s3:
        yield "S3", classifying_groupoid(groups.symmetric(3)), groups.symmetric(3)
    if cfg.include_v4:
        v4 = groups.direct_product(groups.cyclic(2), groups.cyclic(2))
        yield "Z2xZ2", classifying_groupoid(v4), v4
    for n in cfg.discrete:
        yield f"D{n}", discrete(n), None


def run(cfg):
    rows = []
    for name, g, grp in cases(cfg):
        row = {"name": name}
        if grp is not None:
            n_aut = len(groups.automorphisms(grp))
            n_inn = len(groups.inner_automorphisms(grp))
            row.update(aut=n_aut, inn=n_inn, out=n_aut // n_inn)
        for mode in cfg.modes:
            start = time.perf_counter()
            row[mode] = coarse_aut_group(g, mode).order
            row[f"{mode}_s"] = round(time.perf_counter() - start, 4)
        rows.append(row)
    return rows


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--modes", nargs="+", default=["general", "full"])
    p.add_argument("--json")
    args = p.parse_args()
    cfg = OutTableConfig(modes=args.modes)
    rows = run(cfg)
    header = ["name", "aut", "inn", "out"] + [m for m in cfg.modes] + [f"{m}_s" for m in cfg.modes]
    print("  ".join(f"{h:>8}" for h in header))
    for r in rows:
        print("  ".join(f"{str(r.get(h, '-')):>8}" for h in header))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
