"""Command-line front end: ``gpd <verb> ...``.

Exit status is 0 on success, 1 when the input fails validation or a check
fails, and 2 on unreadable or malformed files.  Errors are written to stderr
as one JSON object per line.
"""

import argparse
import json
import sys
from pathlib import Path

from . import io
from .automorphisms import center_group, coarse_aut_group
from .composition import h_compose
from .core import coarse_space
from .errors import GroupoidError
from .fiber import fiber_product, strict_fiber_product
from .suites import SUITES, SuiteConfig, run_suite


def _emit(args, lines, data):
    if args.format == "structured":
        print(json.dumps(data))
    else:
        for line in lines:
            print(line)


def cmd_validate(args):
    g = io.load_groupoid(args.file)
    cs = coarse_space(g)
    data = {"name": g.name, "objects": g.n_objects, "arrows": g.n_arrows, "classes": cs.n_classes, "valid": True}
    _emit(args, [f"valid: {g.name or args.file}", f"objects: {g.n_objects}", f"arrows: {g.n_arrows}",
                 f"classes: {cs.n_classes}"], data)
    return 0


def cmd_coarse(args):
    g = io.load_groupoid(args.file)
    cs = coarse_space(g)
    data = {"classes": cs.n_classes, "class_of": list(cs.class_of)}
    _emit(args, [f"classes: {cs.n_classes}", "class_of: " + " ".join(map(str, cs.class_of))], data)
    return 0


def cmd_center(args):
    g = io.load_groupoid(args.file)
    k = center_group(g)
    sections = [list(s.comp) for s in k.labels]
    lines = [f"order: {k.order}"] + [f"section {i}: " + " ".join(map(str, s)) for i, s in enumerate(sections)]
    _emit(args, lines, {"order": k.order, "sections": sections})
    return 0


def cmd_fiber(args):
    f = io.load_morphism(args.f)
    g = io.load_morphism(args.g)
    if f.dom != io.load_groupoid(args.file1) or g.dom != io.load_groupoid(args.file2):
        raise io.FormatError("morphism domains do not match the given groupoid files")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.strict:
        b = strict_fiber_product(f, g)
        p1, p2 = b.pi1t, b.pi2t
    else:
        b = fiber_product(f, g)
        p1, p2 = b.pi1, b.pi2
    total = io.dump_groupoid(b.total, out / "fiber.json")
    io.dump_morphism(p1, out / "pi1.json", total, Path(args.file1))
    io.dump_morphism(p2, out / "pi2.json", total, Path(args.file2))
    io.dump_decode(out / "decode.json", b.object_decode, b.arrow_decode)
    data = {"objects": b.total.n_objects, "arrows": b.total.n_arrows, "out": str(out)}
    _emit(args, [f"objects: {data['objects']}", f"arrows: {data['arrows']}", f"written: {out}"], data)
    return 0


def cmd_compose(args):
    m = io.load_genmorphism(args.m)
    n = io.load_genmorphism(args.n)
    if args.strict:
        m, n = m.with_mode("full"), n.with_mode("full")
    c = h_compose(m, n)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g_path, _ = io.genmorphism_base_paths(args.m)
    _, h_path = io.genmorphism_base_paths(args.n)
    io.dump_genmorphism(c, out / "composite", g_path, h_path)
    bundle = strict_fiber_product(m.u, n.psi) if c.mode == "full" else fiber_product(m.u, n.psi)
    io.dump_decode(out / "composite.decode.json", bundle.object_decode)
    data = {"mode": c.mode, "objects": c.K.n_objects, "arrows": c.K.n_arrows, "out": str(out)}
    _emit(args, [f"mode: {c.mode}", f"carrier objects: {c.K.n_objects}", f"carrier arrows: {c.K.n_arrows}",
                 f"written: {out / 'composite.json'}"], data)
    return 0


def _describe(m):
    return {"f0": list(m.u.f0), "f1": list(m.u.f1)}


def cmd_aut(args):
    g = io.load_groupoid(args.file)
    t = coarse_aut_group(g)
    data = {
        "order": t.order,
        "representatives": [_describe(m) for m in t.elements],
        "mult": t.mult,
        "unit": t.unit,
        "inverse": t.inverse,
    }
    lines = [f"order: {t.order}"]
    if args.table:
        lines += [f"rep {i}: u0={d['f0']} u1={d['f1']}" for i, d in enumerate(data["representatives"])]
        lines += ["mult:"] + [" ".join(map(str, row)) for row in t.mult]
        lines += [f"unit: {t.unit}", "inverse: " + " ".join(map(str, t.inverse))]
    else:
        data = {"order": t.order}
    _emit(args, lines, data)
    return 0


def cmd_check(args):
    g = io.load_groupoid(args.file)
    rows = run_suite(g, args.suite, SuiteConfig())
    lines = [f"[{s}] {label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
             for s, label, ok, detail in rows]
    data = [{"suite": s, "check": label, "pass": ok, "detail": detail} for s, label, ok, detail in rows]
    _emit(args, lines, data)
    return 0 if all(ok for _, _, ok, _ in rows) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="gpd", description="Finite groupoid calculus")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    sub = p.add_subparsers(dest="verb", required=True)

    for verb, fn in (("validate", cmd_validate), ("coarse", cmd_coarse), ("center", cmd_center)):
        sp = sub.add_parser(verb)
        sp.add_argument("file")
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("fiber")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--f", required=True, help="morphism file from file1")
    sp.add_argument("--g", required=True, help="morphism file from file2")
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--out", default=".")
    sp.set_defaults(fn=cmd_fiber)

    sp = sub.add_parser("compose")
    sp.add_argument("m")
    sp.add_argument("n")
    sp.add_argument("--strict", action="store_true", help="compose as full-morphisms")
    sp.add_argument("--out", default=".")
    sp.set_defaults(fn=cmd_compose)

    sp = sub.add_parser("aut")
    sp.add_argument("file")
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(fn=cmd_aut)

    sp = sub.add_parser("check")
    sp.add_argument("file")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.set_defaults(fn=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    # allow --format after the verb as well
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--format" in argv[1:]:
        i = argv.index("--format")
        argv = argv[i:i + 2] + argv[:i] + argv[i + 2:]
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except io.FormatError as e:
        print(json.dumps(e.as_dict()), file=sys.stderr)
        return 2
    except GroupoidError as e:
        print(json.dumps(e.as_dict()), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
