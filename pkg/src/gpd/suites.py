"""Property suites run against a single input groupoid.

Each check is a named predicate; a suite returns ``(name, passed, detail)``
rows.  Rosters and case counts are capped by :class:`SuiteConfig` so that
``all`` stays interactive on desk-scale inputs.
"""

from dataclasses import dataclass
from itertools import islice, product

from . import groups
from .automorphisms import (
    aut_roster,
    center_group,
    coarse_aut_group,
    gerbe_decomposition,
    is_automorphism,
    iso_phi,
    iso_psi,
)
from .composition import (
    associator_transport_check,
    full_compatibility_check,
    h_compose,
    h_compose_arrows_all_choices,
    interchange_check,
    left_unit_arrow,
    right_unit_arrow,
)
from .core import check_axioms, coarse_space, isotropy_group, restrict, trivial
from .errors import GroupoidError
from .fiber import (
    assoc_iso,
    assoc_square_commutes,
    canonical_transformation,
    embed_q,
    fiber_product,
    image_restriction_is_iso,
    strict_fiber_product,
    unit_iso,
)
from .functors import StrictMorphism, identity, is_equivalence, is_full_equivalence
from .morphisms import (
    build_morphism_groupoid,
    check_arrow,
    embed_i,
    embed_i_inverse,
    enumerate_arrows,
    i1_preserves_composition_check,
    MorRoster,
    vertical_compose,
    vertical_compose_all_choices,
)

SUITES = ("core", "fiber", "mor", "comp", "aut")


@dataclass
class SuiteConfig:
    max_roster: int = 3
    max_cases: int = 400
    max_assoc_arrows: int = 3


def _terminal(g):
    t = trivial()
    return StrictMorphism(g, t, [0] * g.n_objects, [0] * g.n_arrows, check=False)


def _roster(g, cfg, mode):
    r = aut_roster(g, mode)
    return MorRoster(g, g, r.objects[: cfg.max_roster], mode)


def _homs(roster):
    objs = roster.objects
    return {(i, j): enumerate_arrows(objs[i], objs[j]) for i in range(len(objs)) for j in range(len(objs))}


def _composable_pairs(homs, n):
    for _, a, b in _indexed_pairs(homs, n):
        yield a, b


def _indexed_pairs(homs, n):
    for i, j, k in product(range(n), repeat=3):
        for a, b in product(homs[(i, j)], homs[(j, k)]):
            yield k, a, b


# core

def _reachability_classes(g):
    seen, out = {}, []
    for r in g.objects:
        if r in seen:
            continue
        stack, comp = [r], []
        seen[r] = True
        while stack:
            a = stack.pop()
            comp.append(a)
            for x in g.out_arrows(a):
                if g.tgt[x] not in seen:
                    seen[g.tgt[x]] = True
                    stack.append(g.tgt[x])
        out.append(tuple(sorted(comp)))
    return sorted(out)


def core_checks(g, cfg):
    def axioms():
        check_axioms(g)
        return True

    def involution():
        return all(g.inv[g.inv[x]] == x for x in g.arrows)

    def coarse():
        return sorted(coarse_space(g).classes()) == _reachability_classes(g)

    def restrict_idem():
        if g.n_objects == 0:
            return True
        objs = coarse_space(g).classes()[0]
        sub, _ = restrict(g, objs)
        again, _ = restrict(sub, range(sub.n_objects))
        return again == sub

    def isotropy():
        for a in g.objects:
            grp = isotropy_group(g, a)
            groups.group_from_table(grp.table)
        return True

    return [
        ("groupoid axioms hold exhaustively", axioms),
        ("inverse is an involution", involution),
        ("coarse classes are reachability orbits", coarse),
        ("restriction to all objects is idempotent", restrict_idem),
        ("isotropy groups satisfy the group axioms", isotropy),
    ]


# fiber products

def fiber_checks(g, cfg):
    ident = identity(g)
    term = _terminal(g)

    def projection_equivalence():
        fp = fiber_product(ident, ident)
        return bool(is_equivalence(fp.pi1)) and bool(is_equivalence(fp.pi2))

    def strict_projection_full():
        sfp = strict_fiber_product(ident, ident)
        return bool(is_full_equivalence(sfp.pi1t)) and bool(is_full_equivalence(sfp.pi2t))

    def q_embedding():
        fp, sfp = fiber_product(ident, ident), strict_fiber_product(ident, ident)
        q = embed_q(sfp, fp)
        return image_restriction_is_iso(q) and bool(is_equivalence(q))

    def canonical():
        canonical_transformation(fiber_product(term, term))
        return True

    def roundtrip():
        fp = fiber_product(ident, ident)
        ok = all(fp.object_encode[o] == i for i, o in enumerate(fp.object_decode))
        return ok and all(fp.arrow_encode[d] == i for i, d in enumerate(fp.arrow_decode))

    def assoc():
        for strict in (False, True):
            iso = assoc_iso(ident, ident, ident, ident, strict)
            back = iso.backward
            if any(back.f0[b] != a for a, b in enumerate(iso.forward.f0)):
                return False
        return assoc_square_commutes(ident, ident, ident, ident)

    def units():
        unit_iso(ident)
        unit_iso(term)
        return True

    return [
        ("projections of a fiber product along equivalences are equivalences", projection_equivalence),
        ("strict projections along full-equivalences are full-equivalences", strict_projection_full),
        ("strict fiber product embeds as a full subgroupoid, equivalently", q_embedding),
        ("canonical transformation of a fiber product is natural", canonical),
        ("fiber product decode/encode round trip", roundtrip),
        ("re-association isomorphisms commute with the embedding", assoc),
        ("unit isomorphisms are given by projections", units),
    ]


# morphism groupoids

def mor_checks(g, cfg):
    gen = _roster(g, cfg, "general")
    full = _roster(g, cfg, "full")

    def groupoid(roster):
        def run():
            mg, _ = build_morphism_groupoid(roster)
            return mg.n_objects == len(roster)
        return run

    def associative():
        homs, n = _homs(gen), len(gen)
        triples = (
            (a, b, c)
            for k, a, b in _indexed_pairs(homs, n)
            for l in range(n)
            for c in homs[(k, l)]
        )
        return all(
            vertical_compose(vertical_compose(a, b), c) == vertical_compose(a, vertical_compose(b, c))
            for a, b, c in islice(triples, cfg.max_cases)
        )

    def splitting():
        homs, n = _homs(gen), len(gen)
        for a, b in islice(_composable_pairs(homs, n), cfg.max_cases):
            if any(len(set(v)) != 1 for v in vertical_compose_all_choices(a, b)):
                return False
        return True

    def embedding():
        homs = _homs(full)
        n = len(full)
        for i, j in product(range(n), repeat=2):
            images = [embed_i(a) for a in homs[(i, j)]]
            target = enumerate_arrows(full.objects[i].with_mode("general"), full.objects[j].with_mode("general"))
            if sorted(x.alpha for x in images) != sorted(x.alpha for x in target):
                return False
            if any(embed_i_inverse(b).alpha != a.alpha for a, b in zip(homs[(i, j)], images)):
                return False
        return True

    def composition():
        homs = _homs(full)
        return all(i1_preserves_composition_check(a, b)
                   for a, b in islice(_composable_pairs(homs, len(full)), cfg.max_cases))

    return [
        ("morphism groupoid validates (general mode)", groupoid(gen)),
        ("morphism groupoid validates (full mode)", groupoid(full)),
        ("vertical composition is associative", associative),
        ("vertical composition is independent of the splitting", splitting),
        ("full-to-general embedding is full and faithful with left inverse", embedding),
        ("full-to-general embedding respects vertical composition", composition),
    ]


# horizontal composition

def comp_checks(g, cfg):
    gen = _roster(g, cfg, "general")
    full = _roster(g, cfg, "full")

    def valid():
        for roster in (gen, full):
            for m, n in product(roster.objects, repeat=2):
                h_compose(m, n)
        return True

    def interchange(roster):
        def run():
            homs, n = _homs(roster), len(roster)
            pairs = list(islice(_composable_pairs(homs, n), 40))
            cases = islice(product(pairs, pairs), cfg.max_cases)
            return all(interchange_check(a1, a2, b1, b2) for (a1, a2), (b1, b2) in cases)
        return run

    def compat():
        homs = _homs(full)
        arrows = [a for v in homs.values() for a in v]
        return all(full_compatibility_check(a, b) for a, b in islice(product(arrows, arrows), cfg.max_cases))

    def choices():
        homs = _homs(full)
        arrows = [a for v in homs.values() for a in v]
        for a, b in islice(product(arrows, arrows), cfg.max_cases):
            if any(len(set(v)) != 1 for v in h_compose_arrows_all_choices(a, b)):
                return False
        return True

    def associator(roster):
        def run():
            homs = _homs(roster)
            arrows = [a for v in homs.values() for a in v][: cfg.max_assoc_arrows]
            return all(associator_transport_check(*t) for t in islice(product(arrows, repeat=3), cfg.max_cases))
        return run

    def weak_units():
        for roster in (gen, full):
            for m in roster.objects:
                check_arrow(left_unit_arrow(m))
                check_arrow(right_unit_arrow(m))
        return True

    return [
        ("horizontal composites are valid morphisms", valid),
        ("interchange law (general mode)", interchange(gen)),
        ("interchange law (full mode)", interchange(full)),
        ("full-mode horizontal composition agrees with general mode", compat),
        ("full-mode horizontal composition is independent of choices", choices),
        ("associator transports triple composites (general mode)", associator(gen)),
        ("associator transports triple composites (full mode)", associator(full)),
        ("identity morphisms are weak units", weak_units),
    ]


# automorphisms

def aut_checks(g, cfg):
    roster = aut_roster(g)

    def inverses():
        return all(bool(is_automorphism(m)) for m in roster.objects)

    def isotropy():
        k = center_group(g)
        for m in roster.objects[: cfg.max_roster]:
            selfs = enumerate_arrows(m, m)
            if len(selfs) != k.order:
                return False
            for sec in k.labels:
                if iso_phi(iso_psi(m, sec)) != sec:
                    return False
            if any(iso_psi(m, iso_phi(a)).alpha != a.alpha for a in selfs):
                return False
        return True

    def surjective():
        cs = coarse_space(g)
        for m in roster.objects:
            u = m.u
            if {cs.class_of[b] for b in u.f0} != set(cs.class_of):
                return False
            for a, b in product(g.objects, repeat=2):
                if set(g.hom(u.f0[a], u.f0[b])) - {u.f1[x] for x in g.hom(a, b)}:
                    return False
        return True

    def group():
        table = coarse_aut_group(g)
        groups.group_from_table(table.mult)
        return table.class_of[0] == table.unit

    def gerbe():
        return gerbe_decomposition(g).ok

    return [
        ("automorphisms have inverses up to arrows", inverses),
        ("isotropy of each automorphism is the center, via mutually inverse maps", isotropy),
        ("automorphisms are surjective on hom-sets and coarse spaces", surjective),
        ("coarse automorphism classes form a group with the identity as unit", group),
        ("automorphism groupoid is a gerbe over its coarse space", gerbe),
    ]


_BUILDERS = {"core": core_checks, "fiber": fiber_checks, "mor": mor_checks, "comp": comp_checks, "aut": aut_checks}


def run_suite(g, name="all", cfg=None):
    cfg = cfg or SuiteConfig()
    names = SUITES if name == "all" else (name,)
    rows = []
    for suite in names:
        for label, check in _BUILDERS[suite](g, cfg):
            try:
                ok, detail = bool(check()), ""
            except GroupoidError as e:
                ok, detail = False, f"{type(e).__name__}: {e}"
            rows.append((suite, label, ok, detail))
    return rows
