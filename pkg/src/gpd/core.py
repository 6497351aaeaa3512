"""Finite groupoids: representation, validation and standard constructions.

Objects and arrows are dense integer indices.  Composition is written left
to right: ``compose(x, y)`` is defined when ``tgt[x] == src[y]`` and means
"x, then y".
"""

from dataclasses import dataclass
from functools import cached_property

from . import groups
from .errors import (
    ConflictingComposite,
    EmptyRestriction,
    IllTypedComposite,
    InvalidAction,
    InvalidReference,
    MissingComposite,
    NoInverse,
    NonAssociative,
    NotComposable,
    NoUnit,
)


class FiniteGroupoid:
    """A finite groupoid with a total composition on composable pairs.

    ``mul`` is either a dict keyed by ``(x, y)`` or a callable; large derived
    groupoids (fiber products) use a callable so that the composition table
    is never materialized.  Instances are treated as immutable.
    """

    def __init__(self, n_objects, src, tgt, mul, unit=None, inverse=None, name=""):
        self.n_objects = n_objects
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        if isinstance(mul, dict):
            self._table = mul
            self._mul = mul.__getitem__
        else:
            self._table = None
            self._mul = mul
        self.name = name
        self.unit = tuple(unit) if unit is not None else self._infer_units()
        self.inv = tuple(inverse) if inverse is not None else self._infer_inverses()

    def _mul_pair(self, x, y):
        return self._mul((x, y)) if self._table is not None else self._mul(x, y)

    def _infer_units(self):
        unit = [None] * self.n_objects
        for a in range(self.n_objects):
            for e in self.hom(a, a):
                if self._mul_pair(e, e) == e:
                    unit[a] = e
                    break
        return unit

    def _infer_inverses(self):
        inv = []
        for x in range(self.n_arrows):
            a, b = self.src[x], self.tgt[x]
            inv.append(next((y for y in self.hom(b, a) if self._mul_pair(x, y) == self.unit[a]), None))
        return inv

    @property
    def n_arrows(self):
        return len(self.src)

    @property
    def objects(self):
        return range(self.n_objects)

    @property
    def arrows(self):
        return range(len(self.src))

    def compose(self, x, y):
        if self.tgt[x] != self.src[y]:
            raise NotComposable(f"arrows {x} and {y} are not composable", witness=(x, y))
        return self._mul_pair(x, y)

    def mul(self, *xs):
        """Compose a path of arrows left to right."""
        out = xs[0]
        for x in xs[1:]:
            out = self.compose(out, x)
        return out

    @cached_property
    def _homs(self):
        homs = {}
        for x in range(self.n_arrows):
            homs.setdefault((self.src[x], self.tgt[x]), []).append(x)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _out(self):
        out = [[] for _ in range(self.n_objects)]
        for x in range(self.n_arrows):
            out[self.src[x]].append(x)
        return tuple(tuple(o) for o in out)

    @cached_property
    def generating_set(self):
        """Spanning-tree arrows plus generators of the isotropy group at each root."""
        seen = [False] * self.n_objects
        gens = set()
        for r in range(self.n_objects):
            if seen[r]:
                continue
            seen[r] = True
            frontier = [r]
            while frontier:
                nxt = []
                for a in frontier:
                    for x in self._out[a]:
                        b = self.tgt[x]
                        if not seen[b]:
                            seen[b] = True
                            gens.add(x)
                            nxt.append(b)
                frontier = nxt
            grp = isotropy_group(self, r)
            gens.update(grp.labels[i] for i in groups.generators(grp))
        return tuple(sorted(gens))

    @cached_property
    def generators_from(self):
        out = [[] for _ in range(self.n_objects)]
        for x in self.generating_set:
            out[self.src[x]].append(x)
        return tuple(tuple(o) for o in out)

    def hom(self, a, b):
        return self._homs.get((a, b), ())

    def out_arrows(self, a):
        return self._out[a]

    def loops(self, a):
        return self.hom(a, a)

    def composable_pairs(self):
        for x in range(self.n_arrows):
            for y in self._out[self.tgt[x]]:
                yield x, y

    def table(self):
        if self._table is not None:
            return self._table
        return dict(zip(self.composable_pairs(), self._composites))

    @cached_property
    def _composites(self):
        """All composites in ``composable_pairs`` order; the structural identity of the groupoid."""
        return tuple(self._mul_pair(x, y) for x, y in self.composable_pairs())

    def to_raw(self):
        return {
            "name": self.name,
            "objects": self.n_objects,
            "arrows": [[s, t] for s, t in zip(self.src, self.tgt)],
            "compose": [[x, y, self._mul_pair(x, y)] for x, y in self.composable_pairs()],
        }

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        if (self.n_objects, self.src, self.tgt) != (other.n_objects, other.src, other.tgt):
            return False
        return self._composites == other._composites

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.n_objects, self.src, self.tgt))

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"FiniteGroupoid({label}objects={self.n_objects}, arrows={self.n_arrows})"


def check_axioms(g):
    """Exhaustively check the groupoid axioms of an already built groupoid."""
    for x in g.arrows:
        for y in g.out_arrows(g.tgt[x]):
            z = g._mul_pair(x, y)
            if not (0 <= z < g.n_arrows) or g.src[z] != g.src[x] or g.tgt[z] != g.tgt[y]:
                raise IllTypedComposite(f"{x}·{y} = {z} has the wrong type", witness=(x, y, z))
    _check_assoc(g)
    _check_units_inverses(g)
    return g


def _check_assoc(g):
    mul = g._mul_pair
    out = g._out
    for x in g.arrows:
        for y in out[g.tgt[x]]:
            xy = mul(x, y)
            for z in out[g.tgt[y]]:
                if mul(xy, z) != mul(x, mul(y, z)):
                    raise NonAssociative(f"({x}·{y})·{z} != {x}·({y}·{z})", witness=(x, y, z))


def _check_units_inverses(g):
    mul = g._mul_pair
    into = [[] for _ in g.objects]
    for x in g.arrows:
        into[g.tgt[x]].append(x)
    for a in g.objects:
        e = g.unit[a]
        if e is None or g.src[e] != a or g.tgt[e] != a:
            raise NoUnit(f"object {a} has no unit", witness=a)
        for x in g.out_arrows(a):
            if mul(e, x) != x:
                raise NoUnit(f"candidate unit {e} at {a} fails on {x}", witness=a)
        for x in into[a]:
            if mul(x, e) != x:
                raise NoUnit(f"candidate unit {e} at {a} fails on {x}", witness=a)
    for x in g.arrows:
        y = g.inv[x]
        a, b = g.src[x], g.tgt[x]
        if y is None or g.src[y] != b or g.tgt[y] != a or mul(x, y) != g.unit[a] or mul(y, x) != g.unit[b]:
            raise NoInverse(f"arrow {x} has no inverse", witness=x)


def validate(n_objects, arrows, compose, name=""):
    """Build a groupoid from raw data, inferring units and inverses.

    ``arrows`` is a list of ``(src, tgt)`` pairs, ``compose`` a list of
    ``(x, y, z)`` triples meaning ``x·y = z``.
    """
    if not isinstance(n_objects, int) or n_objects < 0:
        raise InvalidReference(f"object count must be a non-negative integer, got {n_objects!r}")
    src, tgt = [], []
    for i, pair in enumerate(arrows):
        s, t = pair
        for v in (s, t):
            if not (isinstance(v, int) and 0 <= v < n_objects):
                raise InvalidReference(f"arrow {i} references object {v!r}", witness=i)
        src.append(s)
        tgt.append(t)
    n = len(src)
    table = {}
    for triple in compose:
        x, y, z = triple
        for v in (x, y, z):
            if not (isinstance(v, int) and 0 <= v < n):
                raise InvalidReference(f"composite {triple!r} references arrow {v!r}", witness=list(triple))
        if tgt[x] != src[y]:
            raise IllTypedComposite(f"{x}·{y} listed but t({x}) != s({y})", witness=[x, y, z])
        if src[z] != src[x] or tgt[z] != tgt[y]:
            raise IllTypedComposite(f"{x}·{y} = {z} has the wrong source/target", witness=[x, y, z])
        if table.get((x, y), z) != z:
            raise ConflictingComposite(f"{x}·{y} listed twice with different values", witness=[x, y])
        table[(x, y)] = z
    out = [[] for _ in range(n_objects)]
    for x in range(n):
        out[src[x]].append(x)
    for x in range(n):
        for y in out[tgt[x]]:
            if (x, y) not in table:
                raise MissingComposite(f"no entry for composable pair ({x}, {y})", witness=[x, y])
    g = FiniteGroupoid(n_objects, src, tgt, table, name=name)
    _check_assoc(g)
    _check_units_inverses(g)
    return g


def from_raw(data):
    return validate(data["objects"], data["arrows"], data["compose"], name=data.get("name", ""))


def _from_function(n_objects, arrows, mul, name=""):
    src = [a for a, _ in arrows]
    tgt = [b for _, b in arrows]
    out = [[] for _ in range(n_objects)]
    for x, s in enumerate(src):
        out[s].append(x)
    table = {(x, y): mul(x, y) for x in range(len(src)) for y in out[tgt[x]]}
    return FiniteGroupoid(n_objects, src, tgt, table, name=name)


# standard constructors

def empty_groupoid():
    return FiniteGroupoid(0, (), (), {}, name="empty")


def trivial():
    return FiniteGroupoid(1, (0,), (0,), {(0, 0): 0}, name="T")


def discrete(n):
    return FiniteGroupoid(n, range(n), range(n), {(i, i): i for i in range(n)}, name=f"D{n}")


def pair_groupoid(n):
    """One arrow i->j for every ordered pair; arrow (i, j) has index i*n + j."""
    arrows = [(i, j) for i in range(n) for j in range(n)]
    return _from_function(n, arrows, lambda x, y: (x // n) * n + (y % n), name=f"P{n}")


def classifying_groupoid(table, name=""):
    """One object, one arrow per group element; raises NotAGroup."""
    grp = table if isinstance(table, groups.FiniteGroup) else groups.group_from_table(table)
    n = grp.order
    mul = {(a, b): grp.table[a][b] for a in range(n) for b in range(n)}
    return FiniteGroupoid(1, [0] * n, [0] * n, mul, name=name)


def disjoint_union(*gs, name=""):
    n_obj, arrows, table = 0, [], {}
    for g in gs:
        off_o, off_a = n_obj, len(arrows)
        arrows.extend((off_o + s, off_o + t) for s, t in zip(g.src, g.tgt))
        for (x, y), z in g.table().items():
            table[(off_a + x, off_a + y)] = off_a + z
        n_obj += g.n_objects
    label = name or "⊔".join(g.name or "?" for g in gs)
    return FiniteGroupoid(n_obj, [a for a, _ in arrows], [b for _, b in arrows], table, name=label)


def product(g, h, name=""):
    """Cartesian product; object (a, b) -> a*|H0| + b, arrow (x, y) -> x*|H1| + y."""
    no, na = h.n_objects, h.n_arrows
    arrows = [
        (g.src[x] * no + h.src[y], g.tgt[x] * no + h.tgt[y])
        for x in g.arrows
        for y in h.arrows
    ]

    def mul(p, q):
        return g._mul_pair(p // na, q // na) * na + h._mul_pair(p % na, q % na)

    return _from_function(g.n_objects * no, arrows, mul, name=name or f"{g.name}×{h.name}")


def pullback(g, selection, name=""):
    """Pull ``g`` back along a map of object sets ``i -> selection[i]``.

    Returns ``(K, psi)``: arrows of K from i to j are triples ``(i, j, x)``
    with ``x`` in ``g.hom(selection[i], selection[j])``, in lexicographic
    order, and ``psi`` forgets the indices.  ``psi`` is always fully
    faithful; it is a full-equivalence iff the selection covers ``G0``.
    """
    from .functors import StrictMorphism

    sel = list(selection)
    for v in sel:
        if not (0 <= v < g.n_objects):
            raise InvalidReference(f"selection references object {v}", witness=v)
    decode = [(i, j, x) for i in range(len(sel)) for j in range(len(sel)) for x in g.hom(sel[i], sel[j])]
    encode = {d: k for k, d in enumerate(decode)}
    arrows = [(i, j) for i, j, _ in decode]

    def mul(p, q):
        i, _, x = decode[p]
        _, k, y = decode[q]
        return encode[(i, k, g._mul_pair(x, y))]

    k = _from_function(len(sel), arrows, mul, name=name or f"{g.name}|{sel}")
    psi = StrictMorphism(k, g, sel, [x for _, _, x in decode], check=False)
    return k, psi


def relabel(g, obj_perm, arrow_perm, name=""):
    """Rename objects ``a -> obj_perm[a]`` and arrows ``x -> arrow_perm[x]``."""
    n = g.n_arrows
    inv_a = [0] * n
    for x, p in enumerate(arrow_perm):
        inv_a[p] = x
    src = [obj_perm[g.src[inv_a[p]]] for p in range(n)]
    tgt = [obj_perm[g.tgt[inv_a[p]]] for p in range(n)]
    table = {(arrow_perm[x], arrow_perm[y]): arrow_perm[z] for (x, y), z in g.table().items()}
    return FiniteGroupoid(g.n_objects, src, tgt, table, name=name or g.name)


# coarse space and isotropy

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index wins so that roots are class minima
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class CoarseSpace:
    class_of: tuple
    n_classes: int

    def classes(self):
        out = [[] for _ in range(self.n_classes)]
        for a, c in enumerate(self.class_of):
            out[c].append(a)
        return [tuple(c) for c in out]

    def representatives(self):
        return [c[0] for c in self.classes()]


def coarse_space(g):
    uf = _UnionFind(g.n_objects)
    for x in g.arrows:
        uf.union(g.src[x], g.tgt[x])
    numbering = {}
    class_of = []
    for a in g.objects:
        class_of.append(numbering.setdefault(uf.find(a), len(numbering)))
    return CoarseSpace(tuple(class_of), len(numbering))


def isotropy_group(g, a):
    """The loops at ``a`` as a FiniteGroup whose labels are arrow indices."""
    loops = sorted(g.loops(a))
    index = {x: i for i, x in enumerate(loops)}
    table = tuple(tuple(index[g._mul_pair(x, y)] for y in loops) for x in loops)
    return groups.FiniteGroup(table, tuple(loops))


def restrict(g, objs, name=""):
    """Full subgroupoid on ``objs``; returns ``(sub, inclusion)``."""
    from .functors import StrictMorphism

    keep = sorted(set(objs))
    if not keep:
        raise EmptyRestriction("restriction to an empty object set")
    for a in keep:
        if not (0 <= a < g.n_objects):
            raise InvalidReference(f"object {a} not in groupoid", witness=a)
    new_obj = {a: i for i, a in enumerate(keep)}
    kept = [x for x in g.arrows if g.src[x] in new_obj and g.tgt[x] in new_obj]
    new_arr = {x: i for i, x in enumerate(kept)}
    table = {}
    for x in kept:
        for y in g.out_arrows(g.tgt[x]):
            if y in new_arr:
                table[(new_arr[x], new_arr[y])] = new_arr[g._mul_pair(x, y)]
    sub = FiniteGroupoid(
        len(keep),
        [new_obj[g.src[x]] for x in kept],
        [new_obj[g.tgt[x]] for x in kept],
        table,
        name=name or f"{g.name}|{keep}",
    )
    return sub, StrictMorphism(sub, g, keep, kept, check=False)


# actions

@dataclass(frozen=True)
class GroupoidAction:
    """``act[(x, p)]`` is defined when ``src[x] == anchor[p]``."""

    carrier: int
    anchor: tuple
    act: dict


def check_action(g, action):
    anchor, act = action.anchor, action.act
    if len(anchor) != action.carrier:
        raise InvalidAction("anchor length differs from carrier size")
    for p in range(action.carrier):
        if not (0 <= anchor[p] < g.n_objects):
            raise InvalidAction(f"point {p} anchored at missing object", witness=p)
        for x in g.out_arrows(anchor[p]):
            q = act.get((x, p))
            if q is None or not (0 <= q < action.carrier):
                raise InvalidAction(f"action of {x} on {p} undefined", witness=[x, p])
            if anchor[q] != g.tgt[x]:
                raise InvalidAction(f"anchor of {x}·{p} is not t({x})", witness=[x, p])
        if act[(g.unit[anchor[p]], p)] != p:
            raise InvalidAction(f"unit at {anchor[p]} moves point {p}", witness=[g.unit[anchor[p]], p])
    for p in range(action.carrier):
        for y in g.out_arrows(anchor[p]):
            q = act[(y, p)]
            for x in g.out_arrows(g.tgt[y]):
                if act[(x, q)] != act[(g._mul_pair(y, x), p)]:
                    raise InvalidAction(f"acting by {y} then {x} differs from {y}·{x} on {p}", witness=[x, y, p])


def action_groupoid(g, action, name=""):
    """The groupoid whose arrows are pairs ``(x, p)``, ``p -> act(x, p)``."""
    check_action(g, action)
    pairs = sorted((x, p) for p in range(action.carrier) for x in g.out_arrows(action.anchor[p]))
    index = {xp: i for i, xp in enumerate(pairs)}
    arrows = [(p, action.act[(x, p)]) for x, p in pairs]

    def mul(i, j):
        x, p = pairs[i]
        y, _ = pairs[j]
        return index[(g._mul_pair(x, y), p)]

    return _from_function(action.carrier, arrows, mul, name=name or f"{g.name}⋉M"), pairs
