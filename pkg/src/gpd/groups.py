"""Finite groups given by multiplication tables.

Elements are ``0..n-1`` and ``table[a][b]`` is the product ``a·b``
(``a`` first, then ``b``).  This is the small amount of group theory the
groupoid code needs: validation, centers, homomorphism enumeration and
isomorphism search.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import NotAGroup


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple
    labels: tuple = None
    unit: int = field(init=False)
    inverse: tuple = field(init=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(n)))
        unit = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))
        object.__setattr__(self, "unit", unit)
        inv = tuple(next(y for y in range(n) if table[x][y] == unit) for x in range(n))
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def element_order(self, a):
        k, x = 1, a
        while x != self.unit:
            x = self.table[x][a]
            k += 1
        return k

    def __len__(self):
        return len(self.table)


def group_from_table(table, labels=None):
    """Validate a multiplication table and wrap it; raises NotAGroup."""
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise NotAGroup("a group needs at least one element")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NotAGroup(f"row {i} has length {len(r)}, expected {n}", witness=i)
        for v in r:
            if not (isinstance(v, int) and 0 <= v < n):
                raise NotAGroup(f"entry {v!r} out of range", witness=(i, v))
    for a, b, c in product(range(n), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAGroup("multiplication is not associative", witness=(a, b, c))
    units = [e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))]
    if not units:
        raise NotAGroup("no identity element")
    e = units[0]
    for x in range(n):
        if not any(rows[x][y] == e and rows[y][x] == e for y in range(n)):
            raise NotAGroup(f"element {x} has no inverse", witness=x)
    return FiniteGroup(tuple(tuple(r) for r in rows), None if labels is None else tuple(labels))


def cyclic(n):
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric(n):
    """Permutations of ``range(n)`` in lexicographic order; ``p·q`` applies p then q."""
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(q[p[i]] for i in range(n))] for q in perms) for p in perms
    )
    return FiniteGroup(table, tuple(perms))


def direct_product(g, h):
    m = h.order
    table = tuple(
        tuple(g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(g.order * m))
        for a in range(g.order * m)
    )
    return FiniteGroup(table)


def center(g):
    n = g.order
    return [z for z in range(n) if all(g.table[z][x] == g.table[x][z] for x in range(n))]


def is_abelian(g):
    return len(center(g)) == g.order


def generators(g):
    """A small generating set, chosen greedily by descending element order."""
    span = {g.unit}
    gens = []
    for x in sorted(range(g.order), key=lambda a: (-g.element_order(a), a)):
        if x not in span:
            gens.append(x)
            span = closure(g, gens)
    return gens


def closure(g, gens):
    seen = {g.unit}
    frontier = [g.unit]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = g.table[a][s]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def _extend(g, h, gens, images):
    # words in the generators, read left to right, fix the map on the span
    phi = {g.unit: h.unit}
    frontier = [g.unit]
    while frontier:
        nxt = []
        for a in frontier:
            for s, t in zip(gens, images):
                b = g.table[a][s]
                val = h.table[phi[a]][t]
                if b in phi:
                    if phi[b] != val:
                        return None
                else:
                    phi[b] = val
                    nxt.append(b)
        frontier = nxt
    for a in range(g.order):
        for b in range(g.order):
            if phi[g.table[a][b]] != h.table[phi[a]][phi[b]]:
                return None
    return tuple(phi[a] for a in range(g.order))


def homomorphisms(g, h):
    """All group homomorphisms g -> h as tuples, sorted."""
    gens = generators(g)
    cands = []
    for s in gens:
        k = g.element_order(s)
        cands.append([t for t in range(h.order) if k % h.element_order(t) == 0])
    out = set()
    for images in product(*cands):
        phi = _extend(g, h, gens, images)
        if phi is not None:
            out.add(phi)
    return sorted(out)


def isomorphisms(g, h, limit=None):
    if g.order != h.order:
        return []
    gens = generators(g)
    cands = [[t for t in range(h.order) if h.element_order(t) == g.element_order(s)] for s in gens]
    found = []
    for images in product(*cands):
        phi = _extend(g, h, gens, images)
        if phi is not None and len(set(phi)) == g.order:
            found.append(phi)
            if limit is not None and len(found) >= limit:
                break
    return sorted(found)


def _order_profile(g):
    counts = {}
    for a in range(g.order):
        k = g.element_order(a)
        counts[k] = counts.get(k, 0) + 1
    return sorted(counts.items())


def is_isomorphic(g, h):
    if g.order != h.order or _order_profile(g) != _order_profile(h):
        return False
    return bool(isomorphisms(g, h, limit=1))


def automorphisms(g):
    return isomorphisms(g, g)


def inner_automorphisms(g):
    inv = g.inverse
    out = set()
    for c in range(g.order):
        out.add(tuple(g.table[g.table[inv[c]][x]][c] for x in range(g.order)))
    return sorted(out)
