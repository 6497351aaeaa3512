"""Brute-force reference computations.

Everything here works on plain lists (multiplication tables, arrow lists)
and deliberately avoids the library's algorithms, so the tests compare two
independent computations.
"""

from itertools import permutations, product


def table_of(g):
    """(n_objects, [(src, tgt)], {(x, y): z}) of a groupoid, read off directly."""
    arrows = list(zip(g.src, g.tgt))
    comp = {}
    for x in range(len(arrows)):
        for y in range(len(arrows)):
            if arrows[x][1] == arrows[y][0]:
                comp[(x, y)] = g.compose(x, y)
    return g.n_objects, arrows, comp


def components(n, arrows):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for s, t in arrows:
        parent[find(s)] = find(t)
    return len({find(a) for a in range(n)})


def functors(g, h):
    """All functors g -> h by filtering every pair of maps."""
    n1, ar1, c1 = table_of(g)
    n2, ar2, c2 = table_of(h)
    out = []
    for f0 in product(range(n2), repeat=n1):
        cands = [[y for y in range(len(ar2)) if ar2[y] == (f0[s], f0[t])] for s, t in ar1]
        for f1 in product(*cands):
            if all(c2[(f1[x], f1[y])] == f1[z] for (x, y), z in c1.items()):
                out.append((f0, f1))
    return sorted(out)


def nat_trans(g, h, f, k):
    """All transformations f => k between functors given as (f0, f1)."""
    n1, ar1, _ = table_of(g)
    _, ar2, c2 = table_of(h)
    cands = [[y for y in range(len(ar2)) if ar2[y] == (f[0][a], k[0][a])] for a in range(n1)]
    out = []
    for comp in product(*cands):
        if all(c2[(f[1][x], comp[t])] == c2[(comp[s], k[1][x])] for x, (s, t) in enumerate(ar1)):
            out.append(comp)
    return out


def is_equivalence(g, h, f):
    """Essentially surjective and bijective on every hom-set, straight from the definition."""
    n1, ar1, _ = table_of(g)
    n2, ar2, _ = table_of(h)
    f0, f1 = f
    reached = {t for s, t in ar2 if s in set(f0)}
    if any(b not in reached for b in range(n2)):
        return False
    for a in range(n1):
        for b in range(n1):
            dom = [x for x in range(len(ar1)) if ar1[x] == (a, b)]
            cod = [y for y in range(len(ar2)) if ar2[y] == (f0[a], f0[b])]
            if sorted(f1[x] for x in dom) != sorted(cod):
                return False
    return True


def group_table(g):
    """Multiplication table of a one-object groupoid, indexed by arrow id."""
    n = g.n_arrows
    return [[g.compose(x, y) for y in range(n)] for x in range(n)]


def out_group(table):
    """(|Aut|, |Inn|, Out as a coset multiplication table) by brute force."""
    n = len(table)
    e = next(i for i in range(n) if all(table[i][x] == x for x in range(n)))
    inv = [next(y for y in range(n) if table[x][y] == e) for x in range(n)]
    auts = [p for p in permutations(range(n))
            if all(p[table[a][b]] == table[p[a]][p[b]] for a in range(n) for b in range(n))]
    inns = {tuple(table[table[inv[c]][x]][c] for x in range(n)) for c in range(n)}
    # cosets of Inn in Aut, composed as maps
    def comp(p, q):
        return tuple(q[p[x]] for x in range(n))

    cosets = []
    for p in auts:
        coset = frozenset(comp(i, p) for i in inns)
        if coset not in cosets:
            cosets.append(coset)
    rep = [next(iter(c)) for c in cosets]
    where = lambda p: next(k for k, c in enumerate(cosets) if p in c)
    mult = [[where(comp(rep[i], rep[j])) for j in range(len(cosets))] for i in range(len(cosets))]
    return len(auts), len(inns), mult


def order_profile(mult):
    n = len(mult)
    e = next(i for i in range(n) if all(mult[i][x] == x for x in range(n)))
    out = []
    for a in range(n):
        k, x = 1, a
        while x != e:
            x = mult[x][a]
            k += 1
        out.append(k)
    abelian = all(mult[a][b] == mult[b][a] for a in range(n) for b in range(n))
    return sorted(out), abelian


def center_size(table):
    n = len(table)
    return sum(all(table[z][x] == table[x][z] for x in range(n)) for z in range(n))
