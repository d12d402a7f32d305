"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package's flag machinery: automorphisms
and isomorphisms come from backtracking over vertex bijections, and flags
are counted by checking every tuple of one face per rank.
"""
from itertools import permutations, product

import pytest

from twoorbit.catalog import from_polygons, make


def vertex_sets(L):
    """Per rank >= 1, the set of vertex sets of faces (faces of polytopes are
    determined by their vertices)."""
    verts = set(L.faces_of_rank(0))
    out = {}
    for f in range(len(L)):
        r = L.ranks[f]
        if r >= 1:
            out.setdefault(r, {})[frozenset(v for v in L.interval(L.least, f) if v in verts)] = f
    return out


def vertex_map_isomorphisms(L1, L2, limit=None):
    """Backtracking over vertex bijections preserving edges, then checking that
    every face's vertex set lands on a face's vertex set of the same rank.

    Returns face maps {face1: face2} (internal indices).
    """
    V1, V2 = L1.faces_of_rank(0), L2.faces_of_rank(0)
    if len(V1) != len(V2):
        return []
    sets1, sets2 = vertex_sets(L1), vertex_sets(L2)
    nbr = lambda L, v: {w for e in L.up[v] for w in L.down[e] if w != v}
    n1 = {v: nbr(L1, v) for v in V1}
    n2 = {v: nbr(L2, v) for v in V2}
    # BFS order so each vertex after the first touches a mapped one
    order, seen = [V1[0]], {V1[0]}
    for v in order:
        for w in sorted(n1[v]):
            if w not in seen:
                seen.add(w)
                order.append(w)
    if len(order) != len(V1):
        return []
    found = []

    def extend(m, used):
        if limit is not None and len(found) >= limit:
            return
        if len(m) == len(order):
            fm = {L1.least: L2.least, L1.greatest: L2.greatest, **m}
            for r, table in sets1.items():
                for vs, f in table.items():
                    g = sets2.get(r, {}).get(frozenset(m[v] for v in vs))
                    if g is None:
                        return
                    fm[f] = g
            found.append(fm)
            return
        v = order[len(m)]
        mapped_nbrs = [m[w] for w in n1[v] if w in m]
        cands = set(V2) if not mapped_nbrs else set.intersection(*(n2[w] for w in mapped_nbrs))
        for c in sorted(cands - used):
            if len(n2[c]) != len(n1[v]):
                continue
            if any((w in m) != (m.get(w) in n2[c]) for w in n1[v] if w in m):
                continue
            m[v] = c
            used.add(c)
            extend(m, used)
            del m[v]
            used.discard(c)

    extend({}, set())
    return found


def brute_flag_count(L):
    """Count maximal chains by checking every tuple of one face per rank."""
    by_rank = [L.faces_of_rank(r) for r in range(-1, L.rank + 1)]
    covers = set(L.covers)
    return sum(all((a, b) in covers for a, b in zip(t, t[1:])) for t in product(*by_rank))


def coordinate_cuboctahedron():
    """Edge midpoints of the cube: perms of (+-1, +-1, 0); faces cut out by planes."""
    pts = sorted({p for s in product((1, -1), repeat=2) for p in set(permutations((s[0], s[1], 0)))})
    d2 = lambda a, b: sum((x - y) ** 2 for x, y in zip(a, b))

    def cyc(vs):
        out = [vs[0]]
        while len(out) < len(vs):
            out.append(next(v for v in vs if v not in out and d2(v, out[-1]) == 2))
        return [pts.index(v) for v in out]

    faces = []
    for ax, s in product(range(3), (1, -1)):
        faces.append(cyc([p for p in pts if p[ax] == s]))
    for sg in product((1, -1), repeat=3):
        faces.append(cyc([p for p in pts if sum(a * b for a, b in zip(p, sg)) == 2]))
    return from_polygons(faces)


@pytest.fixture(scope="session")
def cuboct():
    return make("cuboctahedron")


@pytest.fixture(scope="session")
def icosid():
    return make("icosidodecahedron")


# acceptance lines, printed after the run so they land in the captured log
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
