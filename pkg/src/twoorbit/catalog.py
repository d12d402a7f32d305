"""Concrete polytopes as face lattices, plus rectification.

Everything here is purely combinatorial: regular families come from subsets
and sign vectors, the icosahedron and dodecahedron from incidence tables, and
the two-orbit polyhedra from rectification and duality.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .lattice import FaceLattice, dual, validate

ICOSAHEDRON_FACES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 6), (2, 3, 7), (3, 4, 8), (4, 5, 9), (5, 1, 10),
    (2, 6, 7), (3, 7, 8), (4, 8, 9), (5, 9, 10), (1, 10, 6),
    (11, 6, 7), (11, 7, 8), (11, 8, 9), (11, 9, 10), (11, 10, 6),
]

# vertex k of the dodecahedron sits at face k of the icosahedron table above
DODECAHEDRON_FACES = [
    (0, 1, 2, 3, 4), (0, 4, 9, 14, 5), (0, 1, 6, 10, 5), (1, 2, 7, 11, 6),
    (2, 3, 8, 12, 7), (3, 8, 13, 9, 4), (5, 10, 15, 19, 14), (6, 10, 15, 16, 11),
    (7, 11, 16, 17, 12), (8, 12, 17, 18, 13), (9, 13, 18, 19, 14), (15, 16, 17, 18, 19),
]

NAMED = ("tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron",
         "cuboctahedron", "icosidodecahedron", "rhombic-dodecahedron",
         "rhombic-triacontahedron")
FAMILIES = ("polygon", "simplex", "cube", "cross")
PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")
TWO_ORBIT = ("cuboctahedron", "icosidodecahedron", "rhombic-dodecahedron",
             "rhombic-triacontahedron")


class CatalogError(ValueError):
    pass


class UnsupportedRankError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogKey:
    name: str
    param: int | None = None

    def __post_init__(self):
        if self.param is None:
            if self.name not in NAMED:
                raise CatalogError(f"unknown catalog entry {self.name!r}")
        else:
            if self.name not in FAMILIES:
                raise CatalogError(f"{self.name!r} takes no parameter")
            low = 3 if self.name == "polygon" else 1
            if self.param < low:
                raise CatalogError(f"{self.name} parameter must be >= {low}, got {self.param}")

    @classmethod
    def parse(cls, text: str) -> "CatalogKey":
        """Accepts ``cuboctahedron``, ``polygon:6``, ``polygon(6)`` or ``cube-4``."""
        m = re.fullmatch(r"\s*([a-z-]+?)\s*(?:[:(-]\s*(\d+)\s*\)?)?\s*", text.lower())
        if not m:
            raise CatalogError(f"cannot parse catalog key {text!r}")
        name, param = m.group(1), m.group(2)
        if param is None and name in FAMILIES and name not in NAMED:
            raise CatalogError(f"{name} needs a parameter, e.g. {name}:4")
        return cls(name, None if param is None else int(param))

    def __str__(self):
        return self.name if self.param is None else f"{self.name}({self.param})"


def from_polygons(cycles, rank: int = 3) -> FaceLattice:
    """Rank-3 lattice of a polyhedron given by its 2-faces as vertex cycles."""
    faces: dict = {}
    covers = []
    for cyc in cycles:
        fid = "f" + "-".join(map(str, cyc))
        faces[fid] = 2
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            a, b = sorted((a, b))
            eid = f"e{a}-{b}"
            if eid not in faces:
                faces[eid] = 1
                faces.setdefault(f"v{a}", 0)
                faces.setdefault(f"v{b}", 0)
                covers += [(f"v{a}", eid), (f"v{b}", eid)]
            covers.append((eid, fid))
    return FaceLattice(rank, faces, covers)


def polygon(n: int) -> FaceLattice:
    if n < 3:
        raise CatalogError("polygon needs n >= 3")
    faces = {f"v{i}": 0 for i in range(n)}
    faces.update({f"e{i}": 1 for i in range(n)})
    covers = [(f"v{i}", f"e{i}") for i in range(n)] + [(f"v{(i + 1) % n}", f"e{i}") for i in range(n)]
    return FaceLattice(2, faces, covers)


def simplex(d: int) -> FaceLattice:
    if d < 1:
        raise CatalogError("simplex needs d >= 1")
    name = lambda s: "{" + ",".join(map(str, s)) + "}"
    faces, covers = {}, []
    for size in range(1, d + 2):
        for s in combinations(range(d + 1), size):
            faces[name(s)] = size - 1
            if size > 1:
                covers += [(name(s[:k] + s[k + 1:]), name(s)) for k in range(size)]
    return FaceLattice(d, faces, covers)


_SIGN = {-1: "-", 0: "0", 1: "+"}


def cube(d: int) -> FaceLattice:
    """Faces are sign vectors; a zero marks a free coordinate."""
    if d < 1:
        raise CatalogError("cube needs d >= 1")
    name = lambda v: "".join(_SIGN[x] for x in v)
    faces, covers = {}, []
    for v in product((-1, 0, 1), repeat=d):
        faces[name(v)] = v.count(0)
        for k, x in enumerate(v):
            if x:
                covers.append((name(v), name(v[:k] + (0,) + v[k + 1:])))
    return FaceLattice(d, faces, covers)


def cross(d: int) -> FaceLattice:
    """Faces are nonzero sign vectors: the support picks vertices +-e_k."""
    if d < 1:
        raise CatalogError("cross needs d >= 1")
    name = lambda v: "".join(_SIGN[x] for x in v)
    faces, covers = {}, []
    for v in product((-1, 0, 1), repeat=d):
        nz = d - v.count(0)
        if nz == 0:
            continue
        faces[name(v)] = nz - 1
        for k, x in enumerate(v):
            if x and nz > 1:
                covers.append((name(v[:k] + (0,) + v[k + 1:]), name(v)))
    return FaceLattice(d, faces, covers)


def rectify(L: FaceLattice) -> FaceLattice:
    """Rectification of a rank-3 lattice.

    New vertices are the old edges, new 2-faces are the old vertices (their
    figures) and the old 2-faces, and new edges are the incident
    (vertex, 2-face) pairs; edge e lies on new edge (v, f) when v < e < f.
    """
    if L.rank != 3:
        raise UnsupportedRankError(f"rectify supports rank 3 only, got rank {L.rank}")
    ids = L.ids
    faces, covers = {}, []
    for e in L.faces_of_rank(1):
        faces[f"m[{ids[e]}]"] = 0
    for v in L.faces_of_rank(0):
        faces[f"vf[{ids[v]}]"] = 2
    for f in L.faces_of_rank(2):
        faces[f"sf[{ids[f]}]"] = 2
    for v in L.faces_of_rank(0):
        for e in L.up[v]:
            for f in L.up[e]:
                eid = f"({ids[v]};{ids[f]})"
                if eid not in faces:
                    faces[eid] = 1
                    covers += [(eid, f"vf[{ids[v]}]"), (eid, f"sf[{ids[f]}]")]
                covers.append((f"m[{ids[e]}]", eid))
    return FaceLattice(3, faces, covers)


@lru_cache(maxsize=None)
def _make(name: str, param: int | None) -> FaceLattice:
    L = _build(name, param)
    report = validate(L)
    if not report.ok:
        raise AssertionError(f"catalog entry {name} failed validation: {report.lines()}")
    return L


def _build(name: str, param: int | None) -> FaceLattice:
    if name == "polygon":
        return polygon(param)
    if name == "simplex":
        return simplex(param)
    if name == "cube":
        return cube(3 if param is None else param)
    if name == "cross":
        return cross(param)
    if name == "tetrahedron":
        return simplex(3)
    if name == "octahedron":
        return cross(3)
    if name == "icosahedron":
        return from_polygons(ICOSAHEDRON_FACES)
    if name == "dodecahedron":
        return from_polygons(DODECAHEDRON_FACES)
    if name == "cuboctahedron":
        return rectify(cube(3))
    if name == "icosidodecahedron":
        return rectify(_make("dodecahedron", None))
    if name == "rhombic-dodecahedron":
        return dual(_make("cuboctahedron", None))
    if name == "rhombic-triacontahedron":
        return dual(_make("icosidodecahedron", None))
    raise CatalogError(f"unknown catalog entry {name!r}")


def make(key: CatalogKey | str) -> FaceLattice:
    if isinstance(key, str):
        key = CatalogKey.parse(key)
    return _make(key.name, key.param)
