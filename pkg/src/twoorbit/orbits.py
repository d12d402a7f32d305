"""Automorphism groups, flag orbits, class 2_I and the modified Schlafli symbol.

Automorphisms are found by propagation: an automorphism commutes with every
adjacency, so it is fixed by the image of one base flag.  For every candidate
image the map is pushed along a spanning tree of the flag graph and kept only
if it commutes with all adjacencies and induces a well-defined bijection on
faces.  All candidates are processed together as columns of one array.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .flags import FlagGraph, build_flag_graph, section_sizes
from .lattice import FaceLattice

_CHUNK_ELEMENTS = 4_000_000


class InvariantError(RuntimeError):
    """An internal consistency check failed; signals a bug, not bad input."""


# ---------------------------------------------------------------------------
# propagation engine


def _signatures(G: FlagGraph) -> np.ndarray:
    # per flag: how many flags pass through each of its faces
    return G.flags_per_face[G.flags]


def _propagate(G1: FlagGraph, G2: FlagGraph, root: int, candidates: np.ndarray):
    """Images of every flag of G1 for each candidate image of ``root``.

    Returns ``(img, ok)`` where ``img[f, c]`` is the image of flag f under
    candidate c and ``ok[c]`` says whether that candidate is an isomorphism.
    """
    order, parent, via = G1.tree(root)
    n = G1.n_flags
    if len(order) != n:
        raise InvariantError("flag graph is disconnected")
    adj2 = G2.adj
    img = np.empty((n, len(candidates)), dtype=np.int64)
    img[root] = candidates
    for f, p, i in zip(order[1:].tolist(), parent[order[1:]].tolist(), via[order[1:]].tolist()):
        img[f] = adj2[i][img[p]]

    ok = np.ones(len(candidates), dtype=bool)
    for i in range(G1.rank):
        ok &= (adj2[i][img] == img[G1.adj[i]]).all(axis=0)
    ok &= (np.sort(img, axis=0) == np.arange(n)[:, None]).all(axis=0)
    for r in range(G1.rank):
        col = r + 1
        faces1 = G1.flags[:, col]
        uniq, rep = np.unique(faces1, return_index=True)  # one flag per face
        faces2 = G2.flags[img, col]
        # flags sharing a face must map to flags sharing a face, injectively
        ok &= (faces2 == faces2[rep[np.searchsorted(uniq, faces1)]]).all(axis=0)
        reps = np.sort(faces2[rep], axis=0)
        if len(rep) > 1:
            ok &= (reps[1:] != reps[:-1]).all(axis=0)
    return img, ok


def _search(G1: FlagGraph, G2: FlagGraph, root: int, candidates: np.ndarray, first_only: bool):
    n = max(G1.n_flags, 1)
    chunk = max(1, _CHUNK_ELEMENTS // n)
    hits = []
    for start in range(0, len(candidates), chunk):
        part = candidates[start:start + chunk]
        img, ok = _propagate(G1, G2, root, part)
        for c in np.flatnonzero(ok):
            hits.append(img[:, c].copy())
            if first_only:
                return hits
    return hits


@dataclass(frozen=True)
class FlagMap:
    """Adjacency-preserving bijection between the flags of two graphs."""
    images: np.ndarray  # images[f] = image of flag f

    def face_map(self, G1: FlagGraph, G2: FlagGraph) -> dict:
        out = {}
        src = G1.flags
        dst = G2.flags[self.images]
        for a, b in zip(src.ravel().tolist(), dst.ravel().tolist()):
            out[G1.lattice.ids[a]] = G2.lattice.ids[b]
        return out


def find_isomorphisms(G1: FlagGraph, G2: FlagGraph, first_only: bool = False) -> list[FlagMap]:
    """All (or the first) flag-graph isomorphisms G1 -> G2 that induce lattice isomorphisms."""
    if G1.rank != G2.rank or G1.n_flags != G2.n_flags:
        return []
    sig1, sig2 = _signatures(G1), _signatures(G2)
    keys1 = [tuple(r) for r in sig1.tolist()]
    keys2 = [tuple(r) for r in sig2.tolist()]
    freq: dict = {}
    for k in keys2:
        freq[k] = freq.get(k, 0) + 1
    # anchor at the rarest signature of G2 to keep the candidate list short
    root = min(range(G1.n_flags), key=lambda f: (freq.get(keys1[f], 0), f))
    want = keys1[root]
    candidates = np.array([f for f, k in enumerate(keys2) if k == want], dtype=np.int64)
    if not len(candidates):
        return []
    return [FlagMap(img) for img in _search(G1, G2, root, candidates, first_only)]


# ---------------------------------------------------------------------------
# automorphism group


@dataclass
class Automorphism:
    group: "AutomorphismGroup"
    image: int  # image of the base flag

    @cached_property
    def permutation(self) -> np.ndarray:
        G = self.group.graph
        img, ok = _propagate(G, G, self.group.base_flag, np.array([self.image]))
        if not ok[0]:
            raise InvariantError(f"flag {self.image} is not the image of an automorphism")
        return img[:, 0]

    def __call__(self, flag: int) -> int:
        return int(self.permutation[flag])

    def face_map(self) -> dict:
        G = self.group.graph
        return FlagMap(self.permutation).face_map(G, G)

    def order(self) -> int:
        return permutation_order(self.permutation)


@dataclass
class AutomorphismGroup:
    graph: FlagGraph
    images: np.ndarray          # sorted images of the base flag, one per element
    base_flag: int = 0

    def __post_init__(self):
        self._lookup = {int(x): k for k, x in enumerate(self.images.tolist())}

    def __len__(self):
        return len(self.images)

    @property
    def order(self) -> int:
        return len(self.images)

    @property
    def elements(self) -> list[Automorphism]:
        return [Automorphism(self, int(x)) for x in self.images]

    def element_to(self, flag: int) -> Automorphism | None:
        """The unique automorphism carrying the base flag to ``flag``."""
        if int(flag) not in self._lookup:
            return None
        return Automorphism(self, int(flag))

    def orbit_of_flag(self, flag: int) -> np.ndarray:
        """Images of ``flag`` under every element (same element order as ``images``)."""
        x = self.images.copy()
        for i in self.graph.word_to(flag, self.base_flag):
            x = self.graph.adj[i][x]
        return x

    def orbit_matrix(self) -> np.ndarray:
        """M[f, g] = image of flag f under element g."""
        G = self.graph
        order, parent, via = G.tree(self.base_flag)
        M = np.empty((G.n_flags, len(self)), dtype=np.int64)
        M[self.base_flag] = self.images
        for f in order[1:].tolist():
            M[f] = G.adj[via[f]][M[parent[f]]]
        return M


def automorphism_group(G: FlagGraph) -> AutomorphismGroup:
    sig = _signatures(G)
    same = np.flatnonzero((sig == sig[0]).all(axis=1))
    images = _search(G, G, 0, same, first_only=False)
    return AutomorphismGroup(G, np.array(sorted(int(img[0]) for img in images), dtype=np.int64))


def permutation_order(perm: np.ndarray) -> int:
    perm = np.asarray(perm)
    ident = np.arange(len(perm))
    p = perm.copy()
    k = 1
    while not np.array_equal(p, ident):
        p = perm[p]
        k += 1
    return k


def acts_freely(group: AutomorphismGroup) -> bool:
    """No non-identity element fixes a flag, i.e. every orbit has |group| flags."""
    M = group.orbit_matrix()
    srt = np.sort(M, axis=1)
    return bool((srt[:, 1:] != srt[:, :-1]).all())


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ModifiedSchlafli:
    entries: tuple[tuple[int, ...], ...]  # entries[i-1] = sizes of sections F_{i+1}/F_{i-2}

    def __str__(self):
        parts = ["|".join(map(str, e)) for e in self.entries]
        return "{" + ", ".join(parts) + "}"

    def entry(self, i: int) -> tuple[int, ...]:
        return self.entries[i - 1]

    @property
    def equivelar(self) -> bool:
        return all(len(e) == 1 for e in self.entries)

    def stacked_positions(self) -> list[int]:
        return [i + 1 for i, e in enumerate(self.entries) if len(e) > 1]

    def as_lists(self) -> list[list[int]]:
        return [list(e) for e in self.entries]


def modified_schlafli(L: FaceLattice | FlagGraph) -> ModifiedSchlafli:
    G = L if isinstance(L, FlagGraph) else build_flag_graph(L)
    if G.rank < 2:
        raise ValueError("modified Schlafli symbol needs rank >= 2")
    return ModifiedSchlafli(tuple(tuple(sorted(set(section_sizes(G, i).values())))
                                  for i in range(1, G.rank)))


@dataclass
class OrbitReport:
    orbit_count: int
    orbit_of: np.ndarray
    group_order: int
    n_flags: int
    rank: int
    class_I: frozenset[int] | None
    transitivity: tuple[bool, ...]   # per rank 0..d-1
    symbol: ModifiedSchlafli | None

    @property
    def k(self) -> int:
        return self.orbit_count

    def class_label(self) -> str | None:
        if self.class_I is None:
            return None
        return "2_{" + ",".join(map(str, sorted(self.class_I))) + "}"

    def missing_ranks(self) -> list[int]:
        if self.class_I is None:
            return []
        return [i for i in range(self.rank) if i not in self.class_I]

    def to_dict(self) -> dict:
        return {
            "class_I": None if self.class_I is None else sorted(self.class_I),
            "flags": self.n_flags,
            "group_order": self.group_order,
            "orbits": self.orbit_count,
            "rank": self.rank,
            "symbol": None if self.symbol is None else self.symbol.as_lists(),
            "transitive_on_rank": list(self.transitivity),
        }


def flag_orbits(group: AutomorphismGroup) -> np.ndarray:
    """Orbit index per flag; orbit 0 holds flag 0, later orbits ordered by least flag."""
    n = group.graph.n_flags
    orbit_of = np.full(n, -1, dtype=np.int64)
    label = 0
    for f in range(n):
        if orbit_of[f] >= 0:
            continue
        members = group.orbit_of_flag(f)
        if len(np.unique(members)) != len(members):
            raise InvariantError(f"automorphism group does not act freely at flag {f}")
        if (orbit_of[members] >= 0).any():
            raise InvariantError("orbits overlap")
        orbit_of[members] = label
        label += 1
    return orbit_of


def _chain_orbits(G: FlagGraph, orbit_of: np.ndarray, keep_cols: list[int]) -> int:
    k = int(orbit_of.max()) + 1
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first: dict = {}
    for row, o in zip(G.flags[:, keep_cols].tolist(), orbit_of.tolist()):
        key = tuple(row)
        if key in first:
            a, b = find(first[key]), find(o)
            if a != b:
                parent[a] = b
        else:
            first[key] = o
    return len({find(x) for x in range(k)})


def chain_orbit_count(G: FlagGraph, group: AutomorphismGroup, J, orbit_of=None) -> int:
    """Number of orbits of the group on chains of cotype J."""
    if orbit_of is None:
        orbit_of = flag_orbits(group)
    J = set(J)
    cols = [r + 1 for r in range(-1, G.rank + 1) if r not in J]
    return _chain_orbits(G, orbit_of, cols)


def orbit_report(G: FlagGraph, group: AutomorphismGroup) -> OrbitReport:
    n = G.n_flags
    if n % group.order:
        raise InvariantError(f"|group| = {group.order} does not divide {n} flags")
    orbit_of = flag_orbits(group)
    k = int(orbit_of.max()) + 1
    if k * group.order != n:
        raise InvariantError(f"{k} orbits of size {group.order} do not cover {n} flags")

    class_I = None
    if k == 2:
        class_I = set()
        for i in range(G.rank):
            same = orbit_of[G.adj[i]] == orbit_of
            if same.all():
                class_I.add(i)
            elif same.any():
                raise InvariantError(f"class 2_I ill-defined: rank {i} differs between flags")
        class_I = frozenset(class_I)

    d = G.rank
    trans = tuple(_chain_orbits(G, orbit_of, [0, r + 1, d + 1]) == 1 for r in range(d))
    symbol = modified_schlafli(G) if d >= 2 else None
    return OrbitReport(k, orbit_of, group.order, n, d, class_I, trans, symbol)


def analyze(L: FaceLattice):
    """Flag graph, automorphism group and orbit report of a lattice."""
    G = build_flag_graph(L)
    group = automorphism_group(G)
    return G, group, orbit_report(G, group)


# ---------------------------------------------------------------------------
# two-orbit lemma checks


@dataclass
class LemmaCheck:
    name: str
    ok: bool
    detail: str


@dataclass
class LemmaReport:
    checks: list[LemmaCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def counterexamples(self) -> list[LemmaCheck]:
        return [c for c in self.checks if not c.ok]


def check_two_orbit_lemmas(report: OrbitReport, symbol: ModifiedSchlafli | None = None,
                           chain_orbits: dict[int, int] | None = None) -> LemmaReport:
    """Check the structural consequences of being two-orbit of class 2_I.

    For each rank j outside I: symbol entries are single-valued except at
    positions j-1 and j+2; entries j (if j >= 1) and j+1 (if j <= d-2) are
    even; and the missing ranks are {0}, {d-1}, or {0, 3} with d = 4.
    ``chain_orbits`` optionally maps j to the observed number of orbits on
    chains of cotype {j}, which must be 1.
    """
    if report.orbit_count != 2:
        raise ValueError(f"lemma checks need a two-orbit input, got k = {report.orbit_count}")
    symbol = symbol or report.symbol
    d = report.rank
    missing = report.missing_ranks()
    out = LemmaReport()
    for j in missing:
        allowed = {j - 1, j + 2}
        bad = [i for i in range(1, d) if i not in allowed and len(symbol.entry(i)) > 1]
        out.checks.append(LemmaCheck(
            f"single-valued entries (j={j})", not bad,
            "entries away from positions {}: {}".format(
                sorted(a for a in allowed if 1 <= a < d),
                "ok" if not bad else f"multi-valued at {bad}")))
        for i in ([j] if j >= 1 else []) + ([j + 1] if j <= d - 2 else []):
            vals = symbol.entry(i)
            out.checks.append(LemmaCheck(f"even entry p_{i} (j={j})",
                                         all(v % 2 == 0 for v in vals), f"p_{i} = {vals}"))
        if chain_orbits is not None and j in chain_orbits:
            out.checks.append(LemmaCheck(f"transitive on chains of cotype {{{j}}}",
                                         chain_orbits[j] == 1, f"{chain_orbits[j]} orbit(s)"))
    exceptional = d == 4 and sorted(missing) == [0, 3]
    single = len(missing) == 1 and missing[0] in (0, d - 1)
    out.checks.append(LemmaCheck("missing rank is 0 or d-1", single or exceptional,
                                 f"missing ranks {missing}"))
    return out
