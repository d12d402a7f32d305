"""Flags, i-adjacency and chains of a face lattice."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .lattice import FaceLattice, LatticeError


class DiamondError(LatticeError):
    pass


@dataclass(frozen=True)
class Chain:
    faces: tuple[int, ...]   # internal face indices, increasing rank
    type: frozenset[int]     # ranks present


class FlagGraph:
    """All flags of a lattice plus the adjacency involutions.

    ``flags[k]`` holds the internal face indices of flag ``k`` for ranks
    -1..d (column ``r + 1`` is the rank ``r`` face).  Flags are numbered in
    lexicographic order of those rows.  ``adj[i, k]`` is the i-adjacent flag.
    """

    def __init__(self, lattice: FaceLattice, flags: np.ndarray, adj: np.ndarray):
        self.lattice = lattice
        self.flags = flags
        self.adj = adj
        self.flags.setflags(write=False)
        self.adj.setflags(write=False)
        self._index = {tuple(row): k for k, row in enumerate(flags.tolist())}

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def n_flags(self) -> int:
        return len(self.flags)

    def __len__(self):
        return self.n_flags

    def __repr__(self):
        return f"FlagGraph(rank={self.rank}, flags={self.n_flags})"

    def flag_index(self, faces) -> int:
        return self._index[tuple(int(x) for x in faces)]

    def face_of(self, k: int, r: int) -> int:
        """Internal index of the rank-r face of flag k."""
        return int(self.flags[k, r + 1])

    def face_ids(self, k: int) -> tuple:
        return tuple(self.lattice.ids[i] for i in self.flags[k])

    def apply_word(self, k, word):
        """Apply adjacencies left to right: ``apply_word(k, [a, b])`` is (k^a)^b."""
        for i in word:
            k = self.adj[i][k]
        return k

    @cached_property
    def flags_per_face(self) -> np.ndarray:
        counts = np.zeros(len(self.lattice), dtype=np.int64)
        np.add.at(counts, self.flags.ravel(), 1)
        return counts

    @property
    def spanning_tree(self):
        return self.tree(0)

    def tree(self, root: int = 0):
        """BFS tree from ``root``: (order, parent, via) with ``adj[via[f], parent[f]] == f``."""
        cache = self.__dict__.setdefault("_trees", {})
        if root not in cache:
            cache[root] = self._bfs(root)
        return cache[root]

    def _bfs(self, root):
        n = self.n_flags
        parent = np.full(n, -1, dtype=np.int64)
        via = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        order = [root]
        seen[root] = True
        head = 0
        adj = self.adj.tolist()
        while head < len(order):
            f = order[head]
            head += 1
            for i in range(self.rank):
                g = adj[i][f]
                if not seen[g]:
                    seen[g] = True
                    parent[g] = f
                    via[g] = i
                    order.append(g)
        return np.array(order, dtype=np.int64), parent, via

    def is_connected(self) -> bool:
        return len(self.spanning_tree[0]) == self.n_flags

    def word_to(self, k: int, root: int = 0) -> list[int]:
        """Adjacency word carrying ``root`` to flag k along the spanning tree."""
        _, parent, via = self.tree(root)
        word = []
        while k != root:
            word.append(int(via[k]))
            k = int(parent[k])
        return word[::-1]


def enumerate_flags(L: FaceLattice) -> list[tuple[int, ...]]:
    """Maximal chains by depth-first extension from the least face."""
    top = L.greatest
    out = []
    stack = [(L.least,)]
    while stack:
        chain = stack.pop()
        last = chain[-1]
        if last == top:
            out.append(chain)
            continue
        for nxt in L.up[last]:
            stack.append(chain + (nxt,))
    out.sort()
    return out


def build_flag_graph(L: FaceLattice) -> FlagGraph:
    d = L.rank
    rows = enumerate_flags(L)
    flags = np.array(rows, dtype=np.int64).reshape(len(rows), d + 2)
    adj = np.empty((max(d, 0), len(rows)), dtype=np.int64)
    for i in range(d):
        col = i + 1
        groups: dict = {}
        for k, row in enumerate(rows):
            groups.setdefault(row[:col] + row[col + 1:], []).append(k)
        for key, members in groups.items():
            if len(members) != 2:
                lo, hi = L.ids[key[col - 1]], L.ids[key[col]]
                raise DiamondError(
                    f"diamond violated: interval {lo!r} < {hi!r} has {len(members)} "
                    f"rank-{i} faces, expected 2")
            a, b = members
            adj[i, a] = b
            adj[i, b] = a
    return FlagGraph(L, flags, adj)


def adjacent_flag(G: FlagGraph, f: int, i: int) -> int:
    if not 0 <= i < G.rank:
        raise ValueError(f"adjacency rank {i} out of range 0..{G.rank - 1}")
    return int(G.adj[i, f])


def chains_of_cotype(L: FaceLattice, J) -> set[Chain]:
    """Chains with exactly one face of every rank not in J (ranks -1..d)."""
    J = set(J)
    keep = [r for r in range(-1, L.rank + 1) if r not in J]
    cols = [r + 1 for r in keep]
    t = frozenset(keep)
    return {Chain(tuple(row[c] for c in cols), t) for row in enumerate_flags(L)}


def section_sizes(G: FlagGraph, i: int) -> dict[tuple[int, int], int]:
    """Polygon size of every section F_{i+1}/F_{i-2}, keyed by (F_{i-2}, F_{i+1})."""
    cache = G.__dict__.setdefault("_section_cache", {})
    if i not in cache:
        # columns hold ranks -1..d, so rank r sits at r + 1
        seen: dict[tuple[int, int], set] = {}
        for lo, mid, hi in G.flags[:, [i - 1, i, i + 2]].tolist():
            seen.setdefault((lo, hi), set()).add(mid)
        cache[i] = {k: len(v) for k, v in seen.items()}
    return cache[i]


def flag_section_size(G: FlagGraph, k: int, i: int) -> int:
    """Size of the polygon F_{i+1}/F_{i-2} determined by flag k."""
    f_lo, f_hi = G.face_of(k, i - 2), G.face_of(k, i + 1)
    return section_sizes(G, i)[(f_lo, f_hi)]


__all__ = ["Chain", "FlagGraph", "DiamondError", "build_flag_graph", "adjacent_flag",
           "chains_of_cotype", "enumerate_flags", "section_sizes", "flag_section_size"]
