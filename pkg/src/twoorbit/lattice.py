"""Ranked face lattices of abstract polytopes.

A :class:`FaceLattice` stores the Hasse diagram (cover relation) of a finite
ranked poset with a least face of rank -1 and a greatest face of rank ``d``.
Faces carry arbitrary hashable ids; internally they are indexed ``0..n-1``.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

LEAST_ID = "__least__"
GREATEST_ID = "__greatest__"


class LatticeError(ValueError):
    """Structural problem with a face lattice (dangling ids, empty input...)."""


class IncidenceError(LatticeError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str  # 'bounded' | 'graded' | 'diamond' | 'connectivity'
    message: str
    faces: tuple = ()

    def __str__(self):
        return f"{self.axiom}: {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __bool__(self):
        return self.ok

    def lines(self) -> list[str]:
        if self.ok:
            return ["all axioms hold: bounded, graded, diamond, strong flag-connectivity"]
        return [str(v) for v in self.violations]


class FaceLattice:
    """Immutable ranked Hasse diagram.

    ``faces`` maps face id -> rank; ``covers`` is an iterable of
    ``(lower_id, upper_id)`` pairs.  When ``synthesize`` is true, missing
    improper faces are added: a least face below every vertex and a greatest
    face above every rank ``d-1`` face.
    """

    def __init__(self, rank: int, faces, covers: Iterable[tuple[Hashable, Hashable]],
                 synthesize: bool = True):
        if isinstance(faces, dict):
            items = list(faces.items())
        else:
            items = [(fid, r) for fid, r in faces]
        if not items:
            raise LatticeError("empty lattice: no faces given")
        rank = int(rank)
        ids: list = []
        ranks: list[int] = []
        index: dict = {}
        for fid, r in items:
            if fid in index:
                raise LatticeError(f"duplicate face id {fid!r}")
            index[fid] = len(ids)
            ids.append(fid)
            ranks.append(int(r))
        cover_idx = []
        for lo, hi in covers:
            if lo not in index:
                raise LatticeError(f"cover ({lo!r}, {hi!r}) references unknown face {lo!r}")
            if hi not in index:
                raise LatticeError(f"cover ({lo!r}, {hi!r}) references unknown face {hi!r}")
            cover_idx.append((index[lo], index[hi]))

        if synthesize:
            if -1 not in ranks:
                least = len(ids)
                ids.append(LEAST_ID)
                ranks.append(-1)
                index[LEAST_ID] = least
                cover_idx.extend((least, i) for i in range(least) if ranks[i] == 0)
            if rank not in ranks:
                top = len(ids)
                ids.append(GREATEST_ID)
                ranks.append(rank)
                index[GREATEST_ID] = top
                cover_idx.extend((i, top) for i in range(top) if ranks[i] == rank - 1)

        self.rank = rank
        self.ids: tuple = tuple(ids)
        self.ranks: tuple[int, ...] = tuple(ranks)
        self.index: dict = index
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(set(cover_idx)))
        up: list[list[int]] = [[] for _ in ids]
        down: list[list[int]] = [[] for _ in ids]
        for lo, hi in self.covers:
            up[lo].append(hi)
            down[hi].append(lo)
        self.up: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(u)) for u in up)
        self.down: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(d)) for d in down)

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.ids)

    def __repr__(self):
        return f"FaceLattice(rank={self.rank}, f={self.f_vector()})"

    def faces_of_rank(self, r: int) -> list[int]:
        return [i for i, ri in enumerate(self.ranks) if ri == r]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts for ranks 0..d-1."""
        counts = defaultdict(int)
        for r in self.ranks:
            counts[r] += 1
        return tuple(counts[r] for r in range(0, self.rank))

    @cached_property
    def least(self) -> int:
        mins = self.faces_of_rank(-1)
        if len(mins) != 1:
            raise LatticeError(f"expected one face of rank -1, found {len(mins)}")
        return mins[0]

    @cached_property
    def greatest(self) -> int:
        tops = self.faces_of_rank(self.rank)
        if len(tops) != 1:
            raise LatticeError(f"expected one face of rank {self.rank}, found {len(tops)}")
        return tops[0]

    @cached_property
    def _below(self) -> tuple[int, ...]:
        # bitset of faces <= each face (reflexive), filled in rank order
        order = sorted(range(len(self.ids)), key=lambda i: self.ranks[i])
        below = [0] * len(self.ids)
        for i in order:
            b = 1 << i
            for lo in self.down[i]:
                b |= below[lo]
            below[i] = b
        return tuple(below)

    @cached_property
    def _above(self) -> tuple[int, ...]:
        above = [0] * len(self.ids)
        for i in range(len(self.ids)):
            for j in _bits(self._below[i]):
                above[j] |= 1 << i
        return tuple(above)

    def leq(self, a: int, b: int) -> bool:
        """Incidence test on internal indices."""
        return bool(self._below[b] >> a & 1)

    def interval(self, a: int, b: int) -> list[int]:
        """Internal indices of faces H with a <= H <= b."""
        if not self.leq(a, b):
            return []
        return list(_bits(self._below[b] & self._above[a]))

    def face(self, fid) -> int:
        try:
            return self.index[fid]
        except KeyError:
            raise LatticeError(f"unknown face id {fid!r}") from None

    def subposet(self, keep: Sequence[int], shift: int = 0) -> "FaceLattice":
        keep_set = set(keep)
        faces = [(self.ids[i], self.ranks[i] + shift) for i in sorted(keep_set)]
        covers = [(self.ids[lo], self.ids[hi]) for lo, hi in self.covers
                  if lo in keep_set and hi in keep_set]
        ranks = [r for _, r in faces]
        return FaceLattice(max(ranks), faces, covers, synthesize=False)

    # -- (de)serialisation ---------------------------------------------
    def to_dict(self) -> dict:
        order = sorted(range(len(self.ids)), key=lambda i: (self.ranks[i], str(self.ids[i])))
        return {
            "covers": sorted([str(self.ids[lo]), str(self.ids[hi])] for lo, hi in self.covers),
            "faces": [{"id": str(self.ids[i]), "rank": self.ranks[i]} for i in order],
            "rank": self.rank,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data) -> "FaceLattice":
        if not isinstance(data, dict):
            raise LatticeError("lattice JSON must be an object")
        for key in ("rank", "faces", "covers"):
            if key not in data:
                raise LatticeError(f"lattice JSON missing field {key!r}")
        if not isinstance(data["rank"], int):
            raise LatticeError("field 'rank' must be an integer")
        faces = []
        for k, rec in enumerate(data["faces"]):
            if not isinstance(rec, dict) or "id" not in rec or "rank" not in rec:
                raise LatticeError(f"faces[{k}] must be an object with 'id' and 'rank'")
            if not isinstance(rec["rank"], int):
                raise LatticeError(f"faces[{k}].rank must be an integer")
            faces.append((str(rec["id"]), rec["rank"]))
        covers = []
        for k, pair in enumerate(data["covers"]):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise LatticeError(f"covers[{k}] must be a [lowerId, upperId] pair")
            covers.append((str(pair[0]), str(pair[1])))
        return cls(data["rank"], faces, covers)

    @classmethod
    def from_json(cls, text: str) -> "FaceLattice":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"malformed JSON: {exc}") from None
        return cls.from_dict(data)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# validation


def validate(L: FaceLattice) -> ValidationReport:
    """Check boundedness, gradedness, the diamond condition and strong
    flag-connectivity, collecting every violation found."""
    report = ValidationReport()
    add = report.violations.append
    d = L.rank
    n = len(L)

    for r, name in ((-1, "least"), (d, "greatest")):
        count = L.ranks.count(r)
        if count != 1:
            add(Violation("bounded", f"expected exactly one {name} face of rank {r}, found {count}"))
    for i, r in enumerate(L.ranks):
        if not -1 <= r <= d:
            add(Violation("graded", f"face {L.ids[i]!r} has rank {r} outside [-1, {d}]", (L.ids[i],)))
    for lo, hi in L.covers:
        if L.ranks[hi] != L.ranks[lo] + 1:
            add(Violation("graded",
                          f"cover {L.ids[lo]!r} < {L.ids[hi]!r} jumps from rank "
                          f"{L.ranks[lo]} to {L.ranks[hi]}", (L.ids[lo], L.ids[hi])))
    for i in range(n):
        if L.ranks[i] > -1 and not L.down[i]:
            add(Violation("bounded", f"face {L.ids[i]!r} (rank {L.ranks[i]}) covers nothing",
                          (L.ids[i],)))
        if L.ranks[i] < d and not L.up[i]:
            add(Violation("bounded", f"face {L.ids[i]!r} (rank {L.ranks[i]}) is covered by nothing",
                          (L.ids[i],)))
    if report.violations:
        # the remaining checks assume a bounded graded poset
        return report

    diamond_ok = True
    for f in range(n):
        twos = {g for mid in L.up[f] for g in L.up[mid]}
        for g in sorted(twos):
            between = [m for m in L.up[f] if g in L.up[m]]
            if len(between) != 2:
                diamond_ok = False
                add(Violation("diamond",
                              f"interval {L.ids[f]!r} < {L.ids[g]!r} has {len(between)} "
                              "intermediate faces, expected 2", (L.ids[f], L.ids[g])))
    if not diamond_ok:
        return report

    # sections of rank >= 2; smaller ones are connected once diamonds hold
    for f in range(n):
        for g in _bits(L._above[f]):
            if L.ranks[g] - L.ranks[f] >= 3 and not _section_flags_connected(L, f, g):
                add(Violation("connectivity",
                              f"flags of section {L.ids[g]!r}/{L.ids[f]!r} are disconnected",
                              (L.ids[f], L.ids[g])))
    return report


def _section_flags_connected(L: FaceLattice, lo: int, hi: int) -> bool:
    flags = list(_section_flags(L, lo, hi))
    if len(flags) <= 1:
        return True
    parent = list(range(len(flags)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    length = len(flags[0])
    for pos in range(1, length - 1):
        groups: dict = {}
        for k, fl in enumerate(flags):
            key = fl[:pos] + fl[pos + 1:]
            if key in groups:
                a, b = find(groups[key]), find(k)
                if a != b:
                    parent[a] = b
            else:
                groups[key] = k
    root = find(0)
    return all(find(k) == root for k in range(len(flags)))


def _section_flags(L: FaceLattice, lo: int, hi: int):
    stack = [(lo,)]
    while stack:
        chain = stack.pop()
        last = chain[-1]
        if last == hi:
            yield chain
            continue
        for nxt in L.up[last]:
            if L.leq(nxt, hi):
                stack.append(chain + (nxt,))


# ---------------------------------------------------------------------------
# derived lattices


def section(L: FaceLattice, F, G) -> FaceLattice:
    """The section G/F = {H : F <= H <= G}, re-ranked so F has rank -1."""
    f, g = L.face(F), L.face(G)
    if not L.leq(f, g):
        raise IncidenceError(f"face {F!r} is not below {G!r}")
    return L.subposet(L.interval(f, g), shift=-L.ranks[f] - 1)


def vertex_figure(L: FaceLattice, v) -> FaceLattice:
    return section(L, v, L.ids[L.greatest])


def dual(L: FaceLattice) -> FaceLattice:
    """Order-reversed lattice; rank i becomes d-1-i."""
    d = L.rank
    faces = [(fid, d - 1 - r) for fid, r in zip(L.ids, L.ranks)]
    covers = [(L.ids[hi], L.ids[lo]) for lo, hi in L.covers]
    return FaceLattice(d, faces, covers, synthesize=False)


def are_isomorphic(L1: FaceLattice, L2: FaceLattice) -> dict | None:
    """Return a rank- and order-preserving bijection ``{id1: id2}`` or None."""
    from .flags import build_flag_graph
    from .orbits import find_isomorphisms

    if L1.rank != L2.rank or L1.f_vector() != L2.f_vector():
        return None
    G1, G2 = build_flag_graph(L1), build_flag_graph(L2)
    if G1.n_flags != G2.n_flags:
        return None
    found = find_isomorphisms(G1, G2, first_only=True)
    if not found:
        return None
    return found[0].face_map(G1, G2)
