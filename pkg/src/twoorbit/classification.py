"""Distinguished generators, Coxeter matrices and classification of
facet-intransitive two-orbit polytopes, plus the vertex-angle counting check
that rules out the two rank-4 candidates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .flags import FlagGraph, build_flag_graph, flag_section_size, section_sizes
from .lattice import FaceLattice, are_isomorphic, dual, vertex_figure
from .orbits import (Automorphism, AutomorphismGroup, OrbitReport, automorphism_group,
                     modified_schlafli, orbit_report, permutation_order)

Z = "z"

# Orders of the finite Coxeter groups matched below (standard values, not
# recomputed from the presentation): B3 = C3 has order 2^3 * 3! = 48, H3 has
# order 120.
KNOWN_DIAGRAMS = {
    "B3": {"orders": {(0, 1): 3, (0, Z): 4, (1, Z): 2}, "group_order": 48,
           "polytope": "cuboctahedron", "dual": "rhombic-dodecahedron"},
    "H3": {"orders": {(0, 1): 3, (0, Z): 5, (1, Z): 2}, "group_order": 120,
           "polytope": "icosidodecahedron", "dual": "rhombic-triacontahedron"},
}

B3_TYPE = "cuboctahedron-type B3"
H3_TYPE = "icosidodecahedron-type H3"
VERTEX_DUAL = "vertex-intransitive-dual"
RANK4_REFUTED = "rank-4-exceptional-refuted"
NOT_TWO_ORBIT = "not-two-orbit"


class ClassificationError(ValueError):
    """Input is outside what the classifier handles (wrong class, wrong flag...)."""


class ContradictionError(ClassificationError):
    """A two-orbit input whose structure the classification says cannot occur."""

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data


@dataclass
class DistinguishedGenerators:
    base_flag: int
    rho: list[Automorphism]
    rho_prime: Automorphism
    graph: FlagGraph
    group: AutomorphismGroup

    @property
    def d(self) -> int:
        return self.graph.rank

    def labelled(self) -> dict:
        out = {i: g for i, g in enumerate(self.rho)}
        out[Z] = self.rho_prime
        return out

    def closure_order(self) -> int:
        """Size of the subgroup generated, via the orbit of the base flag.

        Left multiplication by a generator needs only the generator's flag
        permutation, and the action is free, so the orbit size of the base
        flag under the generators equals the subgroup order.
        """
        perms = [g.permutation for g in self.labelled().values()]
        seen = {self.base_flag}
        frontier = [self.base_flag]
        while frontier:
            nxt = []
            for x in frontier:
                for p in perms:
                    y = int(p[x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)


@dataclass
class CoxeterMatrix:
    nodes: tuple
    orders: dict  # (a, b) -> m_ab, both orientations present

    def __getitem__(self, pair):
        return self.orders[pair]

    def triple(self) -> tuple[int, int, int]:
        """(m(0,1), m(0,z), m(1,z)) for rank-3 inputs."""
        return self.orders[(0, 1)], self.orders[(0, Z)], self.orders[(1, Z)]

    def edges(self) -> dict:
        return {(a, b): m for (a, b), m in self.orders.items()
                if a != b and self.nodes.index(a) < self.nodes.index(b)}

    def __str__(self):
        return ", ".join(f"m({a},{b})={m}" for (a, b), m in self.edges().items())


@dataclass
class ClassificationVerdict:
    outcome: str
    diagram: str | None = None
    witness: dict | None = None
    report: OrbitReport | None = None
    coxeter: CoxeterMatrix | None = None
    inner: "ClassificationVerdict | None" = None
    refutation: "RefutationReport | None" = None
    notes: list[str] = field(default_factory=list)


def _check_facet_intransitive(report: OrbitReport):
    d = report.rank
    if report.orbit_count != 2:
        raise ClassificationError(f"not two-orbit (k = {report.orbit_count})")
    if report.class_I == frozenset(range(1, d)):
        raise ClassificationError("input is vertex-intransitive; use its dual")
    if report.class_I != frozenset(range(0, d - 1)):
        raise ClassificationError(f"class {report.class_label()} is not facet-intransitive")


def distinguished_generators(G: FlagGraph, group: AutomorphismGroup, base: int = 0,
                             report: OrbitReport | None = None) -> DistinguishedGenerators:
    """rho_i carries the base flag to its i-adjacent flag (i <= d-2) and
    rho' carries it to the flag reached by changing facet, ridge, facet."""
    d = G.rank
    if d < 3:
        raise ClassificationError("distinguished generators need rank >= 3")
    report = report or orbit_report(G, group)
    _check_facet_intransitive(report)
    if base != group.base_flag:
        raise ClassificationError("generators are taken relative to the group's base flag")

    low = min(report.symbol.entry(d - 2))
    here = flag_section_size(G, base, d - 2)
    if here != low:
        raise ClassificationError(
            f"base flag {base} is not appropriate: its section of position {d - 2} is a "
            f"{here}-gon, not the smaller {low}-gon; use its {d - 1}-adjacent flag "
            f"{int(G.adj[d - 1, base])} instead")

    rho = []
    for i in range(d - 1):
        g = group.element_to(G.adj[i, base])
        if g is None:
            raise ClassificationError(f"no automorphism carries the base flag to its {i}-adjacent flag")
        rho.append(g)
    target = G.apply_word(base, [d - 1, d - 2, d - 1])
    rho_prime = group.element_to(target)
    if rho_prime is None:
        raise ClassificationError("no automorphism carries the base flag to its (d-1,d-2,d-1) image")
    return DistinguishedGenerators(base, rho, rho_prime, G, group)


def coxeter_matrix(gens: DistinguishedGenerators, symbol=None) -> CoxeterMatrix:
    """Orders of pairwise products, checked against the tail-triangle pattern.

    Expected: consecutive rho's carry the symbol entries, rho_{d-3} meets
    rho_{d-2} and rho' in the small and large stacked values, rho_{d-2} with
    rho' gives half the last entry, and every other pair commutes.
    """
    labelled = gens.labelled()
    nodes = tuple(labelled)
    perms = {k: g.permutation for k, g in labelled.items()}
    orders = {}
    for a in nodes:
        for b in nodes:
            orders[(a, b)] = 1 if a == b else permutation_order(perms[a][perms[b]])
    cm = CoxeterMatrix(nodes, orders)

    d = gens.d
    symbol = symbol or modified_schlafli(gens.graph)
    expect = {}
    for a in range(d - 1):
        for b in range(a + 1, d - 1):
            expect[(a, b)] = symbol.entry(b)[0] if b == a + 1 and b < d - 2 else 2
    p, q = sorted(symbol.entry(d - 2))
    expect[(d - 3, d - 2)] = p
    expect[(d - 3, Z)] = q
    expect[(d - 2, Z)] = symbol.entry(d - 1)[0] // 2
    for i in range(d - 3):
        expect[(i, Z)] = 2
    bad = {k: (orders[k], v) for k, v in expect.items() if orders[k] != v}
    if bad:
        raise ContradictionError(f"Coxeter orders disagree with the symbol: {bad}", bad)
    return cm


def match_diagram(cm: CoxeterMatrix) -> str | None:
    if len(cm.nodes) != 3:
        return None
    for name, info in KNOWN_DIAGRAMS.items():
        if all(cm[k] == v for k, v in info["orders"].items()):
            return name
    return None


# ---------------------------------------------------------------------------
# angle counting


@dataclass(frozen=True)
class AngleCountInput:
    vertex_figure: FaceLattice
    cone_face_size: int
    two_face_size: int = 4


@dataclass(frozen=True)
class RefutationReport:
    ratio: Fraction           # r = f_2 / f_0 = (edges of the vertex figure) / (2-face size)
    cone_count: int           # c = q-gonal faces of the vertex figure
    edges: int
    contradiction: bool       # r >= c, against the strict bound r < c

    def lines(self) -> list[str]:
        rel = ">=" if self.contradiction else "<"
        verdict = "contradiction" if self.contradiction else "no contradiction"
        return [f"f2/f0 = r = {self.ratio} (vertex-figure edges: {self.edges})",
                f"cone count c = {self.cone_count}",
                f"r {rel} c: {verdict}"]


def angle_sum_check(inp: AngleCountInput) -> RefutationReport:
    """Compare two counts of vertex angles in 2-faces.

    Each vertex lies in as many 2-faces as its figure has edges, and each
    2-face has ``two_face_size`` vertices, so f_2 = r f_0 with r exact.
    Partitioning the 2-faces at a vertex by the c cones of q-valent facets,
    whose angles each sum to strictly less than a full turn, bounds the same
    total by c f_0 full turns.  So r >= c is impossible.
    """
    vf = inp.vertex_figure
    if vf.rank != 3:
        raise ValueError(f"vertex figure must have rank 3, got {vf.rank}")
    G = build_flag_graph(vf)
    sizes = {}
    for (_, hi), n in section_sizes(G, 1).items():
        sizes[hi] = n
    cones = sum(1 for n in sizes.values() if n == inp.cone_face_size)
    if not cones:
        raise ValueError(f"no {inp.cone_face_size}-gonal faces in the vertex figure "
                         f"(sizes present: {sorted(set(sizes.values()))})")
    edges = len(vf.faces_of_rank(1))
    r = Fraction(edges, inp.two_face_size)
    return RefutationReport(r, cones, edges, r >= cones)


# ---------------------------------------------------------------------------
# classification


def classify(L: FaceLattice) -> ClassificationVerdict:
    from .catalog import make

    G = build_flag_graph(L)
    group = automorphism_group(G)
    report = orbit_report(G, group)
    d = L.rank
    if report.orbit_count != 2:
        return ClassificationVerdict(NOT_TWO_ORBIT, report=report)

    I = report.class_I
    if d >= 3 and I == frozenset(range(0, d - 1)):
        base = 0
        if flag_section_size(G, base, d - 2) != min(report.symbol.entry(d - 2)):
            base = int(G.adj[d - 1, 0])
        group_b = group if base == 0 else _rebased(group, base)
        gens = distinguished_generators(G, group_b, base, report)
        cm = coxeter_matrix(gens, report.symbol)
        name = match_diagram(cm)
        if name is None:
            raise ContradictionError(f"diagram [{cm}] is not one of the admissible finite diagrams",
                                     cm)
        info = KNOWN_DIAGRAMS[name]
        if group.order != info["group_order"] or gens.closure_order() != group.order:
            raise ContradictionError(f"group order {group.order} does not match {name}")
        witness = are_isomorphic(L, make(info["polytope"]))
        if witness is None:
            raise ContradictionError(f"{name} presentation but not isomorphic to {info['polytope']}")
        outcome = B3_TYPE if name == "B3" else H3_TYPE
        return ClassificationVerdict(outcome, name, witness, report, cm)

    if d >= 3 and I == frozenset(range(1, d)):
        inner = classify(dual(L))
        witness = None
        if inner.witness is not None:
            witness = are_isomorphic(L, make(KNOWN_DIAGRAMS[inner.diagram]["dual"]))
        return ClassificationVerdict(VERTEX_DUAL, inner.diagram, witness, report,
                                     inner.coxeter, inner=inner)

    if d == 4 and I == frozenset({1, 2}):
        v = L.ids[L.faces_of_rank(0)[0]]
        vf = vertex_figure(L, v)
        q = max(modified_schlafli(vf).entry(1))
        ref = angle_sum_check(AngleCountInput(vf, q))
        return ClassificationVerdict(RANK4_REFUTED, report=report, refutation=ref)

    raise ContradictionError(f"two-orbit input of class {report.class_label()} "
                             "misses an interior rank", report)


def _rebased(group: AutomorphismGroup, base: int) -> AutomorphismGroup:
    # same elements, indexed by the image of another base flag
    G = group.graph
    M = group.orbit_matrix()
    return AutomorphismGroup(G, np.sort(M[base]), base_flag=base)


def refute_rank4_candidate(vertex_figure_name: str) -> RefutationReport:
    """Angle check for the rank-4 candidates with the given two-orbit vertex figure."""
    from .catalog import make

    vf = make(vertex_figure_name)
    q = max(modified_schlafli(vf).entry(1))
    return angle_sum_check(AngleCountInput(vf, q))
