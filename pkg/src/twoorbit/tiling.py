"""Tilings at desk scale.

* valence equations for planar vertex- and tile-transitive tilings,
* the patch-growth recurrence of the order-5 cubic honeycomb with its exact
  closed form in Z[sqrt 14] and the normality crossing index,
* finite torus quotients of the trihexagonal, rhombille, tetrahedral-octahedral
  and rhombic dodecahedral tilings, built from exact coordinates in the cover.

No floating point is used anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .lattice import FaceLattice, dual, validate
from .orbits import OrbitReport, analyze

# ---------------------------------------------------------------------------
# planar valence equations


@dataclass(frozen=True)
class PlanarSolution:
    kind: str                 # 'vertex': tile sizes around a vertex; 'tile': valences around a tile
    size: int                 # j (valence) or k (tile size) = cycle length
    cycle: tuple[int, ...]
    two_orbit: bool

    def __str__(self):
        body = ".".join(map(str, self.cycle))
        if len(set(self.cycle)) == 1:
            body = f"{self.cycle[0]}^{len(self.cycle)}"
        return f"({body})" if self.kind == "vertex" else f"[{body}]"


def _alternating_solutions(length: int) -> list[tuple[int, int]]:
    """Pairs a <= b with (length/2) * ((a-2)/a + (b-2)/b) == 2 exactly."""
    half = length // 2
    target = Fraction(2, half)  # needed value of (a-2)/a + (b-2)/b
    out = []
    a = 3
    # (a-2)/a is increasing in a and b >= a, so 2 (a-2)/a <= target bounds a
    while 2 * Fraction(a - 2, a) <= target:
        rest = target - Fraction(a - 2, a)     # = (b-2)/b = 1 - 2/b
        if rest < 1:
            b = Fraction(2) / (1 - rest)
            if b.denominator == 1 and b >= a:
                out.append((a, int(b)))
        a += 1
    return out


def planar_solutions(length: int, kind: str = "vertex") -> list[PlanarSolution]:
    """Alternating cycles (a, b)^(length/2) solving sum (k_i - 2)/k_i = 2."""
    if length % 2 or length < 4:
        return []
    sols = []
    for a, b in _alternating_solutions(length):
        cycle = (a, b) * (length // 2)
        sols.append(PlanarSolution(kind, length, cycle, a != b))
    return sols


def _solve(kind: str) -> list[PlanarSolution]:
    out = []
    length = 4
    # every term is at least 1/3, so a cycle longer than 6 overshoots 2
    while Fraction(length, 3) <= 2:
        out.extend(planar_solutions(length, kind))
        length += 2
    return out


def solve_planar_vertex_transitive() -> list[PlanarSolution]:
    return _solve("vertex")


def solve_planar_tile_transitive() -> list[PlanarSolution]:
    return _solve("tile")


# ---------------------------------------------------------------------------
# exact arithmetic in Z[sqrt 14]


@dataclass(frozen=True)
class QuadIntZ14:
    """t + u*sqrt(14) with integer t, u."""
    t: int
    u: int

    def __add__(self, other):
        other = _lift(other)
        return QuadIntZ14(self.t + other.t, self.u + other.u)

    __radd__ = __add__

    def __neg__(self):
        return QuadIntZ14(-self.t, -self.u)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        o = _lift(other)
        return QuadIntZ14(self.t * o.t + 14 * self.u * o.u, self.t * o.u + self.u * o.t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = QuadIntZ14(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadIntZ14":
        return QuadIntZ14(self.t, -self.u)

    def norm(self) -> int:
        return self.t * self.t - 14 * self.u * self.u

    def __str__(self):
        return f"{self.t} + {self.u}*sqrt(14)"


def _lift(x) -> QuadIntZ14:
    if isinstance(x, QuadIntZ14):
        return x
    if isinstance(x, int):
        return QuadIntZ14(x, 0)
    return NotImplemented


LAMBDA_PLUS = QuadIntZ14(15, 4)
GROWTH_MATRIX = ((1, 2, 3), (2, 5, 9), (4, 12, 25))


# ---------------------------------------------------------------------------
# patch growth


@dataclass(frozen=True)
class GrowthState:
    n: int
    a: int   # tiles with one 2-face on the patch boundary
    b: int   # ... two
    c: int   # ... three
    total: int

    @classmethod
    def initial(cls) -> "GrowthState":
        return cls(1, 0, 0, 20, 20)


def growth_step(s: GrowthState) -> GrowthState:
    (m11, m12, m13), (m21, m22, m23), (m31, m32, m33) = GROWTH_MATRIX
    a = m11 * s.a + m12 * s.b + m13 * s.c
    b = m21 * s.a + m22 * s.b + m23 * s.c
    c = m31 * s.a + m32 * s.b + m33 * s.c
    return GrowthState(s.n + 1, a, b, c, s.total + a + b + c)


def growth_state(n: int) -> GrowthState:
    if n < 1:
        raise ValueError("patch index starts at 1")
    s = GrowthState.initial()
    while s.n < n:
        s = growth_step(s)
    return s


def growth_closed_form(n: int) -> int:
    """|A_n| = (5/7) * (9/(2 sqrt 14) * (L^n - L'^n) - 8n), L = 15 + 4 sqrt 14.

    With L^n = t + u sqrt 14 the difference L^n - L'^n is 2u sqrt 14, so the
    bracket is 9u - 8n and the result is 5 (9u - 8n) / 7.
    """
    if n < 1:
        raise ValueError("patch index starts at 1")
    u = (LAMBDA_PLUS ** n).u
    num = 5 * (9 * u - 8 * n)
    if num % 7:
        raise ArithmeticError(f"closed form not integral at n = {n}")
    return num // 7


def normality_crossing(u, U) -> int:
    """Least n with |A_n| > (2 n U)^3 / u^3, compared exactly."""
    u, U = Fraction(u), Fraction(U)
    if u <= 0 or U <= 0:
        raise ValueError("radii must be positive")
    s = GrowthState.initial()
    while not s.total > (2 * s.n * U) ** 3 / u ** 3:
        s = growth_step(s)
    return s.n


# ---------------------------------------------------------------------------
# torus quotients


FAMILIES = ("trihexagonal", "rhombille", "tet-oct", "rhombic-dodecahedral")
K_MIN = {"trihexagonal": 3, "rhombille": 3, "tet-oct": 2, "rhombic-dodecahedral": 2}
K_CAP = 4


class DegenerateQuotientError(ValueError):
    pass


@dataclass
class TorusQuotient:
    lattice: FaceLattice
    period: int
    family: str
    requested: int

    def f_vector(self):
        return self.lattice.f_vector()


def _key(rank: int, pts, period: int):
    n = len(pts)
    centroid = tuple(sum(p[i] for p in pts) / n for i in range(len(pts[0])))
    return rank, tuple(c % period for c in centroid)


def _name(key) -> str:
    rank, c = key
    return f"r{rank}@(" + ",".join(str(x) for x in c) + ")"


class _Complex:
    """Accumulates cells of a periodic complex, identified modulo the period."""

    def __init__(self, period: int):
        self.period = period
        self.faces: dict[str, int] = {}
        self.covers: set[tuple[str, str]] = set()

    def cell(self, rank: int, pts) -> str:
        name = _name(_key(rank, pts, self.period))
        self.faces[name] = rank
        return name

    def polygon(self, cycle) -> str:
        fid = self.cell(2, cycle)
        for p, q in zip(cycle, cycle[1:] + cycle[:1]):
            eid = self.cell(1, [p, q])
            self.covers.add((eid, fid))
            for x in (p, q):
                self.covers.add((self.cell(0, [x]), eid))
        return fid

    def polyhedron(self, polygons) -> str:
        verts = sorted({p for poly in polygons for p in poly})
        tid = self.cell(3, verts)
        for poly in polygons:
            self.covers.add((self.polygon(list(poly)), tid))
        return tid

    def lattice(self, rank: int) -> FaceLattice:
        return FaceLattice(rank, self.faces, sorted(self.covers))


_F = Fraction
_HEX_DIRS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
_HEX_CORNERS = [(_F(1, 3), _F(1, 3)), (_F(-1, 3), _F(2, 3)), (_F(-2, 3), _F(1, 3)),
                (_F(-1, 3), _F(-1, 3)), (_F(1, 3), _F(-2, 3)), (_F(2, 3), _F(-1, 3))]


def _shift(q, v):
    return tuple(_F(a) + _F(b) for a, b in zip(q, v))


def hexagonal_torus(k: int) -> FaceLattice:
    """Regular {6,3} on a k x k torus; hexagons centred on the triangular lattice."""
    cx = _Complex(k)
    for q in product(range(k), repeat=2):
        cx.polygon([_shift(q, c) for c in _HEX_CORNERS])
    return cx.lattice(3)


def trihexagonal_torus(k: int) -> FaceLattice:
    """Trihexagonal tiling on a k x k torus; vertices at lattice-edge midpoints."""
    cx = _Complex(k)
    h = _F(1, 2)
    for q in product(range(k), repeat=2):
        cx.polygon([_shift(q, (_F(x) * h, _F(y) * h)) for x, y in _HEX_DIRS])
        cx.polygon([_shift(q, (h, 0)), _shift(q, (h, h)), _shift(q, (0, h))])
        cx.polygon([_shift(q, (h, h)), _shift(q, (1, h)), _shift(q, (h, 1))])
    return cx.lattice(3)


def tet_oct_torus(k: int) -> FaceLattice:
    """Tetrahedral-octahedral honeycomb modulo 2k in each axis.

    Vertices are the even-sum integer points, each unit cube contributes the
    tetrahedron on its four even corners, and each odd point the octahedron on
    its six neighbours.
    """
    m = 2 * k
    cx = _Complex(m)
    for x in product(range(m), repeat=3):
        corners = [_shift(x, e) for e in product((0, 1), repeat=3)]
        even = [p for p in corners if sum(p) % 2 == 0]
        cx.polyhedron([list(t) for t in combinations(even, 3)])
        if sum(x) % 2 == 1:
            tris = []
            for signs in product((-1, 1), repeat=3):
                tris.append([_shift(x, tuple(s if i == j else 0 for j in range(3)))
                             for i, s in enumerate(signs)])
            cx.polyhedron(tris)
    return cx.lattice(4)


_BUILDERS = {
    "trihexagonal": trihexagonal_torus,
    "rhombille": lambda k: dual(trihexagonal_torus(k)),
    "tet-oct": tet_oct_torus,
    "rhombic-dodecahedral": lambda k: dual(tet_oct_torus(k)),
}


def build_torus_quotient(family: str, k: int | None = None) -> TorusQuotient:
    """Smallest valid quotient with period >= k (default: the family minimum).

    Periods are retried upward to ``K_CAP`` when the lattice axioms fail.
    """
    if family not in _BUILDERS:
        raise ValueError(f"unknown tiling family {family!r}; choose from {', '.join(FAMILIES)}")
    k0 = K_MIN[family] if k is None else k
    if k0 < K_MIN[family]:
        raise DegenerateQuotientError(
            f"{family} quotient needs k >= {K_MIN[family]}; k = {k0} identifies incident cells")
    problems = []
    for kk in range(k0, max(k0, K_CAP) + 1):
        L = _BUILDERS[family](kk)
        report = validate(L)
        if report.ok:
            return TorusQuotient(L, kk, family, k0)
        problems.append(f"k={kk}: {report.lines()[0]}")
    raise DegenerateQuotientError(f"no valid {family} quotient up to k = {K_CAP}: {problems}")


EXPECTED_CLASS = {
    "trihexagonal": frozenset({0, 1}),
    "rhombille": frozenset({1, 2}),
    "tet-oct": frozenset({0, 1, 2}),
    "rhombic-dodecahedral": frozenset({1, 2, 3}),
}


def analyze_quotient(q: TorusQuotient) -> OrbitReport:
    return analyze(q.lattice)[2]
