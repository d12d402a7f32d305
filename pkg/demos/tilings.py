"""Planar valence equations, patch growth and torus quotients."""
from twoorbit import rectify
from twoorbit.lattice import are_isomorphic
from twoorbit.tiling import (analyze_quotient, build_torus_quotient, growth_closed_form,
                             growth_state, hexagonal_torus, normality_crossing,
                             solve_planar_tile_transitive, solve_planar_vertex_transitive,
                             trihexagonal_torus)

print("vertex cycles:", *solve_planar_vertex_transitive())
print("tile cycles:  ", *solve_planar_tile_transitive())

# growth of the patch, recurrence against the exact closed form
for n in range(1, 7):
    s = growth_state(n)
    print(f"n={n}  a={s.a} b={s.b} c={s.c}  total={s.total}  closed={growth_closed_form(n)}")

for U in (10, 100, 1000):
    print(f"u=1 U={U}: count exceeds the volume bound from n = {normality_crossing(1, U)}")

# finite models of the infinite tilings
for fam in ("trihexagonal", "rhombille", "tet-oct", "rhombic-dodecahedral"):
    q = build_torus_quotient(fam)
    rep = analyze_quotient(q)
    print(f"{fam} k={q.period}: f={q.f_vector()} flags={rep.n_flags} "
          f"|Gamma|={rep.group_order} orbits={rep.orbit_count} {rep.class_label()} {rep.symbol}")

print("rectified hexagonal torus is trihexagonal:",
      are_isomorphic(rectify(hexagonal_torus(3)), trihexagonal_torus(3)) is not None)
