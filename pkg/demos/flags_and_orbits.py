"""Flags, adjacency and orbits on the cuboctahedron."""
import numpy as np

from twoorbit import analyze, build_flag_graph, make, validate

co = make("cuboctahedron")
print("f-vector:", co.f_vector())
print("valid:", validate(co).ok)

G = build_flag_graph(co)
print("flags:", G.n_flags)  # 24 edges x 2 ends x 2 sides

# flag 0 as face ids, least face first
print("flag 0:", G.face_ids(0))

# i-adjacency is an involution without fixed points
for i in range(G.rank):
    a = G.adj[i]
    print(f"  {i}-adjacency involution:", bool((a[a] == np.arange(G.n_flags)).all()))

G, group, rep = analyze(co)
print("|Gamma| =", group.order)
print("orbits:", rep.orbit_count, "class", rep.class_label())
print("symbol:", rep.symbol)

# 2-adjacent flags always land in the other orbit: triangles and squares swap
same = rep.orbit_of[G.adj[2]] == rep.orbit_of
print("2-adjacent in same orbit:", bool(same.any()))
