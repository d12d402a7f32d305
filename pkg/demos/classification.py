"""Distinguished generators, Coxeter matrices and the classifier."""
import twoorbit.classification as clf
from twoorbit import analyze, make

for name in ("cuboctahedron", "icosidodecahedron"):
    G, group, rep = analyze(make(name))
    gens = clf.distinguished_generators(G, group, 0, rep)
    cm = clf.coxeter_matrix(gens, rep.symbol)
    print(name)
    print("  generator orders:", [g.order() for g in gens.labelled().values()])
    print("  coxeter:", cm)
    print("  closure order:", gens.closure_order(), "of", group.order)

# the classifier also handles the duals and rejects regular inputs
for name in ("rhombic-dodecahedron", "rhombic-triacontahedron", "cube", "polygon:6"):
    v = clf.classify(make(name))
    print(f"{name}: {v.outcome}" + (f" {v.diagram}" if v.diagram else ""))

# rank-4 candidates with a two-orbit vertex figure fail an angle count
for vf in ("cuboctahedron", "icosidodecahedron"):
    print(f"vertex figure {vf}:")
    for line in clf.refute_rank4_candidate(vf).lines():
        print("  " + line)

# a vertex figure where the count goes through
rep = clf.angle_sum_check(clf.AngleCountInput(make("octahedron"), 3))
print("octahedron:", rep.lines()[-1])
