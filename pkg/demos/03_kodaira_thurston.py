"""
The Kodaira-Thurston manifold
=============================

A 4-dimensional nilmanifold that is symplectic but not Kahler.  Its
cohomology comes from the Chevalley-Eilenberg complex of [X1, X2] = X3.
"""
from lefrank.cohomology import (SymplecticData, hard_lefschetz, lef_fil_equiv_report, lefschetz_ranks,
                                poincare_graded_pairing, weak_lefschetz)
from lefrank.constructions import catalog, chevalley_eilenberg
from lefrank.filtration import canonical_filtration, filtration_dims

lie = catalog("kodaira-thurston")
print(lie.provenance)
ring = chevalley_eilenberg(lie)
print("betti:", ring.betti)
print("H^2 basis:", ring.labels[2])

s = SymplecticData.of(ring, "omega")
print("omega in that basis:", [str(c) for c in s.omega])

# omega: H^1 -> H^3 has rank 2 < 3, so hard Lefschetz fails
for k, src, r, t in lefschetz_ranks(ring, s.omega, 2):
    print("  omega^%d: H^%d -> H^%d has rank %d of %d" % (k, src, src + 2 * k, r, t))
print("hard Lefschetz:", hard_lefschetz(s), " weak:", weak_lefschetz(s))

f = canonical_filtration(s.module())
print("filtration jumps: lo=%d hi=%d" % (f.lo, f.hi))
print("dims of V_m:", [f.dim(m) for m in range(4)])
print("multiplicities:", filtration_dims(s.module()).entries)

# the three equivalent conditions, level by level
for m in range(5):
    print("  m=%d" % m, lef_fil_equiv_report(s, m, f))

# gr_1 pairs with gr_3 through the orientation
mat, ok = poincare_graded_pairing(ring, s.omega, 1, f)
print("pairing gr_1 x gr_3:", mat.to_json(), "non-degenerate:", ok)
