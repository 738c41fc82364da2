"""
Blowing up CP^5 along the Kodaira-Thurston manifold
====================================================

As b-modules, H*(X) = H*(CP^N) + H*(M) (x) H*(CP^{k-2})[2].  The blowup is
simply connected, fails hard Lefschetz because M does, and keeps the weak
condition because M has it.
"""
from lefrank.cohomology import SymplecticData, hard_lefschetz, weak_lefschetz
from lefrank.constructions import blowup_bmodule, catalog, chevalley_eilenberg
from lefrank.filtration import canonical_filtration, check_axioms

m = SymplecticData.of(chevalley_eilenberg(catalog("kodaira-thurston")), "omega")
x = blowup_bmodule(m, 5, 3)
print("dim H*(X) =", x.total_dim)
print("dims by degree:", dict(x.dims))

f = canonical_filtration(x)
print("axioms hold:", check_axioms(x, f)[0])
print("lo=%d hi=%d (N=5)" % (f.lo, f.hi))
for lvl in range(3, 8):
    print("  dim X_%d = %d" % (lvl, f.dim(lvl)))

print("M hard:", hard_lefschetz(m), " X hard profile:", f.lo == f.hi == 5)
print("M weak:", weak_lefschetz(m), " X weak profile:", f.hi <= 6)
