"""
The canonical filtration of a b-module
=======================================

Every b-module V carries a unique filtration V_m by submodules whose graded
pieces, shifted by -m, are sl(2)-modules.  We compute it, check it against
the defining axioms and against a closed-form count from ranks of powers of e.
"""
from lefrank.filtration import (canonical_filtration, check_axioms, filtration_dims, graded_piece,
                                saturation_level)
from lefrank.modules import BModule, decompose_g, random_bmodule

# a two-step chain: weight 0 -> weight 2.  Neither weight is symmetric.
chain = BModule.build({0: 1, 2: 1}, {0: [[1]]})
f = canonical_filtration(chain)
print("chain: lo=%d hi=%d" % (f.lo, f.hi))
for m in f.levels:
    print("  V_%d dims by weight:" % m, f.dims(m))

# a random module, and the multiplicities of L(d) in each graded piece
v = random_bmodule(7, 6, 9)
f = canonical_filtration(v)
print("random module dims:", dict(v.dims))
print("axioms hold:", check_axioms(v, f)[0])
table = filtration_dims(v)
for m, row in sorted(table.entries.items()):
    print("  gr_%d: fixed point %s, rank formula %s" % (m, decompose_g(graded_piece(f, m)), row))

# hi can be read off from ranks alone; the filtration must agree
print("(lo, hi) =", saturation_level(v, f))
