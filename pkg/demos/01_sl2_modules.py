"""
Graded sl(2)-modules in exact arithmetic
=========================================

A b-module is a weight-graded space with a raising operator e (weight +2).
An sl(2)-module also has a lowering operator f with e f - f e = h.
"""
from lefrank.modules import decompose_g, dual, irreducible, shift, solve_f, tensor_g

# L(d) has weights -d, -d+2, ..., d and e sends each basis vector to the next
l2 = irreducible(2)
print("L(2) weights:", l2.base.weights)
for k in l2.base.weights:
    print("  f at weight %d:" % k, l2.f(k).to_json())

# Clebsch-Gordan: L(1) (x) L(2) = L(1) + L(3)
prod = tensor_g(irreducible(1), l2)
print("L(1) x L(2) =", decompose_g(prod))

# f is determined by e when it exists; forget it and get it back
recovered = solve_f(prod.base)
print("f recovered from e alone:", all(recovered.f(k) == prod.f(k) for k in prod.base.weights))

# shifted modules do not extend: the weights are no longer symmetric
print("L(2)[1] extends to sl(2):", solve_f(shift(l2.base, 1)) is not None)

# the dual of L(1) is again L(1)
print("dual of L(1):", decompose_g(solve_f(dual(irreducible(1).base))))
